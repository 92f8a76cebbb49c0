// Copyright 2026 The qmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMETRIC_QUADRATURE_H_
#define QMETRIC_QUADRATURE_H_

#include <cstdint>

namespace qmetric {

// Composite Simpson rule on [lo, hi] with `panels` subintervals (must be even).
// Terms are summed in three separate accumulators (ends, odd nodes, even
// nodes) before weighting.
template <typename F>
double IntegrateSimpson(F&& f, double lo, double hi, std::int64_t panels) {
  const double h = (hi - lo) / static_cast<double>(panels);
  double odd = 0.0;
  double even = 0.0;
  for (std::int64_t i = 1; i < panels; ++i) {
    const double x = lo + h * static_cast<double>(i);
    if (i % 2 == 1) {
      odd += f(x);
    } else {
      even += f(x);
    }
  }
  return h / 3.0 * (f(lo) + f(hi) + 4.0 * odd + 2.0 * even);
}

}  // namespace qmetric

#endif  // QMETRIC_QUADRATURE_H_
