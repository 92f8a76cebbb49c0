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

#ifndef QMETRIC_ERROR_H_
#define QMETRIC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qmetric {

enum class ErrorCode {
  kInvalidArgument,
  kConfigurationInvalid,
  kDegenerateRegion,
  kNotConverged,
  kInvalidContractionFactor,
};

std::string_view ToString(ErrorCode code);

// All precondition and runtime failures in the library are reported through
// this type. The code lets callers (the CLI in particular) map failures onto
// stable exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmetric

#endif  // QMETRIC_ERROR_H_
