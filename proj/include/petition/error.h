// Copyright 2026 The Authors.
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

#ifndef PETITION_ERROR_H_
#define PETITION_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace petition {

enum class ErrorCode {
  kUnknownId,
  kLevelZero,
  kLevelOutOfRange,
  kInvalidArgument,
  kMixedStanceSelection,
  kSideTooLargeForExact,
  kConfigInvalid,
  kEmptySelection,
  kValidationFailed,
  kParseError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base exception for every failure raised by the library. The code lets
// callers (notably the CLI) map failures to exit statuses without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace petition

#endif  // PETITION_ERROR_H_
