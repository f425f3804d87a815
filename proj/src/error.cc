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

#include "petition/error.h"

namespace petition {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownId:
      return "UnknownId";
    case ErrorCode::kLevelZero:
      return "LevelZero";
    case ErrorCode::kLevelOutOfRange:
      return "LevelOutOfRange";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kMixedStanceSelection:
      return "MixedStanceSelection";
    case ErrorCode::kSideTooLargeForExact:
      return "SideTooLargeForExact";
    case ErrorCode::kConfigInvalid:
      return "ConfigInvalid";
    case ErrorCode::kEmptySelection:
      return "EmptySelection";
    case ErrorCode::kValidationFailed:
      return "ValidationFailed";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

}  // namespace petition
