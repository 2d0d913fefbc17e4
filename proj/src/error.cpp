// Copyright 2026 The qdl Authors
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

#include "error.hpp"

namespace qdl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::VerlindeNonInteger: return "VerlindeNonInteger";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotASubcategory: return "NotASubcategory";
    case ErrorCode::UnsupportedTriple: return "UnsupportedTriple";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace qdl
