// Copyright 2026 The dcmdp Authors
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

#include "dcmdp/error.hpp"

namespace dcmdp {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UndefinedAction: return "UndefinedAction";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NegativeRewards: return "NegativeRewards";
    case ErrorKind::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RangeUnderflow: return "RangeUnderflow";
    case ErrorKind::MissingEntry: return "MissingEntry";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

} // namespace dcmdp
