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

#include "dcmdp/core/extended_cost.hpp"

#include <ostream>
#include <sstream>

namespace dcmdp {

std::string to_string(ExtendedCost cost) {
    std::ostringstream os;
    os << cost;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, ExtendedCost cost) {
    if (cost.is_infinite()) return os << "inf";
    return os << cost.value();
}

} // namespace dcmdp
