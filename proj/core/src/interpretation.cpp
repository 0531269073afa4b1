//
// Copyright 2026 The wasp authors
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
//
#include <wasp/interpretation.h>

#include <algorithm>

namespace wasp {

Interpretation Interpretation::fromKeys(const std::vector<std::string>& keys) {
    return Interpretation(std::set<std::string>(keys.begin(), keys.end()));
}

bool Interpretation::subsetOf(const Interpretation& other) const {
    return std::includes(other.atoms_.begin(), other.atoms_.end(),
                         atoms_.begin(), atoms_.end());
}

std::string Interpretation::str() const {
    std::string out = "{";
    bool first = true;
    for (const std::string& a : atoms_) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += a;
    }
    out += '}';
    return out;
}

} // namespace wasp
