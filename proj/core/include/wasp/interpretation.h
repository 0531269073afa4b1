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
#ifndef WASP_INTERPRETATION_H
#define WASP_INTERPRETATION_H

#include <set>
#include <string>
#include <vector>

#include <wasp/ast.h>

namespace wasp {

// A finite set of ground atoms, stored by canonical atom key. The element
// order of the underlying set is the canonical order used everywhere
// interpretations are listed.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::set<std::string> atoms) : atoms_(std::move(atoms)) {}

    static Interpretation fromKeys(const std::vector<std::string>& keys);

    bool contains(const std::string& key) const { return atoms_.count(key) != 0; }
    bool contains(const Atom& a) const { return contains(a.key()); }
    void insert(std::string key) { atoms_.insert(std::move(key)); }

    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    const std::set<std::string>& atoms() const { return atoms_; }

    bool subsetOf(const Interpretation& other) const;
    bool properSubsetOf(const Interpretation& other) const {
        return size() < other.size() && subsetOf(other);
    }

    std::string str() const; // "{a, p(1)}"

    friend bool operator==(const Interpretation&, const Interpretation&) = default;
    // Lexicographic on the sorted atom keys; the canonical listing order.
    friend bool operator<(const Interpretation& a, const Interpretation& b) {
        return a.atoms_ < b.atoms_;
    }

private:
    std::set<std::string> atoms_;
};

} // namespace wasp

#endif
