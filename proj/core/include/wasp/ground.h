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
#ifndef WASP_GROUND_H
#define WASP_GROUND_H

#include <cstddef>
#include <string>
#include <vector>

#include <wasp/ast.h>
#include <wasp/semiring.h>

namespace wasp {

struct SafetyViolation {
    std::size_t ruleIndex; // position in Program::rules
    std::string variable;
    std::string context; // where the variable occurs, for diagnostics
};

struct SafetyReport {
    std::vector<SafetyViolation> violations;
    bool safe() const { return violations.empty(); }
};

// A rule is safe iff each of its variables occurs in a positive body atom,
// in an explicit "X in d" body literal, or is bound by a sum/prod
// quantifier. Reports every violation; never throws.
SafetyReport checkSafety(const Program& p);

// Replaces every rule by all instantiations of its variables: variables in
// first-occurrence order (head before body, left to right), constants in
// declared domain order. Domains come from an explicit "X in d" literal, a
// positive body atom whose predicate names a declared domain, or the unique
// declared domain. Quantifiers are expanded and weight applications resolved
// to literals of the enclosing constraint's semiring. Idempotent.
Program groundProgram(const Program& p);

// One-step expansion of a sum/prod node over a domain: substitutes the bound
// variable and chains the instances with + (sum) or * (prod) in domain
// order; an empty domain yields the additive/multiplicative identity of s.
WfPtr expandQuantifier(const WfPtr& q, const DomainDecl& d, const Semiring& s);

// Expands all quantifiers of alpha over p's declared domains and resolves
// weight applications to literal weights of s. The result evaluates with no
// further context.
WfPtr groundWeighted(const WfPtr& alpha, const Program& p, const Semiring& s);

} // namespace wasp

#endif
