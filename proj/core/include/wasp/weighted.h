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
#ifndef WASP_WEIGHTED_H
#define WASP_WEIGHTED_H

#include <wasp/ast.h>
#include <wasp/ht.h>
#include <wasp/interpretation.h>
#include <wasp/semiring.h>

namespace wasp {

// Value of a ground weighted formula against one interpretation: weights
// denote themselves, an atom or 0-1 gate denotes one() if it holds and
// zero() otherwise, + is semiring addition and * multiplication. Quantifiers
// and weight applications must have been expanded away by grounding.
Value evalWeighted(const WfPtr& alpha, const Interpretation& i, const Semiring& s);

// k op value(body), with the bound k on the left-hand side.
bool evalConstraint(const Constraint& c, const Interpretation& i);

// At there: classical. At here: classical at BOTH worlds, which keeps
// here-satisfaction persistent even though constraints are non-monotone.
bool evalConstraintHt(const Constraint& c, const HTInterpretation& ht, World w);

} // namespace wasp

#endif
