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
#ifndef WASP_HT_H
#define WASP_HT_H

#include <optional>
#include <vector>

#include <wasp/ast.h>
#include <wasp/interpretation.h>

namespace wasp {

enum class World { here, there };

// Two-world Kripke frame: everything that holds Here also holds There.
struct HTInterpretation {
    Interpretation here;
    Interpretation there;
};

// Atom budget for exhaustive enumeration, read from WASP_MAX_ATOMS
// (default 20, hard ceiling 62: interpretations are enumerated as bitmasks).
int defaultCapacity();

struct SolveOptions {
    int maxAtoms = defaultCapacity();
    int threads = 1; // candidate enumeration is chunked across this many workers
};

// Two-valued satisfaction. Formulas must be ground and non-temporal; a rule
// is read as the implication body -> head with "not a" as classical absence.
bool satisfiesClassical(const Interpretation& i, const FormulaPtr& f);
bool satisfiesClassical(const Interpretation& i, const Rule& r);
bool satisfiesClassical(const Interpretation& i, const Program& p);

// Satisfaction at one world of the frame. There-satisfaction is classical
// satisfaction by `there`. At here: atoms by membership in `here`; negation
// ~f holds iff there does not classically satisfy f; implication holds iff
// it holds here-level and classically at there. Algebraic constraints hold
// at here iff they hold classically at both worlds.
bool satisfiesHt(const HTInterpretation& ht, World w, const FormulaPtr& f);
bool satisfiesHt(const HTInterpretation& ht, World w, const Rule& r);
bool satisfiesHt(const HTInterpretation& ht, World w, const Program& p);

// Equilibrium models by exhaustive search: all I over the universe with
// <I,I> satisfying every rule and no H strictly below I such that <H,I>
// does. Results in canonical (lexicographic) order.
std::vector<Interpretation> answerSets(const Program& p, const SolveOptions& opts = {});
std::vector<Interpretation> answerSets(const Program& p,
                                       const std::vector<std::string>& universe,
                                       const SolveOptions& opts = {});

// Throws bad_fragment unless every rule has at most one head literal, all
// head literals are atoms, and the body holds only plain or default-negated
// atoms.
void requireNormalProgram(const Program& p);

// Reduct-based stable models of a ground normal program (single-atom or empty
// heads, plain and default-negated atom bodies only). Independent of the
// equilibrium search; used to cross-validate it.
std::vector<Interpretation> glStableModels(const Program& p);
std::vector<Interpretation> glStableModels(const Program& p,
                                           const std::vector<std::string>& universe);

struct SeResult {
    bool equal;
    // One HT-interpretation satisfying exactly one of the two programs,
    // first in enumeration order (there ascending, here ascending).
    std::optional<HTInterpretation> counterexample;
};

// Programs are strongly equivalent iff their HT-models over the shared
// universe coincide.
SeResult stronglyEquivalent(const Program& p1, const Program& p2,
                            const std::vector<std::string>& universe,
                            const SolveOptions& opts = {});

} // namespace wasp

#endif
