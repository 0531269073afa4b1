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
#ifndef WASP_REASON_H
#define WASP_REASON_H

#include <optional>
#include <utility>
#include <vector>

#include <wasp/ast.h>
#include <wasp/ht.h>
#include <wasp/interpretation.h>
#include <wasp/semiring.h>

namespace wasp {

// Outcome of a quantitative query. Witnesses and the per-model table, when
// present, are sorted in canonical (lexicographic) interpretation order and
// only ever mention answer sets of the queried program.
struct WeightedResult {
    Value value;
    std::optional<std::vector<Interpretation>> witnesses;
    std::optional<std::vector<std::pair<Interpretation, Value>>> table;
};

// Algebraic answer set count: the add-fold of eval(alpha, I) over all answer
// sets I of the ground program p. The table holds every per-model value. An
// inconsistent program yields zero(s), the empty fold.
WeightedResult aasc(const Program& p, const WfPtr& alpha, const Semiring& s,
                    const SolveOptions& opts = {});

// Weighted model sum: the add-fold of eval(alpha, I) over ALL interpretations
// I of the universe, not just answer sets.
Value satValue(const WfPtr& alpha, const Semiring& s,
               const std::vector<std::string>& universe,
               const SolveOptions& opts = {});

enum class Direction { minimize, maximize };

// Extremum of eval(alpha, I) over the answer sets of p, with every tying
// answer set as a witness. Requires an ordered semiring and a consistent
// program.
WeightedResult optimize(const Program& p, const WfPtr& alpha, const Semiring& s,
                        Direction direction, const SolveOptions& opts = {});

// Per-model weights scaled to total mass 1 over the rationals: the table maps
// each answer set I to eval(alpha, I) / total and sums to exactly 1; value is
// the unscaled total. Negative weights and zero total mass are errors.
WeightedResult normalize(const Program& p, const WfPtr& alpha, const Semiring& s,
                         const SolveOptions& opts = {});

// True iff the positive dependency graph of the ground normal program (an
// edge from each head atom to each positive body atom of its rule) has no
// cycle.
bool isTight(const Program& p);

// Completion of a ground, normal, tight program: one conjunct per universe
// atom a, (a -> B) && (B -> a) where B is the disjunction of the body
// conjunctions of the rules with head a (#true for a fact, #false if there
// are none), plus the negated body of every headless rule. Classical models
// of the result are exactly the answer sets of p.
FormulaPtr clarkCompletion(const Program& p);
FormulaPtr clarkCompletion(const Program& p, const std::vector<std::string>& universe);

} // namespace wasp

#endif
