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
#ifndef WASP_STREAM_H
#define WASP_STREAM_H

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <wasp/ast.h>
#include <wasp/ht.h>
#include <wasp/interpretation.h>
#include <wasp/semiring.h>

namespace wasp {

// A total valuation over the closed timeline 0..horizon. Time points outside
// that range are an error, never an implicit empty set.
struct Stream {
    int horizon = 0;
    std::vector<Interpretation> points = {Interpretation{}}; // one per 0..horizon

    static Stream ofHorizon(int n);
    // Text form, one line per nonempty time point: "t: atom, atom". The
    // horizon is the largest mentioned time point or minHorizon, whichever
    // is greater; unmentioned points are empty. "%" starts a comment.
    static Stream parse(std::string_view text, int minHorizon = -1);

    const Interpretation& at(int t) const;
    Interpretation& at(int t);
    std::string str() const;

    friend bool operator==(const Stream& a, const Stream& b) = default;
};

// Classical satisfaction at a time point: atoms look up valuation(t), the
// connectives act pointwise, <> holds iff the body holds at SOME time point
// of the whole timeline, [] at all of them, and @N at exactly N.
bool satisfiesStream(const Stream& s, int t, const FormulaPtr& f);

// Weighted evaluation at a time point: non-temporal nodes evaluate against
// valuation(t), weighted <> is the add-fold and weighted [] the mul-fold of
// the body over the whole timeline.
Value evalWeightedStream(const Stream& s, int t, const WfPtr& alpha, const Semiring& r);

bool evalConstraintStream(const Stream& s, int t, const Constraint& c);

// The three readings of an aggregate sum{X in d} p(X) on a stream.
enum class AggMode {
    now,          // x with p(x) at the queried time point
    distinct,     // x with p(x) somewhere on the timeline, each x once
    multiplicity, // every pair (x, t') with p(x) at t'
};

using WeightFn = std::function<Value(const std::string&)>;

// Add-fold of w(x) over the instances selected by the mode. The quantifier q
// must have exactly the shape sum{X in d} p(X); constants of p-atoms in the
// valuation that are missing from d are an error.
Value temporalAggregate(const Stream& s, int t, const WfPtr& q, const DomainDecl& d,
                        const WeightFn& w, AggMode mode, const Semiring& r);

// Equilibrium streams of a ground temporal program by exhaustive search:
// all S such that <S,S> satisfies every rule at every time point and no S'
// pointwise below S (strictly at some point) does so against S. Results in
// canonical (pointwise lexicographic) order. Capacity is counted in bits:
// (horizon+1) * |atoms| must fit the exhaustive-search limit.
std::vector<Stream> answerStreams(const Program& p, int horizon,
                                  const SolveOptions& opts = {});

} // namespace wasp

#endif
