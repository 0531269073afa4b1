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
#include <doctest.h>

#include <string>
#include <vector>

#include <wasp/error.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/semiring.h>
#include <wasp/stream.h>
#include <wasp/weighted.h>

#include "support/gen.h"

using namespace wasp;

namespace {

Errc codeOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::syntax_error;
}

// Classical satisfaction of a rule by one stream at one time point.
bool holdsAt(const Stream& s, int t, const Rule& r) {
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                if (!s.at(t).contains(b.atom)) {
                    return true;
                }
                break;
            case BodyLiteral::Kind::negative:
                if (s.at(t).contains(b.atom)) {
                    return true;
                }
                break;
            case BodyLiteral::Kind::formula:
                if (!satisfiesStream(s, t, b.formula)) {
                    return true;
                }
                break;
            default:
                FAIL("unexpected body literal");
        }
    }
    for (const HeadLiteral& h : r.head) {
        if (h.kind == HeadLiteral::Kind::atom && s.at(t).contains(h.atom)) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_SUITE("stream") {

TEST_CASE("streams parse, print and guard their timeline") {
    Stream s = Stream::parse("0: p\n2: p, q(1)\n% comment\n");
    CHECK(s.horizon == 2);
    CHECK(s.at(0).contains("p"));
    CHECK(s.at(1).empty());
    CHECK(s.at(2).contains("q(1)"));
    CHECK(s.str() == "0: p\n2: p, q(1)\n");

    const Stream padded = Stream::parse("0: p", 3);
    CHECK(padded.horizon == 3);
    CHECK(padded.at(3).empty());

    CHECK(codeOf([&] { s.at(3); }) == Errc::out_of_range);
    CHECK(codeOf([] { Stream::parse("0: p\n0: q\n"); }) == Errc::malformed_value);
    CHECK(codeOf([] { Stream::parse("x: p\n"); }) == Errc::syntax_error);
}

TEST_CASE("temporal operators quantify over the whole timeline") {
    const Stream s = Stream::parse("0: p", 1);
    CHECK(satisfiesStream(s, 1, parseFormula("<>p")));
    CHECK(!satisfiesStream(s, 0, parseFormula("[]p")));
    CHECK(satisfiesStream(s, 1, parseFormula("@0 p")));
    CHECK(satisfiesStream(s, 0, parseFormula("@0 p")));
    CHECK(!satisfiesStream(s, 0, parseFormula("@1 p")));
    CHECK(codeOf([&] { satisfiesStream(s, 0, parseFormula("@7 p")); }) == Errc::out_of_range);
}

TEST_CASE("weighted temporal operators fold over the timeline") {
    const Semiring& nat = Semiring::byName("nat");
    const Semiring& bs = Semiring::byName("bool");
    const Stream s = Stream::parse("0: p\n1: p\n");

    CHECK(evalWeightedStream(s, 0, parseWeightedFormula("<>(1*p)", nat), nat).str() == "2");
    CHECK(evalWeightedStream(s, 0, parseWeightedFormula("<>(p)", bs), bs).str() == "true");

    const Stream two = Stream::ofHorizon(1);
    CHECK(evalWeightedStream(two, 0, parseWeightedFormula("[](2)", nat), nat).str() == "4");

    // A bound can test the fold.
    Program ctx = parseProgram("#semiring nat.");
    CHECK(evalConstraintStream(s, 0, parseConstraint("[2 <= <>(1*p)]@nat", &ctx)));
    CHECK(!evalConstraintStream(s, 0, parseConstraint("[3 <= <>(1*p)]@nat", &ctx)));
}

TEST_CASE("boolean temporal folds collapse to classical satisfaction") {
    gen::Rng rng(505050);
    const Semiring& bs = Semiring::byName("bool");
    const std::vector<std::string> pool = gen::atomPool(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int horizon = gen::pick(rng, 0, 3);
        const Stream s = gen::randomStream(rng, pool, horizon);
        const FormulaPtr f = gen::randomTemporalFormula(rng, pool, 3, horizon);
        const int t = gen::pick(rng, 0, horizon);
        CHECK(evalWeightedStream(s, t, mkWEventually(mkGate(f, false)), bs).truth() ==
              satisfiesStream(s, t, mkEventually(f)));
        CHECK(evalWeightedStream(s, t, mkWAlways(mkGate(f, false)), bs).truth() ==
              satisfiesStream(s, t, mkAlways(f)));
    }
}

TEST_CASE("a one-point timeline behaves like a plain interpretation") {
    gen::Rng rng(606060);
    const Semiring& nat = Semiring::byName("nat");
    const std::vector<std::string> pool = gen::atomPool(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Interpretation i = gen::randomInterp(rng, pool);
        Stream s = Stream::ofHorizon(0);
        s.at(0) = i;

        const FormulaPtr f = gen::randomFormula(rng, pool, 3);
        CHECK(satisfiesStream(s, 0, f) == satisfiesClassical(i, f));
        // With one time point the quantifiers collapse onto it.
        CHECK(satisfiesStream(s, 0, mkEventually(f)) == satisfiesClassical(i, f));
        CHECK(satisfiesStream(s, 0, mkAlways(f)) == satisfiesClassical(i, f));

        const WfPtr alpha = gen::randomWeighted(rng, pool, nat, 3);
        CHECK(evalWeightedStream(s, 0, alpha, nat) == evalWeighted(alpha, i, nat));
    }
}

TEST_CASE("aggregation modes count present, seen and repeated evidence") {
    const Semiring& nat = Semiring::byName("nat");
    const Stream s = Stream::parse("0: p(1)\n1: p(1), p(2)\n2:\n");
    REQUIRE(s.horizon == 2);

    const DomainDecl d{"d", {"1", "2"}};
    Program ctx;
    ctx.domains.push_back(d);
    const WfPtr q = parseWeightedFormula("sum{X in d} p(X)", nat, &ctx);
    const WeightFn ident = [&](const std::string& c) { return nat.parse(c); };

    CHECK(temporalAggregate(s, 1, q, d, ident, AggMode::now, nat).str() == "3");
    CHECK(temporalAggregate(s, 1, q, d, ident, AggMode::distinct, nat).str() == "3");
    CHECK(temporalAggregate(s, 1, q, d, ident, AggMode::multiplicity, nat).str() == "4");

    const Stream bad = Stream::parse("0: p(9)\n", 1);
    CHECK(codeOf([&] { temporalAggregate(bad, 0, q, d, ident, AggMode::now, nat); }) ==
          Errc::bad_aggregate);
    const WfPtr notShaped = parseWeightedFormula("sum{X in d} 2*p(X)", nat, &ctx);
    CHECK(codeOf([&] { temporalAggregate(s, 0, notShaped, d, ident, AggMode::now, nat); }) ==
          Errc::bad_aggregate);
}

TEST_CASE("the aggregation modes are ordered on random streams") {
    gen::Rng rng(717171);
    const Semiring& nat = Semiring::byName("nat");
    const DomainDecl d{"d", {"1", "2", "3"}};
    Program ctx;
    ctx.domains.push_back(d);
    const WfPtr q = parseWeightedFormula("sum{X in d} p(X)", nat, &ctx);
    const WeightFn ident = [&](const std::string& c) { return nat.parse(c); };
    const std::vector<std::string> pool = {"p(1)", "p(2)", "p(3)"};

    for (int trial = 0; trial < 1000; ++trial) {
        const int horizon = gen::pick(rng, 0, 4);
        const Stream s = gen::randomStream(rng, pool, horizon);
        const int t = gen::pick(rng, 0, horizon);
        const Value now = temporalAggregate(s, t, q, d, ident, AggMode::now, nat);
        const Value distinct = temporalAggregate(s, t, q, d, ident, AggMode::distinct, nat);
        const Value multiplicity =
            temporalAggregate(s, t, q, d, ident, AggMode::multiplicity, nat);
        // Evidence only accumulates: at one point <= seen anywhere <= counted
        // with repetition.
        CHECK(nat.compare(now, distinct) != Semiring::Cmp::greater);
        CHECK(nat.compare(distinct, multiplicity) != Semiring::Cmp::greater);
    }
}

TEST_CASE("answer streams of the base examples") {
    auto texts = [](const std::vector<Stream>& streams) {
        std::vector<std::string> out;
        for (const Stream& s : streams) {
            out.push_back(s.str());
        }
        return out;
    };

    CHECK(texts(answerStreams(parseProgram("p :- not q."), 1)) ==
          std::vector<std::string>{"0: p\n1: p\n"});

    const std::vector<Stream> empty = answerStreams(Program{}, 2);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].horizon == 2);
    CHECK(empty[0].str() == "");

    // Self-support through <> or @ does not found an atom.
    CHECK(texts(answerStreams(parseProgram("p :- <>p."), 1)) ==
          std::vector<std::string>{""});
    CHECK(texts(answerStreams(parseProgram("p :- @0 p."), 1)) ==
          std::vector<std::string>{""});

    // The guess spreads pointwise: each time point decides independently.
    const std::vector<Stream> guesses =
        answerStreams(parseProgram("p :- not q.  q :- not p."), 1);
    REQUIRE(guesses.size() == 4);
    for (const Stream& s : guesses) {
        for (int t = 0; t <= 1; ++t) {
            CHECK(s.at(t).size() == 1);
        }
    }
}

TEST_CASE("answer streams satisfy the rules everywhere and come sorted") {
    gen::Rng rng(828282);
    const std::vector<std::string> pool = gen::atomPool(2);
    for (int trial = 0; trial < 150; ++trial) {
        const int horizon = gen::pick(rng, 0, 2);
        Program p;
        const int n = gen::pick(rng, 0, 3);
        for (int i = 0; i < n; ++i) {
            Rule r;
            if (!gen::chance(rng, 0.15)) {
                r.head.push_back(gen::headAtom(pool[static_cast<std::size_t>(
                    gen::pick(rng, 0, int(pool.size()) - 1))]));
            }
            const int len = gen::pick(rng, 0, 2);
            for (int b = 0; b < len; ++b) {
                const std::string& name =
                    pool[static_cast<std::size_t>(gen::pick(rng, 0, int(pool.size()) - 1))];
                switch (gen::pick(rng, 0, 2)) {
                    case 0:
                        r.body.push_back(positiveLiteral(gen::atom(name)));
                        break;
                    case 1:
                        r.body.push_back(negativeLiteral(gen::atom(name)));
                        break;
                    default:
                        r.body.push_back(formulaLiteral(
                            gen::randomTemporalFormula(rng, pool, 2, horizon)));
                        break;
                }
            }
            if (r.head.empty() && r.body.empty()) {
                continue;
            }
            p.rules.push_back(std::move(r));
        }
        CAPTURE(toText(p));

        const std::vector<Stream> streams = answerStreams(p, horizon);
        for (std::size_t k = 0; k < streams.size(); ++k) {
            if (k > 0) {
                CHECK(streams[k - 1].points < streams[k].points);
            }
            for (const Rule& r : p.rules) {
                for (int t = 0; t <= horizon; ++t) {
                    CHECK(holdsAt(streams[k], t, r));
                }
            }
        }
    }
}

TEST_CASE("the timeline capacity is enforced") {
    const Program p = parseProgram("a :- not b.  b :- not a.  c :- a.");
    SolveOptions opts;
    opts.maxAtoms = 8;
    // 3 atoms across 4 time points need 12 bits.
    CHECK(codeOf([&] { answerStreams(p, 3, opts); }) == Errc::capacity_exceeded);
    CHECK_NOTHROW(answerStreams(p, 1, opts));
}

} // TEST_SUITE
