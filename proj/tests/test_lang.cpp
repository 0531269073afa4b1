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

#include <wasp/ast.h>
#include <wasp/error.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/semiring.h>

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

// ---- random AST generator for the roundtrip property ------------------------
//
// Produces programs that satisfy the parser's static checks: fixed arities
// (p/1, q/2, r/0, u/0), declared domains/weights/semirings, quantifier
// variables fresh along each path.

struct AstGen {
    gen::Rng rng;

    explicit AstGen(std::uint64_t seed) : rng(seed) {}

    Term constant() {
        return wasp::constant(gen::chance(rng, 0.5) ? "1" : "2");
    }
    Term var(int scope) { // scope 0 = X, 1 = Y
        return variable(scope == 0 ? "X" : "Y");
    }
    Atom atomNode(bool allowVars, int scope) {
        const int roll = gen::pick(rng, 0, 3);
        Atom a;
        if (roll == 0) {
            a.predicate = "r";
        } else if (roll == 1) {
            a.predicate = "u";
        } else if (roll == 2) {
            a.predicate = "p";
            a.args.push_back(allowVars && gen::chance(rng, 0.5) ? var(gen::pick(rng, 0, scope))
                                                                : constant());
        } else {
            a.predicate = "q";
            for (int i = 0; i < 2; ++i) {
                a.args.push_back(allowVars && gen::chance(rng, 0.4)
                                     ? var(gen::pick(rng, 0, scope))
                                     : constant());
            }
        }
        return a;
    }
    FormulaPtr formula(int depth, bool allowVars, int scope, bool temporal) {
        if (depth <= 0 || gen::chance(rng, 0.35)) {
            const int roll = gen::pick(rng, 0, 7);
            if (roll == 0) {
                return mkTrue();
            }
            if (roll == 1) {
                return mkFalse();
            }
            return mkAtom(atomNode(allowVars, scope));
        }
        switch (gen::pick(rng, 0, temporal ? 6 : 3)) {
            case 0:
                return mkNot(formula(depth - 1, allowVars, scope, temporal));
            case 1:
                return mkAnd(formula(depth - 1, allowVars, scope, temporal),
                             formula(depth - 1, allowVars, scope, temporal));
            case 2:
                return mkOr(formula(depth - 1, allowVars, scope, temporal),
                            formula(depth - 1, allowVars, scope, temporal));
            case 3:
                return mkImplies(formula(depth - 1, allowVars, scope, temporal),
                                 formula(depth - 1, allowVars, scope, temporal));
            case 4:
                return mkEventually(formula(depth - 1, allowVars, scope, temporal));
            case 5:
                return mkAlways(formula(depth - 1, allowVars, scope, temporal));
            default:
                return mkAt(gen::pick(rng, 0, 3), formula(depth - 1, allowVars, scope, temporal));
        }
    }
    // scope: -1 = no variable bound yet, 0 = X bound, 1 = X and Y bound.
    WfPtr weighted(const Semiring& s, int depth, int scope, bool temporal) {
        const bool allowVars = scope >= 0;
        if (depth <= 0 || gen::chance(rng, 0.3)) {
            const int roll = gen::pick(rng, 0, 3);
            if (roll == 0) {
                return mkWeight(gen::randomValue(rng, s));
            }
            if (roll == 1 && allowVars) {
                return mkWeightApp("w", var(gen::pick(rng, 0, scope)));
            }
            if (roll == 2) {
                return mkAtomGate(atomNode(allowVars, scope));
            }
            return mkGate(formula(2, allowVars, scope, temporal), gen::chance(rng, 0.5));
        }
        const int roll = gen::pick(rng, 0, temporal ? 4 : 3);
        switch (roll) {
            case 0:
                return mkAdd(weighted(s, depth - 1, scope, temporal),
                             weighted(s, depth - 1, scope, temporal));
            case 1:
                return mkMul(weighted(s, depth - 1, scope, temporal),
                             weighted(s, depth - 1, scope, temporal));
            case 2:
            case 3: {
                if (scope >= 1) { // both variable names used up
                    return mkMul(weighted(s, depth - 1, scope, temporal),
                                 weighted(s, depth - 1, scope, temporal));
                }
                const std::string v = scope == -1 ? "X" : "Y";
                const std::string d = gen::chance(rng, 0.5) ? "d1" : "d2";
                WfPtr body = weighted(s, depth - 1, scope + 1, temporal);
                return roll == 2 ? mkSum(v, d, std::move(body)) : mkProd(v, d, std::move(body));
            }
            default:
                return gen::chance(rng, 0.5)
                           ? mkWEventually(weighted(s, depth - 1, scope, temporal))
                           : mkWAlways(weighted(s, depth - 1, scope, temporal));
        }
    }
    Constraint constraint(bool temporal) {
        static const char* kOrdered[] = {"nat", "int", "rat", "trop", "maxplus", "fuzzy"};
        const bool boolean = gen::chance(rng, 0.15);
        const Semiring& s =
            Semiring::byName(boolean ? "bool" : kOrdered[gen::pick(rng, 0, 5)]);
        const CmpOp op = boolean ? (gen::chance(rng, 0.5) ? CmpOp::eq : CmpOp::ne)
                                 : static_cast<CmpOp>(gen::pick(rng, 0, 5));
        return Constraint{gen::randomValue(rng, s), op, weighted(s, 2, -1, temporal),
                          std::string(s.name())};
    }
    Rule rule() {
        Rule r;
        const int heads = gen::pick(rng, 0, 2);
        for (int i = 0; i < heads; ++i) {
            HeadLiteral h;
            if (gen::chance(rng, 0.8)) {
                h.kind = HeadLiteral::Kind::atom;
                h.atom = atomNode(true, 1);
            } else {
                h.kind = HeadLiteral::Kind::constraint;
                h.constraint = constraint(false);
            }
            r.head.push_back(std::move(h));
        }
        const int len = gen::pick(rng, 0, 3);
        for (int i = 0; i < len; ++i) {
            switch (gen::pick(rng, 0, 4)) {
                case 0:
                    r.body.push_back(positiveLiteral(atomNode(true, 1)));
                    break;
                case 1:
                    r.body.push_back(negativeLiteral(atomNode(true, 1)));
                    break;
                case 2:
                    r.body.push_back(constraintLiteral(constraint(false)));
                    break;
                case 3:
                    r.body.push_back(domainLiteral(gen::chance(rng, 0.5) ? "X" : "Y",
                                                   gen::chance(rng, 0.5) ? "d1" : "d2"));
                    break;
                default:
                    r.body.push_back(formulaLiteral(
                        gen::chance(rng, 0.5)
                            ? mkEventually(formula(1, true, 1, true))
                            : mkAt(gen::pick(rng, 0, 3), formula(1, true, 1, true))));
                    break;
            }
        }
        if (r.head.empty() && r.body.empty()) {
            r.head.push_back(headAtomLit());
        }
        return r;
    }
    HeadLiteral headAtomLit() {
        HeadLiteral h;
        h.kind = HeadLiteral::Kind::atom;
        h.atom = atomNode(false, 0);
        return h;
    }
    Program program() {
        Program p;
        p.semirings = {"nat", "bool", "int", "rat", "trop", "maxplus", "fuzzy"};
        p.domains.push_back(DomainDecl{"d1", {"1", "2"}});
        p.domains.push_back(DomainDecl{"d2", {"a", "b", "c"}});
        p.weights.push_back(WeightDecl{"w", "1", "1"});
        p.weights.push_back(WeightDecl{"w", "2", "0"});
        const int n = gen::pick(rng, 0, 5);
        for (int i = 0; i < n; ++i) {
            p.rules.push_back(rule());
        }
        return p;
    }
};

} // namespace

TEST_SUITE("lang") {

TEST_CASE("programs, constraints and comments parse") {
    const Program p = parseProgram("a :- not b.  b :- not a.");
    REQUIRE(p.rules.size() == 2);
    CHECK(toText(p.rules[0]) == "a :- not b.");

    const Program c = parseProgram("#semiring rat. x :- [30 > 15*circus + 20*restaurant]@rat.");
    REQUIRE(c.rules.size() == 1);
    REQUIRE(c.rules[0].body.size() == 1);
    REQUIRE(c.rules[0].body[0].kind == BodyLiteral::Kind::constraint);
    const Constraint& k = *c.rules[0].body[0].constraint;
    CHECK(k.bound.str() == "30");
    CHECK(k.cmp == CmpOp::gt);
    CHECK(k.semiring == "rat");

    CHECK(parseProgram("% just a comment\n").rules.empty());
    CHECK(parseProgram("a. % trailing\n").rules.size() == 1);
}

TEST_CASE("declarations populate the program tables") {
    const Program p = parseProgram(
        "#semiring trop.\n#domain d = {1, 2, 3}.\n#weight w(1) = 4.\np(X) :- X in d.");
    CHECK(p.defaultSemiring() == "trop");
    REQUIRE(p.findDomain("d") != nullptr);
    CHECK(p.findDomain("d")->constants.size() == 3);
    CHECK(p.isWeightFunction("w"));
    CHECK(*p.weightLiteral("w", "1") == "4");
    CHECK(!p.weightLiteral("w", "9"));
}

TEST_CASE("surface errors carry a position and the right code") {
    CHECK(codeOf([] { parseProgram("a :- X."); }) == Errc::syntax_error);
    CHECK(codeOf([] { parseProgram("a :- b"); }) == Errc::syntax_error);
    CHECK(codeOf([] { parseWeightedFormula("15*circus +", Semiring::byName("nat")); }) ==
          Errc::syntax_error);
    CHECK(codeOf([] { parseProgram("#domain d = {}."); }) == Errc::syntax_error);
    CHECK(codeOf([] { parseProgram("#domain d = {1, 1}."); }) == Errc::syntax_error);
    CHECK(codeOf([] { parseProgram("p(1). p(1,2)."); }) == Errc::bad_argument);
    CHECK(codeOf([] { parseProgram("q(X) :- X in nowhere."); }) == Errc::syntax_error);
    CHECK(codeOf([] { parseProgram("a :- [1 <= b]@galois."); }) == Errc::unknown_semiring);
    CHECK(codeOf([] { parseProgram("a :- [true < b]@bool."); }) == Errc::order_unsupported);
    CHECK(codeOf([] { parseWeightedFormula("3/0", Semiring::byName("rat")); }) ==
          Errc::malformed_value);
    CHECK(codeOf([] { parseWeightedFormula("sum{X in d} sum{X in d} p(X)",
                                           Semiring::byName("nat")); }) ==
          Errc::variable_capture);

    try {
        parseProgram("a :- b,\n& c.");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
}

TEST_CASE("weighted formula surface forms") {
    const Semiring& rat = Semiring::byName("rat");
    const WfPtr alpha = parseWeightedFormula("15*circus + 20*restaurant", rat);
    REQUIRE(alpha->kind == WeightedFormula::Kind::addition);
    CHECK(alpha->lhs->kind == WeightedFormula::Kind::multiplication);
    CHECK(alpha->lhs->lhs->kind == WeightedFormula::Kind::weight);
    CHECK(alpha->lhs->lhs->weight->str() == "15");
    CHECK(alpha->rhs->rhs->atom.key() == "restaurant");

    Program ctx = parseProgram("#domain d = {1}. #weight w(1) = 2.");
    const WfPtr q = parseWeightedFormula("sum{X in d} w(X)*p(X)", Semiring::byName("nat"), &ctx);
    REQUIRE(q->kind == WeightedFormula::Kind::sum);
    CHECK(q->var == "X");
    CHECK(q->domain == "d");
    CHECK(q->lhs->kind == WeightedFormula::Kind::multiplication);
    CHECK(q->lhs->lhs->kind == WeightedFormula::Kind::weight_app);
}

TEST_CASE("operator precedence is fixed") {
    // not > and > or > implies, right-associative implication.
    CHECK(toText(parseFormula("~a & b | c -> d")) == "~a & b | c -> d");
    CHECK(equal(parseFormula("~a & b | c -> d"),
                mkImplies(mkOr(mkAnd(mkNot(mkAtom(gen::atom("a"))), mkAtom(gen::atom("b"))),
                               mkAtom(gen::atom("c"))),
                          mkAtom(gen::atom("d")))));
    CHECK(equal(parseFormula("a -> b -> c"),
                mkImplies(mkAtom(gen::atom("a")),
                          mkImplies(mkAtom(gen::atom("b")), mkAtom(gen::atom("c"))))));
    CHECK(equal(parseFormula("~(a | b)"), mkNot(mkOr(mkAtom(gen::atom("a")), mkAtom(gen::atom("b"))))));

    // * binds tighter than +.
    const Semiring& nat = Semiring::byName("nat");
    CHECK(equal(parseWeightedFormula("1*a + 2*b", nat),
                mkAdd(mkMul(mkWeight(nat.parse("1")), mkAtomGate(gen::atom("a"))),
                      mkMul(mkWeight(nat.parse("2")), mkAtomGate(gen::atom("b"))))));
    CHECK(equal(parseWeightedFormula("a + b*c", nat),
                mkAdd(mkAtomGate(gen::atom("a")),
                      mkMul(mkAtomGate(gen::atom("b")), mkAtomGate(gen::atom("c"))))));
}

TEST_CASE("print produces canonical text") {
    CHECK(toText(Program{}) == "");
    CHECK(toText(parseProgram("")) == "");
    const char* kText = "#semiring rat.\n#domain d = {1, 2}.\n#weight w(1) = 3.\n"
                        "p(1) | r :- not q(1,2), [4 <= sum{X in d} w(X)*p(X)]@rat.\n";
    const Program p = parseProgram(kText);
    CHECK(toText(p) == kText);

    // One normalization pass, then byte-stable.
    const std::string once = toText(parseProgram("a:-not b.   b :- not a."));
    CHECK(once == "a :- not b.\nb :- not a.\n");
    CHECK(toText(parseProgram(once)) == once);
}

TEST_CASE("parse then print is the identity on 500 random programs") {
    AstGen g(987654321);
    for (int i = 0; i < 500; ++i) {
        const Program before = g.program();
        const std::string text = toText(before);
        CAPTURE(text);
        Program after = parseProgram(text);
        REQUIRE(equal(before, after));
        REQUIRE(toText(after) == text);
    }
}

TEST_CASE("atom keys are canonical and stable") {
    const Program p = parseProgram("e(b,2).");
    CHECK(p.rules[0].head[0].atom.key() == "e(b,2)");
    CHECK(parseAtomKeys("a, e(b,2)") == std::vector<std::string>{"a", "e(b,2)"});
    CHECK(parseAtomKeys("{a, b}") == std::vector<std::string>{"a", "b"});
    CHECK(parseAtomKeys("").empty());
    CHECK(codeOf([] { parseAtomKeys("p(X)"); }) == Errc::syntax_error);
}

} // TEST_SUITE
