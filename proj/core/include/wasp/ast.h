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
#ifndef WASP_AST_H
#define WASP_AST_H

#include <wasp/value.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wasp {

// Abstract syntax for the rule language. Nodes are immutable after
// construction and shared by pointer; structural equality is the notion of
// identity everywhere (the printer-parser pair round-trips it).

struct Term {
    enum class Kind { constant, variable };
    Kind kind;
    std::string text; // constants lowercase identifiers or integers, variables uppercase

    bool isVar() const { return kind == Kind::variable; }
    friend bool operator==(const Term&, const Term&) = default;
};

Term constant(std::string text);
Term variable(std::string text);

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const;
    // Canonical text "p" / "p(a,1)"; used as the element key of
    // interpretations, so equal keys mean equal ground atoms.
    std::string key() const;
    friend bool operator==(const Atom&, const Atom&) = default;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Classical formulas plus the temporal operators of the stream layer.
// Temporal nodes are rejected by the plain (non-stream) evaluators.
class Formula {
public:
    enum class Kind {
        verum,
        falsum,
        atom,
        negation,
        conjunction,
        disjunction,
        implication,
        eventually, // <>f : at some time point
        always,     // []f : at every time point
        at,         // @t f : at time point t
    };

    Kind kind;
    Atom atom;            // atom
    FormulaPtr lhs, rhs;  // unary nodes use lhs
    int time = 0;         // at

    bool ground() const;
    bool temporal() const; // contains a temporal operator
};

FormulaPtr mkTrue();
FormulaPtr mkFalse();
FormulaPtr mkAtom(Atom a);
FormulaPtr mkNot(FormulaPtr f);
FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r);
FormulaPtr mkOr(FormulaPtr l, FormulaPtr r);
FormulaPtr mkImplies(FormulaPtr l, FormulaPtr r);
FormulaPtr mkEventually(FormulaPtr f);
FormulaPtr mkAlways(FormulaPtr f);
FormulaPtr mkAt(int t, FormulaPtr f);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

class WeightedFormula;
using WfPtr = std::shared_ptr<const WeightedFormula>;

// Weighted formulas: semiring weights combined with 0-1 tests on classical
// formulas. "+" evaluates with semiring addition and "*" with semiring
// multiplication; sum/prod quantifiers expand over declared finite domains
// before evaluation.
class WeightedFormula {
public:
    enum class Kind {
        weight,     // literal semiring value
        weight_app, // w(t): declared weight function applied to a term
        atom_gate,  // one if the atom holds, zero otherwise
        gate,       // (f) or ~f over a classical formula
        addition,
        multiplication,
        sum,        // sum{X in d} body
        prod,       // prod{X in d} body
        eventually, // <>body: addition over time points
        always,     // []body: multiplication over time points
    };

    Kind kind;
    std::optional<Value> weight; // weight
    std::string function;        // weight_app
    Term argument{Term::Kind::constant, ""}; // weight_app
    Atom atom;                   // atom_gate
    FormulaPtr test;             // gate
    bool negated = false;        // gate
    WfPtr lhs, rhs;              // addition/multiplication; unary nodes use lhs
    std::string var, domain;     // sum/prod

    bool ground() const;   // no variables, no quantifiers, no weight applications
    bool temporal() const;
};

WfPtr mkWeight(Value v);
WfPtr mkWeightApp(std::string function, Term argument);
WfPtr mkAtomGate(Atom a);
WfPtr mkGate(FormulaPtr test, bool negated);
WfPtr mkAdd(WfPtr l, WfPtr r);
WfPtr mkMul(WfPtr l, WfPtr r);
WfPtr mkSum(std::string var, std::string domain, WfPtr body);
WfPtr mkProd(std::string var, std::string domain, WfPtr body);
WfPtr mkWEventually(WfPtr body);
WfPtr mkWAlways(WfPtr body);

bool equal(const WfPtr& a, const WfPtr& b);

// Comparators of algebraic constraints. Anything beyond equal/unequal
// requires an ordered semiring.
enum class CmpOp { eq, ne, lt, le, gt, ge };

const char* cmpOpText(CmpOp op);
bool cmpNeedsOrder(CmpOp op);

// An (in)equation "[k op body]@semiring" between a fixed carrier value and a
// weighted formula. Assertable in rule heads, checkable in rule bodies.
struct Constraint {
    Value bound;
    CmpOp cmp;
    WfPtr body;
    std::string semiring; // catalog identifier

    bool ground() const { return body && body->ground(); }
};

bool equal(const Constraint& a, const Constraint& b);

struct HeadLiteral {
    enum class Kind { atom, constraint };
    Kind kind;
    Atom atom;
    std::optional<Constraint> constraint;
};

struct BodyLiteral {
    enum class Kind {
        positive,   // a
        negative,   // not a
        constraint, // [k op alpha]@s
        domain,     // X in d (typing literal, consumed by grounding)
        formula,    // temporal test such as <>a (stream programs)
    };
    Kind kind;
    Atom atom;                         // positive/negative
    std::optional<Constraint> constraint;
    std::string var, domain;           // domain
    FormulaPtr formula;                // formula
};

BodyLiteral positiveLiteral(Atom a);
BodyLiteral negativeLiteral(Atom a);
BodyLiteral constraintLiteral(Constraint c);
BodyLiteral domainLiteral(std::string var, std::string domain);
BodyLiteral formulaLiteral(FormulaPtr f);

// head <- body. An empty head is an integrity constraint; an empty body
// makes the head a fact.
struct Rule {
    std::vector<HeadLiteral> head;
    std::vector<BodyLiteral> body;

    bool ground() const;
};

bool equal(const Rule& a, const Rule& b);

struct DomainDecl {
    std::string name;
    std::vector<std::string> constants; // declared order, no duplicates
};

struct WeightDecl {
    std::string function;
    std::string constant;
    std::string literal; // raw text, parsed by the semiring at the use site
};

struct Program {
    std::vector<std::string> semirings; // declared order; first is the default
    std::vector<DomainDecl> domains;
    std::vector<WeightDecl> weights;
    std::vector<Rule> rules;

    const DomainDecl* findDomain(std::string_view name) const;
    bool isWeightFunction(std::string_view name) const;
    // Raw literal of w(c), if declared.
    std::optional<std::string> weightLiteral(std::string_view function, std::string_view constant) const;
    std::string_view defaultSemiring() const; // empty if none declared

    bool ground() const;
    // Sorted keys of all ground atoms occurring anywhere in the rules.
    std::vector<std::string> atomUniverse() const;
};

bool equal(const Program& a, const Program& b);

// All ground atoms syntactically occurring in the rule (head, body, gates,
// weighted bodies), appended to `out`.
void collectAtoms(const Rule& rule, std::vector<Atom>& out);
void collectAtoms(const FormulaPtr& f, std::vector<Atom>& out);
void collectAtoms(const WfPtr& wf, std::vector<Atom>& out);

} // namespace wasp

#endif
