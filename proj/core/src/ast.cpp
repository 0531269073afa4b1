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
#include <wasp/ast.h>

#include <algorithm>

namespace wasp {

Term constant(std::string text) { return Term{Term::Kind::constant, std::move(text)}; }
Term variable(std::string text) { return Term{Term::Kind::variable, std::move(text)}; }

bool Atom::ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.isVar(); });
}

std::string Atom::key() const {
    if (args.empty()) {
        return predicate;
    }
    std::string k = predicate;
    k += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i != 0) {
            k += ',';
        }
        k += args[i].text;
    }
    k += ')';
    return k;
}

namespace {

FormulaPtr node(Formula::Kind kind) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    return f;
}

} // namespace

FormulaPtr mkTrue() { return node(Formula::Kind::verum); }
FormulaPtr mkFalse() { return node(Formula::Kind::falsum); }

FormulaPtr mkAtom(Atom a) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::atom;
    f->atom = std::move(a);
    return f;
}

FormulaPtr mkNot(FormulaPtr sub) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::negation;
    f->lhs = std::move(sub);
    return f;
}

namespace {
FormulaPtr binary(Formula::Kind kind, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}
} // namespace

FormulaPtr mkAnd(FormulaPtr l, FormulaPtr r) { return binary(Formula::Kind::conjunction, std::move(l), std::move(r)); }
FormulaPtr mkOr(FormulaPtr l, FormulaPtr r) { return binary(Formula::Kind::disjunction, std::move(l), std::move(r)); }
FormulaPtr mkImplies(FormulaPtr l, FormulaPtr r) {
    return binary(Formula::Kind::implication, std::move(l), std::move(r));
}

FormulaPtr mkEventually(FormulaPtr sub) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::eventually;
    f->lhs = std::move(sub);
    return f;
}

FormulaPtr mkAlways(FormulaPtr sub) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::always;
    f->lhs = std::move(sub);
    return f;
}

FormulaPtr mkAt(int t, FormulaPtr sub) {
    auto f = std::make_shared<Formula>();
    f->kind = Formula::Kind::at;
    f->time = t;
    f->lhs = std::move(sub);
    return f;
}

bool Formula::ground() const {
    switch (kind) {
        case Kind::verum:
        case Kind::falsum: return true;
        case Kind::atom  : return atom.ground();
        default:
            return (!lhs || lhs->ground()) && (!rhs || rhs->ground());
    }
}

bool Formula::temporal() const {
    switch (kind) {
        case Kind::eventually:
        case Kind::always:
        case Kind::at: return true;
        default:
            return (lhs && lhs->temporal()) || (rhs && rhs->temporal());
    }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind != b->kind) {
        return false;
    }
    switch (a->kind) {
        case Formula::Kind::verum:
        case Formula::Kind::falsum: return true;
        case Formula::Kind::atom  : return a->atom == b->atom;
        case Formula::Kind::at:
            return a->time == b->time && equal(a->lhs, b->lhs);
        default:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

namespace {
std::shared_ptr<WeightedFormula> wnode(WeightedFormula::Kind kind) {
    auto w = std::make_shared<WeightedFormula>();
    w->kind = kind;
    return w;
}
} // namespace

WfPtr mkWeight(Value v) {
    auto w = wnode(WeightedFormula::Kind::weight);
    w->weight = std::move(v);
    return w;
}

WfPtr mkWeightApp(std::string function, Term argument) {
    auto w = wnode(WeightedFormula::Kind::weight_app);
    w->function = std::move(function);
    w->argument = std::move(argument);
    return w;
}

WfPtr mkAtomGate(Atom a) {
    auto w = wnode(WeightedFormula::Kind::atom_gate);
    w->atom = std::move(a);
    return w;
}

WfPtr mkGate(FormulaPtr test, bool negated) {
    auto w = wnode(WeightedFormula::Kind::gate);
    w->test = std::move(test);
    w->negated = negated;
    return w;
}

WfPtr mkAdd(WfPtr l, WfPtr r) {
    auto w = wnode(WeightedFormula::Kind::addition);
    w->lhs = std::move(l);
    w->rhs = std::move(r);
    return w;
}

WfPtr mkMul(WfPtr l, WfPtr r) {
    auto w = wnode(WeightedFormula::Kind::multiplication);
    w->lhs = std::move(l);
    w->rhs = std::move(r);
    return w;
}

namespace {
WfPtr quantifier(WeightedFormula::Kind kind, std::string var, std::string domain, WfPtr body) {
    auto w = wnode(kind);
    w->var = std::move(var);
    w->domain = std::move(domain);
    w->lhs = std::move(body);
    return w;
}
} // namespace

WfPtr mkSum(std::string var, std::string domain, WfPtr body) {
    return quantifier(WeightedFormula::Kind::sum, std::move(var), std::move(domain), std::move(body));
}

WfPtr mkProd(std::string var, std::string domain, WfPtr body) {
    return quantifier(WeightedFormula::Kind::prod, std::move(var), std::move(domain), std::move(body));
}

WfPtr mkWEventually(WfPtr body) {
    auto w = wnode(WeightedFormula::Kind::eventually);
    w->lhs = std::move(body);
    return w;
}

WfPtr mkWAlways(WfPtr body) {
    auto w = wnode(WeightedFormula::Kind::always);
    w->lhs = std::move(body);
    return w;
}

bool WeightedFormula::ground() const {
    switch (kind) {
        case Kind::weight    : return true;
        case Kind::weight_app: return false; // resolved during grounding
        case Kind::atom_gate : return atom.ground();
        case Kind::gate      : return test && test->ground();
        case Kind::sum:
        case Kind::prod      : return false; // expanded during grounding
        default:
            return (!lhs || lhs->ground()) && (!rhs || rhs->ground());
    }
}

bool WeightedFormula::temporal() const {
    switch (kind) {
        case Kind::eventually:
        case Kind::always: return true;
        case Kind::gate  : return test && test->temporal();
        default:
            return (lhs && lhs->temporal()) || (rhs && rhs->temporal());
    }
}

bool equal(const WfPtr& a, const WfPtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind != b->kind) {
        return false;
    }
    switch (a->kind) {
        case WeightedFormula::Kind::weight:
            return *a->weight == *b->weight;
        case WeightedFormula::Kind::weight_app:
            return a->function == b->function && a->argument == b->argument;
        case WeightedFormula::Kind::atom_gate:
            return a->atom == b->atom;
        case WeightedFormula::Kind::gate:
            return a->negated == b->negated && equal(a->test, b->test);
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod:
            return a->var == b->var && a->domain == b->domain && equal(a->lhs, b->lhs);
        default:
            return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

const char* cmpOpText(CmpOp op) {
    switch (op) {
        case CmpOp::eq: return "=";
        case CmpOp::ne: return "!=";
        case CmpOp::lt: return "<";
        case CmpOp::le: return "<=";
        case CmpOp::gt: return ">";
        case CmpOp::ge: return ">=";
    }
    return "?";
}

bool cmpNeedsOrder(CmpOp op) { return op != CmpOp::eq && op != CmpOp::ne; }

bool equal(const Constraint& a, const Constraint& b) {
    return a.bound == b.bound && a.cmp == b.cmp && a.semiring == b.semiring && equal(a.body, b.body);
}

BodyLiteral positiveLiteral(Atom a) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::positive;
    l.atom = std::move(a);
    return l;
}

BodyLiteral negativeLiteral(Atom a) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::negative;
    l.atom = std::move(a);
    return l;
}

BodyLiteral constraintLiteral(Constraint c) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::constraint;
    l.constraint = std::move(c);
    return l;
}

BodyLiteral domainLiteral(std::string var, std::string domain) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::domain;
    l.var = std::move(var);
    l.domain = std::move(domain);
    return l;
}

BodyLiteral formulaLiteral(FormulaPtr f) {
    BodyLiteral l;
    l.kind = BodyLiteral::Kind::formula;
    l.formula = std::move(f);
    return l;
}

namespace {

bool equal(const HeadLiteral& a, const HeadLiteral& b) {
    if (a.kind != b.kind) {
        return false;
    }
    if (a.kind == HeadLiteral::Kind::atom) {
        return a.atom == b.atom;
    }
    return equal(*a.constraint, *b.constraint);
}

bool equal(const BodyLiteral& a, const BodyLiteral& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
        case BodyLiteral::Kind::positive:
        case BodyLiteral::Kind::negative:
            return a.atom == b.atom;
        case BodyLiteral::Kind::constraint:
            return equal(*a.constraint, *b.constraint);
        case BodyLiteral::Kind::domain:
            return a.var == b.var && a.domain == b.domain;
        case BodyLiteral::Kind::formula:
            return equal(a.formula, b.formula);
    }
    return false;
}

} // namespace

bool Rule::ground() const {
    for (const HeadLiteral& h : head) {
        if (h.kind == HeadLiteral::Kind::atom) {
            if (!h.atom.ground()) {
                return false;
            }
        } else if (!h.constraint->ground()) {
            return false;
        }
    }
    for (const BodyLiteral& b : body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
            case BodyLiteral::Kind::negative:
                if (!b.atom.ground()) {
                    return false;
                }
                break;
            case BodyLiteral::Kind::constraint:
                if (!b.constraint->ground()) {
                    return false;
                }
                break;
            case BodyLiteral::Kind::domain:
                return false;
            case BodyLiteral::Kind::formula:
                if (!b.formula->ground()) {
                    return false;
                }
                break;
        }
    }
    return true;
}

bool equal(const Rule& a, const Rule& b) {
    if (a.head.size() != b.head.size() || a.body.size() != b.body.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.head.size(); ++i) {
        if (!equal(a.head[i], b.head[i])) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.body.size(); ++i) {
        if (!equal(a.body[i], b.body[i])) {
            return false;
        }
    }
    return true;
}

const DomainDecl* Program::findDomain(std::string_view name) const {
    for (const DomainDecl& d : domains) {
        if (d.name == name) {
            return &d;
        }
    }
    return nullptr;
}

bool Program::isWeightFunction(std::string_view name) const {
    return std::any_of(weights.begin(), weights.end(),
                       [&](const WeightDecl& w) { return w.function == name; });
}

std::optional<std::string> Program::weightLiteral(std::string_view function, std::string_view constant) const {
    for (const WeightDecl& w : weights) {
        if (w.function == function && w.constant == constant) {
            return w.literal;
        }
    }
    return std::nullopt;
}

std::string_view Program::defaultSemiring() const {
    return semirings.empty() ? std::string_view() : std::string_view(semirings.front());
}

bool Program::ground() const {
    return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.ground(); });
}

void collectAtoms(const FormulaPtr& f, std::vector<Atom>& out) {
    if (!f) {
        return;
    }
    if (f->kind == Formula::Kind::atom) {
        out.push_back(f->atom);
        return;
    }
    collectAtoms(f->lhs, out);
    collectAtoms(f->rhs, out);
}

void collectAtoms(const WfPtr& wf, std::vector<Atom>& out) {
    if (!wf) {
        return;
    }
    switch (wf->kind) {
        case WeightedFormula::Kind::atom_gate:
            out.push_back(wf->atom);
            return;
        case WeightedFormula::Kind::gate:
            collectAtoms(wf->test, out);
            return;
        default:
            collectAtoms(wf->lhs, out);
            collectAtoms(wf->rhs, out);
            return;
    }
}

void collectAtoms(const Rule& rule, std::vector<Atom>& out) {
    for (const HeadLiteral& h : rule.head) {
        if (h.kind == HeadLiteral::Kind::atom) {
            out.push_back(h.atom);
        } else {
            collectAtoms(h.constraint->body, out);
        }
    }
    for (const BodyLiteral& b : rule.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
            case BodyLiteral::Kind::negative:
                out.push_back(b.atom);
                break;
            case BodyLiteral::Kind::constraint:
                collectAtoms(b.constraint->body, out);
                break;
            case BodyLiteral::Kind::domain:
                break;
            case BodyLiteral::Kind::formula:
                collectAtoms(b.formula, out);
                break;
        }
    }
}

std::vector<std::string> Program::atomUniverse() const {
    std::vector<Atom> atoms;
    for (const Rule& r : rules) {
        collectAtoms(r, atoms);
    }
    std::vector<std::string> keys;
    keys.reserve(atoms.size());
    for (const Atom& a : atoms) {
        if (a.ground()) {
            keys.push_back(a.key());
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

bool equal(const Program& a, const Program& b) {
    if (a.semirings != b.semirings || a.rules.size() != b.rules.size()) {
        return false;
    }
    if (a.domains.size() != b.domains.size() || a.weights.size() != b.weights.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.domains.size(); ++i) {
        if (a.domains[i].name != b.domains[i].name || a.domains[i].constants != b.domains[i].constants) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
        const WeightDecl& x = a.weights[i];
        const WeightDecl& y = b.weights[i];
        if (x.function != y.function || x.constant != y.constant || x.literal != y.literal) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.rules.size(); ++i) {
        if (!equal(a.rules[i], b.rules[i])) {
            return false;
        }
    }
    return true;
}

} // namespace wasp
