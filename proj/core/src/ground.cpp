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
#include <wasp/ground.h>

#include <map>
#include <set>

#include <wasp/error.h>
#include <wasp/printer.h>

namespace wasp {

namespace {

using Subst = std::map<std::string, std::string>;

Term substTerm(const Term& t, const Subst& s) {
    if (t.isVar()) {
        if (auto it = s.find(t.text); it != s.end()) {
            return constant(it->second);
        }
    }
    return t;
}

Atom substAtom(const Atom& a, const Subst& s) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) {
        out.args.push_back(substTerm(t, s));
    }
    return out;
}

FormulaPtr substFormula(const FormulaPtr& f, const Subst& s) {
    if (!f) {
        return f;
    }
    switch (f->kind) {
        case Formula::Kind::verum:
        case Formula::Kind::falsum:
            return f;
        case Formula::Kind::atom:
            return mkAtom(substAtom(f->atom, s));
        case Formula::Kind::negation:
            return mkNot(substFormula(f->lhs, s));
        case Formula::Kind::conjunction:
            return mkAnd(substFormula(f->lhs, s), substFormula(f->rhs, s));
        case Formula::Kind::disjunction:
            return mkOr(substFormula(f->lhs, s), substFormula(f->rhs, s));
        case Formula::Kind::implication:
            return mkImplies(substFormula(f->lhs, s), substFormula(f->rhs, s));
        case Formula::Kind::eventually:
            return mkEventually(substFormula(f->lhs, s));
        case Formula::Kind::always:
            return mkAlways(substFormula(f->lhs, s));
        case Formula::Kind::at:
            return mkAt(f->time, substFormula(f->lhs, s));
    }
    return f;
}

WfPtr substWf(const WfPtr& w, const Subst& s) {
    if (!w) {
        return w;
    }
    switch (w->kind) {
        case WeightedFormula::Kind::weight:
            return w;
        case WeightedFormula::Kind::weight_app:
            return mkWeightApp(w->function, substTerm(w->argument, s));
        case WeightedFormula::Kind::atom_gate:
            return mkAtomGate(substAtom(w->atom, s));
        case WeightedFormula::Kind::gate:
            return mkGate(substFormula(w->test, s), w->negated);
        case WeightedFormula::Kind::addition:
            return mkAdd(substWf(w->lhs, s), substWf(w->rhs, s));
        case WeightedFormula::Kind::multiplication:
            return mkMul(substWf(w->lhs, s), substWf(w->rhs, s));
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod: {
            if (s.find(w->var) != s.end()) {
                throw Error(Errc::variable_capture,
                            "quantifier in '" + toText(w) + "' rebinds variable '" +
                                w->var + "'");
            }
            WfPtr body = substWf(w->lhs, s);
            return w->kind == WeightedFormula::Kind::sum
                       ? mkSum(w->var, w->domain, std::move(body))
                       : mkProd(w->var, w->domain, std::move(body));
        }
        case WeightedFormula::Kind::eventually:
            return mkWEventually(substWf(w->lhs, s));
        case WeightedFormula::Kind::always:
            return mkWAlways(substWf(w->lhs, s));
    }
    return w;
}

Constraint substConstraint(const Constraint& c, const Subst& s) {
    return Constraint{c.bound, c.cmp, substWf(c.body, s), c.semiring};
}

// ---- variable occurrences ---------------------------------------------------

struct VarOcc {
    std::string var;
    std::string context;
};

void occInAtom(const Atom& a, const std::string& context, std::vector<VarOcc>& out) {
    for (const Term& t : a.args) {
        if (t.isVar()) {
            out.push_back(VarOcc{t.text, context});
        }
    }
}

void occInFormula(const FormulaPtr& f, const std::string& context, std::vector<VarOcc>& out) {
    std::vector<Atom> atoms;
    collectAtoms(f, atoms);
    for (const Atom& a : atoms) {
        occInAtom(a, context, out);
    }
}

void occInWf(const WfPtr& w, std::set<std::string>& bound, const std::string& context,
             std::vector<VarOcc>& out) {
    if (!w) {
        return;
    }
    switch (w->kind) {
        case WeightedFormula::Kind::weight:
            return;
        case WeightedFormula::Kind::weight_app:
            if (w->argument.isVar() && bound.find(w->argument.text) == bound.end()) {
                out.push_back(VarOcc{w->argument.text, context});
            }
            return;
        case WeightedFormula::Kind::atom_gate: {
            for (const Term& t : w->atom.args) {
                if (t.isVar() && bound.find(t.text) == bound.end()) {
                    out.push_back(VarOcc{t.text, context});
                }
            }
            return;
        }
        case WeightedFormula::Kind::gate: {
            std::vector<Atom> atoms;
            collectAtoms(w->test, atoms);
            for (const Atom& a : atoms) {
                for (const Term& t : a.args) {
                    if (t.isVar() && bound.find(t.text) == bound.end()) {
                        out.push_back(VarOcc{t.text, context});
                    }
                }
            }
            return;
        }
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod: {
            const bool added = bound.insert(w->var).second;
            occInWf(w->lhs, bound, context, out);
            if (added) {
                bound.erase(w->var);
            }
            return;
        }
        default:
            occInWf(w->lhs, bound, context, out);
            occInWf(w->rhs, bound, context, out);
            return;
    }
}

// Rule variables in order of first occurrence (head first, body left to
// right), with a description of the occurrence site.
std::vector<VarOcc> ruleOccurrences(const Rule& r) {
    std::vector<VarOcc> occ;
    std::set<std::string> bound;
    for (const HeadLiteral& h : r.head) {
        if (h.kind == HeadLiteral::Kind::atom) {
            occInAtom(h.atom, "head atom '" + h.atom.key() + "'", occ);
        } else {
            occInWf(h.constraint->body, bound, "head constraint '" + toText(*h.constraint) + "'", occ);
        }
    }
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                occInAtom(b.atom, "positive literal '" + b.atom.key() + "'", occ);
                break;
            case BodyLiteral::Kind::negative:
                occInAtom(b.atom, "negative literal 'not " + b.atom.key() + "'", occ);
                break;
            case BodyLiteral::Kind::constraint:
                occInWf(b.constraint->body, bound,
                        "body constraint '" + toText(*b.constraint) + "'", occ);
                break;
            case BodyLiteral::Kind::domain:
                occ.push_back(VarOcc{b.var, "domain literal '" + b.var + " in " + b.domain + "'"});
                break;
            case BodyLiteral::Kind::formula:
                occInFormula(b.formula, "body formula '" + toText(b.formula) + "'", occ);
                break;
        }
    }
    return occ;
}

std::set<std::string> safeVariables(const Rule& r) {
    std::set<std::string> safe;
    for (const BodyLiteral& b : r.body) {
        if (b.kind == BodyLiteral::Kind::positive) {
            for (const Term& t : b.atom.args) {
                if (t.isVar()) {
                    safe.insert(t.text);
                }
            }
        } else if (b.kind == BodyLiteral::Kind::domain) {
            safe.insert(b.var);
        }
    }
    return safe;
}

} // namespace

SafetyReport checkSafety(const Program& p) {
    SafetyReport report;
    for (std::size_t idx = 0; idx < p.rules.size(); ++idx) {
        const Rule& r = p.rules[idx];
        const std::set<std::string> safe = safeVariables(r);
        std::set<std::string> reported;
        for (const VarOcc& o : ruleOccurrences(r)) {
            if (safe.find(o.var) == safe.end() && reported.insert(o.var).second) {
                report.violations.push_back(SafetyViolation{idx, o.var, o.context});
            }
        }
    }
    return report;
}

WfPtr expandQuantifier(const WfPtr& q, const DomainDecl& d, const Semiring& s) {
    if (!q || (q->kind != WeightedFormula::Kind::sum &&
               q->kind != WeightedFormula::Kind::prod)) {
        throw Error(Errc::bad_argument, "not a quantifier node");
    }
    const bool isSum = q->kind == WeightedFormula::Kind::sum;
    WfPtr chain;
    for (const std::string& c : d.constants) {
        Subst one;
        one.emplace(q->var, c);
        WfPtr inst = substWf(q->lhs, one);
        chain = chain ? (isSum ? mkAdd(std::move(chain), std::move(inst))
                               : mkMul(std::move(chain), std::move(inst)))
                      : std::move(inst);
    }
    if (!chain) {
        chain = mkWeight(isSum ? s.zero() : s.one());
    }
    return chain;
}

WfPtr groundWeighted(const WfPtr& alpha, const Program& p, const Semiring& s) {
    switch (alpha->kind) {
        case WeightedFormula::Kind::weight:
        case WeightedFormula::Kind::atom_gate:
        case WeightedFormula::Kind::gate:
            return alpha;
        case WeightedFormula::Kind::weight_app: {
            if (alpha->argument.isVar()) {
                throw Error(Errc::non_ground, "weight application '" + toText(alpha) +
                                                  "' has an unbound argument");
            }
            const auto literal = p.weightLiteral(alpha->function, alpha->argument.text);
            if (!literal) {
                throw Error(Errc::missing_weight,
                            "no weight declared for '" + toText(alpha) + "'");
            }
            return mkWeight(s.parse(*literal));
        }
        case WeightedFormula::Kind::addition:
            return mkAdd(groundWeighted(alpha->lhs, p, s), groundWeighted(alpha->rhs, p, s));
        case WeightedFormula::Kind::multiplication:
            return mkMul(groundWeighted(alpha->lhs, p, s), groundWeighted(alpha->rhs, p, s));
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod: {
            const DomainDecl* d = p.findDomain(alpha->domain);
            if (d == nullptr) {
                throw Error(Errc::missing_domain,
                            "domain '" + alpha->domain + "' is not declared");
            }
            return groundWeighted(expandQuantifier(alpha, *d, s), p, s);
        }
        case WeightedFormula::Kind::eventually:
            return mkWEventually(groundWeighted(alpha->lhs, p, s));
        case WeightedFormula::Kind::always:
            return mkWAlways(groundWeighted(alpha->lhs, p, s));
    }
    return alpha;
}

namespace {

Constraint groundConstraint(const Constraint& c, const Program& p) {
    const Semiring& s = Semiring::byName(c.semiring);
    return Constraint{c.bound, c.cmp, groundWeighted(c.body, p, s), c.semiring};
}

// Instantiated copy of r under subst: domain literals are consumed,
// quantifiers expanded, weight applications resolved.
Rule instantiate(const Rule& r, const Subst& subst, const Program& p) {
    Rule out;
    for (const HeadLiteral& h : r.head) {
        HeadLiteral lit;
        lit.kind = h.kind;
        if (h.kind == HeadLiteral::Kind::atom) {
            lit.atom = substAtom(h.atom, subst);
        } else {
            lit.constraint = groundConstraint(substConstraint(*h.constraint, subst), p);
        }
        out.head.push_back(std::move(lit));
    }
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                out.body.push_back(positiveLiteral(substAtom(b.atom, subst)));
                break;
            case BodyLiteral::Kind::negative:
                out.body.push_back(negativeLiteral(substAtom(b.atom, subst)));
                break;
            case BodyLiteral::Kind::constraint:
                out.body.push_back(constraintLiteral(
                    groundConstraint(substConstraint(*b.constraint, subst), p)));
                break;
            case BodyLiteral::Kind::domain:
                break; // typing literal, consumed by instantiation
            case BodyLiteral::Kind::formula:
                out.body.push_back(formulaLiteral(substFormula(b.formula, subst)));
                break;
        }
    }
    return out;
}

struct TypedVar {
    std::string name;
    const DomainDecl* domain;
};

std::vector<TypedVar> ruleVariables(const Program& p, const Rule& r, std::size_t idx) {
    std::vector<TypedVar> vars;
    std::set<std::string> seen;
    for (const VarOcc& o : ruleOccurrences(r)) {
        if (!seen.insert(o.var).second) {
            continue;
        }
        const DomainDecl* found = nullptr;
        for (const BodyLiteral& b : r.body) { // explicit typing wins
            if (b.kind == BodyLiteral::Kind::domain && b.var == o.var) {
                found = p.findDomain(b.domain);
                break;
            }
        }
        if (found == nullptr) { // domain named like a positive predicate over the variable
            for (const BodyLiteral& b : r.body) {
                if (b.kind != BodyLiteral::Kind::positive) {
                    continue;
                }
                bool uses = false;
                for (const Term& t : b.atom.args) {
                    uses = uses || (t.isVar() && t.text == o.var);
                }
                if (uses) {
                    found = p.findDomain(b.atom.predicate);
                    if (found != nullptr) {
                        break;
                    }
                }
            }
        }
        if (found == nullptr && p.domains.size() == 1) {
            found = &p.domains.front();
        }
        if (found == nullptr) {
            throw Error(Errc::missing_domain,
                        "cannot infer a domain for variable '" + o.var + "' in rule " +
                            std::to_string(idx + 1) + " '" + toText(r) + "'");
        }
        vars.push_back(TypedVar{o.var, found});
    }
    return vars;
}

} // namespace

Program groundProgram(const Program& p) {
    const SafetyReport report = checkSafety(p);
    if (!report.safe()) {
        const SafetyViolation& v = report.violations.front();
        throw Error(Errc::unsafe_program,
                    "unsafe variable '" + v.variable + "' in rule " +
                        std::to_string(v.ruleIndex + 1) + ", " + v.context);
    }
    Program out;
    out.semirings = p.semirings;
    out.domains = p.domains;
    out.weights = p.weights;
    for (std::size_t idx = 0; idx < p.rules.size(); ++idx) {
        const Rule& r = p.rules[idx];
        const std::vector<TypedVar> vars = ruleVariables(p, r, idx);
        bool anyEmpty = false;
        for (const TypedVar& v : vars) {
            anyEmpty = anyEmpty || v.domain->constants.empty();
        }
        if (anyEmpty) {
            continue; // zero instances
        }
        // Odometer over the variable domains: first variable slowest, so
        // instances come out in lexicographic domain order.
        std::vector<std::size_t> pick(vars.size(), 0);
        while (true) {
            Subst subst;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                subst.emplace(vars[i].name, vars[i].domain->constants[pick[i]]);
            }
            out.rules.push_back(instantiate(r, subst, p));
            if (vars.empty()) {
                break;
            }
            std::size_t i = vars.size();
            bool carried = true;
            while (carried && i > 0) {
                --i;
                if (++pick[i] < vars[i].domain->constants.size()) {
                    carried = false;
                } else {
                    pick[i] = 0;
                }
            }
            if (carried) {
                break; // wrapped past the first variable
            }
        }
    }
    return out;
}

} // namespace wasp
