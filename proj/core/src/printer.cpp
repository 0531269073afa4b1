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
#include <wasp/printer.h>

namespace wasp {

namespace {

// Precedence levels, loosest first. A child whose own level is below the
// level its context demands gets parenthesized.
// Classical formulas: -> (0, right assoc) < | (1) < & (2) < unary (3) < primary (4).
// Weighted formulas: + (0) < * (1) < unary/primary (2).

int levelOf(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::implication: return 0;
        case Formula::Kind::disjunction: return 1;
        case Formula::Kind::conjunction: return 2;
        case Formula::Kind::negation:
        case Formula::Kind::eventually:
        case Formula::Kind::always:
        case Formula::Kind::at: return 3;
        default: return 4;
    }
}

void printFormula(const FormulaPtr& f, int level, std::string& out) {
    const bool parens = levelOf(*f) < level;
    if (parens) {
        out += '(';
    }
    switch (f->kind) {
        case Formula::Kind::verum:
            out += "#true";
            break;
        case Formula::Kind::falsum:
            out += "#false";
            break;
        case Formula::Kind::atom:
            out += f->atom.key();
            break;
        case Formula::Kind::negation:
            out += '~';
            printFormula(f->lhs, 3, out);
            break;
        case Formula::Kind::conjunction:
            printFormula(f->lhs, 2, out);
            out += " & ";
            printFormula(f->rhs, 3, out);
            break;
        case Formula::Kind::disjunction:
            printFormula(f->lhs, 1, out);
            out += " | ";
            printFormula(f->rhs, 2, out);
            break;
        case Formula::Kind::implication:
            printFormula(f->lhs, 1, out);
            out += " -> ";
            printFormula(f->rhs, 0, out);
            break;
        case Formula::Kind::eventually:
            out += "<>";
            printFormula(f->lhs, 3, out);
            break;
        case Formula::Kind::always:
            out += "[]";
            printFormula(f->lhs, 3, out);
            break;
        case Formula::Kind::at:
            out += '@';
            out += std::to_string(f->time);
            out += ' ';
            printFormula(f->lhs, 3, out);
            break;
    }
    if (parens) {
        out += ')';
    }
}

int levelOf(const WeightedFormula& w) {
    switch (w.kind) {
        case WeightedFormula::Kind::addition: return 0;
        case WeightedFormula::Kind::multiplication: return 1;
        default: return 2;
    }
}

// True when the printed form of w ends in an unparenthesized quantifier,
// whose body would absorb a '*' placed after it.
bool endsInQuantifier(const WeightedFormula& w) {
    switch (w.kind) {
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod:
            return true;
        case WeightedFormula::Kind::eventually:
        case WeightedFormula::Kind::always:
            return levelOf(*w.lhs) >= 2 && endsInQuantifier(*w.lhs);
        case WeightedFormula::Kind::multiplication:
            return levelOf(*w.rhs) >= 2 && endsInQuantifier(*w.rhs);
        case WeightedFormula::Kind::addition:
            return levelOf(*w.rhs) >= 1 && endsInQuantifier(*w.rhs);
        default:
            return false;
    }
}

void printWeighted(const WfPtr& w, int level, std::string& out) {
    const bool parens = levelOf(*w) < level;
    if (parens) {
        out += '(';
    }
    switch (w->kind) {
        case WeightedFormula::Kind::weight:
            out += w->weight->str();
            break;
        case WeightedFormula::Kind::weight_app:
            out += w->function;
            out += '(';
            out += w->argument.text;
            out += ')';
            break;
        case WeightedFormula::Kind::atom_gate:
            out += w->atom.key();
            break;
        case WeightedFormula::Kind::gate:
            if (w->negated) {
                out += '~';
                if (w->test->kind == Formula::Kind::atom) {
                    out += w->test->atom.key();
                } else {
                    out += '(';
                    printFormula(w->test, 0, out);
                    out += ')';
                }
            } else {
                out += '(';
                printFormula(w->test, 0, out);
                out += ')';
            }
            break;
        case WeightedFormula::Kind::addition:
            printWeighted(w->lhs, 0, out);
            out += " + ";
            printWeighted(w->rhs, 1, out);
            break;
        case WeightedFormula::Kind::multiplication:
            if (levelOf(*w->lhs) >= 1 && endsInQuantifier(*w->lhs)) {
                out += '(';
                printWeighted(w->lhs, 0, out);
                out += ')';
            } else {
                printWeighted(w->lhs, 1, out);
            }
            out += '*';
            printWeighted(w->rhs, 2, out);
            break;
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod:
            out += w->kind == WeightedFormula::Kind::sum ? "sum{" : "prod{";
            out += w->var;
            out += " in ";
            out += w->domain;
            out += "} ";
            // The quantifier body extends through one multiplication.
            printWeighted(w->lhs, 1, out);
            break;
        case WeightedFormula::Kind::eventually:
            out += "<>";
            printWeighted(w->lhs, 2, out);
            break;
        case WeightedFormula::Kind::always:
            out += "[]";
            printWeighted(w->lhs, 2, out);
            break;
    }
    if (parens) {
        out += ')';
    }
}

} // namespace

std::string toText(const Term& t) { return t.text; }

std::string toText(const Atom& a) { return a.key(); }

std::string toText(const FormulaPtr& f) {
    std::string out;
    printFormula(f, 0, out);
    return out;
}

std::string toText(const WfPtr& wf) {
    std::string out;
    printWeighted(wf, 0, out);
    return out;
}

std::string toText(const Constraint& c) {
    std::string out = "[";
    out += c.bound.str();
    out += ' ';
    out += cmpOpText(c.cmp);
    out += ' ';
    printWeighted(c.body, 0, out);
    out += "]@";
    out += c.semiring;
    return out;
}

std::string toText(const HeadLiteral& h) {
    if (h.kind == HeadLiteral::Kind::atom) {
        return h.atom.key();
    }
    return toText(*h.constraint);
}

std::string toText(const BodyLiteral& b) {
    switch (b.kind) {
        case BodyLiteral::Kind::positive  : return b.atom.key();
        case BodyLiteral::Kind::negative  : return "not " + b.atom.key();
        case BodyLiteral::Kind::constraint: return toText(*b.constraint);
        case BodyLiteral::Kind::domain    : return b.var + " in " + b.domain;
        case BodyLiteral::Kind::formula   : return toText(b.formula);
    }
    return {};
}

std::string toText(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i != 0) {
            out += " | ";
        }
        out += toText(r.head[i]);
    }
    if (!r.body.empty()) {
        out += r.head.empty() ? ":- " : " :- ";
        for (std::size_t i = 0; i < r.body.size(); ++i) {
            if (i != 0) {
                out += ", ";
            }
            out += toText(r.body[i]);
        }
    }
    out += '.';
    return out;
}

std::string toText(const Program& p) {
    std::string out;
    for (const std::string& s : p.semirings) {
        out += "#semiring ";
        out += s;
        out += ".\n";
    }
    for (const DomainDecl& d : p.domains) {
        out += "#domain ";
        out += d.name;
        out += " = {";
        for (std::size_t i = 0; i < d.constants.size(); ++i) {
            if (i != 0) {
                out += ", ";
            }
            out += d.constants[i];
        }
        out += "}.\n";
    }
    for (const WeightDecl& w : p.weights) {
        out += "#weight ";
        out += w.function;
        out += '(';
        out += w.constant;
        out += ") = ";
        out += w.literal;
        out += ".\n";
    }
    for (const Rule& r : p.rules) {
        out += toText(r);
        out += '\n';
    }
    return out;
}

} // namespace wasp
