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
#include <wasp/stream.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include <wasp/error.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/weighted.h>

namespace wasp {

namespace {

[[noreturn]] void failRange(int t, int horizon) {
    throw Error(Errc::out_of_range, "time point " + std::to_string(t) +
                                        " outside the timeline 0.." +
                                        std::to_string(horizon));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

Stream Stream::ofHorizon(int n) {
    if (n < 0) {
        throw Error(Errc::bad_argument, "horizon must be nonnegative");
    }
    Stream s;
    s.horizon = n;
    s.points.assign(static_cast<std::size_t>(n) + 1, Interpretation{});
    return s;
}

const Interpretation& Stream::at(int t) const {
    if (t < 0 || t > horizon) {
        failRange(t, horizon);
    }
    return points[static_cast<std::size_t>(t)];
}

Interpretation& Stream::at(int t) {
    if (t < 0 || t > horizon) {
        failRange(t, horizon);
    }
    return points[static_cast<std::size_t>(t)];
}

Stream Stream::parse(std::string_view text, int minHorizon) {
    std::map<int, Interpretation> lines;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line;
        if (const std::size_t cut = raw.find('%'); cut != std::string_view::npos) {
            raw = raw.substr(0, cut);
        }
        raw = trim(raw);
        if (raw.empty()) {
            continue;
        }
        const std::size_t colon = raw.find(':');
        if (colon == std::string_view::npos) {
            throw Error(Errc::syntax_error, "stream line " + std::to_string(line) +
                                                ": expected 'time: atom, atom'");
        }
        const std::string_view head = trim(raw.substr(0, colon));
        int t = -1;
        try {
            std::size_t used = 0;
            t = std::stoi(std::string(head), &used);
            if (used != head.size()) {
                t = -1;
            }
        } catch (const std::exception&) {
            t = -1;
        }
        if (t < 0) {
            throw Error(Errc::syntax_error, "stream line " + std::to_string(line) +
                                                ": bad time point '" + std::string(head) + "'");
        }
        if (lines.count(t) != 0) {
            throw Error(Errc::malformed_value,
                        "duplicate time point " + std::to_string(t) + " in stream");
        }
        Interpretation i;
        for (const std::string& key : parseAtomKeys(raw.substr(colon + 1))) {
            i.insert(key);
        }
        lines.emplace(t, std::move(i));
    }
    int horizon = minHorizon < 0 ? 0 : minHorizon;
    if (!lines.empty()) {
        horizon = std::max(horizon, lines.rbegin()->first);
    }
    Stream s = ofHorizon(horizon);
    for (auto& [t, i] : lines) {
        s.at(t) = std::move(i);
    }
    return s;
}

std::string Stream::str() const {
    std::string out;
    for (int t = 0; t <= horizon; ++t) {
        const Interpretation& i = points[static_cast<std::size_t>(t)];
        if (i.empty()) {
            continue;
        }
        out += std::to_string(t) + ":";
        bool first = true;
        for (const std::string& key : i.atoms()) {
            out += first ? " " : ", ";
            out += key;
            first = false;
        }
        out += "\n";
    }
    return out;
}

bool satisfiesStream(const Stream& s, int t, const FormulaPtr& f) {
    if (t < 0 || t > s.horizon) {
        failRange(t, s.horizon);
    }
    switch (f->kind) {
        case Formula::Kind::verum:
            return true;
        case Formula::Kind::falsum:
            return false;
        case Formula::Kind::atom:
            if (!f->atom.ground()) {
                throw Error(Errc::non_ground,
                            "atom '" + f->atom.key() + "' is not ground");
            }
            return s.at(t).contains(f->atom);
        case Formula::Kind::negation:
            return !satisfiesStream(s, t, f->lhs);
        case Formula::Kind::conjunction:
            return satisfiesStream(s, t, f->lhs) && satisfiesStream(s, t, f->rhs);
        case Formula::Kind::disjunction:
            return satisfiesStream(s, t, f->lhs) || satisfiesStream(s, t, f->rhs);
        case Formula::Kind::implication:
            return !satisfiesStream(s, t, f->lhs) || satisfiesStream(s, t, f->rhs);
        case Formula::Kind::eventually:
            for (int u = 0; u <= s.horizon; ++u) {
                if (satisfiesStream(s, u, f->lhs)) {
                    return true;
                }
            }
            return false;
        case Formula::Kind::always:
            for (int u = 0; u <= s.horizon; ++u) {
                if (!satisfiesStream(s, u, f->lhs)) {
                    return false;
                }
            }
            return true;
        case Formula::Kind::at:
            return satisfiesStream(s, f->time, f->lhs);
    }
    return false;
}

Value evalWeightedStream(const Stream& s, int t, const WfPtr& alpha, const Semiring& r) {
    if (t < 0 || t > s.horizon) {
        failRange(t, s.horizon);
    }
    switch (alpha->kind) {
        case WeightedFormula::Kind::weight:
            if (!r.contains(*alpha->weight)) {
                throw Error(Errc::carrier_mismatch,
                            "weight " + alpha->weight->str() + " is not in semiring '" +
                                std::string(r.name()) + "'");
            }
            return *alpha->weight;
        case WeightedFormula::Kind::weight_app:
            throw Error(Errc::missing_weight, "unresolved weight application '" +
                                                  toText(alpha) + "'; ground it first");
        case WeightedFormula::Kind::atom_gate:
            if (!alpha->atom.ground()) {
                throw Error(Errc::non_ground,
                            "atom '" + alpha->atom.key() + "' is not ground");
            }
            return s.at(t).contains(alpha->atom) ? r.one() : r.zero();
        case WeightedFormula::Kind::gate:
            return satisfiesStream(s, t, alpha->test) != alpha->negated ? r.one()
                                                                        : r.zero();
        case WeightedFormula::Kind::addition:
            return r.add(evalWeightedStream(s, t, alpha->lhs, r),
                         evalWeightedStream(s, t, alpha->rhs, r));
        case WeightedFormula::Kind::multiplication:
            return r.mul(evalWeightedStream(s, t, alpha->lhs, r),
                         evalWeightedStream(s, t, alpha->rhs, r));
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod:
            throw Error(Errc::non_ground, "quantifier '" + toText(alpha) +
                                              "' must be expanded before evaluation");
        case WeightedFormula::Kind::eventually: {
            Value acc = r.zero();
            for (int u = 0; u <= s.horizon; ++u) {
                acc = r.add(acc, evalWeightedStream(s, u, alpha->lhs, r));
            }
            return acc;
        }
        case WeightedFormula::Kind::always: {
            Value acc = r.one();
            for (int u = 0; u <= s.horizon; ++u) {
                acc = r.mul(acc, evalWeightedStream(s, u, alpha->lhs, r));
            }
            return acc;
        }
    }
    throw Error(Errc::bad_argument, "unhandled weighted formula node");
}

bool evalConstraintStream(const Stream& s, int t, const Constraint& c) {
    const Semiring& r = Semiring::byName(c.semiring);
    const Value v = evalWeightedStream(s, t, c.body, r);
    switch (c.cmp) {
        case CmpOp::eq:
            return c.bound == v;
        case CmpOp::ne:
            return c.bound != v;
        case CmpOp::lt:
            return r.compare(c.bound, v) == Semiring::Cmp::less;
        case CmpOp::le:
            return r.compare(c.bound, v) != Semiring::Cmp::greater;
        case CmpOp::gt:
            return r.compare(c.bound, v) == Semiring::Cmp::greater;
        case CmpOp::ge:
            return r.compare(c.bound, v) != Semiring::Cmp::less;
    }
    return false;
}

Value temporalAggregate(const Stream& s, int t, const WfPtr& q, const DomainDecl& d,
                        const WeightFn& w, AggMode mode, const Semiring& r) {
    if (t < 0 || t > s.horizon) {
        failRange(t, s.horizon);
    }
    const bool shaped = q && q->kind == WeightedFormula::Kind::sum &&
                        q->lhs->kind == WeightedFormula::Kind::atom_gate &&
                        q->lhs->atom.args.size() == 1 &&
                        q->lhs->atom.args[0].isVar() &&
                        q->lhs->atom.args[0].text == q->var;
    if (!shaped) {
        throw Error(Errc::bad_aggregate,
                    "aggregate must have the shape sum{X in d} p(X)");
    }
    const std::string& predicate = q->lhs->atom.predicate;
    const std::set<std::string> domain(d.constants.begin(), d.constants.end());
    const std::string prefix = predicate + "(";
    for (int u = 0; u <= s.horizon; ++u) {
        for (const std::string& key : s.at(u).atoms()) {
            if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0 ||
                key.back() != ')') {
                continue;
            }
            const std::string c = key.substr(prefix.size(), key.size() - prefix.size() - 1);
            if (c.find(',') != std::string::npos) {
                continue; // different arity, not this aggregate's predicate
            }
            if (domain.count(c) == 0) {
                throw Error(Errc::bad_aggregate, "unknown constant '" + c +
                                                     "' in valuation for aggregate over '" +
                                                     d.name + "'");
            }
        }
    }
    auto holdsAt = [&](const std::string& c, int u) {
        return s.at(u).contains(prefix + c + ")");
    };
    Value acc = r.zero();
    switch (mode) {
        case AggMode::now:
            for (const std::string& c : d.constants) {
                if (holdsAt(c, t)) {
                    acc = r.add(acc, w(c));
                }
            }
            break;
        case AggMode::distinct:
            for (const std::string& c : d.constants) {
                bool anywhere = false;
                for (int u = 0; u <= s.horizon && !anywhere; ++u) {
                    anywhere = holdsAt(c, u);
                }
                if (anywhere) {
                    acc = r.add(acc, w(c));
                }
            }
            break;
        case AggMode::multiplicity:
            for (int u = 0; u <= s.horizon; ++u) {
                for (const std::string& c : d.constants) {
                    if (holdsAt(c, u)) {
                        acc = r.add(acc, w(c));
                    }
                }
            }
            break;
    }
    return acc;
}

// ---- pointwise HT lifting ---------------------------------------------------

namespace {

// <H,T> at time t; the two streams share a horizon.
bool satisfiesHtStream(const Stream& here, const Stream& there, World w, int t,
                       const FormulaPtr& f) {
    if (w == World::there) {
        return satisfiesStream(there, t, f);
    }
    switch (f->kind) {
        case Formula::Kind::verum:
            return true;
        case Formula::Kind::falsum:
            return false;
        case Formula::Kind::atom:
            return here.at(t).contains(f->atom);
        case Formula::Kind::negation:
            return !satisfiesStream(there, t, f->lhs);
        case Formula::Kind::conjunction:
            return satisfiesHtStream(here, there, w, t, f->lhs) &&
                   satisfiesHtStream(here, there, w, t, f->rhs);
        case Formula::Kind::disjunction:
            return satisfiesHtStream(here, there, w, t, f->lhs) ||
                   satisfiesHtStream(here, there, w, t, f->rhs);
        case Formula::Kind::implication:
            return (!satisfiesHtStream(here, there, w, t, f->lhs) ||
                    satisfiesHtStream(here, there, w, t, f->rhs)) &&
                   satisfiesStream(there, t, f);
        case Formula::Kind::eventually:
            for (int u = 0; u <= here.horizon; ++u) {
                if (satisfiesHtStream(here, there, w, u, f->lhs)) {
                    return true;
                }
            }
            return false;
        case Formula::Kind::always:
            for (int u = 0; u <= here.horizon; ++u) {
                if (!satisfiesHtStream(here, there, w, u, f->lhs)) {
                    return false;
                }
            }
            return true;
        case Formula::Kind::at:
            return satisfiesHtStream(here, there, w, f->time, f->lhs);
    }
    return false;
}

// Constraints hold at here iff they hold classically at both streams.
bool constraintHtStream(const Stream& here, const Stream& there, int t,
                        const Constraint& c) {
    return evalConstraintStream(here, t, c) && evalConstraintStream(there, t, c);
}

bool satisfiesRuleClassical(const Stream& s, int t, const Rule& r) {
    bool body = true;
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                body = s.at(t).contains(b.atom);
                break;
            case BodyLiteral::Kind::negative:
                body = !s.at(t).contains(b.atom);
                break;
            case BodyLiteral::Kind::constraint:
                body = evalConstraintStream(s, t, *b.constraint);
                break;
            case BodyLiteral::Kind::domain:
                throw Error(Errc::non_ground,
                            "domain literal must be grounded away before solving");
            case BodyLiteral::Kind::formula:
                body = satisfiesStream(s, t, b.formula);
                break;
        }
        if (!body) {
            return true;
        }
    }
    for (const HeadLiteral& h : r.head) {
        const bool ok = h.kind == HeadLiteral::Kind::atom
                            ? s.at(t).contains(h.atom)
                            : evalConstraintStream(s, t, *h.constraint);
        if (ok) {
            return true;
        }
    }
    return false;
}

bool satisfiesRuleHt(const Stream& here, const Stream& there, int t, const Rule& r) {
    bool body = true;
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                body = here.at(t).contains(b.atom);
                break;
            case BodyLiteral::Kind::negative:
                body = !there.at(t).contains(b.atom);
                break;
            case BodyLiteral::Kind::constraint:
                body = constraintHtStream(here, there, t, *b.constraint);
                break;
            case BodyLiteral::Kind::domain:
                throw Error(Errc::non_ground,
                            "domain literal must be grounded away before solving");
            case BodyLiteral::Kind::formula:
                body = satisfiesHtStream(here, there, World::here, t, b.formula);
                break;
        }
        if (!body) {
            break;
        }
    }
    if (body) {
        bool head = false;
        for (const HeadLiteral& h : r.head) {
            head = h.kind == HeadLiteral::Kind::atom
                       ? here.at(t).contains(h.atom)
                       : constraintHtStream(here, there, t, *h.constraint);
            if (head) {
                break;
            }
        }
        if (!head) {
            return false;
        }
    }
    return satisfiesRuleClassical(there, t, r);
}

bool satisfiesProgramHt(const Stream& here, const Stream& there, const Program& p) {
    for (int t = 0; t <= here.horizon; ++t) {
        for (const Rule& r : p.rules) {
            if (!satisfiesRuleHt(here, there, t, r)) {
                return false;
            }
        }
    }
    return true;
}

Stream fromMask(std::uint64_t mask, int horizon,
                const std::vector<std::string>& atoms) {
    Stream s = Stream::ofHorizon(horizon);
    for (int t = 0; t <= horizon; ++t) {
        for (std::size_t a = 0; a < atoms.size(); ++a) {
            const std::size_t bit = static_cast<std::size_t>(t) * atoms.size() + a;
            if (mask & (std::uint64_t{1} << bit)) {
                s.at(t).insert(atoms[a]);
            }
        }
    }
    return s;
}

} // namespace

std::vector<Stream> answerStreams(const Program& p, int horizon,
                                  const SolveOptions& opts) {
    if (horizon < 0) {
        throw Error(Errc::bad_argument, "horizon must be nonnegative");
    }
    for (const Rule& r : p.rules) {
        if (!r.ground()) {
            throw Error(Errc::non_ground, "program is not ground; ground it first");
        }
    }
    std::vector<std::string> atoms = p.atomUniverse();
    const std::size_t bits = static_cast<std::size_t>(horizon + 1) * atoms.size();
    if (bits > static_cast<std::size_t>(opts.maxAtoms)) {
        throw Error(Errc::capacity_exceeded,
                    "timeline of " + std::to_string(bits) +
                        " atom-time bits exceeds the exhaustive-search limit of " +
                        std::to_string(opts.maxAtoms) + " (WASP_MAX_ATOMS)");
    }
    std::vector<Stream> result;
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t tmask = 0; tmask < count; ++tmask) {
        const Stream there = fromMask(tmask, horizon, atoms);
        if (!satisfiesProgramHt(there, there, p)) {
            continue;
        }
        bool minimal = true;
        if (tmask != 0) {
            for (std::uint64_t hmask = (tmask - 1) & tmask; minimal;
                 hmask = (hmask - 1) & tmask) {
                const Stream here = fromMask(hmask, horizon, atoms);
                minimal = !satisfiesProgramHt(here, there, p);
                if (hmask == 0) {
                    break;
                }
            }
        }
        if (minimal) {
            result.push_back(there);
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Stream& a, const Stream& b) { return a.points < b.points; });
    return result;
}

} // namespace wasp
