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
#include <wasp/reason.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <wasp/error.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/weighted.h>

namespace wasp {

namespace {

std::vector<std::pair<Interpretation, Value>> perModelTable(
    const Program& p, const WfPtr& alpha, const Semiring& s,
    const SolveOptions& opts) {
    std::vector<std::pair<Interpretation, Value>> table;
    for (const Interpretation& i : answerSets(p, opts)) {
        Value v = evalWeighted(alpha, i, s);
        table.emplace_back(i, std::move(v));
    }
    return table;
}

} // namespace

WeightedResult aasc(const Program& p, const WfPtr& alpha, const Semiring& s,
                    const SolveOptions& opts) {
    auto table = perModelTable(p, alpha, s, opts);
    Value total = s.zero();
    for (const auto& [i, v] : table) {
        total = s.add(total, v);
    }
    return WeightedResult{std::move(total), std::nullopt, std::move(table)};
}

Value satValue(const WfPtr& alpha, const Semiring& s,
               const std::vector<std::string>& universe,
               const SolveOptions& opts) {
    std::vector<std::string> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (u.size() > static_cast<std::size_t>(opts.maxAtoms)) {
        throw Error(Errc::capacity_exceeded,
                    "universe of " + std::to_string(u.size()) +
                        " atoms exceeds the exhaustive-search limit of " +
                        std::to_string(opts.maxAtoms) + " (WASP_MAX_ATOMS)");
    }
    Value total = s.zero();
    const std::uint64_t count = std::uint64_t{1} << u.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Interpretation i;
        for (std::size_t b = 0; b < u.size(); ++b) {
            if (mask & (std::uint64_t{1} << b)) {
                i.insert(u[b]);
            }
        }
        total = s.add(total, evalWeighted(alpha, i, s));
    }
    return total;
}

WeightedResult optimize(const Program& p, const WfPtr& alpha, const Semiring& s,
                        Direction direction, const SolveOptions& opts) {
    if (!s.ordered()) {
        throw Error(Errc::order_unsupported,
                    "semiring '" + std::string(s.name()) + "' declares no order");
    }
    auto table = perModelTable(p, alpha, s, opts);
    if (table.empty()) {
        throw Error(Errc::inconsistent, "program has no answer sets");
    }
    const Semiring::Cmp better = direction == Direction::minimize
                                     ? Semiring::Cmp::less
                                     : Semiring::Cmp::greater;
    Value best = table.front().second;
    for (const auto& [i, v] : table) {
        if (s.compare(v, best) == better) {
            best = v;
        }
    }
    std::vector<Interpretation> witnesses;
    for (const auto& [i, v] : table) {
        if (v == best) {
            witnesses.push_back(i);
        }
    }
    return WeightedResult{std::move(best), std::move(witnesses), std::move(table)};
}

WeightedResult normalize(const Program& p, const WfPtr& alpha, const Semiring& s,
                         const SolveOptions& opts) {
    if (s.ring() != Ring::rationals) {
        throw Error(Errc::bad_argument,
                    "normalization needs exact division, supported only by 'rat'");
    }
    auto table = perModelTable(p, alpha, s, opts);
    Rational total = 0;
    for (const auto& [i, v] : table) {
        if (v.number() < 0) {
            throw Error(Errc::negative_weight,
                        "negative weight " + v.str() + " for answer set " + i.str());
        }
        total += v.number();
    }
    if (total == 0) {
        throw Error(Errc::zero_mass,
                    "total weight over the answer sets is zero; nothing to normalize");
    }
    for (auto& [i, v] : table) {
        v = Value::finite(Ring::rationals, v.number() / total);
    }
    return WeightedResult{Value::finite(Ring::rationals, total), std::nullopt,
                          std::move(table)};
}

bool isTight(const Program& p) {
    requireNormalProgram(p);
    // Positive dependency edges: head atom -> each positive body atom.
    std::map<std::string, std::set<std::string>> edges;
    for (const Rule& r : p.rules) {
        if (r.head.empty()) {
            continue;
        }
        const std::string head = r.head.front().atom.key();
        for (const BodyLiteral& b : r.body) {
            if (b.kind == BodyLiteral::Kind::positive) {
                edges[head].insert(b.atom.key());
            }
        }
    }
    // Depth-first cycle search. 0 = unvisited, 1 = on stack, 2 = done.
    std::map<std::string, int> state;
    std::vector<std::pair<std::string, bool>> work;
    for (const auto& [start, ignored] : edges) {
        if (state[start] != 0) {
            continue;
        }
        work.emplace_back(start, false);
        while (!work.empty()) {
            auto [key, leaving] = work.back();
            work.pop_back();
            if (leaving) {
                state[key] = 2;
                continue;
            }
            if (state[key] == 1) {
                return false;
            }
            if (state[key] == 2) {
                continue;
            }
            state[key] = 1;
            work.emplace_back(key, true);
            if (auto it = edges.find(key); it != edges.end()) {
                for (const std::string& next : it->second) {
                    if (state[next] == 1) {
                        return false;
                    }
                    if (state[next] == 0) {
                        work.emplace_back(next, false);
                    }
                }
            }
        }
    }
    return true;
}

namespace {

Atom atomFromKey(const std::string& key) {
    const FormulaPtr f = parseFormula(key);
    if (f->kind != Formula::Kind::atom) {
        throw Error(Errc::bad_argument, "'" + key + "' is not an atom");
    }
    return f->atom;
}

FormulaPtr bodyConjunction(const Rule& r) {
    FormulaPtr conj;
    for (const BodyLiteral& b : r.body) {
        FormulaPtr lit = b.kind == BodyLiteral::Kind::positive
                             ? mkAtom(b.atom)
                             : mkNot(mkAtom(b.atom));
        conj = conj ? mkAnd(std::move(conj), std::move(lit)) : std::move(lit);
    }
    return conj ? conj : mkTrue();
}

} // namespace

FormulaPtr clarkCompletion(const Program& p,
                           const std::vector<std::string>& universe) {
    if (!isTight(p)) {
        throw Error(Errc::bad_fragment,
                    "completion is only sound for tight programs");
    }
    std::vector<std::string> u = universe;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    FormulaPtr out;
    auto conjoin = [&out](FormulaPtr f) {
        out = out ? mkAnd(std::move(out), std::move(f)) : std::move(f);
    };
    for (const std::string& key : u) {
        const FormulaPtr head = mkAtom(atomFromKey(key));
        FormulaPtr support; // disjunction of the defining bodies
        for (const Rule& r : p.rules) {
            if (r.head.empty() || r.head.front().atom.key() != key) {
                continue;
            }
            FormulaPtr body = bodyConjunction(r);
            support = support ? mkOr(std::move(support), std::move(body))
                              : std::move(body);
        }
        if (!support) {
            support = mkFalse();
        }
        conjoin(mkAnd(mkImplies(head, support), mkImplies(support, head)));
    }
    for (const Rule& r : p.rules) {
        if (r.head.empty()) {
            conjoin(mkNot(bodyConjunction(r)));
        }
    }
    return out ? out : mkTrue();
}

FormulaPtr clarkCompletion(const Program& p) {
    return clarkCompletion(p, p.atomUniverse());
}

} // namespace wasp
