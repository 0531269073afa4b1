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
#include <wasp/ht.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>

#include <wasp/error.h>
#include <wasp/printer.h>
#include <wasp/weighted.h>

namespace wasp {

int defaultCapacity() {
    const char* env = std::getenv("WASP_MAX_ATOMS");
    if (env == nullptr || *env == '\0') {
        return 20;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
        return 20;
    }
    return static_cast<int>(std::min<long>(v, 62));
}

namespace {

[[noreturn]] void rejectTemporal(const FormulaPtr& f) {
    throw Error(Errc::bad_fragment,
                "temporal operator in '" + toText(f) + "' needs a stream evaluator");
}

void requireGround(const Atom& a) {
    if (!a.ground()) {
        throw Error(Errc::non_ground, "atom '" + a.key() + "' is not ground");
    }
}

} // namespace

bool satisfiesClassical(const Interpretation& i, const FormulaPtr& f) {
    switch (f->kind) {
        case Formula::Kind::verum: return true;
        case Formula::Kind::falsum: return false;
        case Formula::Kind::atom:
            requireGround(f->atom);
            return i.contains(f->atom);
        case Formula::Kind::negation:
            return !satisfiesClassical(i, f->lhs);
        case Formula::Kind::conjunction:
            return satisfiesClassical(i, f->lhs) && satisfiesClassical(i, f->rhs);
        case Formula::Kind::disjunction:
            return satisfiesClassical(i, f->lhs) || satisfiesClassical(i, f->rhs);
        case Formula::Kind::implication:
            return !satisfiesClassical(i, f->lhs) || satisfiesClassical(i, f->rhs);
        case Formula::Kind::eventually:
        case Formula::Kind::always:
        case Formula::Kind::at:
            rejectTemporal(f);
    }
    return false;
}

bool satisfiesClassical(const Interpretation& i, const Rule& r) {
    bool body = true;
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                requireGround(b.atom);
                body = i.contains(b.atom);
                break;
            case BodyLiteral::Kind::negative:
                requireGround(b.atom);
                body = !i.contains(b.atom);
                break;
            case BodyLiteral::Kind::constraint:
                body = evalConstraint(*b.constraint, i);
                break;
            case BodyLiteral::Kind::domain:
                throw Error(Errc::non_ground,
                            "domain literal '" + b.var + " in " + b.domain +
                                "' must be grounded away");
            case BodyLiteral::Kind::formula:
                body = satisfiesClassical(i, b.formula);
                break;
        }
        if (!body) {
            return true; // body fails, implication holds
        }
    }
    for (const HeadLiteral& h : r.head) {
        if (h.kind == HeadLiteral::Kind::atom) {
            requireGround(h.atom);
            if (i.contains(h.atom)) {
                return true;
            }
        } else if (evalConstraint(*h.constraint, i)) {
            return true;
        }
    }
    return false; // body holds, no head literal does (empty head included)
}

bool satisfiesClassical(const Interpretation& i, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [&](const Rule& r) { return satisfiesClassical(i, r); });
}

bool satisfiesHt(const HTInterpretation& ht, World w, const FormulaPtr& f) {
    if (w == World::there) {
        return satisfiesClassical(ht.there, f);
    }
    switch (f->kind) {
        case Formula::Kind::verum: return true;
        case Formula::Kind::falsum: return false;
        case Formula::Kind::atom:
            requireGround(f->atom);
            return ht.here.contains(f->atom);
        case Formula::Kind::negation:
            return !satisfiesClassical(ht.there, f->lhs);
        case Formula::Kind::conjunction:
            return satisfiesHt(ht, w, f->lhs) && satisfiesHt(ht, w, f->rhs);
        case Formula::Kind::disjunction:
            return satisfiesHt(ht, w, f->lhs) || satisfiesHt(ht, w, f->rhs);
        case Formula::Kind::implication:
            return (!satisfiesHt(ht, w, f->lhs) || satisfiesHt(ht, w, f->rhs)) &&
                   satisfiesClassical(ht.there, f);
        case Formula::Kind::eventually:
        case Formula::Kind::always:
        case Formula::Kind::at:
            rejectTemporal(f);
    }
    return false;
}

bool satisfiesHt(const HTInterpretation& ht, World w, const Rule& r) {
    if (w == World::there) {
        return satisfiesClassical(ht.there, r);
    }
    bool body = true;
    for (const BodyLiteral& b : r.body) {
        switch (b.kind) {
            case BodyLiteral::Kind::positive:
                requireGround(b.atom);
                body = ht.here.contains(b.atom);
                break;
            case BodyLiteral::Kind::negative:
                // "not a" is negation in the frame: a may not hold at there.
                requireGround(b.atom);
                body = !ht.there.contains(b.atom);
                break;
            case BodyLiteral::Kind::constraint:
                body = evalConstraintHt(*b.constraint, ht, World::here);
                break;
            case BodyLiteral::Kind::domain:
                throw Error(Errc::non_ground,
                            "domain literal '" + b.var + " in " + b.domain +
                                "' must be grounded away");
            case BodyLiteral::Kind::formula:
                body = satisfiesHt(ht, World::here, b.formula);
                break;
        }
        if (!body) {
            break;
        }
    }
    if (body) {
        bool head = false;
        for (const HeadLiteral& h : r.head) {
            if (h.kind == HeadLiteral::Kind::atom) {
                requireGround(h.atom);
                head = ht.here.contains(h.atom);
            } else {
                head = evalConstraintHt(*h.constraint, ht, World::here);
            }
            if (head) {
                break;
            }
        }
        if (!head) {
            return false;
        }
    }
    // The implication must also hold classically at there.
    return satisfiesClassical(ht.there, r);
}

bool satisfiesHt(const HTInterpretation& ht, World w, const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(),
                       [&](const Rule& r) { return satisfiesHt(ht, w, r); });
}

namespace {

std::vector<std::string> sortedUniverse(std::vector<std::string> u) {
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

void checkCapacity(std::size_t n, int maxAtoms) {
    const std::size_t cap = static_cast<std::size_t>(std::clamp(maxAtoms, 1, 62));
    if (n > cap) {
        throw Error(Errc::capacity_exceeded,
                    "universe of " + std::to_string(n) +
                        " atoms exceeds the exhaustive-search limit of " +
                        std::to_string(cap) + " (WASP_MAX_ATOMS)");
    }
}

Interpretation fromMask(const std::vector<std::string>& universe, std::uint64_t mask) {
    std::set<std::string> atoms;
    for (std::size_t b = 0; b < universe.size(); ++b) {
        if (mask >> b & 1U) {
            atoms.insert(universe[b]);
        }
    }
    return Interpretation(std::move(atoms));
}

void requireGroundProgram(const Program& p) {
    if (!p.ground()) {
        throw Error(Errc::non_ground, "program is not ground; ground it first");
    }
}

// All equilibrium models with a candidate mask in [lo, hi), ascending.
std::vector<Interpretation> answerSetsInRange(const Program& p,
                                              const std::vector<std::string>& universe,
                                              std::uint64_t lo, std::uint64_t hi) {
    std::vector<Interpretation> found;
    for (std::uint64_t t = lo; t < hi; ++t) {
        const Interpretation total = fromMask(universe, t);
        if (!satisfiesHt(HTInterpretation{total, total}, World::here, p)) {
            continue;
        }
        bool minimal = true;
        if (t != 0) {
            for (std::uint64_t h = (t - 1) & t;; h = (h - 1) & t) {
                if (satisfiesHt(HTInterpretation{fromMask(universe, h), total},
                                World::here, p)) {
                    minimal = false;
                    break;
                }
                if (h == 0) {
                    break;
                }
            }
        }
        if (minimal) {
            found.push_back(total);
        }
    }
    return found;
}

} // namespace

std::vector<Interpretation> answerSets(const Program& p,
                                       const std::vector<std::string>& universe,
                                       const SolveOptions& opts) {
    requireGroundProgram(p);
    const std::vector<std::string> u = sortedUniverse(universe);
    checkCapacity(u.size(), opts.maxAtoms);
    const std::uint64_t count = std::uint64_t{1} << u.size();

    const int threads = std::clamp(opts.threads, 1, 64);
    std::vector<Interpretation> result;
    if (threads == 1 || count < 1024) {
        result = answerSetsInRange(p, u, 0, count);
    } else {
        // Chunked enumeration; chunks are concatenated in index order, so the
        // result does not depend on the number of workers.
        const std::uint64_t chunk = (count + threads - 1) / threads;
        std::vector<std::vector<Interpretation>> parts(threads);
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> workers;
        workers.reserve(threads);
        for (int w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
                const std::uint64_t hi = std::min(count, lo + chunk);
                try {
                    if (lo < hi) {
                        parts[w] = answerSetsInRange(p, u, lo, hi);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : workers) {
            t.join();
        }
        for (const std::exception_ptr& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
        for (std::vector<Interpretation>& part : parts) {
            result.insert(result.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Interpretation> answerSets(const Program& p, const SolveOptions& opts) {
    return answerSets(p, p.atomUniverse(), opts);
}

void requireNormalProgram(const Program& p) {
    for (const Rule& r : p.rules) {
        bool ok = r.head.size() <= 1;
        for (const HeadLiteral& h : r.head) {
            ok = ok && h.kind == HeadLiteral::Kind::atom;
        }
        for (const BodyLiteral& b : r.body) {
            ok = ok && (b.kind == BodyLiteral::Kind::positive ||
                        b.kind == BodyLiteral::Kind::negative);
        }
        if (!ok) {
            throw Error(Errc::bad_fragment,
                        "rule outside the normal fragment: '" + toText(r) + "'");
        }
    }
}

std::vector<Interpretation> glStableModels(const Program& p,
                                           const std::vector<std::string>& universe) {
    requireGroundProgram(p);
    requireNormalProgram(p);
    const std::vector<std::string> u = sortedUniverse(universe);
    checkCapacity(u.size(), defaultCapacity());
    const std::uint64_t count = std::uint64_t{1} << u.size();

    std::vector<Interpretation> result;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const Interpretation candidate = fromMask(u, mask);

        // Reduct: drop rules whose negative part clashes with the candidate,
        // strip the negative literals of the rest.
        struct PositiveRule {
            const Rule* rule;
            bool hasHead;
            std::string head;
        };
        std::vector<PositiveRule> reduct;
        for (const Rule& r : p.rules) {
            bool keep = true;
            for (const BodyLiteral& b : r.body) {
                if (b.kind == BodyLiteral::Kind::negative && candidate.contains(b.atom)) {
                    keep = false;
                    break;
                }
            }
            if (!keep) {
                continue;
            }
            PositiveRule pr;
            pr.rule = &r;
            pr.hasHead = !r.head.empty();
            if (pr.hasHead) {
                pr.head = r.head.front().atom.key();
            }
            reduct.push_back(std::move(pr));
        }

        // Least model of the definite part by naive iteration.
        Interpretation least;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const PositiveRule& pr : reduct) {
                if (!pr.hasHead || least.contains(pr.head)) {
                    continue;
                }
                bool fire = true;
                for (const BodyLiteral& b : pr.rule->body) {
                    if (b.kind == BodyLiteral::Kind::positive && !least.contains(b.atom)) {
                        fire = false;
                        break;
                    }
                }
                if (fire) {
                    least.insert(pr.head);
                    grew = true;
                }
            }
        }

        // Headless reduct rules are integrity constraints on the least model.
        bool consistent = true;
        for (const PositiveRule& pr : reduct) {
            if (pr.hasHead) {
                continue;
            }
            bool fire = true;
            for (const BodyLiteral& b : pr.rule->body) {
                if (b.kind == BodyLiteral::Kind::positive && !least.contains(b.atom)) {
                    fire = false;
                    break;
                }
            }
            if (fire) {
                consistent = false;
                break;
            }
        }

        if (consistent && least == candidate) {
            result.push_back(candidate);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Interpretation> glStableModels(const Program& p) {
    return glStableModels(p, p.atomUniverse());
}

SeResult stronglyEquivalent(const Program& p1, const Program& p2,
                            const std::vector<std::string>& universe,
                            const SolveOptions& opts) {
    requireGroundProgram(p1);
    requireGroundProgram(p2);
    const std::vector<std::string> u = sortedUniverse(universe);
    checkCapacity(u.size(), opts.maxAtoms);
    const std::uint64_t count = std::uint64_t{1} << u.size();

    for (std::uint64_t t = 0; t < count; ++t) {
        const Interpretation there = fromMask(u, t);
        for (std::uint64_t h = 0;; h = (h - t) & t) { // submasks, ascending
            const HTInterpretation ht{fromMask(u, h), there};
            if (satisfiesHt(ht, World::here, p1) != satisfiesHt(ht, World::here, p2)) {
                return SeResult{false, ht};
            }
            if (h == t) {
                break;
            }
        }
    }
    return SeResult{true, std::nullopt};
}

} // namespace wasp
