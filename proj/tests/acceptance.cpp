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
// Release gate: one PASS/FAIL line per shipping requirement, exit code is
// the number of failures. Every check is seeded and deterministic.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <wasp/error.h>
#include <wasp/ht.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/reason.h>
#include <wasp/semiring.h>
#include <wasp/stream.h>
#include <wasp/weighted.h>

#include "support/gen.h"

using namespace wasp;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok) {
        std::cout << "PASS: " << name << "\n";
    } else {
        ++failures;
        std::cout << "FAIL: " << name << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    }
}

Interpretation interp(const std::vector<std::string>& keys) {
    return Interpretation::fromKeys(keys);
}

// ---- exact evaluation of the outing example --------------------------------

void checkRationalEval() {
    const Semiring& rat = Semiring::byName("rat");
    const WfPtr alpha = parseWeightedFormula("15*circus + 20*restaurant", rat);
    const Interpretation i = interp({"restaurant"});

    evalWeighted(alpha, i, rat); // warm up
    const auto start = std::chrono::steady_clock::now();
    const Value v = evalWeighted(alpha, i, rat);
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

    report("rational evaluation returns exactly 20 in under a millisecond",
           v.str() == "20" && micros < 1000,
           "value " + v.str() + ", " + std::to_string(micros) + " us");
}

void checkTropicalEval() {
    const Semiring& trop = Semiring::byName("trop");
    const Value v = evalWeighted(parseWeightedFormula("15*circus + 20*restaurant", trop),
                                 interp({"restaurant"}), trop);
    report("tropical evaluation returns exactly 20", v.str() == "20", "value " + v.str());
}

void checkBudgetConstraint() {
    Program ctx = parseProgram("#semiring rat.");
    const Constraint c = parseConstraint("[30 > 15*circus + 20*restaurant]@rat", &ctx);
    const bool one = evalConstraint(c, interp({"restaurant"}));
    const bool both = evalConstraint(c, interp({"circus", "restaurant"}));
    const Value over = evalWeighted(c.body, interp({"circus", "restaurant"}),
                                    Semiring::byName("rat"));
    report("the budget constraint admits 20 and rejects 35",
           one && !both && over.str() == "35", "over-budget value " + over.str());
}

// ---- equilibrium search vs reduct construction ------------------------------

void checkReductOracle() {
    gen::Rng rng(424244);
    const std::vector<std::string> pool = gen::atomPool(8);
    const auto start = std::chrono::steady_clock::now();
    int agreements = 0;
    std::string mismatch;
    for (int trial = 0; trial < 500; ++trial) {
        const Program p = gen::randomNormalProgram(rng, pool, 8);
        if (answerSets(p, pool) == glStableModels(p, pool)) {
            ++agreements;
        } else if (mismatch.empty()) {
            mismatch = toText(p);
        }
    }
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    report("equilibrium search matches the reduct oracle on 500 programs in under 60s",
           agreements == 500 && secs < 60,
           std::to_string(agreements) + "/500 in " + std::to_string(secs) + "s" +
               (mismatch.empty() ? "" : ", first mismatch: " + mismatch));
}

// ---- strong equivalence soundness -------------------------------------------

std::vector<Rule> contextRules(const std::vector<std::string>& universe) {
    std::vector<Rule> rules;
    for (const std::string& x : universe) {
        Rule fact;
        fact.head.push_back(gen::headAtom(x));
        rules.push_back(fact);
        for (const std::string& y : universe) {
            Rule pos;
            pos.head.push_back(gen::headAtom(x));
            pos.body.push_back(positiveLiteral(gen::atom(y)));
            rules.push_back(pos);
            Rule neg;
            neg.head.push_back(gen::headAtom(x));
            neg.body.push_back(negativeLiteral(gen::atom(y)));
            rules.push_back(neg);
        }
    }
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = i + 1; j < universe.size(); ++j) {
            Rule disj;
            disj.head.push_back(gen::headAtom(universe[i]));
            disj.head.push_back(gen::headAtom(universe[j]));
            rules.push_back(disj);
        }
    }
    return rules;
}

Program merged(const Program& a, const std::vector<Rule>& extra) {
    Program out = a;
    out.rules.insert(out.rules.end(), extra.begin(), extra.end());
    return out;
}

bool separated(const Program& p1, const Program& p2,
               const std::vector<std::string>& universe) {
    const std::vector<Rule> space = contextRules(universe);
    if (answerSets(p1, universe) != answerSets(p2, universe)) {
        return true;
    }
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (answerSets(merged(p1, {space[i]}), universe) !=
            answerSets(merged(p2, {space[i]}), universe)) {
            return true;
        }
    }
    for (std::size_t i = 0; i < space.size(); ++i) {
        for (std::size_t j = i + 1; j < space.size(); ++j) {
            if (answerSets(merged(p1, {space[i], space[j]}), universe) !=
                answerSets(merged(p2, {space[i], space[j]}), universe)) {
                return true;
            }
        }
    }
    return false;
}

void checkStrongEquivalence() {
    gen::Rng rng(111222333);
    const std::vector<std::string> pool = gen::atomPool(3);
    int equalPairs = 0;
    int diffPairs = 0;
    int attempts = 0;
    std::string detail;
    bool ok = true;

    while ((equalPairs < 40 || diffPairs < 40) && attempts < 4000) {
        ++attempts;
        const Program p1 = gen::randomNormalProgram(rng, pool, 3);
        const Program p2 = gen::randomNormalProgram(rng, pool, 3);
        const SeResult r = stronglyEquivalent(p1, p2, pool);
        if (r.equal) {
            if (equalPairs >= 40) {
                continue;
            }
            ++equalPairs;
            // Equal verdicts must survive every context we can throw at them.
            for (int c = 0; c < 200; ++c) {
                const Program ctx = gen::randomNormalProgram(rng, pool, 3);
                if (answerSets(merged(p1, ctx.rules), pool) !=
                    answerSets(merged(p2, ctx.rules), pool)) {
                    ok = false;
                    detail = "equal verdict broken by context: " + toText(ctx);
                }
            }
        } else {
            if (diffPairs >= 40) {
                continue;
            }
            ++diffPairs;
            // Counterexample verdicts must be realizable by a small context.
            if (!r.counterexample.has_value() || !separated(p1, p2, pool)) {
                ok = false;
                detail = "no separating context for: " + toText(p1) + " vs " + toText(p2);
            }
        }
    }
    ok = ok && equalPairs == 40 && diffPairs == 40;
    report("equivalence verdicts are sound for contexts (40 equal + 40 split pairs)", ok,
           detail.empty() ? std::to_string(equalPairs) + " equal, " +
                                std::to_string(diffPairs) + " split in " +
                                std::to_string(attempts) + " attempts"
                          : detail);
}

// ---- semiring axioms ---------------------------------------------------------

void checkSemiringAxioms() {
    gen::Rng rng(424242);
    bool ok = true;
    std::string detail;
    for (const char* name : {"bool", "nat", "int", "rat", "trop", "maxplus", "fuzzy"}) {
        const Semiring& s = Semiring::byName(name);
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            const Value a = gen::randomValue(rng, s);
            const Value b = gen::randomValue(rng, s);
            const Value c = gen::randomValue(rng, s);
            ok = s.add(a, b) == s.add(b, a) && s.mul(a, b) == s.mul(b, a) &&
                 s.add(s.add(a, b), c) == s.add(a, s.add(b, c)) &&
                 s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)) &&
                 s.add(a, s.zero()) == a && s.mul(a, s.one()) == a &&
                 s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)) &&
                 s.mul(s.add(a, b), c) == s.add(s.mul(a, c), s.mul(b, c)) &&
                 s.mul(a, s.zero()) == s.zero() && s.mul(s.zero(), a) == s.zero();
            if (!ok) {
                detail = std::string(name) + " with a=" + a.str() + " b=" + b.str() +
                         " c=" + c.str();
            }
        }
    }
    report("all 7 semirings pass 10000 random axiom checks each", ok, detail);
}

// ---- counting bridge over completions ---------------------------------------

void checkCountingBridge() {
    gen::Rng rng(848485);
    const std::vector<std::string> pool = gen::atomPool(6);
    const Semiring& nat = Semiring::byName("nat");
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        const Program p = gen::randomTightProgram(rng, pool, 6);
        const FormulaPtr comp = clarkCompletion(p, pool);

        std::vector<Interpretation> models;
        for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
            Interpretation i;
            for (std::size_t b = 0; b < pool.size(); ++b) {
                if (mask & (1u << b)) {
                    i.insert(pool[b]);
                }
            }
            if (satisfiesClassical(i, comp)) {
                models.push_back(std::move(i));
            }
        }
        std::sort(models.begin(), models.end());
        const std::vector<Interpretation> sets = answerSets(p, pool);
        if (models != sets) {
            ok = false;
            detail = "model mismatch on: " + toText(p);
            break;
        }

        const WfPtr alpha = gen::randomWeighted(rng, pool, nat, 3, /*negationFree=*/true);
        const Value viaCompletion = satValue(mkMul(mkGate(comp, false), alpha), nat, pool);
        Value direct = nat.zero();
        for (const Interpretation& m : sets) {
            direct = nat.add(direct, evalWeighted(alpha, m, nat));
        }
        if (viaCompletion != direct) {
            ok = false;
            detail = "sum mismatch on: " + toText(p);
        }
    }
    report("completion models and weighted sums match answer sets on 500 tight programs",
           ok, detail);
}

// ---- temporal aggregation ----------------------------------------------------

void checkAggregationModes() {
    const Semiring& nat = Semiring::byName("nat");
    const Stream s = Stream::parse("0: p(1)\n1: p(1), p(2)\n2:\n");
    const DomainDecl d{"d", {"1", "2"}};
    Program ctx;
    ctx.domains.push_back(d);
    const WfPtr q = parseWeightedFormula("sum{X in d} p(X)", nat, &ctx);
    const WeightFn ident = [&](const std::string& c) { return nat.parse(c); };

    const std::string now = temporalAggregate(s, 1, q, d, ident, AggMode::now, nat).str();
    const std::string seen =
        temporalAggregate(s, 1, q, d, ident, AggMode::distinct, nat).str();
    const std::string counted =
        temporalAggregate(s, 1, q, d, ident, AggMode::multiplicity, nat).str();
    bool ok = now == "3" && seen == "3" && counted == "4";
    std::string detail = now + "/" + seen + "/" + counted;

    gen::Rng rng(717172);
    const DomainDecl d3{"d", {"1", "2", "3"}};
    Program ctx3;
    ctx3.domains.push_back(d3);
    const WfPtr q3 = parseWeightedFormula("sum{X in d} p(X)", nat, &ctx3);
    const std::vector<std::string> pool = {"p(1)", "p(2)", "p(3)"};
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int horizon = gen::pick(rng, 0, 4);
        const Stream rs = gen::randomStream(rng, pool, horizon);
        const int t = gen::pick(rng, 0, horizon);
        const Value a = temporalAggregate(rs, t, q3, d3, ident, AggMode::now, nat);
        const Value b = temporalAggregate(rs, t, q3, d3, ident, AggMode::distinct, nat);
        const Value c = temporalAggregate(rs, t, q3, d3, ident, AggMode::multiplicity, nat);
        if (nat.compare(a, b) == Semiring::Cmp::greater ||
            nat.compare(b, c) == Semiring::Cmp::greater) {
            ok = false;
            detail = "ordering broken at t=" + std::to_string(t) + " on " + rs.str();
        }
    }
    report("aggregation returns 3/3/4 and stays ordered on 1000 random streams", ok,
           detail);
}

// ---- query mode cross-check ---------------------------------------------------

void checkQueryModes() {
    const Semiring& nat = Semiring::byName("nat");
    const Semiring& rat = Semiring::byName("rat");
    const Program p = parseProgram("a :- not b.  b :- not a.");

    const WeightedResult counted = aasc(p, parseWeightedFormula("2*a + 3*b", nat), nat);
    const WeightedResult best =
        optimize(p, parseWeightedFormula("2*a + 3*b", nat), nat, Direction::minimize);
    const WeightedResult probs = normalize(p, parseWeightedFormula("2*a + 3*b", rat), rat);

    bool ok = counted.value.str() == "5";
    ok = ok && best.value.str() == "2" && best.witnesses.has_value() &&
         best.witnesses->size() == 1 && (*best.witnesses)[0].str() == "{a}";
    ok = ok && probs.table.has_value() && probs.table->size() == 2 &&
         (*probs.table)[0].first.str() == "{a}" && (*probs.table)[0].second.str() == "2/5" &&
         (*probs.table)[1].second.str() == "3/5";

    // Cross-consistency: the optimum is the table minimum, the masses sum to 1.
    if (ok) {
        Value tableMin = (*counted.table)[0].second;
        for (const auto& entry : *counted.table) {
            if (nat.compare(entry.second, tableMin) == Semiring::Cmp::less) {
                tableMin = entry.second;
            }
        }
        Rational mass = 0;
        for (const auto& entry : *probs.table) {
            mass += entry.second.number();
        }
        ok = best.value == tableMin && mass == 1;
    }
    report("count, optimize and normalize agree on the two-cycle program", ok,
           "count " + counted.value.str() + ", opt " + best.value.str());
}

// ---- CLI determinism -----------------------------------------------------------

std::string shellQuote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') {
            q += "'\\''";
        } else {
            q += c;
        }
    }
    return q + "'";
}

std::string runCli(const std::vector<std::string>& args, int* exitCode = nullptr) {
    std::string cmd = shellQuote(WASP_BIN_PATH);
    for (const std::string& a : args) {
        cmd += " " + shellQuote(a);
    }
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return "<popen failed>";
    }
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    const int status = pclose(pipe);
    if (exitCode != nullptr) {
        *exitCode = WEXITSTATUS(status);
    }
    return out;
}

void checkCliDeterminism() {
    const fs::path dir = fs::temp_directory_path() / "wasp-acceptance";
    fs::create_directories(dir);
    auto file = [&](const char* name, const char* text) {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    };
    const std::string two = file("two.wasp", "a :- not b.\nb :- not a.\n");
    const std::string c1 = file("c1.wasp", "p :- not q.\nq :- not p.\n");
    const std::string c2 = file("c2.wasp", "p | q.\n");
    const std::string g = file("g.wasp", "#domain d = {1, 2}.\nq(X) :- p(X).\n");
    const std::string agg = file("agg.wasp", "#semiring nat.\n#domain d = {1, 2}.\n");
    const std::string st = file("st.wasp", "p :- not q.\n");
    const std::string stream = file("s.stream", "0: p(1)\n1: p(1), p(2)\n2:\n");

    const std::vector<std::vector<std::string>> commands = {
        {"solve", two},
        {"eval", "--alpha", "15*circus + 20*restaurant", "--semiring", "rat", "--interp",
         "restaurant", two},
        {"check", "--constraint", "[30 > 15*circus + 20*restaurant]@rat", "--interp",
         "restaurant"},
        {"count", "--alpha", "2*a + 3*b", "--semiring", "nat", two},
        {"opt", "--alpha", "15*a + 20*b", "--semiring", "rat", "--dir", "min", two},
        {"prob", "--alpha", "2*a + 3*b", two},
        {"satval", "--alpha", "1*a", "--semiring", "nat", "--universe", "a, b"},
        {"seq", c1, c2},
        {"ground", g},
        {"stream-eval", "--alpha", "sum{X in d} p(X)", "--stream", stream, "--mode",
         "multiplicity", "--time", "1", agg},
        {"stream-solve", "--horizon", "1", st},
    };

    bool ok = true;
    std::string detail;
    for (const auto& cmd : commands) {
        int exitCode = -1;
        const std::string first = runCli(cmd, &exitCode);
        if (exitCode != 0) {
            ok = false;
            detail = cmd[0] + " exited " + std::to_string(exitCode);
            break;
        }
        for (int run = 1; run < 10 && ok; ++run) {
            if (runCli(cmd) != first) {
                ok = false;
                detail = cmd[0] + " varied across runs";
            }
        }
        std::vector<std::string> one = cmd;
        one.insert(one.begin() + 1, {"--threads", "1"});
        std::vector<std::string> four = cmd;
        four.insert(four.begin() + 1, {"--threads", "4"});
        if (ok && (runCli(one) != first || runCli(four) != first)) {
            ok = false;
            detail = cmd[0] + " varied with the worker count";
        }
        if (!ok) {
            break;
        }
    }
    report("all 11 CLI commands are byte-identical over 10 runs and 1 vs 4 workers", ok,
           detail);
}

} // namespace

int main() {
    checkRationalEval();
    checkTropicalEval();
    checkBudgetConstraint();
    checkReductOracle();
    checkStrongEquivalence();
    checkSemiringAxioms();
    checkCountingBridge();
    checkAggregationModes();
    checkQueryModes();
    checkCliDeterminism();
    std::cout << (failures == 0 ? "all acceptance checks passed"
                                : std::to_string(failures) + " acceptance check(s) failed")
              << "\n";
    return failures;
}
