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
#include <wasp/cli.h>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <wasp/error.h>
#include <wasp/ground.h>
#include <wasp/ht.h>
#include <wasp/parser.h>
#include <wasp/printer.h>
#include <wasp/reason.h>
#include <wasp/semiring.h>
#include <wasp/stream.h>
#include <wasp/weighted.h>

namespace wasp::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
    std::vector<std::string> files;
    std::string semiring;
    std::string alpha;
    std::string constraintText;
    std::string interp;
    std::string universe;
    std::string direction = "min";
    std::string streamFile;
    std::string mode;
    int time = 0;
    int horizon = 0;
    int threads = 1;
    bool timings = false;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::io_error, "cannot read '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

SolveOptions solveOptions(const Options& o) {
    SolveOptions s;
    s.threads = o.threads;
    return s;
}

// Flag wins, then the program's own declaration, then the given fallback.
const Semiring& resolveSemiring(const Options& o, const Program& p,
                                const char* fallback = "nat") {
    if (!o.semiring.empty()) {
        return Semiring::byName(o.semiring);
    }
    if (!p.defaultSemiring().empty()) {
        return Semiring::byName(p.defaultSemiring());
    }
    return Semiring::byName(fallback);
}

Interpretation parseInterp(const std::string& text) {
    Interpretation i;
    for (const std::string& key : parseAtomKeys(text)) {
        i.insert(key);
    }
    return i;
}

ordered_json jsonAtoms(const Interpretation& i) {
    ordered_json a = ordered_json::array();
    for (const std::string& key : i.atoms()) {
        a.push_back(key);
    }
    return a;
}

ordered_json jsonAtomSets(const std::vector<Interpretation>& sets) {
    ordered_json a = ordered_json::array();
    for (const Interpretation& i : sets) {
        a.push_back(jsonAtoms(i));
    }
    return a;
}

ordered_json jsonStream(const Stream& s) {
    ordered_json j;
    j["horizon"] = s.horizon;
    ordered_json points = ordered_json::array();
    for (int t = 0; t <= s.horizon; ++t) {
        points.push_back(jsonAtoms(s.at(t)));
    }
    j["points"] = std::move(points);
    return j;
}

void writeWeighted(ordered_json& result, const WeightedResult& r) {
    result["value"] = r.value.str();
    if (r.witnesses) {
        result["witnesses"] = jsonAtomSets(*r.witnesses);
    }
    if (r.table) {
        ordered_json table = ordered_json::array();
        for (const auto& [i, v] : *r.table) {
            ordered_json row;
            row["interpretation"] = jsonAtoms(i);
            row["value"] = v.str();
            table.push_back(std::move(row));
        }
        result["table"] = std::move(table);
    }
}

// Shared state threaded through one invocation.
struct Invocation {
    const Options& opts;
    std::string command;
    std::optional<Program> loaded; // for the safety report on failure

    Program& load(std::size_t index = 0) {
        if (opts.files.size() <= index) {
            throw Error(Errc::bad_argument,
                        "command '" + command + "' needs a program file");
        }
        loaded = parseProgram(readFile(opts.files[index]));
        return *loaded;
    }
    Program loadOrEmpty() {
        return opts.files.empty() ? Program{} : parseProgram(readFile(opts.files[0]));
    }
    WfPtr parseAlpha(const Semiring& s, const Program& context) {
        if (opts.alpha.empty()) {
            throw Error(Errc::bad_argument,
                        "command '" + command + "' needs --alpha");
        }
        return parseWeightedFormula(opts.alpha, s, &context);
    }
    Stream loadStream() {
        if (opts.streamFile.empty()) {
            throw Error(Errc::bad_argument,
                        "command '" + command + "' needs --stream");
        }
        return Stream::parse(readFile(opts.streamFile),
                             opts.horizon > 0 ? opts.horizon : -1);
    }
};

void runSolve(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    doc["semiring"] = std::string(resolveSemiring(inv.opts, p).name());
    const std::vector<Interpretation> sets =
        answerSets(groundProgram(p), solveOptions(inv.opts));
    doc["result"]["answer_sets"] = jsonAtomSets(sets);
    doc["result"]["count"] = sets.size();
}

void runEval(Invocation& inv, ordered_json& doc) {
    const Program p = inv.loadOrEmpty();
    const Semiring& s = resolveSemiring(inv.opts, p);
    doc["semiring"] = std::string(s.name());
    const WfPtr alpha = groundWeighted(inv.parseAlpha(s, p), p, s);
    const Value v = evalWeighted(alpha, parseInterp(inv.opts.interp), s);
    doc["result"]["value"] = v.str();
}

void runCheck(Invocation& inv, ordered_json& doc) {
    if (inv.opts.constraintText.empty()) {
        throw Error(Errc::bad_argument, "command 'check' needs --constraint");
    }
    const Program p = inv.loadOrEmpty();
    Constraint c = parseConstraint(inv.opts.constraintText, &p);
    doc["semiring"] = c.semiring;
    const Semiring& s = Semiring::byName(c.semiring);
    c = Constraint{c.bound, c.cmp, groundWeighted(c.body, p, s), c.semiring};
    const Interpretation i = parseInterp(inv.opts.interp);
    doc["result"]["satisfied"] = evalConstraint(c, i);
    doc["result"]["value"] = evalWeighted(c.body, i, s).str();
}

void runCount(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    const Semiring& s = resolveSemiring(inv.opts, p);
    doc["semiring"] = std::string(s.name());
    const Program g = groundProgram(p);
    const WfPtr alpha = groundWeighted(inv.parseAlpha(s, p), p, s);
    writeWeighted(doc["result"], aasc(g, alpha, s, solveOptions(inv.opts)));
}

void runOpt(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    const Semiring& s = resolveSemiring(inv.opts, p);
    doc["semiring"] = std::string(s.name());
    Direction dir;
    if (inv.opts.direction == "min") {
        dir = Direction::minimize;
    } else if (inv.opts.direction == "max") {
        dir = Direction::maximize;
    } else {
        throw Error(Errc::bad_argument, "--dir must be 'min' or 'max'");
    }
    const Program g = groundProgram(p);
    const WfPtr alpha = groundWeighted(inv.parseAlpha(s, p), p, s);
    writeWeighted(doc["result"], optimize(g, alpha, s, dir, solveOptions(inv.opts)));
}

void runProb(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    const Semiring& s = resolveSemiring(inv.opts, p, "rat");
    doc["semiring"] = std::string(s.name());
    const Program g = groundProgram(p);
    const WfPtr alpha = groundWeighted(inv.parseAlpha(s, p), p, s);
    writeWeighted(doc["result"], normalize(g, alpha, s, solveOptions(inv.opts)));
}

void runSatval(Invocation& inv, ordered_json& doc) {
    const Program p = inv.loadOrEmpty();
    const Semiring& s = resolveSemiring(inv.opts, p);
    doc["semiring"] = std::string(s.name());
    std::vector<std::string> universe;
    if (!inv.opts.universe.empty()) {
        universe = parseAtomKeys(inv.opts.universe);
    } else if (!inv.opts.files.empty()) {
        universe = p.atomUniverse();
    } else {
        throw Error(Errc::bad_argument,
                    "command 'satval' needs --universe or a program file");
    }
    const WfPtr alpha = groundWeighted(inv.parseAlpha(s, p), p, s);
    doc["result"]["value"] = satValue(alpha, s, universe, solveOptions(inv.opts)).str();
}

void runSeq(Invocation& inv, ordered_json& doc) {
    if (inv.opts.files.size() != 2) {
        throw Error(Errc::bad_argument, "command 'seq' needs two program files");
    }
    Program p1 = parseProgram(readFile(inv.opts.files[0]));
    Program p2 = parseProgram(readFile(inv.opts.files[1]));
    doc["semiring"] = std::string(resolveSemiring(inv.opts, p1).name());
    inv.loaded = p1;
    const Program g1 = groundProgram(p1);
    inv.loaded = p2;
    const Program g2 = groundProgram(p2);
    inv.loaded.reset();
    std::vector<std::string> universe = g1.atomUniverse();
    for (std::string& key : g2.atomUniverse()) {
        universe.push_back(std::move(key));
    }
    const SeResult r = stronglyEquivalent(g1, g2, universe, solveOptions(inv.opts));
    doc["result"]["equal"] = r.equal;
    if (r.counterexample) {
        doc["result"]["counterexample"]["here"] = jsonAtoms(r.counterexample->here);
        doc["result"]["counterexample"]["there"] = jsonAtoms(r.counterexample->there);
    }
}

void runGround(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    doc["semiring"] = std::string(resolveSemiring(inv.opts, p).name());
    const Program g = groundProgram(p);
    doc["result"]["rules"] = g.rules.size();
    doc["result"]["program"] = toText(g);
}

AggMode parseMode(const std::string& text) {
    if (text == "now") {
        return AggMode::now;
    }
    if (text == "distinct") {
        return AggMode::distinct;
    }
    if (text == "multi" || text == "multiplicity") {
        return AggMode::multiplicity;
    }
    throw Error(Errc::bad_argument, "--mode must be now, distinct or multi");
}

// Splits an aggregate sum{X in d} body into the bare gate shape the stream
// module takes plus the weight function the body implies: w(X)*p(X) uses the
// declared weights, k*p(X) the constant k, and a bare p(X) reads each
// constant as its own weight.
void runStreamAggregate(Invocation& inv, ordered_json& doc, const Program& p,
                        const Semiring& s, const WfPtr& alpha, const Stream& st) {
    if (alpha->kind != WeightedFormula::Kind::sum) {
        throw Error(Errc::bad_aggregate,
                    "--mode needs an aggregate of the shape sum{X in d} ...");
    }
    const DomainDecl* d = p.findDomain(alpha->domain);
    if (d == nullptr) {
        throw Error(Errc::missing_domain,
                    "domain '" + alpha->domain + "' is not declared");
    }
    WfPtr gate = alpha->lhs;
    WeightFn w = [&s](const std::string& c) { return s.parse(c); };
    if (gate->kind == WeightedFormula::Kind::multiplication) {
        const WfPtr& factor = gate->lhs;
        if (factor->kind == WeightedFormula::Kind::weight) {
            const Value k = *factor->weight;
            w = [k](const std::string&) { return k; };
        } else if (factor->kind == WeightedFormula::Kind::weight_app &&
                   factor->argument.isVar() && factor->argument.text == alpha->var) {
            const std::string fn = factor->function;
            const Program* prog = &p;
            const Semiring* ring = &s;
            w = [fn, prog, ring](const std::string& c) {
                const auto literal = prog->weightLiteral(fn, c);
                if (!literal) {
                    throw Error(Errc::missing_weight,
                                "no weight declared for '" + fn + "(" + c + ")'");
                }
                return ring->parse(*literal);
            };
        } else {
            throw Error(Errc::bad_aggregate,
                        "aggregate body must be p(X), k*p(X) or w(X)*p(X)");
        }
        gate = gate->rhs;
    }
    const WfPtr q = mkSum(alpha->var, alpha->domain, gate);
    const Value v = temporalAggregate(st, inv.opts.time, q, *d, w,
                                      parseMode(inv.opts.mode), s);
    doc["result"]["value"] = v.str();
}

void runStreamEval(Invocation& inv, ordered_json& doc) {
    const Program p = inv.loadOrEmpty();
    const Semiring& s = resolveSemiring(inv.opts, p);
    doc["semiring"] = std::string(s.name());
    const Stream st = inv.loadStream();
    const WfPtr alpha = inv.parseAlpha(s, p);
    if (!inv.opts.mode.empty()) {
        runStreamAggregate(inv, doc, p, s, alpha, st);
        return;
    }
    const Value v =
        evalWeightedStream(st, inv.opts.time, groundWeighted(alpha, p, s), s);
    doc["result"]["value"] = v.str();
}

void runStreamSolve(Invocation& inv, ordered_json& doc) {
    Program& p = inv.load();
    doc["semiring"] = std::string(resolveSemiring(inv.opts, p).name());
    const std::vector<Stream> streams =
        answerStreams(groundProgram(p), inv.opts.horizon, solveOptions(inv.opts));
    ordered_json array = ordered_json::array();
    for (const Stream& s : streams) {
        array.push_back(jsonStream(s));
    }
    doc["result"]["streams"] = std::move(array);
    doc["result"]["count"] = streams.size();
}

void dispatch(Invocation& inv, ordered_json& doc) {
    if (inv.command == "solve") {
        runSolve(inv, doc);
    } else if (inv.command == "eval") {
        runEval(inv, doc);
    } else if (inv.command == "check") {
        runCheck(inv, doc);
    } else if (inv.command == "count") {
        runCount(inv, doc);
    } else if (inv.command == "opt") {
        runOpt(inv, doc);
    } else if (inv.command == "prob") {
        runProb(inv, doc);
    } else if (inv.command == "satval") {
        runSatval(inv, doc);
    } else if (inv.command == "seq") {
        runSeq(inv, doc);
    } else if (inv.command == "ground") {
        runGround(inv, doc);
    } else if (inv.command == "stream-eval") {
        runStreamEval(inv, doc);
    } else if (inv.command == "stream-solve") {
        runStreamSolve(inv, doc);
    } else {
        throw Error(Errc::bad_argument, "unknown command '" + inv.command + "'");
    }
}

ordered_json safetyDiagnostics(const Program& p) {
    ordered_json list = ordered_json::array();
    for (const SafetyViolation& v : checkSafety(p).violations) {
        ordered_json row;
        row["rule"] = v.ruleIndex + 1;
        row["variable"] = v.variable;
        row["context"] = v.context;
        list.push_back(std::move(row));
    }
    return list;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"semiring-weighted answer set engine", "wasp"};
    app.require_subcommand(1);
    app.fallthrough(false);

    static const std::vector<std::pair<const char*, const char*>> kCommands = {
        {"solve", "answer sets of a program"},
        {"eval", "weighted formula value under an interpretation"},
        {"check", "algebraic constraint satisfaction"},
        {"count", "algebraic answer set count"},
        {"opt", "optimal answer sets by weighted value"},
        {"prob", "normalized per-answer-set weights"},
        {"satval", "weighted sum over all interpretations"},
        {"seq", "strong equivalence of two programs"},
        {"ground", "grounded program text"},
        {"stream-eval", "weighted formula value on a stream"},
        {"stream-solve", "answer streams of a temporal program"},
    };
    for (const auto& [name, description] : kCommands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("files", opts.files, "program file(s)");
        sub->add_option("--semiring", opts.semiring, "semiring id (overrides #semiring)");
        sub->add_option("--alpha", opts.alpha, "weighted formula");
        sub->add_option("--constraint", opts.constraintText, "algebraic constraint");
        sub->add_option("--interp", opts.interp, "comma-separated atom list");
        sub->add_option("--universe", opts.universe, "comma-separated atom list");
        sub->add_option("--dir", opts.direction, "min or max");
        sub->add_option("--stream", opts.streamFile, "stream file");
        sub->add_option("--time", opts.time, "time point, default 0");
        sub->add_option("--mode", opts.mode, "aggregate mode: now, distinct, multi");
        sub->add_option("--horizon", opts.horizon, "timeline horizon, default 0");
        sub->add_option("--threads", opts.threads, "worker threads, default 1");
        sub->add_flag("--timings", opts.timings, "include wall-clock diagnostics");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json doc;
        doc["command"] = nullptr;
        doc["error"]["code"] = errcName(Errc::bad_argument);
        doc["error"]["message"] = e.what();
        out << doc.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return 1;
    }

    Invocation inv{opts, app.get_subcommands().front()->get_name(), std::nullopt};
    ordered_json doc;
    doc["command"] = inv.command;
    const auto started = std::chrono::steady_clock::now();
    try {
        dispatch(inv, doc);
    } catch (const Error& e) {
        ordered_json failure;
        failure["command"] = inv.command;
        failure["error"]["code"] = errcName(e.code());
        failure["error"]["message"] = e.what();
        if (e.code() == Errc::unsafe_program && inv.loaded) {
            failure["diagnostics"]["safety"] = safetyDiagnostics(*inv.loaded);
        }
        out << failure.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return isUsageError(e.code()) ? 1 : 2;
    }
    if (opts.timings) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        doc["diagnostics"]["timings"]["total_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << doc.dump(2) << "\n";
    return 0;
}

} // namespace wasp::cli
