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
#include <wasp/parser.h>

#include <cctype>
#include <map>
#include <set>
#include <string>

#include <wasp/error.h>

namespace wasp {

namespace {

enum class Tok {
    ident,
    var,
    num, // "12" or "3/7"
    dot,
    comma,
    pipe,
    arrow_if, // ":-"
    lbracket,
    rbracket,
    at,
    lbrace,
    rbrace,
    lparen,
    rparen,
    star,
    plus,
    tilde,
    amp,
    arrow, // "->"
    minus,
    cmp,     // one of = != < <= > >=
    diamond, // "<>"
    box,     // "[]"
    kw_not,
    kw_sum,
    kw_prod,
    kw_in,
    dir_semiring,
    dir_domain,
    dir_weight,
    dir_true,
    dir_false,
    end
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

[[noreturn]] void failAt(int line, int col, Errc code, const std::string& msg) {
    throw Error(code, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

[[noreturn]] void failAt(const Token& t, const std::string& msg) {
    failAt(t.line, t.col, Errc::syntax_error, msg);
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::string tok, int l, int c) {
        out.push_back(Token{kind, std::move(tok), l, c});
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++i;
            ++line;
            col = 1;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            ++col;
            continue;
        }
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        const int l = line;
        const int cc = col;
        auto take = [&](std::size_t n) {
            i += n;
            col += static_cast<int>(n);
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            if (j < text.size() && text[j] == '/' && j + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    ++j;
                }
            }
            push(Tok::num, std::string(text.substr(i, j - i)), l, cc);
            take(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            std::string word(text.substr(i, j - i));
            take(j - i);
            if (std::isupper(static_cast<unsigned char>(c))) {
                push(Tok::var, std::move(word), l, cc);
            } else if (word == "not") {
                push(Tok::kw_not, std::move(word), l, cc);
            } else if (word == "sum") {
                push(Tok::kw_sum, std::move(word), l, cc);
            } else if (word == "prod") {
                push(Tok::kw_prod, std::move(word), l, cc);
            } else if (word == "in") {
                push(Tok::kw_in, std::move(word), l, cc);
            } else {
                push(Tok::ident, std::move(word), l, cc);
            }
            continue;
        }
        if (c == '#') {
            std::size_t j = i + 1;
            while (j < text.size() &&
                   std::isalpha(static_cast<unsigned char>(text[j]))) {
                ++j;
            }
            std::string word(text.substr(i + 1, j - i - 1));
            take(j - i);
            if (word == "semiring") {
                push(Tok::dir_semiring, word, l, cc);
            } else if (word == "domain") {
                push(Tok::dir_domain, word, l, cc);
            } else if (word == "weight") {
                push(Tok::dir_weight, word, l, cc);
            } else if (word == "true") {
                push(Tok::dir_true, word, l, cc);
            } else if (word == "false") {
                push(Tok::dir_false, word, l, cc);
            } else {
                failAt(l, cc, Errc::syntax_error, "unknown directive '#" + word + "'");
            }
            continue;
        }
        auto two = [&](const char* pat) {
            return text.substr(i, 2) == pat;
        };
        if (two(":-")) {
            push(Tok::arrow_if, ":-", l, cc);
            take(2);
        } else if (two("->")) {
            push(Tok::arrow, "->", l, cc);
            take(2);
        } else if (two("!=")) {
            push(Tok::cmp, "!=", l, cc);
            take(2);
        } else if (two("<>")) {
            push(Tok::diamond, "<>", l, cc);
            take(2);
        } else if (two("<=")) {
            push(Tok::cmp, "<=", l, cc);
            take(2);
        } else if (two(">=")) {
            push(Tok::cmp, ">=", l, cc);
            take(2);
        } else if (two("[]")) {
            push(Tok::box, "[]", l, cc);
            take(2);
        } else {
            switch (c) {
                case '.': push(Tok::dot, ".", l, cc); break;
                case ',': push(Tok::comma, ",", l, cc); break;
                case '|': push(Tok::pipe, "|", l, cc); break;
                case '[': push(Tok::lbracket, "[", l, cc); break;
                case ']': push(Tok::rbracket, "]", l, cc); break;
                case '@': push(Tok::at, "@", l, cc); break;
                case '{': push(Tok::lbrace, "{", l, cc); break;
                case '}': push(Tok::rbrace, "}", l, cc); break;
                case '(': push(Tok::lparen, "(", l, cc); break;
                case ')': push(Tok::rparen, ")", l, cc); break;
                case '*': push(Tok::star, "*", l, cc); break;
                case '+': push(Tok::plus, "+", l, cc); break;
                case '~': push(Tok::tilde, "~", l, cc); break;
                case '&': push(Tok::amp, "&", l, cc); break;
                case '-': push(Tok::minus, "-", l, cc); break;
                case '=': push(Tok::cmp, "=", l, cc); break;
                case '<': push(Tok::cmp, "<", l, cc); break;
                case '>': push(Tok::cmp, ">", l, cc); break;
                default:
                    failAt(l, cc, Errc::syntax_error,
                           std::string("unexpected character '") + c + "'");
            }
            take(1);
        }
    }
    out.push_back(Token{Tok::end, "", line, col});
    return out;
}

CmpOp cmpFromText(const std::string& text) {
    if (text == "=") {
        return CmpOp::eq;
    }
    if (text == "!=") {
        return CmpOp::ne;
    }
    if (text == "<") {
        return CmpOp::lt;
    }
    if (text == "<=") {
        return CmpOp::le;
    }
    if (text == ">") {
        return CmpOp::gt;
    }
    return CmpOp::ge;
}

void varsOf(const WfPtr& w, std::set<std::string>& bound, std::set<std::string>& free) {
    if (!w) {
        return;
    }
    auto fromAtom = [&](const Atom& a) {
        for (const Term& t : a.args) {
            if (t.isVar() && bound.find(t.text) == bound.end()) {
                free.insert(t.text);
            }
        }
    };
    switch (w->kind) {
        case WeightedFormula::Kind::weight:
            return;
        case WeightedFormula::Kind::weight_app:
            if (w->argument.isVar() && bound.find(w->argument.text) == bound.end()) {
                free.insert(w->argument.text);
            }
            return;
        case WeightedFormula::Kind::atom_gate:
            fromAtom(w->atom);
            return;
        case WeightedFormula::Kind::gate: {
            std::vector<Atom> atoms;
            collectAtoms(w->test, atoms);
            for (const Atom& a : atoms) {
                fromAtom(a);
            }
            return;
        }
        case WeightedFormula::Kind::sum:
        case WeightedFormula::Kind::prod: {
            const bool added = bound.insert(w->var).second;
            varsOf(w->lhs, bound, free);
            if (added) {
                bound.erase(w->var);
            }
            return;
        }
        default:
            varsOf(w->lhs, bound, free);
            varsOf(w->rhs, bound, free);
            return;
    }
}

class Parser {
  public:
    Parser(std::string_view text, const Program* context)
        : tokens_(lex(text)) {
        if (context != nullptr) {
            for (const WeightDecl& w : context->weights) {
                weightFns_.insert(w.function);
            }
            context_ = context;
        }
    }

    Program program() {
        Program prog;
        while (!check(Tok::end)) {
            if (check(Tok::dir_semiring)) {
                semiringDecl(prog);
            } else if (check(Tok::dir_domain)) {
                domainDecl(prog);
            } else if (check(Tok::dir_weight)) {
                weightDecl(prog);
            } else {
                prog.rules.push_back(rule());
            }
        }
        validate(prog);
        return prog;
    }

    FormulaPtr formulaEntry() {
        FormulaPtr f = formula();
        expectEnd();
        return f;
    }

    WfPtr weightedEntry(const Semiring& s) {
        std::set<std::string> bound;
        WfPtr w = wadd(s, bound);
        expectEnd();
        std::set<std::string> free;
        varsOf(w, bound, free);
        if (!free.empty()) {
            throw Error(Errc::syntax_error, "unbound variable '" + *free.begin() + "'");
        }
        checkDomainRefs();
        return w;
    }

    Constraint constraintEntry() {
        Constraint c = constraint();
        expectEnd();
        checkDomainRefs();
        return c;
    }

    std::vector<std::string> atomKeysEntry() {
        std::vector<std::string> keys;
        const bool braced = check(Tok::lbrace);
        if (braced) {
            advance();
        }
        const Tok closer = braced ? Tok::rbrace : Tok::end;
        if (!check(closer)) {
            keys.push_back(groundAtomKey());
            while (check(Tok::comma)) {
                advance();
                keys.push_back(groundAtomKey());
            }
        }
        if (braced) {
            expect(Tok::rbrace, "'}'");
        }
        expectEnd();
        return keys;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::set<std::string> weightFns_;
    const Program* context_ = nullptr;
    std::map<std::string, std::size_t> arity_;
    std::vector<Token> domainRefs_;
    std::vector<Token> semiringRefs_;

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t j = pos_ + ahead;
        return j < tokens_.size() ? tokens_[j] : tokens_.back();
    }

    bool check(Tok kind) const { return peek().kind == kind; }

    Token advance() { return tokens_[pos_++]; }

    Token expect(Tok kind, const char* what) {
        if (!check(kind)) {
            failAt(peek(), std::string("expected ") + what + ", found '" + describe(peek()) + "'");
        }
        return advance();
    }

    void expectEnd() {
        if (!check(Tok::end)) {
            failAt(peek(), "unexpected trailing input '" + describe(peek()) + "'");
        }
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::end ? "end of input" : t.text;
    }

    // ---- declarations -----------------------------------------------------

    void semiringDecl(Program& prog) {
        advance();
        const Token name = expect(Tok::ident, "semiring name");
        try {
            Semiring::byName(name.text);
        } catch (const Error& e) {
            failAt(name.line, name.col, e.code(), e.what());
        }
        expect(Tok::dot, "'.'");
        for (const std::string& s : prog.semirings) {
            if (s == name.text) {
                return;
            }
        }
        prog.semirings.push_back(name.text);
    }

    std::string constantText() {
        if (check(Tok::ident)) {
            return advance().text;
        }
        if (check(Tok::num)) {
            const Token t = advance();
            if (t.text.find('/') != std::string::npos) {
                failAt(t, "a fraction is not a constant");
            }
            return t.text;
        }
        failAt(peek(), "expected constant");
    }

    void domainDecl(Program& prog) {
        advance();
        const Token name = expect(Tok::ident, "domain name");
        const Token eq = expect(Tok::cmp, "'='");
        if (eq.text != "=") {
            failAt(eq, "expected '='");
        }
        expect(Tok::lbrace, "'{'");
        DomainDecl decl;
        decl.name = name.text;
        decl.constants.push_back(constantText());
        while (check(Tok::comma)) {
            advance();
            decl.constants.push_back(constantText());
        }
        expect(Tok::rbrace, "'}'");
        expect(Tok::dot, "'.'");
        if (prog.findDomain(decl.name) != nullptr) {
            failAt(name, "domain '" + decl.name + "' redeclared");
        }
        for (std::size_t i = 0; i < decl.constants.size(); ++i) {
            for (std::size_t j = i + 1; j < decl.constants.size(); ++j) {
                if (decl.constants[i] == decl.constants[j]) {
                    failAt(name, "duplicate constant '" + decl.constants[i] +
                                     "' in domain '" + decl.name + "'");
                }
            }
        }
        prog.domains.push_back(std::move(decl));
    }

    void weightDecl(Program& prog) {
        advance();
        const Token fn = expect(Tok::ident, "weight function name");
        expect(Tok::lparen, "'('");
        const std::string constant = constantText();
        expect(Tok::rparen, "')'");
        const Token eq = expect(Tok::cmp, "'='");
        if (eq.text != "=") {
            failAt(eq, "expected '='");
        }
        std::string literal;
        if (check(Tok::minus)) {
            advance();
            literal = "-";
        }
        if (check(Tok::num)) {
            literal += advance().text;
        } else if (check(Tok::ident)) {
            literal += advance().text;
        } else {
            failAt(peek(), "expected weight literal");
        }
        expect(Tok::dot, "'.'");
        for (const WeightDecl& w : prog.weights) {
            if (w.function == fn.text && w.constant == constant) {
                failAt(fn, "weight " + fn.text + "(" + constant + ") redeclared");
            }
        }
        prog.weights.push_back(WeightDecl{fn.text, constant, literal});
        weightFns_.insert(fn.text);
    }

    // ---- terms, atoms, classical formulas ---------------------------------

    Term term() {
        if (check(Tok::var)) {
            return variable(advance().text);
        }
        if (check(Tok::ident)) {
            return constant(advance().text);
        }
        if (check(Tok::num)) {
            const Token t = advance();
            if (t.text.find('/') != std::string::npos) {
                failAt(t, "a fraction is not a term");
            }
            return constant(t.text);
        }
        failAt(peek(), "expected term");
    }

    Atom atom() {
        const Token name = expect(Tok::ident, "atom");
        Atom a;
        a.predicate = name.text;
        if (check(Tok::lparen)) {
            advance();
            a.args.push_back(term());
            while (check(Tok::comma)) {
                advance();
                a.args.push_back(term());
            }
            expect(Tok::rparen, "')'");
        }
        noteArity(name, a);
        return a;
    }

    void noteArity(const Token& at, const Atom& a) {
        auto [it, fresh] = arity_.emplace(a.predicate, a.args.size());
        if (!fresh && it->second != a.args.size()) {
            failAt(at.line, at.col, Errc::bad_argument,
                   "arity clash for predicate '" + a.predicate + "'");
        }
    }

    std::string groundAtomKey() {
        const Token at = peek();
        Atom a = atom();
        if (!a.ground()) {
            failAt(at, "atom '" + a.key() + "' is not ground");
        }
        return a.key();
    }

    FormulaPtr formula() { return implied(); }

    FormulaPtr implied() {
        FormulaPtr lhs = disj();
        if (check(Tok::arrow)) {
            advance();
            return mkImplies(std::move(lhs), implied());
        }
        return lhs;
    }

    FormulaPtr disj() {
        FormulaPtr lhs = conj();
        while (check(Tok::pipe)) {
            advance();
            lhs = mkOr(std::move(lhs), conj());
        }
        return lhs;
    }

    FormulaPtr conj() {
        FormulaPtr lhs = funary();
        while (check(Tok::amp)) {
            advance();
            lhs = mkAnd(std::move(lhs), funary());
        }
        return lhs;
    }

    int timeIndex() {
        const Token t = expect(Tok::num, "time point");
        if (t.text.find('/') != std::string::npos || t.text.size() > 9) {
            failAt(t, "expected time point");
        }
        return std::stoi(t.text);
    }

    FormulaPtr funary() {
        if (check(Tok::tilde)) {
            advance();
            return mkNot(funary());
        }
        if (check(Tok::diamond)) {
            advance();
            return mkEventually(funary());
        }
        if (check(Tok::box)) {
            advance();
            return mkAlways(funary());
        }
        if (check(Tok::at)) {
            advance();
            const int t = timeIndex();
            return mkAt(t, funary());
        }
        return fprimary();
    }

    FormulaPtr fprimary() {
        if (check(Tok::dir_true)) {
            advance();
            return mkTrue();
        }
        if (check(Tok::dir_false)) {
            advance();
            return mkFalse();
        }
        if (check(Tok::ident)) {
            return mkAtom(atom());
        }
        if (check(Tok::lparen)) {
            advance();
            FormulaPtr f = implied();
            expect(Tok::rparen, "')'");
            return f;
        }
        failAt(peek(), "expected formula");
    }

    // ---- weighted formulas -------------------------------------------------

    Value value(const Semiring& s) {
        const Token first = peek();
        std::string text;
        if (check(Tok::minus)) {
            advance();
            text = "-";
        }
        if (check(Tok::num)) {
            text += advance().text;
        } else if (check(Tok::ident) &&
                   (peek().text == "inf" || (text.empty() && (peek().text == "true" || peek().text == "false")))) {
            text += advance().text;
        } else {
            failAt(first, "expected value");
        }
        try {
            return s.parse(text);
        } catch (const Error& e) {
            failAt(first.line, first.col, e.code(), e.what());
        }
    }

    static bool valueStart(const Token& t) {
        return t.kind == Tok::num || t.kind == Tok::minus ||
               (t.kind == Tok::ident &&
                (t.text == "inf" || t.text == "true" || t.text == "false"));
    }

    WfPtr wadd(const Semiring& s, std::set<std::string>& bound) {
        WfPtr lhs = wmul(s, bound);
        while (check(Tok::plus)) {
            advance();
            lhs = mkAdd(std::move(lhs), wmul(s, bound));
        }
        return lhs;
    }

    WfPtr wmul(const Semiring& s, std::set<std::string>& bound) {
        WfPtr lhs = wunary(s, bound);
        while (check(Tok::star)) {
            advance();
            lhs = mkMul(std::move(lhs), wunary(s, bound));
        }
        return lhs;
    }

    WfPtr wunary(const Semiring& s, std::set<std::string>& bound) {
        if (check(Tok::diamond)) {
            advance();
            return mkWEventually(wunary(s, bound));
        }
        if (check(Tok::box)) {
            advance();
            return mkWAlways(wunary(s, bound));
        }
        if (check(Tok::kw_sum) || check(Tok::kw_prod)) {
            const bool isSum = advance().kind == Tok::kw_sum;
            expect(Tok::lbrace, "'{'");
            const Token v = expect(Tok::var, "variable");
            expect(Tok::kw_in, "'in'");
            const Token d = expect(Tok::ident, "domain name");
            domainRefs_.push_back(d);
            expect(Tok::rbrace, "'}'");
            if (!bound.insert(v.text).second) {
                failAt(v.line, v.col, Errc::variable_capture,
                       "variable '" + v.text + "' is already bound");
            }
            // The quantifier body extends through one multiplication.
            WfPtr body = wmul(s, bound);
            bound.erase(v.text);
            return isSum ? mkSum(v.text, d.text, std::move(body))
                         : mkProd(v.text, d.text, std::move(body));
        }
        return wprimary(s, bound);
    }

    WfPtr wprimary(const Semiring& s, std::set<std::string>& bound) {
        if (valueStart(peek())) {
            return mkWeight(value(s));
        }
        if (check(Tok::tilde)) {
            advance();
            return mkGate(funary(), true);
        }
        if (check(Tok::lparen)) {
            // A parenthesized classical formula is a 0-1 gate; if the inside
            // is not classical, the parentheses group a weighted formula.
            const std::size_t mark = pos_;
            advance();
            try {
                FormulaPtr f = implied();
                expect(Tok::rparen, "')'");
                return mkGate(std::move(f), false);
            } catch (const Error&) {
                pos_ = mark;
            }
            advance();
            WfPtr inner = wadd(s, bound);
            expect(Tok::rparen, "')'");
            return inner;
        }
        if (check(Tok::ident)) {
            if (weightFns_.find(peek().text) != weightFns_.end()) {
                const Token fn = advance();
                expect(Tok::lparen, "'('");
                Term arg = term();
                expect(Tok::rparen, "')'");
                return mkWeightApp(fn.text, std::move(arg));
            }
            return mkAtomGate(atom());
        }
        failAt(peek(), "expected weighted formula");
    }

    // ---- constraints, rules ------------------------------------------------

    Constraint constraint() {
        const Token open = expect(Tok::lbracket, "'['");
        // The semiring tag sits after the closing bracket but types every
        // value inside, so resolve it before descending.
        std::size_t j = pos_;
        while (tokens_[j].kind != Tok::rbracket && tokens_[j].kind != Tok::end) {
            ++j;
        }
        if (tokens_[j].kind == Tok::end) {
            failAt(open, "unterminated constraint");
        }
        if (j + 2 >= tokens_.size() || tokens_[j + 1].kind != Tok::at ||
            tokens_[j + 2].kind != Tok::ident) {
            failAt(tokens_[j], "expected ']@semiring'");
        }
        const Token name = tokens_[j + 2];
        const Semiring* s = nullptr;
        try {
            s = &Semiring::byName(name.text);
        } catch (const Error& e) {
            failAt(name.line, name.col, e.code(), e.what());
        }
        semiringRefs_.push_back(name);
        Value boundValue = value(*s);
        const Token op = expect(Tok::cmp, "comparator");
        const CmpOp cmpOp = cmpFromText(op.text);
        if (cmpNeedsOrder(cmpOp) && !s->ordered()) {
            failAt(op.line, op.col, Errc::order_unsupported,
                   "comparator '" + op.text + "' needs an ordered semiring, '" +
                       std::string(s->name()) + "' has no order");
        }
        std::set<std::string> bound;
        WfPtr body = wadd(*s, bound);
        expect(Tok::rbracket, "']'");
        expect(Tok::at, "'@'");
        advance(); // semiring name, already validated
        return Constraint{std::move(boundValue), cmpOp, std::move(body), name.text};
    }

    HeadLiteral hlit() {
        HeadLiteral h;
        if (check(Tok::lbracket)) {
            h.kind = HeadLiteral::Kind::constraint;
            h.constraint = constraint();
            return h;
        }
        if (check(Tok::ident)) {
            h.kind = HeadLiteral::Kind::atom;
            h.atom = atom();
            return h;
        }
        failAt(peek(), "expected atom or constraint in rule head");
    }

    BodyLiteral blit() {
        if (check(Tok::kw_not)) {
            advance();
            return negativeLiteral(atom());
        }
        if (check(Tok::lbracket)) {
            return constraintLiteral(constraint());
        }
        if (check(Tok::var)) {
            const Token v = advance();
            if (!check(Tok::kw_in)) {
                failAt(v, "bare variable is not a literal");
            }
            advance();
            const Token d = expect(Tok::ident, "domain name");
            domainRefs_.push_back(d);
            return domainLiteral(v.text, d.text);
        }
        if (check(Tok::diamond) || check(Tok::box) || check(Tok::at)) {
            return formulaLiteral(funary());
        }
        if (check(Tok::ident)) {
            return positiveLiteral(atom());
        }
        failAt(peek(), "expected body literal");
    }

    Rule rule() {
        Rule r;
        if (!check(Tok::arrow_if)) {
            r.head.push_back(hlit());
            while (check(Tok::pipe)) {
                advance();
                r.head.push_back(hlit());
            }
        }
        if (check(Tok::arrow_if)) {
            advance();
            r.body.push_back(blit());
            while (check(Tok::comma)) {
                advance();
                r.body.push_back(blit());
            }
        }
        expect(Tok::dot, "'.'");
        return r;
    }

    // ---- whole-program checks ----------------------------------------------

    void checkDomainRefs() const {
        if (context_ == nullptr) {
            return;
        }
        for (const Token& d : domainRefs_) {
            if (context_->findDomain(d.text) == nullptr) {
                failAt(d, "domain '" + d.text + "' is not declared");
            }
        }
    }

    void validate(const Program& prog) const {
        for (const Token& d : domainRefs_) {
            if (prog.findDomain(d.text) == nullptr) {
                failAt(d, "domain '" + d.text + "' is not declared");
            }
        }
        for (const Token& s : semiringRefs_) {
            bool declared = false;
            for (const std::string& name : prog.semirings) {
                declared = declared || name == s.text;
            }
            if (!declared) {
                failAt(s.line, s.col, Errc::unknown_semiring,
                       "semiring '" + s.text + "' is not declared in the program");
            }
        }
    }
};

} // namespace

Program parseProgram(std::string_view text) {
    Parser p(text, nullptr);
    return p.program();
}

FormulaPtr parseFormula(std::string_view text) {
    Parser p(text, nullptr);
    return p.formulaEntry();
}

WfPtr parseWeightedFormula(std::string_view text, const Semiring& semiring,
                           const Program* context) {
    Parser p(text, context);
    return p.weightedEntry(semiring);
}

Constraint parseConstraint(std::string_view text, const Program* context) {
    Parser p(text, context);
    return p.constraintEntry();
}

std::vector<std::string> parseAtomKeys(std::string_view text) {
    Parser p(text, nullptr);
    return p.atomKeysEntry();
}

} // namespace wasp
