#include "tcomb/problem_io.hpp"

#include "tcomb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace tcomb {

namespace {

enum class Tok { LParen, RParen, Comma, Arrow, WeakArrow, Label, Ident, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line, col;
    bool glued = false;   // no whitespace before it
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_delim(char c) { return c == '(' || c == ')' || c == ',' || c == '[' || c == ']' || is_space(c); }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0, line = 1, col = 1;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        const char c = s[i];
        if (is_space(c)) {
            advance(1);
            continue;
        }
        const std::size_t l = line, cl = col;
        if (c == '(' || c == ')' || c == ',') {
            out.push_back({c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : Tok::Comma, std::string(1, c), l, cl,
                           i > 0 && !is_space(s[i - 1])});
            advance(1);
        } else if (s.substr(i, 3) == "->=") {
            out.push_back({Tok::WeakArrow, "->=", l, cl});
            advance(3);
        } else if (s.substr(i, 2) == "->") {
            out.push_back({Tok::Arrow, "->", l, cl});
            advance(2);
        } else if (c == '[') {
            const auto close = s.find(']', i);
            if (close == std::string_view::npos) throw ParseError("unterminated rule label", l, cl);
            std::string label(s.substr(i + 1, close - i - 1));
            if (label.empty() || std::any_of(label.begin(), label.end(), is_delim))
                throw ParseError("malformed rule label", l, cl);
            out.push_back({Tok::Label, std::move(label), l, cl});
            advance(close - i + 1);
        } else if (c == ']') {
            throw ParseError("unexpected ']'", l, cl);
        } else {
            std::size_t j = i;
            while (j < s.size() && !is_delim(s[j]) && s.substr(j, 2) != "->") ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, cl});
            advance(j - i);
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct Raw {
    std::string name;
    std::vector<Raw> args;
    bool call = false;   // written with parentheses
    std::size_t line, col;
};

struct RawRule {
    std::optional<std::string> label;
    Raw lhs, rhs;
    bool weak;
    std::size_t line, col;
};

struct Declared {
    std::string name;
    std::optional<std::size_t> arity;
    std::size_t line, col;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    void run() {
        while (peek().kind != Tok::End) section();
    }

    std::set<std::string> vars;
    std::vector<std::string> infix;
    std::vector<Declared> constructors, defined;
    std::vector<RawRule> rules;
    std::optional<std::vector<RawRule>> q_rules;
    bool innermost = false;
    StartKind start = StartKind::BasicTerms;

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] static void fail(const std::string& what, const Token& t) { throw ParseError(what, t.line, t.col); }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what, peek());
        return next();
    }

    std::vector<Token> idents_until_close() {
        std::vector<Token> out;
        while (peek().kind == Tok::Ident) out.push_back(next());
        expect(Tok::RParen, "')'");
        return out;
    }

    void section() {
        expect(Tok::LParen, "'('");
        const Token head = expect(Tok::Ident, "section name");
        const std::string& name = head.text;
        if (name == "VAR") {
            for (const auto& t : idents_until_close()) {
                if (t.text.front() == '?') fail("variable names may not start with '?'", t);
                vars.insert(t.text);
            }
        } else if (name == "INFIX") {
            for (const auto& t : idents_until_close()) infix.push_back(t.text);
        } else if (name == "CONSTRUCTORS" || name == "DEFINED") {
            auto& dst = name == "DEFINED" ? defined : constructors;
            for (const auto& t : idents_until_close()) dst.push_back(declared(t));
        } else if (name == "RULES") {
            while (peek().kind != Tok::RParen) rules.push_back(rule(true));
            next();
        } else if (name == "Q") {
            q_rules.emplace();
            while (peek().kind != Tok::RParen) q_rules->push_back(rule(false));
            next();
        } else if (name == "STRATEGY") {
            const Token s = expect(Tok::Ident, "strategy name");
            if (s.text != "INNERMOST") throw UndeclaredStrategy("unknown strategy " + s.text, s.line, s.col);
            innermost = true;
            expect(Tok::RParen, "')'");
        } else if (name == "STARTTERM") {
            const Token s = expect(Tok::Ident, "start term kind");
            if (s.text == "CONSTRUCTOR-BASED")
                start = StartKind::BasicTerms;
            else if (s.text == "FULL")
                start = StartKind::AllTerms;
            else if (s.text == "MARKED-CONSTRUCTOR-BASED")
                start = StartKind::MarkedBasicTerms;
            else
                fail("unknown start term kind " + s.text, s);
            expect(Tok::RParen, "')'");
        } else if (name == "COMMENT") {
            int depth = 1;
            while (depth > 0) {
                const Token t = next();
                if (t.kind == Tok::End) fail("unterminated COMMENT", head);
                if (t.kind == Tok::LParen) ++depth;
                if (t.kind == Tok::RParen) --depth;
            }
        } else {
            fail("unknown section " + name, head);
        }
    }

    static Declared declared(const Token& t) {
        const auto slash = t.text.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == t.text.size())
            return {t.text, std::nullopt, t.line, t.col};
        const std::string digits = t.text.substr(slash + 1);
        if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return {t.text, std::nullopt, t.line, t.col};
        return {t.text.substr(0, slash), std::stoul(digits), t.line, t.col};
    }

    RawRule rule(bool allow_weak) {
        RawRule r;
        r.line = peek().line;
        r.col = peek().col;
        if (peek().kind == Tok::Label) r.label = next().text;
        r.lhs = expr(0);
        const Token arrow = next();
        if (arrow.kind == Tok::WeakArrow && allow_weak)
            r.weak = true;
        else if (arrow.kind == Tok::Arrow)
            r.weak = false;
        else
            fail(allow_weak ? "expected '->' or '->='" : "expected '->'", arrow);
        r.rhs = expr(0);
        return r;
    }

    std::optional<std::size_t> infix_level(const Token& t) const {
        if (t.kind != Tok::Ident) return std::nullopt;
        std::string base = t.text;
        if (base.size() > 1 && base.back() == '#') base.pop_back();
        const auto it = std::find(infix.begin(), infix.end(), base);
        if (it == infix.end()) return std::nullopt;
        return static_cast<std::size_t>(it - infix.begin());
    }

    Raw expr(std::size_t min_level) {
        Raw lhs = primary();
        while (auto level = infix_level(peek())) {
            if (*level < min_level) break;
            const Token op = next();
            Raw rhs = expr(*level + 1);
            lhs = Raw{op.text, {std::move(lhs), std::move(rhs)}, true, op.line, op.col};
        }
        return lhs;
    }

    Raw primary() {
        const Token t = next();
        if (t.kind == Tok::LParen) {
            Raw inner = expr(0);
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (t.kind != Tok::Ident) fail("expected a term", t);
        Raw r{t.text, {}, false, t.line, t.col};
        // f(x) is an application, f (x) two terms
        if (peek().kind == Tok::LParen && peek().glued) {
            next();
            r.call = true;
            if (peek().kind != Tok::RParen) {
                r.args.push_back(expr(0));
                while (peek().kind == Tok::Comma) {
                    next();
                    r.args.push_back(expr(0));
                }
            }
            expect(Tok::RParen, "')' or ','");
        }
        return r;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

struct Name {
    std::string base;
    bool marked = false;
    bool compound = false;
};

Name split_name(const std::string& s) {
    Name n{s};
    if (s.size() > 2 && s.compare(0, 2, "c_") == 0 &&
        std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        n.compound = true;
    } else if (s.size() > 1 && s.back() == '#') {
        n.base.pop_back();
        n.marked = true;
    }
    return n;
}

class Builder {
public:
    explicit Builder(const Parser& p) : p_(p) {}

    Problem build() {
        for (const auto& r : p_.rules) scan_rule(r);
        if (p_.q_rules)
            for (const auto& r : *p_.q_rules) scan_rule(r);
        for (const auto* list : {&p_.constructors, &p_.defined})
            for (const auto& d : *list) {
                if (p_.vars.count(d.name)) throw ParseError(d.name + " is declared as a variable", d.line, d.col);
                if (d.arity) note_arity(d.name, *d.arity, d.line, d.col);
                if (!arity_.count(d.name)) throw ParseError("arity of " + d.name + " is unknown; write " + d.name + "/n", d.line, d.col);
            }

        std::set<std::string> defined;
        for (const auto& d : p_.defined) defined.insert(d.name);
        for (const auto& name : lhs_roots_) defined.insert(name);
        for (const auto& name : marked_) defined.insert(name);
        for (const auto& d : p_.constructors)
            if (defined.count(d.name)) throw ParseError(d.name + " is declared a constructor but is defined", d.line, d.col);

        Problem prob;
        for (const auto& [name, arity] : arity_) {
            if (defined.count(name))
                prob.signature.defined.push_back(Symbol::defined(name, arity));
            else
                prob.signature.constructors.push_back(Symbol::constructor(name, arity));
        }
        std::sort(prob.signature.constructors.begin(), prob.signature.constructors.end());
        std::sort(prob.signature.defined.begin(), prob.signature.defined.end());
        prob.signature.infix = p_.infix;
        sig_ = &prob.signature;

        std::set<std::string> seen;
        for (std::size_t i = 0; i < p_.rules.size(); ++i) {
            const auto& rr = p_.rules[i];
            Rule r = make_rule(rr, rr.label.value_or(auto_label(i)));
            if (!seen.insert(r.label()).second) throw ParseError("duplicate rule label " + r.label(), rr.line, rr.col);
            (rr.weak ? prob.weak : prob.strict).add(std::move(r));
        }
        if (p_.q_rules) {
            for (std::size_t i = 0; i < p_.q_rules->size(); ++i) {
                const auto& rr = (*p_.q_rules)[i];
                try {
                    prob.q.add(make_rule(rr, rr.label.value_or(auto_label(i))));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), rr.line, rr.col);
                }
            }
        } else if (p_.innermost) {
            prob.q = prob.strict + prob.weak;
        }
        prob.start.kind = p_.start;
        return prob;
    }

private:
    void note_arity(const std::string& base, std::size_t arity, std::size_t line, std::size_t col) {
        auto [it, inserted] = arity_.emplace(base, arity);
        if (!inserted && it->second != arity)
            throw ArityMismatch(std::to_string(line) + ":" + std::to_string(col) + ": " + base + " used with arity " +
                                std::to_string(arity) + " and " + std::to_string(it->second));
    }

    void scan(const Raw& t) {
        if (p_.vars.count(t.name)) {
            if (t.call) throw ParseError("variable " + t.name + " applied to arguments", t.line, t.col);
            return;
        }
        if (t.name.front() == '?') throw ParseError("symbol names may not start with '?'", t.line, t.col);
        const Name n = split_name(t.name);
        if (n.compound) {
            if (std::stoul(t.name.substr(2)) != t.args.size())
                throw ArityMismatch(std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + t.name + " applied to " +
                                    std::to_string(t.args.size()) + " arguments");
        } else {
            if (n.marked) marked_.insert(n.base);
            note_arity(n.base, t.args.size(), t.line, t.col);
        }
        for (const auto& a : t.args) scan(a);
    }

    void scan_rule(const RawRule& r) {
        scan(r.lhs);
        scan(r.rhs);
        if (p_.vars.count(r.lhs.name)) throw ParseError("left-hand side is a variable", r.lhs.line, r.lhs.col);
        const Name n = split_name(r.lhs.name);
        if (!n.compound && !n.marked) lhs_roots_.insert(n.base);
    }

    Term term(const Raw& t) const {
        if (p_.vars.count(t.name)) return Term::variable(t.name);
        std::vector<Term> args;
        for (const auto& a : t.args) args.push_back(term(a));
        const Name n = split_name(t.name);
        if (n.compound) {
            const Symbol c = Symbol::compound(args.size());
            return Term::apply(c, std::move(args));
        }
        const Symbol f = *sig_->lookup(n.base);
        return Term::apply(n.marked ? f.marked() : f, std::move(args));
    }

    Rule make_rule(const RawRule& rr, const std::string& label) const {
        try {
            return Rule(term(rr.lhs), term(rr.rhs), label);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), rr.line, rr.col);
        } catch (const ArityMismatch&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), rr.line, rr.col);
        }
    }

    const Parser& p_;
    std::map<std::string, std::size_t> arity_;
    std::set<std::string> lhs_roots_, marked_;
    const Signature* sig_ = nullptr;
};

std::string rule_line(const Rule& r, std::size_t index, const std::set<std::string>& infix, bool weak) {
    std::string s = "  ";
    if (r.label() != auto_label(index)) s += "[" + r.label() + "] ";
    return s + to_string(r.lhs(), infix) + (weak ? " ->= " : " -> ") + to_string(r.rhs(), infix) + "\n";
}

} // namespace

std::string auto_label(std::size_t index) {
    std::string out;
    ++index;
    while (index > 0) {
        --index;
        out.insert(out.begin(), static_cast<char>('a' + index % 26));
        index /= 26;
    }
    return out;
}

Problem parse_problem(std::string_view text) {
    Parser parser(lex(text));
    parser.run();
    return Builder(parser).build();
}

std::string print_problem(const Problem& p) {
    if (p.start.kind == StartKind::Explicit) throw std::invalid_argument("explicit start terms have no file syntax");
    const auto infix = p.signature.infix_set();
    std::ostringstream os;

    std::set<std::string> vars;
    for (const Trs* trs : {&p.strict, &p.weak, &p.q})
        for (const auto& r : *trs)
            for (const auto& v : variables(r.lhs())) vars.insert(v);
    os << "(VAR";
    for (const auto& v : vars) os << ' ' << v;
    os << ")\n";
    if (!p.signature.infix.empty()) {
        os << "(INFIX";
        for (const auto& op : p.signature.infix) os << ' ' << op;
        os << ")\n";
    }
    os << "(CONSTRUCTORS";
    for (const auto& f : p.signature.constructors) os << ' ' << f.name() << '/' << f.arity();
    os << ")\n(DEFINED";
    for (const auto& f : p.signature.defined) os << ' ' << f.name() << '/' << f.arity();
    os << ")\n(RULES\n";
    std::size_t i = 0;
    for (const auto& r : p.strict) os << rule_line(r, i++, infix, false);
    for (const auto& r : p.weak) os << rule_line(r, i++, infix, true);
    os << ")\n";

    // Q is written as INNERMOST when it is exactly S followed by W, as parsed.
    Trs sw;
    bool q_is_sw = true;
    try {
        sw = p.strict + p.weak;
    } catch (const std::invalid_argument&) {
        q_is_sw = false;
    }
    q_is_sw = q_is_sw && !p.q.empty() && sw == p.q;
    if (q_is_sw) {
        os << "(STRATEGY INNERMOST)\n";
    } else if (!p.q.empty()) {
        os << "(Q\n";
        std::size_t k = 0;
        for (const auto& r : p.q) os << rule_line(r, k++, infix, false);
        os << ")\n";
    }
    os << "(STARTTERM "
       << (p.start.kind == StartKind::AllTerms     ? "FULL"
           : p.start.kind == StartKind::BasicTerms ? "CONSTRUCTOR-BASED"
                                                   : "MARKED-CONSTRUCTOR-BASED")
       << ")\n";
    return os.str();
}

} // namespace tcomb
