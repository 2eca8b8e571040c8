#include "tcomb/term.hpp"

#include "tcomb/errors.hpp"

#include <atomic>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace tcomb {

std::string_view to_string(SymbolKind kind) {
    switch (kind) {
    case SymbolKind::Constructor: return "constructor";
    case SymbolKind::Defined: return "defined";
    case SymbolKind::Marked: return "marked";
    case SymbolKind::Compound: return "compound";
    }
    return "?";
}

// Symbol ---------------------------------------------------------------------

Symbol::Symbol(std::string name, std::size_t arity, SymbolKind kind)
    : name_(std::move(name)), arity_(arity), kind_(kind) {
    if (kind_ == SymbolKind::Compound && name_ != "c_" + std::to_string(arity_))
        throw std::invalid_argument("compound symbol must be named c_<arity>: " + name_);
}

Symbol Symbol::constructor(std::string name, std::size_t arity) {
    return Symbol(std::move(name), arity, SymbolKind::Constructor);
}

Symbol Symbol::defined(std::string name, std::size_t arity) {
    return Symbol(std::move(name), arity, SymbolKind::Defined);
}

Symbol Symbol::compound(std::size_t arity) {
    return Symbol("c_" + std::to_string(arity), arity, SymbolKind::Compound);
}

Symbol Symbol::marked() const {
    if (kind_ != SymbolKind::Defined)
        throw std::logic_error("only defined symbols can be marked: " + display_name());
    return Symbol(name_, arity_, SymbolKind::Marked);
}

Symbol Symbol::unmarked() const {
    if (kind_ != SymbolKind::Marked)
        throw std::logic_error("symbol is not marked: " + display_name());
    return Symbol(name_, arity_, SymbolKind::Defined);
}

std::string Symbol::display_name() const {
    if (kind_ == SymbolKind::Marked) return name_ + "#";
    return name_;
}

std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    if (auto c = a.name_.compare(b.name_); c != 0) return c < 0 ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
    return a.arity_ <=> b.arity_;
}

// Term -------------------------------------------------------------------------

struct Term::Node {
    bool variable = false;
    std::string var_name;
    std::optional<Symbol> symbol;
    std::vector<Term> args;
    std::size_t size = 1;
    std::size_t hash = 0;
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::variable(std::string name) {
    auto node = std::make_shared<Node>();
    node->variable = true;
    node->hash = hash_combine(0x51ed27, std::hash<std::string>{}(name));
    node->var_name = std::move(name);
    return Term(std::move(node));
}

Term Term::apply(Symbol f, std::vector<Term> args) {
    if (args.size() != f.arity())
        throw ArityMismatch("symbol " + f.display_name() + " expects " + std::to_string(f.arity()) +
                            " arguments, got " + std::to_string(args.size()));
    auto node = std::make_shared<Node>();
    std::size_t h = hash_combine(std::hash<std::string>{}(f.name()),
                                 static_cast<std::size_t>(f.kind()) * 31 + f.arity());
    std::size_t size = 1;
    for (const auto& a : args) {
        h = hash_combine(h, a.hash());
        size += a.size();
    }
    node->symbol = std::move(f);
    node->args = std::move(args);
    node->size = size;
    node->hash = h;
    return Term(std::move(node));
}

bool Term::is_variable() const noexcept { return node_->variable; }

const std::string& Term::variable_name() const {
    if (!node_->variable) throw std::logic_error("not a variable");
    return node_->var_name;
}

const Symbol& Term::symbol() const {
    if (node_->variable) throw std::logic_error("variable has no symbol: " + node_->var_name);
    return *node_->symbol;
}

const std::vector<Term>& Term::args() const { return node_->args; }

std::size_t Term::size() const noexcept { return node_->size; }

std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
    if (a.node_->variable != b.node_->variable) return false;
    if (a.node_->variable) return a.node_->var_name == b.node_->var_name;
    if (!(*a.node_->symbol == *b.node_->symbol)) return false;
    for (std::size_t i = 0; i < a.node_->args.size(); ++i)
        if (!(a.node_->args[i] == b.node_->args[i])) return false;
    return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const bool av = a.node_->variable, bv = b.node_->variable;
    if (av != bv) return av ? std::strong_ordering::less : std::strong_ordering::greater;
    if (av) {
        int c = a.node_->var_name.compare(b.node_->var_name);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (auto c = *a.node_->symbol <=> *b.node_->symbol; c != 0) return c;
    for (std::size_t i = 0; i < a.node_->args.size(); ++i)
        if (auto c = a.node_->args[i] <=> b.node_->args[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// positions ----------------------------------------------------------------------

namespace {

void collect_positions(const Term& t, Position& cur, std::vector<Position>& out) {
    out.push_back(cur);
    if (t.is_variable()) return;
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        cur.push_back(i + 1);
        collect_positions(t.args()[i], cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    Position cur;
    collect_positions(t, cur, out);
    return out;
}

std::string to_string(const Position& p) {
    if (p.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(p[i]);
    }
    return s;
}

Term subterm_at(const Term& t, const Position& p) {
    Term cur = t;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const std::size_t i = p[k];
        if (cur.is_variable() || i == 0 || i > cur.args().size())
            throw InvalidPosition("position " + to_string(p) + " is not a position of " + to_string(t));
        cur = cur.args()[i - 1];
    }
    return cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t depth, const Term& replacement) {
    if (depth == p.size()) return replacement;
    const std::size_t i = p[depth];
    if (t.is_variable() || i == 0 || i > t.args().size())
        throw InvalidPosition("position " + to_string(p) + " is not a position of the term");
    std::vector<Term> args = t.args();
    args[i - 1] = replace_rec(args[i - 1], p, depth + 1, replacement);
    return Term::apply(t.symbol(), std::move(args));
}

void collect_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
    if (t.is_variable()) {
        if (seen.insert(t.variable_name()).second) out.push_back(t.variable_name());
        return;
    }
    for (const auto& a : t.args()) collect_vars(a, out, seen);
}

void collect_symbols(const Term& t, std::vector<Symbol>& out, std::set<Symbol>& seen) {
    if (t.is_variable()) return;
    if (seen.insert(t.symbol()).second) out.push_back(t.symbol());
    for (const auto& a : t.args()) collect_symbols(a, out, seen);
}

} // namespace

Term replace_at(const Term& t, const Position& p, Term replacement) {
    return replace_rec(t, p, 0, replacement);
}

std::vector<std::string> variables(const Term& t) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    collect_vars(t, out, seen);
    return out;
}

bool occurs(std::string_view var, const Term& t) {
    if (t.is_variable()) return t.variable_name() == var;
    for (const auto& a : t.args())
        if (occurs(var, a)) return true;
    return false;
}

bool is_ground(const Term& t) {
    if (t.is_variable()) return false;
    for (const auto& a : t.args())
        if (!is_ground(a)) return false;
    return true;
}

bool contains_kind(const Term& t, SymbolKind kind) {
    if (t.is_variable()) return false;
    if (t.symbol().kind() == kind) return true;
    for (const auto& a : t.args())
        if (contains_kind(a, kind)) return true;
    return false;
}

std::vector<Symbol> function_symbols(const Term& t) {
    std::vector<Symbol> out;
    std::set<Symbol> seen;
    collect_symbols(t, out, seen);
    return out;
}

// substitutions --------------------------------------------------------------------

std::optional<Term> Substitution::lookup(std::string_view var) const {
    auto it = bindings_.find(var);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
}

void Substitution::bind(std::string var, Term t) {
    bindings_.insert_or_assign(std::move(var), std::move(t));
}

Term Substitution::apply(const Term& t) const {
    if (bindings_.empty()) return t;
    if (t.is_variable()) {
        auto it = bindings_.find(t.variable_name());
        return it == bindings_.end() ? t : it->second;
    }
    if (t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool changed = false;
    for (const auto& a : t.args()) {
        args.push_back(apply(a));
        changed = changed || !args.back().same_node(a);
    }
    if (!changed) return t;
    return Term::apply(t.symbol(), std::move(args));
}

namespace {

bool match_rec(const Term& pattern, const Term& subject, Substitution& sigma) {
    if (pattern.is_variable()) {
        if (auto bound = sigma.lookup(pattern.variable_name())) return *bound == subject;
        sigma.bind(pattern.variable_name(), subject);
        return true;
    }
    if (subject.is_variable() || !(pattern.symbol() == subject.symbol())) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_rec(pattern.args()[i], subject.args()[i], sigma)) return false;
    return true;
}

// Triangular bindings; `resolve` walks variable chains.
Term resolve(const Term& t, const std::unordered_map<std::string, Term>& bound) {
    Term cur = t;
    while (cur.is_variable()) {
        auto it = bound.find(cur.variable_name());
        if (it == bound.end()) break;
        cur = it->second;
    }
    return cur;
}

bool occurs_resolved(const std::string& var, const Term& t,
                     const std::unordered_map<std::string, Term>& bound) {
    Term r = resolve(t, bound);
    if (r.is_variable()) return r.variable_name() == var;
    for (const auto& a : r.args())
        if (occurs_resolved(var, a, bound)) return true;
    return false;
}

Term fully_resolve(const Term& t, const std::unordered_map<std::string, Term>& bound) {
    Term r = resolve(t, bound);
    if (r.is_variable() || r.args().empty()) return r;
    std::vector<Term> args;
    args.reserve(r.args().size());
    for (const auto& a : r.args()) args.push_back(fully_resolve(a, bound));
    return Term::apply(r.symbol(), std::move(args));
}

} // namespace

std::optional<Substitution> match_term(const Term& pattern, const Term& subject) {
    Substitution sigma;
    if (!match_rec(pattern, subject, sigma)) return std::nullopt;
    return sigma;
}

std::optional<Substitution> unify_terms(const Term& s, const Term& t) {
    std::unordered_map<std::string, Term> bound;
    std::vector<std::pair<Term, Term>> todo{{s, t}};
    while (!todo.empty()) {
        auto [a0, b0] = todo.back();
        todo.pop_back();
        Term a = resolve(a0, bound), b = resolve(b0, bound);
        if (a == b) continue;
        if (!a.is_variable() && b.is_variable()) std::swap(a, b);
        if (a.is_variable()) {
            if (occurs_resolved(a.variable_name(), b, bound)) return std::nullopt;
            bound.emplace(a.variable_name(), b);
            continue;
        }
        if (!(a.symbol() == b.symbol())) return std::nullopt;
        for (std::size_t i = 0; i < a.args().size(); ++i) todo.emplace_back(a.args()[i], b.args()[i]);
    }
    Substitution sigma;
    for (const auto& [var, _] : bound) sigma.bind(var, fully_resolve(Term::variable(var), bound));
    return sigma;
}

// fresh variables ------------------------------------------------------------------

namespace {
std::atomic<std::size_t> fresh_counter{0};
}

Term fresh_variable() {
    return Term::variable("?" + std::to_string(fresh_counter.fetch_add(1, std::memory_order_relaxed)));
}

Term rename_fresh(const Term& t) {
    Substitution sigma;
    for (const auto& v : variables(t)) sigma.bind(v, fresh_variable());
    return sigma.apply(t);
}

// dependency pair notation -------------------------------------------------------------

Term mark(const Term& t) {
    if (t.is_variable() || !t.symbol().is_defined()) return t;
    return Term::apply(t.symbol().marked(), t.args());
}

Term unmark(const Term& t) {
    if (t.is_variable() || !t.symbol().is_marked()) return t;
    return Term::apply(t.symbol().unmarked(), t.args());
}

Term com(std::vector<Term> ts) {
    if (ts.size() == 1) return std::move(ts.front());
    const std::size_t n = ts.size();
    return Term::apply(Symbol::compound(n), std::move(ts));
}

std::vector<Term> com_components(const Term& t) {
    if (!t.is_variable() && t.symbol().is_compound()) return t.args();
    return {t};
}

namespace {

bool constructor_term(const Term& t) {
    if (t.is_variable()) return true;
    if (!t.symbol().is_constructor()) return false;
    for (const auto& a : t.args())
        if (!constructor_term(a)) return false;
    return true;
}

} // namespace

bool is_basic(const Term& t) {
    if (t.is_variable()) return false;
    const auto& f = t.symbol();
    if (!f.is_defined() && !f.is_marked()) return false;
    for (const auto& a : t.args())
        if (!constructor_term(a)) return false;
    return true;
}

// replacement maps --------------------------------------------------------------------

ReplacementMap ReplacementMap::full() { return ReplacementMap(Default::All); }
ReplacementMap ReplacementMap::compound_only() { return ReplacementMap(Default::CompoundsOnly); }
ReplacementMap ReplacementMap::none() { return ReplacementMap(Default::None); }

ReplacementMap& ReplacementMap::set(const Symbol& f, std::set<std::size_t> argument_positions) {
    for (auto i : argument_positions)
        if (i == 0 || i > f.arity())
            throw std::invalid_argument("replacement map index " + std::to_string(i) +
                                        " out of range for " + f.display_name());
    overrides_.insert_or_assign(f, std::move(argument_positions));
    return *this;
}

std::set<std::size_t> ReplacementMap::positions(const Symbol& f) const {
    if (auto it = overrides_.find(f); it != overrides_.end()) return it->second;
    const bool all = default_ == Default::All || (default_ == Default::CompoundsOnly && f.is_compound());
    std::set<std::size_t> out;
    if (all)
        for (std::size_t i = 1; i <= f.arity(); ++i) out.insert(i);
    return out;
}

bool ReplacementMap::contains(const Symbol& f, std::size_t index) const {
    if (auto it = overrides_.find(f); it != overrides_.end()) return it->second.count(index) > 0;
    if (index == 0 || index > f.arity()) return false;
    return default_ == Default::All || (default_ == Default::CompoundsOnly && f.is_compound());
}

namespace {

void collect_mu(const ReplacementMap& mu, const Term& t, Position& cur, std::set<Position>& out) {
    out.insert(cur);
    if (t.is_variable()) return;
    for (std::size_t i = 1; i <= t.args().size(); ++i) {
        if (!mu.contains(t.symbol(), i)) continue;
        cur.push_back(i);
        collect_mu(mu, t.args()[i - 1], cur, out);
        cur.pop_back();
    }
}

} // namespace

std::set<Position> mu_positions(const ReplacementMap& mu, const Term& t) {
    std::set<Position> out;
    Position cur;
    collect_mu(mu, t, cur, out);
    return out;
}

// printing ---------------------------------------------------------------------------

namespace {

bool prints_infix(const Term& t, const std::set<std::string>& infix) {
    if (t.is_variable() || t.args().size() != 2) return false;
    const auto& f = t.symbol();
    if (f.is_compound()) return false;
    return infix.count(f.name()) > 0;
}

void print(std::ostream& os, const Term& t, const std::set<std::string>& infix, bool operand) {
    if (t.is_variable()) {
        os << t.variable_name();
        return;
    }
    if (prints_infix(t, infix)) {
        if (operand) os << '(';
        print(os, t.args()[0], infix, true);
        os << ' ' << t.symbol().display_name() << ' ';
        print(os, t.args()[1], infix, true);
        if (operand) os << ')';
        return;
    }
    os << t.symbol().display_name();
    if (t.args().empty()) return;
    os << '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        print(os, t.args()[i], infix, false);
    }
    os << ')';
}

} // namespace

std::string to_string(const Term& t, const std::set<std::string>& infix) {
    std::ostringstream os;
    print(os, t, infix, false);
    return os.str();
}

} // namespace tcomb
