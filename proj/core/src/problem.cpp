#include "tcomb/problem.hpp"

#include <algorithm>
#include <sstream>

namespace tcomb {

std::string_view to_string(StartKind kind) {
    switch (kind) {
    case StartKind::AllTerms: return "all";
    case StartKind::BasicTerms: return "basic";
    case StartKind::MarkedBasicTerms: return "marked-basic";
    case StartKind::Explicit: return "explicit";
    }
    return "?";
}

std::optional<StartKind> start_kind_from_string(std::string_view s) {
    for (auto k : {StartKind::AllTerms, StartKind::BasicTerms, StartKind::MarkedBasicTerms,
                   StartKind::Explicit})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

std::optional<Symbol> Signature::lookup(std::string_view name) const {
    for (const auto& f : constructors)
        if (f.name() == name) return f;
    for (const auto& f : defined)
        if (f.name() == name) return f;
    return std::nullopt;
}

Bound bound_add(const Bound& a, const Bound& b) {
    if (!a.is_poly() || !b.is_poly()) return Bound::unknown();
    return Bound::poly(std::max(a.degree(), b.degree()));
}

Bound bound_mul(const Bound& a, const Bound& b) {
    if (!a.is_poly() || !b.is_poly()) return Bound::unknown();
    return Bound::poly(a.degree() + b.degree());
}

std::string to_string(const Bound& b) {
    if (!b.is_poly()) return "?";
    if (b.degree() == 0) return "O(1)";
    return "O(n^" + std::to_string(b.degree()) + ")";
}

namespace {

bool compound_free(const Term& t) { return !contains_kind(t, SymbolKind::Compound); }

bool well_formed_dp(const Rule& r) {
    if (!r.lhs().symbol().is_marked()) return false;
    for (const auto& a : r.lhs().args())
        if (contains_kind(a, SymbolKind::Marked) || !compound_free(a)) return false;
    const Term& rhs = r.rhs();
    if (!rhs.is_variable() && rhs.symbol().is_compound())
        return std::all_of(rhs.args().begin(), rhs.args().end(), compound_free);
    return compound_free(rhs);
}

bool plain_rule(const Rule& r) {
    return !contains_kind(r.lhs(), SymbolKind::Marked) && !contains_kind(r.rhs(), SymbolKind::Marked) &&
           compound_free(r.lhs()) && compound_free(r.rhs());
}

} // namespace

bool is_dp_problem(const Problem& p) {
    if (p.start.kind == StartKind::Explicit) {
        for (const auto& t : p.start.terms)
            if (!is_basic(t) || !t.symbol().is_marked()) return false;
    } else if (p.start.kind != StartKind::MarkedBasicTerms) {
        return false;
    }
    for (const Trs* trs : {&p.strict, &p.weak})
        for (const auto& r : *trs)
            if (r.is_dp() ? !well_formed_dp(r) : !plain_rule(r)) return false;
    return true;
}

bool is_innermost(const Problem& p) {
    for (const Trs* trs : {&p.strict, &p.weak})
        for (const auto& r : *trs) {
            bool covered = false;
            // a DP's lhs counts as covered through its unmarked form
            const Term lhs = unmark(r.lhs());
            for (const auto& qr : p.q)
                if (match_term(qr.lhs(), lhs)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    return true;
}

namespace {

std::optional<std::string> check_term(const Term& t, const Signature& sig) {
    if (t.is_variable()) return std::nullopt;
    const Symbol& f = t.symbol();
    switch (f.kind()) {
    case SymbolKind::Compound: break;
    case SymbolKind::Marked:
        if (!(sig.lookup(f.name()) == std::optional<Symbol>(f.unmarked())))
            return "marked symbol " + f.display_name() + " has no defined counterpart";
        break;
    default:
        if (!(sig.lookup(f.name()) == std::optional<Symbol>(f)))
            return "symbol " + f.name() + "/" + std::to_string(f.arity()) + " is not in the signature";
    }
    for (const auto& a : t.args())
        if (auto e = check_term(a, sig)) return e;
    return std::nullopt;
}

} // namespace

std::optional<std::string> check_well_formed(const Problem& p) {
    for (const Trs* trs : {&p.strict, &p.weak, &p.q})
        for (const auto& r : *trs) {
            if (auto e = check_term(r.lhs(), p.signature)) return e;
            if (auto e = check_term(r.rhs(), p.signature)) return e;
        }
    for (const auto& r : p.strict)
        if (p.weak.contains(r.label()) && !r.label().empty())
            return "rule label " + r.label() + " is both strict and weak";
    for (const auto& t : p.start.terms)
        if (auto e = check_term(t, p.signature)) return e;
    return std::nullopt;
}

std::string to_string(const Problem& p) {
    std::ostringstream os;
    auto labels = [](const Trs& trs) {
        std::string s = "{";
        bool first = true;
        for (const auto& r : trs) {
            if (!first) s += ", ";
            first = false;
            s += r.label().empty() ? "_" : r.label();
        }
        return s + "}";
    };
    os << "<" << labels(p.strict) << " / " << labels(p.weak) << ", Q = " << labels(p.q) << ", "
       << to_string(p.start.kind) << ">";
    return os.str();
}

} // namespace tcomb
