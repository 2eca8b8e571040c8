#include "tcomb/interpretation.hpp"

#include "tcomb/errors.hpp"

#include <algorithm>
#include <set>

namespace tcomb {

ReplacementMap usable_replacement_map(const Problem& p, Part part) {
    const Trs& rules = part == Part::Strict ? p.strict : p.weak;
    const bool dps_only = std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_dp(); });
    if (is_dp_problem(p) && dps_only) return ReplacementMap::compound_only();
    return ReplacementMap::full();
}

namespace {

void add_symbols(const Term& t, std::vector<Symbol>& out, std::set<Symbol>& seen) {
    for (const auto& f : function_symbols(t))
        if (seen.insert(f).second) out.push_back(f);
}

} // namespace

std::vector<Symbol> problem_symbols(const Problem& p) {
    std::vector<Symbol> out;
    std::set<Symbol> seen;
    for (const Trs* trs : {&p.strict, &p.weak})
        for (const auto& r : *trs) {
            add_symbols(r.lhs(), out, seen);
            add_symbols(r.rhs(), out, seen);
        }
    for (const auto& t : p.start.terms) add_symbols(t, out, seen);
    for (const auto& f : p.signature.constructors)
        if (seen.insert(f).second) out.push_back(f);
    for (const auto& f : p.signature.defined) {
        if (seen.insert(f).second) out.push_back(f);
        if (p.start.kind == StartKind::MarkedBasicTerms && seen.insert(f.marked()).second)
            out.push_back(f.marked());
    }
    return out;
}

namespace {

std::optional<Polynomial> difference(const PolyInterp& interp, const Rule& r) {
    try {
        std::vector<std::string> vars;
        Polynomial l = interp.interpret(r.lhs(), vars);
        Polynomial rhs = interp.interpret(r.rhs(), vars);
        return l - rhs;
    } catch (const TooLarge&) {
        return std::nullopt;
    }
}

} // namespace

bool orients_strictly(const PolyInterp& interp, const Rule& r) {
    auto d = difference(interp, r);
    return d && (*d - Polynomial::constant(1)).non_negative_coefficients();
}

bool orients_weakly(const PolyInterp& interp, const Rule& r) {
    auto d = difference(interp, r);
    return d && d->non_negative_coefficients();
}

bool check_orientation(const OrderPair& op, const Problem& p) {
    try {
        for (const auto& r : p.strict)
            if (!orients_strictly(op.interp, r)) return false;
        for (const auto& r : p.weak)
            if (!orients_weakly(op.interp, r)) return false;
    } catch (const std::out_of_range&) {
        return false;
    }
    return true;
}

namespace {

bool strictly_monotone_in(const Polynomial& poly, std::size_t i) {
    std::vector<unsigned> e(i + 1, 0);
    e[i] = 1;
    if (poly.coefficient(Polynomial::monomial_of(e)) >= 1) return true;
    e[i] = 2;
    return poly.coefficient(Polynomial::monomial_of(e)) >= 1;
}

bool strongly_linear(const Polynomial& poly, std::size_t arity) {
    std::size_t linear = 0;
    for (const auto& [m, c] : poly.terms()) {
        if (m == 0) continue;
        if (Polynomial::monomial_degree(m) != 1 || c != 1) return false;
        ++linear;
    }
    if (linear != arity) return false;
    for (std::size_t i = 0; i < arity; ++i) {
        std::vector<unsigned> e(i + 1, 0);
        e[i] = 1;
        if (poly.coefficient(Polynomial::monomial_of(e)) != 1) return false;
    }
    return true;
}

// Linear, square and (arity 2) mixed monomials only.
bool allowed_monomial(Polynomial::Monomial m, std::size_t arity, unsigned degree) {
    const unsigned d = Polynomial::monomial_degree(m);
    if (d <= 1) return true;
    if (degree < 2 || d > 2) return false;
    std::size_t vars = 0;
    for (std::size_t i = 0; i < Polynomial::max_variables; ++i)
        if (Polynomial::exponent(m, i) > 0) ++vars;
    return vars == 1 || arity <= 2;
}

} // namespace

bool check_monotonicity(const OrderPair& op, const Problem& p) {
    for (const auto& f : problem_symbols(p)) {
        const Polynomial* poly = op.interp.find(f);
        if (!poly) return false;
        for (auto i : op.mu_strict.positions(f))
            if (!strictly_monotone_in(*poly, i - 1)) return false;
    }
    return true;
}

std::optional<std::string> check_shape(const PolyInterp& interp, const Problem& p, unsigned degree,
                                       unsigned coeff_max) {
    const bool all_terms = p.start.kind == StartKind::AllTerms;
    for (const auto& f : problem_symbols(p)) {
        const Polynomial* poly = interp.find(f);
        if (!poly) return "no interpretation for " + f.display_name();
        for (const auto& [m, c] : poly->terms()) {
            if (c < 0 || c > static_cast<std::int64_t>(coeff_max))
                return "coefficient of [" + f.display_name() + "] outside 0.." + std::to_string(coeff_max);
            for (std::size_t i = f.arity(); i < Polynomial::max_variables; ++i)
                if (Polynomial::exponent(m, i) > 0)
                    return "[" + f.display_name() + "] mentions a variable beyond its arity";
        }
        const bool frozen = f.is_constructor() || f.is_compound() || all_terms;
        if (frozen) {
            if (!strongly_linear(*poly, f.arity()))
                return "[" + f.display_name() + "] is not strongly linear";
            continue;
        }
        for (const auto& [m, c] : poly->terms())
            if (!allowed_monomial(m, f.arity(), degree))
                return "[" + f.display_name() + "] exceeds the admitted shape of degree " + std::to_string(degree);
    }
    return std::nullopt;
}

std::optional<std::string> check_complexity_pair(const OrderPair& op, const Problem& p, unsigned degree,
                                                 unsigned coeff_max) {
    if (degree < 1 || degree > 2) return "degree must be 1 or 2";
    if (auto e = check_shape(op.interp, p, degree, coeff_max)) return e;
    if (!check_monotonicity(op, p)) return "interpretation is not monotone on the usable positions";
    for (const auto& r : p.strict)
        if (!orients_strictly(op.interp, r)) return "strict rule " + r.label() + " is not decreasing";
    for (const auto& r : p.weak)
        if (!orients_weakly(op.interp, r)) return "weak rule " + r.label() + " is not weakly decreasing";
    return std::nullopt;
}

OrderPair make_order_pair(PolyInterp interp, const Problem& p) {
    return OrderPair{std::move(interp), usable_replacement_map(p, Part::Strict),
                     usable_replacement_map(p, Part::Weak)};
}

Bound induced_bound(const OrderPair& op, const Problem& p) {
    const auto symbols = problem_symbols(p);
    switch (p.start.kind) {
    case StartKind::Explicit: return Bound::poly(0);
    case StartKind::AllTerms:
        for (const auto& f : symbols) {
            const Polynomial* poly = op.interp.find(f);
            if (!poly || !strongly_linear(*poly, f.arity())) return Bound::unknown();
        }
        return Bound::poly(1);
    case StartKind::BasicTerms:
    case StartKind::MarkedBasicTerms: {
        unsigned d = 0;
        for (const auto& f : symbols) {
            const Polynomial* poly = op.interp.find(f);
            if (!poly) return Bound::unknown();
            if (f.is_constructor() || f.is_compound()) {
                if (!strongly_linear(*poly, f.arity())) return Bound::unknown();
            } else {
                d = std::max(d, poly->degree());
            }
        }
        return Bound::poly(d);
    }
    }
    return Bound::unknown();
}

} // namespace tcomb
