#include "tcomb/polynomial.hpp"

#include "tcomb/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tcomb {

namespace {

// Adds exponents of two packed monomials, detecting nibble overflow.
Polynomial::Monomial add_monomials(Polynomial::Monomial a, Polynomial::Monomial b) {
    Polynomial::Monomial out = 0;
    for (std::size_t v = 0; v < Polynomial::max_variables; ++v) {
        const unsigned e = Polynomial::exponent(a, v) + Polynomial::exponent(b, v);
        if (e > 15) throw TooLarge("polynomial exponent exceeds 15");
        out |= static_cast<Polynomial::Monomial>(e) << (4 * v);
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw TooLarge("polynomial coefficient overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw TooLarge("polynomial coefficient overflow");
    return r;
}

} // namespace

Polynomial Polynomial::constant(std::int64_t c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(0, c);
    return p;
}

Polynomial Polynomial::variable(std::size_t index) {
    if (index >= max_variables) throw TooLarge("too many polynomial variables");
    Polynomial p;
    p.terms_.emplace_back(Monomial{1} << (4 * index), 1);
    return p;
}

Polynomial::Monomial Polynomial::monomial_of(const std::vector<unsigned>& exponents) {
    if (exponents.size() > max_variables) throw TooLarge("too many polynomial variables");
    Monomial m = 0;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] > 15) throw TooLarge("polynomial exponent exceeds 15");
        m |= static_cast<Monomial>(exponents[v]) << (4 * v);
    }
    return m;
}

Polynomial Polynomial::monomial(std::int64_t c, const std::vector<unsigned>& exponents) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(monomial_of(exponents), c);
    return p;
}

unsigned Polynomial::monomial_degree(Monomial m) {
    unsigned d = 0;
    for (std::size_t v = 0; v < max_variables; ++v) d += exponent(m, v);
    return d;
}

std::int64_t Polynomial::constant_term() const { return coefficient(0); }

std::int64_t Polynomial::coefficient(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const auto& t, Monomial k) { return t.first < k; });
    return it != terms_.end() && it->first == m ? it->second : 0;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
    return d;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Monomial, std::int64_t>> out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty() && out.back().first == m)
            out.back().second = checked_add(out.back().second, c);
        else
            out.emplace_back(m, c);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return t.second == 0; }), out.end());
    terms_ = std::move(out);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            const auto c = checked_add(terms_[i].second, o.terms_[j].second);
            if (c != 0) r.terms_.emplace_back(terms_[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial neg = o;
    for (auto& t : neg.terms_) t.second = -t.second;
    return *this + neg;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.terms_.emplace_back(add_monomials(m1, m2), checked_mul(c1, c2));
    r.normalize();
    return r;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& args) const {
    Polynomial result;
    for (const auto& [m, c] : terms_) {
        Polynomial prod = constant(c);
        for (std::size_t v = 0; v < max_variables; ++v) {
            const unsigned e = exponent(m, v);
            if (e == 0) continue;
            if (v >= args.size()) throw std::out_of_range("compose: missing argument polynomial");
            for (unsigned k = 0; k < e; ++k) prod = prod * args[v];
        }
        result += prod;
    }
    return result;
}

std::int64_t Polynomial::evaluate(const std::vector<std::int64_t>& env) const {
    std::int64_t sum = 0;
    for (const auto& [m, c] : terms_) {
        std::int64_t prod = c;
        for (std::size_t v = 0; v < max_variables; ++v) {
            const unsigned e = exponent(m, v);
            if (e == 0) continue;
            if (v >= env.size()) throw std::out_of_range("evaluate: unbound variable");
            for (unsigned k = 0; k < e; ++k) prod = checked_mul(prod, env[v]);
        }
        sum = checked_add(sum, prod);
    }
    return sum;
}

bool Polynomial::non_negative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest degree first, constant last.
    auto sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const auto da = monomial_degree(a.first), db = monomial_degree(b.first);
        if (da != db) return da > db;
        return a.first < b.first;
    });
    for (const auto& [m, c] : sorted) {
        std::int64_t mag = c;
        if (first) {
            if (c < 0) {
                os << "-";
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        first = false;
        std::vector<std::string> factors;
        for (std::size_t v = 0; v < max_variables; ++v)
            for (unsigned k = 0; k < exponent(m, v); ++k)
                factors.push_back(v < names.size() ? names[v] : "x" + std::to_string(v + 1));
        if (factors.empty() || mag != 1) factors.insert(factors.begin(), std::to_string(mag));
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

// PolyInterp -------------------------------------------------------------------

void PolyInterp::set(const Symbol& f, Polynomial p) { entries_.insert_or_assign(f, std::move(p)); }

const Polynomial* PolyInterp::find(const Symbol& f) const {
    auto it = entries_.find(f);
    return it == entries_.end() ? nullptr : &it->second;
}

Polynomial PolyInterp::interpret(const Term& t, std::vector<std::string>& vars) const {
    if (t.is_variable()) {
        auto it = std::find(vars.begin(), vars.end(), t.variable_name());
        if (it == vars.end()) {
            vars.push_back(t.variable_name());
            it = vars.end() - 1;
        }
        return Polynomial::variable(static_cast<std::size_t>(it - vars.begin()));
    }
    const Polynomial* p = find(t.symbol());
    if (!p) throw std::out_of_range("no interpretation for " + t.symbol().display_name());
    std::vector<Polynomial> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(interpret(a, vars));
    return p->compose(args);
}

std::int64_t PolyInterp::eval(const Term& t, const std::map<std::string, std::int64_t>& env) const {
    if (t.is_variable()) {
        auto it = env.find(t.variable_name());
        if (it == env.end()) throw std::out_of_range("unbound variable " + t.variable_name());
        return it->second;
    }
    const Polynomial* p = find(t.symbol());
    if (!p) throw std::out_of_range("no interpretation for " + t.symbol().display_name());
    std::vector<std::int64_t> args;
    for (const auto& a : t.args()) args.push_back(eval(a, env));
    return p->evaluate(args);
}

std::vector<std::string> PolyInterp::to_lines() const {
    std::vector<std::string> out;
    for (const auto& [f, p] : entries_) {
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= f.arity(); ++i) names.push_back("x" + std::to_string(i));
        std::string head = "[" + f.display_name() + "]";
        if (f.arity() > 0) {
            head += "(";
            for (std::size_t i = 0; i < names.size(); ++i) head += (i ? "," : "") + names[i];
            head += ")";
        }
        out.push_back(head + " = " + p.to_string(names));
    }
    return out;
}

} // namespace tcomb
