/*
Multivariate polynomials with integer coefficients, and polynomial
interpretations of function symbols over the naturals.

Variables are small indices (at most 16); a monomial packs the exponent of
variable i into bits 4i..4i+3, so exponents are limited to 15. Operations
exceeding either limit throw TooLarge.
*/

#pragma once

#include "tcomb/term.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tcomb {

class Polynomial {
public:
    using Monomial = std::uint64_t;
    static constexpr std::size_t max_variables = 16;

    Polynomial() = default;
    static Polynomial constant(std::int64_t c);
    static Polynomial variable(std::size_t index);
    /// c * x_0^e0 * x_1^e1 ...
    static Polynomial monomial(std::int64_t c, const std::vector<unsigned>& exponents);

    /// (monomial, coefficient) pairs sorted by monomial, no zero coefficients.
    const std::vector<std::pair<Monomial, std::int64_t>>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::int64_t constant_term() const;
    unsigned degree() const;
    /// Coefficient of the given monomial.
    std::int64_t coefficient(Monomial m) const;

    static unsigned exponent(Monomial m, std::size_t var) { return static_cast<unsigned>((m >> (4 * var)) & 0xF); }
    static unsigned monomial_degree(Monomial m);
    static Monomial monomial_of(const std::vector<unsigned>& exponents);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

    /// Replaces variable i by args[i].
    Polynomial compose(const std::vector<Polynomial>& args) const;
    std::int64_t evaluate(const std::vector<std::int64_t>& env) const;

    /// All coefficients non-negative.
    bool non_negative_coefficients() const;

    /// Rendering with the given variable names, e.g. `2*x1*x2 + x1 + 3`.
    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();
    std::vector<std::pair<Monomial, std::int64_t>> terms_;
};

/// Interpretation of each symbol as a polynomial over its argument positions
/// (variable i stands for argument i+1).
class PolyInterp {
public:
    void set(const Symbol& f, Polynomial p);
    const Polynomial* find(const Symbol& f) const;
    const std::map<Symbol, Polynomial>& entries() const noexcept { return entries_; }

    /// [t] as a polynomial over the variables of t, numbered by `vars`
    /// (extended with any new variable). Throws std::out_of_range for a
    /// symbol without interpretation.
    Polynomial interpret(const Term& t, std::vector<std::string>& vars) const;
    std::int64_t eval(const Term& t, const std::map<std::string, std::int64_t>& env) const;

    /// `[f](x1,x2) = x1 + x2 + 1`, one line per symbol.
    std::vector<std::string> to_lines() const;

    friend bool operator==(const PolyInterp&, const PolyInterp&) = default;

private:
    std::map<Symbol, Polynomial> entries_;
};

} // namespace tcomb
