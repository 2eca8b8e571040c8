/*
Brute-force derivation height oracles.

The search explores the whole reduction graph of a term under ->_{Q,S u W}
depth first, positions leftmost-outermost and rules in input order. Reaching
`budget` steps on a branch, or revisiting a term on the current branch,
truncates the search and yields AtLeast(budget).
*/

#pragma once

#include "tcomb/problem.hpp"
#include "tcomb/rewrite.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tcomb {

class OracleResult {
public:
    static OracleResult exact(std::size_t n) { return OracleResult(true, n); }
    static OracleResult at_least(std::size_t budget) { return OracleResult(false, budget); }

    bool is_exact() const noexcept { return exact_; }
    /// The exact value, or the budget when truncated.
    std::size_t value() const noexcept { return value_; }

    friend bool operator==(const OracleResult&, const OracleResult&) = default;

private:
    OracleResult(bool exact, std::size_t v) : exact_(exact), value_(v) {}
    bool exact_;
    std::size_t value_;
};

std::string to_string(const OracleResult& r);

OracleResult dh_oracle(const Term& t, const Trs& r, const Trs& q, std::size_t budget);

/// Maximal number of S steps over ->_{Q,S u W} derivations from t.
OracleResult strict_step_oracle(const Term& t, const Trs& s, const Trs& w, const Trs& q,
                                std::size_t budget);

/// Ground start terms of the problem up to the given size: defined (or marked)
/// roots over constructor ground arguments, all ground terms for derivational
/// problems, or the explicit set. Throws TooLarge beyond `cap` terms.
std::vector<Term> enumerate_start_terms(const Problem& p, std::size_t max_size,
                                        std::size_t cap = 100000);

/// Ground constructor terms up to the given size, in increasing size.
std::vector<Term> constructor_ground_terms(const Signature& sig, std::size_t max_size,
                                           std::size_t cap = 100000);

OracleResult cc_oracle(const Problem& p, std::size_t n, std::size_t budget, std::size_t cap = 100000);

} // namespace tcomb
