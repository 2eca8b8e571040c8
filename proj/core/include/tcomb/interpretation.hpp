/*
Polynomial interpretations as complexity pairs.

[l] > [r] is decided by absolute positiveness of [l] - [r] - 1, and
[l] >= [r] of [l] - [r]. The strict order has to be monotone on the usable
positions of the strict rules; weak monotonicity is automatic over the
naturals.
*/

#pragma once

#include "tcomb/polynomial.hpp"
#include "tcomb/problem.hpp"

#include <chrono>
#include <optional>
#include <string>

namespace tcomb {

enum class Part { Strict, Weak };

struct OrderPair {
    PolyInterp interp;
    ReplacementMap mu_strict = ReplacementMap::full();
    ReplacementMap mu_weak = ReplacementMap::full();
};

/// mu_com when p is a DP problem and the selected rules are all DPs,
/// otherwise the full map.
ReplacementMap usable_replacement_map(const Problem& p, Part part);

/// Symbols of the problem that need an interpretation: every symbol of its
/// rules and start terms, the signature, and compounds used by DPs.
std::vector<Symbol> problem_symbols(const Problem& p);

bool orients_strictly(const PolyInterp& interp, const Rule& r);
bool orients_weakly(const PolyInterp& interp, const Rule& r);

/// S in > and W in >=.
bool check_orientation(const OrderPair& op, const Problem& p);

/// Every symbol f has a linear or square coefficient >= 1 on each position
/// in mu_strict(f).
bool check_monotonicity(const OrderPair& op, const Problem& p);

/// Shape restrictions: naturals only, constructors and compounds strongly
/// linear, degree of defined and marked symbols within `degree`.
std::optional<std::string> check_shape(const PolyInterp& interp, const Problem& p, unsigned degree,
                                       unsigned coeff_max);

/// Full complexity pair check: shape, coverage, monotonicity and orientation.
std::optional<std::string> check_complexity_pair(const OrderPair& op, const Problem& p, unsigned degree,
                                                 unsigned coeff_max);

struct SynthesisOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Deterministic search; degree must be 1 or 2 (std::invalid_argument
/// otherwise). Problems over all terms only get strongly linear
/// interpretations.
std::optional<OrderPair> synthesize(const Problem& p, unsigned degree, unsigned coeff_max,
                                    const SynthesisOptions& options = {});

/// Complexity induced on p by an oriented pair.
Bound induced_bound(const OrderPair& op, const Problem& p);

/// The pair with usable replacement maps of p around a given interpretation.
OrderPair make_order_pair(PolyInterp interp, const Problem& p);

} // namespace tcomb
