/*
Weak dependency pairs and dependency tuples.

A DP keeps the label of its rule with `#` appended.
*/

#pragma once

#include "tcomb/problem.hpp"
#include "tcomb/rewrite.hpp"

namespace tcomb {

/// l# -> com(r1#..rn#) where r = C[r1..rn] for the maximal constructor context C.
Rule wdp(const Rule& rule);
/// l# -> com(r1#..rn#) over all defined-rooted subterms of r, leftmost-outermost.
Rule dt(const Rule& rule);

Trs wdp(const Trs& rules);
Trs dt(const Trs& rules);

/// <WDP(S) u S / WDP(W) u W, Q, T#>. Throws NotApplicable unless the start
/// terms are basic and the rules are free of marked and compound symbols.
Problem wdp_problem(const Problem& p);
/// <DT(S) / DT(W) u S u W, Q, T#>; additionally requires is_innermost(p).
Problem dt_problem(const Problem& p);

} // namespace tcomb
