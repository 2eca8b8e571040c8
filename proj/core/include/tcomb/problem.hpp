/*
Complexity problems <S/W, Q, T> and asymptotic bounds.

Dependency pairs are not kept in separate collections; a rule is a DP iff its
lhs root is marked, so the DP parts of S and W are views.
*/

#pragma once

#include "tcomb/rewrite.hpp"
#include "tcomb/term.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tcomb {

enum class StartKind { AllTerms, BasicTerms, MarkedBasicTerms, Explicit };

std::string_view to_string(StartKind kind);
std::optional<StartKind> start_kind_from_string(std::string_view s);

struct StartTerms {
    StartKind kind = StartKind::BasicTerms;
    std::vector<Term> terms;   // only for Explicit

    static StartTerms all() { return {StartKind::AllTerms, {}}; }
    static StartTerms basic() { return {StartKind::BasicTerms, {}}; }
    static StartTerms marked_basic() { return {StartKind::MarkedBasicTerms, {}}; }
    static StartTerms explicit_set(std::vector<Term> ts) { return {StartKind::Explicit, std::move(ts)}; }

    friend bool operator==(const StartTerms&, const StartTerms&) = default;
};

/// Constructor/defined partition of the unmarked signature. Marked and
/// compound symbols are derived from it.
struct Signature {
    std::vector<Symbol> constructors;
    std::vector<Symbol> defined;
    /// Symbol names printed infix, lowest precedence first.
    std::vector<std::string> infix;

    std::set<std::string> infix_set() const { return {infix.begin(), infix.end()}; }
    std::optional<Symbol> lookup(std::string_view name) const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

class Bound {
public:
    static Bound poly(unsigned degree) { return Bound(degree); }
    static Bound unknown() { return Bound(); }

    bool is_poly() const noexcept { return degree_.has_value(); }
    /// Precondition: is_poly().
    unsigned degree() const { return degree_.value(); }

    friend bool operator==(const Bound&, const Bound&) = default;

private:
    Bound() = default;
    explicit Bound(unsigned d) : degree_(d) {}
    std::optional<unsigned> degree_;
};

Bound bound_add(const Bound& a, const Bound& b);
Bound bound_mul(const Bound& a, const Bound& b);
/// `O(1)`, `O(n^2)` or `?`.
std::string to_string(const Bound& b);

struct Problem {
    Trs strict;
    Trs weak;
    Trs q;
    StartTerms start;
    Signature signature;

    Trs strict_dps() const { return strict.dps(); }
    Trs weak_dps() const { return weak.dps(); }
    Trs strict_non_dps() const { return strict.non_dps(); }
    Trs weak_non_dps() const { return weak.non_dps(); }
    /// S followed by W.
    Trs all_rules() const { return strict + weak; }

    friend bool operator==(const Problem&, const Problem&) = default;
};

/// Marked basic start terms (or an explicit set of them), well-formed DPs (marked lhs root; rhs either
/// compound-rooted over non-compound arguments or free of compound symbols)
/// and no marked or compound symbols in the remaining rules.
bool is_dp_problem(const Problem& p);

/// Every lhs of S and W is an instance of some lhs of Q, which makes Q normal
/// forms normal forms of S and W.
bool is_innermost(const Problem& p);

/// Checks rules and start terms against the signature; returns a diagnostic
/// or nothing.
std::optional<std::string> check_well_formed(const Problem& p);

std::string to_string(const Problem& p);

} // namespace tcomb
