/*
Rewrite rules, rule collections and Q-restricted rewriting.

A step t ->_{Q,R} u applies a rule l -> r at position p when t|_p is an
instance l.sigma and every argument of that redex is a Q normal form. With
Q empty this is plain rewriting; Q = R gives innermost rewriting.
*/

#pragma once

#include "tcomb/term.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace tcomb {

using LabelSet = std::set<std::string>;

class Rule {
public:
    /// Throws std::invalid_argument if lhs is a variable or rhs has a variable
    /// not occurring in lhs.
    Rule(Term lhs, Term rhs, std::string label = {});

    const Term& lhs() const noexcept { return lhs_; }
    const Term& rhs() const noexcept { return rhs_; }
    const std::string& label() const noexcept { return label_; }

    /// Dependency pairs are exactly the rules with a marked lhs root.
    bool is_dp() const { return lhs_.symbol().is_marked(); }

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    Term lhs_;
    Term rhs_;
    std::string label_;
};

std::string to_string(const Rule& rule, const std::set<std::string>& infix = {},
                      bool weak = false);

class Trs {
public:
    Trs() = default;
    explicit Trs(std::vector<Rule> rules);

    /// Throws std::invalid_argument on a duplicate non-empty label.
    void add(Rule rule);

    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }
    const Rule& operator[](std::size_t i) const { return rules_[i]; }
    auto begin() const noexcept { return rules_.begin(); }
    auto end() const noexcept { return rules_.end(); }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    const Rule* find(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label) != nullptr; }
    LabelSet labels() const;

    Trs filter(const std::function<bool(const Rule&)>& keep) const;
    Trs dps() const;
    Trs non_dps() const;
    Trs with_labels(const LabelSet& labels) const;
    Trs without_labels(const LabelSet& labels) const;

    friend bool operator==(const Trs&, const Trs&) = default;

private:
    std::vector<Rule> rules_;
};

/// Concatenation; throws on label clashes like Trs::add.
Trs operator+(const Trs& a, const Trs& b);

bool is_q_normal_form(const Term& t, const Trs& q);

struct Step {
    Position position;
    const Rule* rule;   // points into the rule collection passed in
    Term result;
};

/// One-step reducts of t under the given rules, positions in preorder and
/// rules in the given order.
std::vector<Step> q_steps(const Term& t, const std::vector<const Rule*>& rules, const Trs& q);
std::vector<Step> q_successors(const Term& t, const Trs& r, const Trs& q);

} // namespace tcomb
