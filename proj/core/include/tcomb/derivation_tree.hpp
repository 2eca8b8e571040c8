/*
Derivation trees of DP problems.

A node labelled t with rule l -> r has children t1..tn where
t ->_{Q,{l->r}} com(t1..tn); leaves carry no rule. Trees share subtrees.
*/

#pragma once

#include "tcomb/problem.hpp"
#include "tcomb/rewrite.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tcomb {

struct DerivationTree;
using TreePtr = std::shared_ptr<const DerivationTree>;

struct DerivationTree {
    Term label;
    std::optional<Rule> rule;
    std::vector<TreePtr> children;

    static TreePtr leaf(Term t);
    static TreePtr node(Term t, Rule r, std::vector<TreePtr> children);

    /// Number of rule applications.
    std::size_t size() const;
};

bool structurally_equal(const DerivationTree& a, const DerivationTree& b);

struct TreeEnumeration {
    std::vector<TreePtr> trees;
    /// Some derivation from the root is longer than the budget, so larger
    /// trees exist.
    bool truncated = false;
};

/// Every derivation tree of t with at most `budget` rule applications, using
/// all rules of S and W; ordered by size, then by steps (positions preorder,
/// rules in input order). Throws TooLarge beyond `cap` trees.
TreeEnumeration enumerate_derivation_trees(const Problem& p, const Term& t, std::size_t budget,
                                           std::size_t cap = 2'000'000);

std::size_t tree_size_restricted(const DerivationTree& tr, const LabelSet& rules);
std::size_t tree_size_restricted(const DerivationTree& tr, const Trs& rules);

/// Nodes applying a rule outside `rules` become leaves.
TreePtr trim(const TreePtr& tr, const LabelSet& rules);

/// Checks every node against the rewrite relation of p; returns a
/// diagnostic or nothing.
std::optional<std::string> check_derivation_tree(const Problem& p, const DerivationTree& tr);

/// Indented rendering, one node per line.
std::string to_string(const DerivationTree& tr, const std::set<std::string>& infix = {});

} // namespace tcomb
