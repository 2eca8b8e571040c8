/*
Dependency graph estimation and queries.

Nodes are the DPs of S and W (strict first). An edge (d1, d2, i) says that
the i-th component of d1's right-hand side may rewrite, using the non-DP
rules, to an instance of d2's left-hand side. The estimate renames variables
apart and caps subterms that could be rewritten before unifying.
*/

#pragma once

#include "tcomb/derivation_tree.hpp"
#include "tcomb/problem.hpp"
#include "tcomb/rewrite.hpp"

#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace tcomb {

struct DepEdge {
    std::size_t from;
    std::size_t to;
    std::size_t component;   // 1-based
    friend bool operator==(const DepEdge&, const DepEdge&) = default;
};

class DepGraph {
public:
    DepGraph(std::vector<Rule> nodes, std::vector<DepEdge> edges);

    const std::vector<Rule>& nodes() const noexcept { return nodes_; }
    const std::vector<DepEdge>& edges() const noexcept { return edges_; }
    /// Throws std::out_of_range for an unknown label.
    std::size_t index_of(std::string_view label) const;
    bool contains(std::string_view label) const;

    LabelSet successors(std::string_view label) const;
    LabelSet predecessors(std::string_view label) const;
    bool has_edge(std::string_view from, std::string_view to) const;
    /// (from label, to label, component) triples.
    std::set<std::tuple<std::string, std::string, std::size_t>> labelled_edges() const;
    /// (from label, to label) pairs.
    std::set<std::pair<std::string, std::string>> edge_pairs() const;

private:
    std::vector<Rule> nodes_;
    std::vector<DepEdge> edges_;
};

/// Replaces by fresh variables every variable and every subterm whose
/// (capped) instance unifies with a renamed lhs of `rules`.
Term tcap(const Term& t, const Trs& rules);

/// The rhs components a DP contributes: arguments of a compound root,
/// otherwise the rhs itself.
std::vector<Term> dp_components(const Rule& dp);

DepGraph estimate_dg(const Problem& p);

LabelSet predecessors(const DepGraph& g, const LabelSet& dps);
LabelSet successors(const DepGraph& g, const LabelSet& dps);
bool is_forward_closed(const DepGraph& g, const LabelSet& dps);
/// Smallest forward-closed superset.
LabelSet forward_closure(const DepGraph& g, const LabelSet& dps);
/// Strongly connected components in reverse topological order (sinks first).
std::vector<LabelSet> sccs(const DepGraph& g);

/// l -> r_i for every component r_i of every DP, labelled by the DP label
/// followed by a, b, ...
Trs sep(const Trs& dps);

/// DP labels along a root-to-leaf path, with the component followed after
/// each DP but the last.
struct Chain {
    std::vector<std::string> dps;
    std::vector<std::size_t> components;
    friend auto operator<=>(const Chain&, const Chain&) = default;
};

/// Maximal chains of the tree: one per root-to-leaf path that applies a DP.
std::set<Chain> chains_of(const DerivationTree& tr, const Problem& p);
/// Consecutive DPs are joined by an edge carrying the followed component.
bool is_path(const DepGraph& g, const Chain& c);

std::string to_dot(const DepGraph& g);
std::string to_string(const Chain& c);

} // namespace tcomb
