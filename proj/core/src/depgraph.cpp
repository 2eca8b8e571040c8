#include "tcomb/depgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tcomb {

DepGraph::DepGraph(std::vector<Rule> nodes, std::vector<DepEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

std::size_t DepGraph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].label() == label) return i;
    throw std::out_of_range("no DP labelled " + std::string(label) + " in the graph");
}

bool DepGraph::contains(std::string_view label) const {
    return std::any_of(nodes_.begin(), nodes_.end(), [&](const Rule& r) { return r.label() == label; });
}

LabelSet DepGraph::successors(std::string_view label) const {
    const auto i = index_of(label);
    LabelSet out;
    for (const auto& e : edges_)
        if (e.from == i) out.insert(nodes_[e.to].label());
    return out;
}

LabelSet DepGraph::predecessors(std::string_view label) const {
    const auto i = index_of(label);
    LabelSet out;
    for (const auto& e : edges_)
        if (e.to == i) out.insert(nodes_[e.from].label());
    return out;
}

bool DepGraph::has_edge(std::string_view from, std::string_view to) const {
    if (!contains(from) || !contains(to)) return false;
    const auto i = index_of(from), j = index_of(to);
    return std::any_of(edges_.begin(), edges_.end(), [&](const DepEdge& e) { return e.from == i && e.to == j; });
}

std::set<std::tuple<std::string, std::string, std::size_t>> DepGraph::labelled_edges() const {
    std::set<std::tuple<std::string, std::string, std::size_t>> out;
    for (const auto& e : edges_) out.emplace(nodes_[e.from].label(), nodes_[e.to].label(), e.component);
    return out;
}

std::set<std::pair<std::string, std::string>> DepGraph::edge_pairs() const {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& e : edges_) out.emplace(nodes_[e.from].label(), nodes_[e.to].label());
    return out;
}

Term tcap(const Term& t, const Trs& rules) {
    if (t.is_variable()) return fresh_variable();
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(tcap(a, rules));
    Term u = Term::apply(t.symbol(), std::move(args));
    for (const auto& r : rules)
        if (unify_terms(u, rename_fresh(r.lhs()))) return fresh_variable();
    return u;
}

std::vector<Term> dp_components(const Rule& dp) { return com_components(dp.rhs()); }

DepGraph estimate_dg(const Problem& p) {
    std::vector<Rule> nodes;
    for (const auto& r : p.strict)
        if (r.is_dp()) nodes.push_back(r);
    for (const auto& r : p.weak)
        if (r.is_dp()) nodes.push_back(r);
    const Trs usable = p.strict_non_dps() + p.weak_non_dps();

    std::vector<DepEdge> edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto comps = dp_components(nodes[i]);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            const Term capped = tcap(comps[c], usable);
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (unify_terms(capped, rename_fresh(nodes[j].lhs()))) edges.push_back(DepEdge{i, j, c + 1});
        }
    }
    return DepGraph(std::move(nodes), std::move(edges));
}

LabelSet predecessors(const DepGraph& g, const LabelSet& dps) {
    LabelSet out;
    for (const auto& d : dps) {
        auto pre = g.predecessors(d);
        out.insert(pre.begin(), pre.end());
    }
    return out;
}

LabelSet successors(const DepGraph& g, const LabelSet& dps) {
    LabelSet out;
    for (const auto& d : dps) {
        auto succ = g.successors(d);
        out.insert(succ.begin(), succ.end());
    }
    return out;
}

bool is_forward_closed(const DepGraph& g, const LabelSet& dps) {
    const auto succ = successors(g, dps);
    return std::includes(dps.begin(), dps.end(), succ.begin(), succ.end());
}

LabelSet forward_closure(const DepGraph& g, const LabelSet& dps) {
    LabelSet out = dps;
    std::vector<std::string> todo(dps.begin(), dps.end());
    while (!todo.empty()) {
        const auto d = todo.back();
        todo.pop_back();
        for (const auto& s : g.successors(d))
            if (out.insert(s).second) todo.push_back(s);
    }
    return out;
}

std::vector<LabelSet> sccs(const DepGraph& g) {
    // Tarjan; emits components in reverse topological order.
    const std::size_t n = g.nodes().size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges()) adj[e.from].push_back(e.to);
    std::vector<long> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<LabelSet> out;
    long counter = 0;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (auto w : adj[v]) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            LabelSet comp;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.insert(g.nodes()[w].label());
            } while (w != v);
            out.push_back(std::move(comp));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    return out;
}

namespace {

std::string letter_suffix(std::size_t i) {
    std::string s;
    ++i;
    while (i > 0) {
        --i;
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i /= 26;
    }
    return s;
}

} // namespace

Trs sep(const Trs& dps) {
    Trs out;
    for (const auto& d : dps) {
        const auto comps = dp_components(d);
        for (std::size_t i = 0; i < comps.size(); ++i)
            out.add(Rule(d.lhs(), comps[i], d.label() + letter_suffix(i)));
    }
    return out;
}

namespace {

// cur.components has one entry per DP of cur.dps, except that the entry for
// the last DP is missing until a child of that DP is entered.
void emit(const Chain& cur, std::set<Chain>& out) {
    if (cur.dps.empty()) return;
    Chain c = cur;
    if (c.components.size() == c.dps.size()) c.components.pop_back();
    out.insert(std::move(c));
}

void collect_chains(const DerivationTree& tr, Chain& cur, std::set<Chain>& out) {
    if (!tr.rule) {
        emit(cur, out);
        return;
    }
    if (!tr.rule->is_dp()) {
        for (const auto& child : tr.children) collect_chains(*child, cur, out);
        if (tr.children.empty()) emit(cur, out);
        return;
    }
    cur.dps.push_back(tr.rule->label());
    if (tr.children.empty()) emit(cur, out);
    for (std::size_t i = 0; i < tr.children.size(); ++i) {
        cur.components.push_back(i + 1);
        collect_chains(*tr.children[i], cur, out);
        cur.components.pop_back();
    }
    cur.dps.pop_back();
}

} // namespace

std::set<Chain> chains_of(const DerivationTree& tr, const Problem&) {
    std::set<Chain> out;
    Chain cur;
    collect_chains(tr, cur, out);
    return out;
}

bool is_path(const DepGraph& g, const Chain& c) {
    if (c.dps.empty()) return true;
    if (c.components.size() + 1 != c.dps.size()) return false;
    for (const auto& d : c.dps)
        if (!g.contains(d)) return false;
    for (std::size_t k = 0; k + 1 < c.dps.size(); ++k) {
        const auto from = g.index_of(c.dps[k]), to = g.index_of(c.dps[k + 1]);
        const bool ok = std::any_of(g.edges().begin(), g.edges().end(), [&](const DepEdge& e) {
            return e.from == from && e.to == to && e.component == c.components[k];
        });
        if (!ok) return false;
    }
    return true;
}

std::string to_dot(const DepGraph& g) {
    std::ostringstream os;
    os << "digraph dg {\n";
    for (const auto& n : g.nodes()) os << "  \"" << n.label() << "\";\n";
    for (const auto& e : g.edges())
        os << "  \"" << g.nodes()[e.from].label() << "\" -> \"" << g.nodes()[e.to].label()
           << "\" [label=\"" << e.component << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string to_string(const Chain& c) {
    std::string s;
    for (std::size_t k = 0; k < c.dps.size(); ++k) {
        if (k) s += " -" + std::to_string(c.components[k - 1]) + "-> ";
        s += c.dps[k];
    }
    return s;
}

} // namespace tcomb
