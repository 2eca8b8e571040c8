#include "tcomb/strategy.hpp"

#include "tcomb/depgraph.hpp"
#include "tcomb/processors.hpp"

#include <algorithm>

namespace tcomb {

namespace {

class Strategy {
public:
    explicit Strategy(const StrategyOptions& options) : options_(options) {
        if (options.timeout) deadline_ = std::chrono::steady_clock::now() + *options.timeout;
    }

    ProofTree solve(const Problem& p) {
        if (timed_out()) return open(p, "timeout");
        if (proc_empty(p)) return ProofTree::axiom(p);

        if (!is_dp_problem(p) && p.start.kind == StartKind::BasicTerms) {
            const bool innermost = is_innermost(p);
            const ProcessorId id = innermost ? ProcessorId::DependencyTuples : ProcessorId::WeakDependencyPairs;
            if (auto r = innermost ? proc_dt(p) : proc_wdp(p)) {
                ProofTree via_dp = infer(id, NoParams{}, p, *r, {solve(r->subproblems.front())});
                if (via_dp.closed()) return via_dp;
                if (auto direct = solve_plain(p); direct.closed()) return direct;
                return via_dp;
            }
        }
        if (!is_dp_problem(p)) return solve_plain(p);
        return solve_dp(p);
    }

private:
    bool timed_out() const { return deadline_ && std::chrono::steady_clock::now() > *deadline_; }

    static ProofTree open(const Problem& p, std::string note) {
        return ProofTree::assumption(Judgement{p, Bound::unknown()}, std::move(note));
    }

    static ProofTree infer(ProcessorId id, ProcessorParams params, const Problem& p, const ProcessorResult& r,
                           std::vector<ProofTree> premises) {
        std::vector<Bound> bounds;
        for (const auto& pt : premises) bounds.push_back(pt.conclusion().bound);
        Judgement j{p, combine(r, bounds)};
        return ProofTree::inference(id, std::move(params), std::move(j), std::move(premises));
    }

    unsigned max_degree() const { return std::min(options_.degree_cap, 2u); }

    std::optional<ProofTree> complexity_pair(const Problem& p, unsigned degree) {
        if (degree < 1 || degree > max_degree() || timed_out()) return std::nullopt;
        SynthesisOptions so;
        so.deadline = deadline_;
        auto found = find_complexity_pair(p, degree, options_.coeff_max, so);
        if (!found) return std::nullopt;
        return infer(ProcessorId::ComplexityPair, found->second, p, found->first, {});
    }

    // Strict DPs without strict successors whose predecessors are all strict.
    LabelSet pe_targets(const Problem& p, const DepGraph& g) const {
        const LabelSet strict = p.strict_dps().labels();
        LabelSet out;
        for (const auto& d : strict) {
            const auto succ = g.successors(d);
            const auto pre = g.predecessors(d);
            const bool leaf = std::none_of(succ.begin(), succ.end(), [&](const auto& s) { return strict.count(s); });
            const bool pre_strict = std::all_of(pre.begin(), pre.end(), [&](const auto& s) { return strict.count(s); });
            if (leaf && pre_strict) out.insert(d);
        }
        return out;
    }

    // Largest forward-closed set of weak DPs.
    static LabelSet removable_weak(const Problem& p, const DepGraph& g) {
        LabelSet w = p.weak_dps().labels();
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = w.begin(); it != w.end();) {
                const auto succ = g.successors(*it);
                if (std::all_of(succ.begin(), succ.end(), [&](const auto& s) { return w.count(s) > 0; })) {
                    ++it;
                } else {
                    it = w.erase(it);
                    changed = true;
                }
            }
        }
        return w;
    }

    ProofTree solve_dp(const Problem& p) {
        if (timed_out()) return open(p, "timeout");
        if (proc_empty(p)) return ProofTree::axiom(p);
        const DepGraph g = estimate_dg(p);

        if (const auto s1 = pe_targets(p, g); !s1.empty())
            if (auto r = proc_predecessor_estimation(p, s1))
                return infer(ProcessorId::PredecessorEstimation, SubsetParams{s1}, p, *r,
                             {solve_dp(r->subproblems.front())});
        if (const auto w1 = removable_weak(p, g); !w1.empty())
            if (auto r = proc_remove_weak_suffix(p, w1))
                return infer(ProcessorId::RemoveWeakSuffix, SubsetParams{w1}, p, *r,
                             {solve_dp(r->subproblems.front())});

        if (auto cp = complexity_pair(p, 1)) return *cp;

        for (const auto& [s_down, w_down] : dgd_candidates(p, g)) {
            if (timed_out()) break;
            auto r = proc_dg_decomposition(p, s_down, w_down);
            if (!r) continue;
            ProofTree upper = solve_dp(r->subproblems[0]);
            if (!upper.closed()) continue;
            ProofTree lower = solve_dp(r->subproblems[1]);
            if (!lower.closed()) continue;
            return infer(ProcessorId::DGDecomposition, DGDParams{s_down, w_down}, p, *r,
                         {std::move(upper), std::move(lower)});
        }

        for (unsigned d = 2; d <= max_degree(); ++d)
            if (auto cp = complexity_pair(p, d)) return *cp;
        return open(p, timed_out() ? "timeout" : "no processor applies");
    }

    std::vector<std::pair<LabelSet, LabelSet>> dgd_candidates(const Problem& p, const DepGraph& g) const {
        const LabelSet strict = p.strict_dps().labels();
        const LabelSet weak = p.weak_dps().labels();
        std::vector<LabelSet> downs;
        for (const auto& comp : sccs(g)) {
            LabelSet down = forward_closure(g, comp);
            if (std::find(downs.begin(), downs.end(), down) == downs.end()) downs.push_back(std::move(down));
        }
        std::stable_sort(downs.begin(), downs.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
        std::vector<std::pair<LabelSet, LabelSet>> out;
        for (const auto& down : downs) {
            LabelSet s_down, w_down;
            for (const auto& d : down) (strict.count(d) ? s_down : w_down).insert(d);
            if (s_down.empty() || s_down.size() == strict.size()) continue;
            out.emplace_back(std::move(s_down), std::move(w_down));
            if (out.size() >= options_.dgd_candidates) break;
        }
        return out;
    }

    // Complexity pairs, first on the whole problem, then on single strict
    // rules split off with Decompose.
    ProofTree solve_plain(const Problem& p) {
        if (timed_out()) return open(p, "timeout");
        if (proc_empty(p)) return ProofTree::axiom(p);
        for (unsigned d = 1; d <= max_degree(); ++d)
            if (auto cp = complexity_pair(p, d)) return *cp;
        for (const auto& rule : p.strict) {
            if (timed_out()) break;
            const LabelSet s1{rule.label()};
            auto r = proc_decompose(p, s1);
            if (!r) continue;
            std::optional<ProofTree> first;
            for (unsigned d = 1; d <= max_degree() && !first; ++d) first = complexity_pair(r->subproblems[0], d);
            if (!first) continue;
            ProofTree rest = solve_plain(r->subproblems[1]);
            if (!rest.closed()) continue;
            return infer(ProcessorId::Decompose, SubsetParams{s1}, p, *r, {std::move(*first), std::move(rest)});
        }
        return open(p, timed_out() ? "timeout" : "no processor applies");
    }

    StrategyOptions options_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

} // namespace

ProofTree default_strategy(const Problem& p, const StrategyOptions& options) {
    Strategy s(options);
    return s.solve(p);
}

} // namespace tcomb
