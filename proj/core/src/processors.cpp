#include "tcomb/processors.hpp"

#include "tcomb/dp_transform.hpp"
#include "tcomb/errors.hpp"

#include <algorithm>
#include <iterator>

namespace tcomb {

namespace {

bool subset_of(const LabelSet& a, const LabelSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    LabelSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

LabelSet set_minus(const LabelSet& a, const LabelSet& b) {
    LabelSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

} // namespace

std::optional<ProcessorResult> proc_empty(const Problem& p) {
    if (!p.strict.empty()) return std::nullopt;
    return ProcessorResult{{}, Combinator::Constant, Bound::poly(0)};
}

std::optional<ProcessorResult> proc_complexity_pair(const Problem& p, const CPParams& params) {
    if (p.strict.empty()) return std::nullopt;
    const OrderPair op = make_order_pair(params.interp, p);
    if (check_complexity_pair(op, p, params.degree, params.coeff_max)) return std::nullopt;
    const Bound b = induced_bound(op, p);
    if (!b.is_poly()) return std::nullopt;
    return ProcessorResult{{}, Combinator::Constant, b};
}

std::optional<std::pair<ProcessorResult, CPParams>> find_complexity_pair(const Problem& p, unsigned degree,
                                                                        unsigned coeff_max,
                                                                        const SynthesisOptions& options) {
    if (p.strict.empty()) return std::nullopt;
    auto op = synthesize(p, degree, coeff_max, options);
    if (!op) return std::nullopt;
    CPParams params{degree, coeff_max, op->interp};
    auto result = proc_complexity_pair(p, params);
    if (!result) return std::nullopt;
    return std::make_pair(std::move(*result), std::move(params));
}

std::optional<ProcessorResult> proc_decompose(const Problem& p, const LabelSet& s1) {
    const LabelSet strict = p.strict.labels();
    if (s1.empty() || !subset_of(s1, strict) || s1.size() == strict.size()) return std::nullopt;
    const Trs part1 = p.strict.with_labels(s1);
    const Trs part2 = p.strict.without_labels(s1);
    Problem p1 = p, p2 = p;
    p1.strict = part1;
    p1.weak = part2 + p.weak;
    p2.strict = part2;
    p2.weak = part1 + p.weak;
    return ProcessorResult{{std::move(p1), std::move(p2)}, Combinator::Sum};
}

std::optional<ProcessorResult> proc_wdp(const Problem& p) {
    try {
        return ProcessorResult{{wdp_problem(p)}, Combinator::Identity};
    } catch (const NotApplicable&) {
        return std::nullopt;
    }
}

std::optional<ProcessorResult> proc_dt(const Problem& p) {
    try {
        return ProcessorResult{{dt_problem(p)}, Combinator::Identity};
    } catch (const NotApplicable&) {
        return std::nullopt;
    }
}

std::optional<ProcessorResult> proc_predecessor_estimation(const Problem& p, const LabelSet& s1) {
    if (!is_dp_problem(p) || s1.empty()) return std::nullopt;
    if (!subset_of(s1, p.strict_dps().labels())) return std::nullopt;
    const DepGraph g = estimate_dg(p);
    const LabelSet pre = predecessors(g, s1);
    for (const auto& d : pre)
        if (s1.count(d)) return std::nullopt;
    Problem out = p;
    out.strict = p.strict.without_labels(s1) + p.weak.with_labels(pre);
    out.weak = p.strict.with_labels(s1) + p.weak.without_labels(pre);
    return ProcessorResult{{std::move(out)}, Combinator::Identity};
}

std::optional<ProcessorResult> proc_remove_weak_suffix(const Problem& p, const LabelSet& w1) {
    if (!is_dp_problem(p) || w1.empty()) return std::nullopt;
    if (!std::all_of(p.strict.begin(), p.strict.end(), [](const Rule& r) { return r.is_dp(); }))
        return std::nullopt;
    if (!subset_of(w1, p.weak_dps().labels())) return std::nullopt;
    if (!is_forward_closed(estimate_dg(p), w1)) return std::nullopt;
    Problem out = p;
    out.weak = p.weak.without_labels(w1);
    return ProcessorResult{{std::move(out)}, Combinator::Identity};
}

std::optional<ProcessorResult> proc_dg_decomposition(const Problem& p, const LabelSet& s_down,
                                                     const LabelSet& w_down) {
    if (!is_dp_problem(p) || s_down.empty()) return std::nullopt;
    const LabelSet strict_dps = p.strict_dps().labels();
    const LabelSet weak_dps = p.weak_dps().labels();
    if (!subset_of(s_down, strict_dps) || !subset_of(w_down, weak_dps)) return std::nullopt;
    const LabelSet s_up = set_minus(strict_dps, s_down);
    const LabelSet w_up = set_minus(weak_dps, w_down);
    if (s_up.empty()) return std::nullopt;
    const DepGraph g = estimate_dg(p);
    const LabelSet down = set_union(s_down, w_down);
    if (!is_forward_closed(g, down)) return std::nullopt;
    // Predecessors from outside the lower part must be strict upper DPs.
    if (!subset_of(set_minus(predecessors(g, down), down), s_up)) return std::nullopt;
    try {
        Problem upper = p;
        upper.strict = p.strict.without_labels(s_down);
        upper.weak = p.weak.without_labels(w_down);
        Problem lower = p;
        lower.strict = p.strict.without_labels(s_up);
        const Trs separated = sep(p.strict.with_labels(s_up) + p.weak.with_labels(w_up));
        lower.weak = p.weak.with_labels(w_down) + separated + p.weak_non_dps();
        return ProcessorResult{{std::move(upper), std::move(lower)}, Combinator::Product};
    } catch (const std::invalid_argument&) {
        return std::nullopt;   // a separated label clashes with an existing one
    }
}

std::optional<ProcessorResult> apply_processor(ProcessorId id, const ProcessorParams& params, const Problem& p) {
    switch (id) {
    case ProcessorId::Empty:
        if (!std::holds_alternative<NoParams>(params)) return std::nullopt;
        return proc_empty(p);
    case ProcessorId::ComplexityPair:
        if (auto cp = std::get_if<CPParams>(&params)) return proc_complexity_pair(p, *cp);
        return std::nullopt;
    case ProcessorId::Decompose:
        if (auto s = std::get_if<SubsetParams>(&params)) return proc_decompose(p, s->labels);
        return std::nullopt;
    case ProcessorId::WeakDependencyPairs:
        if (!std::holds_alternative<NoParams>(params)) return std::nullopt;
        return proc_wdp(p);
    case ProcessorId::DependencyTuples:
        if (!std::holds_alternative<NoParams>(params)) return std::nullopt;
        return proc_dt(p);
    case ProcessorId::PredecessorEstimation:
        if (auto s = std::get_if<SubsetParams>(&params)) return proc_predecessor_estimation(p, s->labels);
        return std::nullopt;
    case ProcessorId::RemoveWeakSuffix:
        if (auto s = std::get_if<SubsetParams>(&params)) return proc_remove_weak_suffix(p, s->labels);
        return std::nullopt;
    case ProcessorId::DGDecomposition:
        if (auto d = std::get_if<DGDParams>(&params)) return proc_dg_decomposition(p, d->s_down, d->w_down);
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace tcomb
