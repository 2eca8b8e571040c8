#include "tcomb/proof.hpp"

namespace tcomb {

std::string_view to_string(ProcessorId id) {
    switch (id) {
    case ProcessorId::Empty: return "Empty";
    case ProcessorId::ComplexityPair: return "ComplexityPair";
    case ProcessorId::Decompose: return "Decompose";
    case ProcessorId::WeakDependencyPairs: return "WeakDependencyPairs";
    case ProcessorId::DependencyTuples: return "DependencyTuples";
    case ProcessorId::PredecessorEstimation: return "PredecessorEstimation";
    case ProcessorId::RemoveWeakSuffix: return "RemoveWeakSuffix";
    case ProcessorId::DGDecomposition: return "DGDecomposition";
    }
    return "?";
}

std::optional<ProcessorId> processor_from_string(std::string_view s) {
    for (auto id : {ProcessorId::Empty, ProcessorId::ComplexityPair, ProcessorId::Decompose,
                    ProcessorId::WeakDependencyPairs, ProcessorId::DependencyTuples,
                    ProcessorId::PredecessorEstimation, ProcessorId::RemoveWeakSuffix,
                    ProcessorId::DGDecomposition})
        if (to_string(id) == s) return id;
    return std::nullopt;
}

std::string_view to_string(Combinator c) {
    switch (c) {
    case Combinator::Identity: return "identity";
    case Combinator::Sum: return "sum";
    case Combinator::Product: return "product";
    case Combinator::Constant: return "constant";
    }
    return "?";
}

Bound combine(const ProcessorResult& r, const std::vector<Bound>& premises) {
    switch (r.combinator) {
    case Combinator::Constant: return r.constant;
    case Combinator::Identity: return premises.size() == 1 ? premises.front() : Bound::unknown();
    case Combinator::Sum: {
        Bound b = Bound::poly(0);
        for (const auto& p : premises) b = bound_add(b, p);
        return b;
    }
    case Combinator::Product: {
        Bound b = Bound::poly(0);
        for (const auto& p : premises) b = bound_mul(b, p);
        return b;
    }
    }
    return Bound::unknown();
}

ProofTree::ProofTree(Kind k, ProcessorId id, ProcessorParams params, Judgement j,
                     std::vector<ProofTree> premises, std::string note)
    : kind_(k), processor_(id), params_(std::move(params)), conclusion_(std::move(j)),
      premises_(std::move(premises)), note_(std::move(note)) {}

ProofTree ProofTree::axiom(Problem p) {
    return ProofTree(Kind::Axiom, ProcessorId::Empty, NoParams{}, Judgement{std::move(p), Bound::poly(0)}, {}, {});
}

ProofTree ProofTree::assumption(Judgement j, std::string note) {
    return ProofTree(Kind::Assumption, ProcessorId::Empty, NoParams{}, std::move(j), {}, std::move(note));
}

ProofTree ProofTree::inference(ProcessorId id, ProcessorParams params, Judgement conclusion,
                               std::vector<ProofTree> premises) {
    return ProofTree(Kind::Inference, id, std::move(params), std::move(conclusion), std::move(premises), {});
}

bool ProofTree::closed() const {
    if (kind_ == Kind::Assumption) return false;
    for (const auto& p : premises_)
        if (!p.closed()) return false;
    return true;
}

std::vector<ProcessorId> ProofTree::processors_preorder() const {
    std::vector<ProcessorId> out;
    if (kind_ == Kind::Inference) out.push_back(processor_);
    for (const auto& p : premises_) {
        auto sub = p.processors_preorder();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

} // namespace tcomb
