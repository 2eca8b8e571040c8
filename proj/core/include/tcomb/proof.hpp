/*
Judgements, processor parameters and complexity proofs.

An inference records everything needed to re-run its processor: the rule
subsets it acts on, or the interpretation for a complexity pair. The
validator replays each inference and compares the outcome with the stored
premises and bounds.
*/

#pragma once

#include "tcomb/polynomial.hpp"
#include "tcomb/problem.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tcomb {

enum class ProcessorId {
    Empty,
    ComplexityPair,
    Decompose,
    WeakDependencyPairs,
    DependencyTuples,
    PredecessorEstimation,
    RemoveWeakSuffix,
    DGDecomposition,
};

std::string_view to_string(ProcessorId id);
std::optional<ProcessorId> processor_from_string(std::string_view s);

enum class Combinator { Identity, Sum, Product, Constant };

std::string_view to_string(Combinator c);

struct NoParams {
    friend bool operator==(const NoParams&, const NoParams&) = default;
};

struct CPParams {
    unsigned degree = 1;
    unsigned coeff_max = 3;
    PolyInterp interp;
    friend bool operator==(const CPParams&, const CPParams&) = default;
};

/// Rule labels for Decompose (s1), PredecessorEstimation (s1) and
/// RemoveWeakSuffix (w1).
struct SubsetParams {
    LabelSet labels;
    friend bool operator==(const SubsetParams&, const SubsetParams&) = default;
};

struct DGDParams {
    LabelSet s_down;
    LabelSet w_down;
    friend bool operator==(const DGDParams&, const DGDParams&) = default;
};

using ProcessorParams = std::variant<NoParams, CPParams, SubsetParams, DGDParams>;

struct Judgement {
    Problem problem;
    Bound bound;
    friend bool operator==(const Judgement&, const Judgement&) = default;
};

struct ProcessorResult {
    std::vector<Problem> subproblems;
    Combinator combinator;
    /// Bound of a Constant combinator.
    Bound constant = Bound::poly(0);
};

/// The bound a combinator yields for the given premise bounds.
Bound combine(const ProcessorResult& r, const std::vector<Bound>& premises);

class ProofTree {
public:
    enum class Kind { Axiom, Assumption, Inference };

    /// Empty axiom over a problem with no strict rules.
    static ProofTree axiom(Problem p);
    /// Open leaf; `note` explains why it is open.
    static ProofTree assumption(Judgement j, std::string note = {});
    static ProofTree inference(ProcessorId id, ProcessorParams params, Judgement conclusion,
                               std::vector<ProofTree> premises);

    Kind kind() const noexcept { return kind_; }
    ProcessorId processor() const noexcept { return processor_; }
    const ProcessorParams& params() const noexcept { return params_; }
    const Judgement& conclusion() const noexcept { return conclusion_; }
    const std::vector<ProofTree>& premises() const noexcept { return premises_; }
    const std::string& note() const noexcept { return note_; }

    /// No Assumption leaves.
    bool closed() const;
    /// Processors of all inferences in preorder.
    std::vector<ProcessorId> processors_preorder() const;

    // Mutable access for tools that edit stored proofs.
    Judgement& mutable_conclusion() { return conclusion_; }
    std::vector<ProofTree>& mutable_premises() { return premises_; }
    ProcessorParams& mutable_params() { return params_; }

    friend bool operator==(const ProofTree&, const ProofTree&) = default;

private:
    ProofTree(Kind k, ProcessorId id, ProcessorParams params, Judgement j,
              std::vector<ProofTree> premises, std::string note);

    Kind kind_;
    ProcessorId processor_;
    ProcessorParams params_;
    Judgement conclusion_;
    std::vector<ProofTree> premises_;
    std::string note_;
};

} // namespace tcomb
