/*
Processors: side-condition-checked inference steps on complexity problems.

Each returns nothing when its side conditions fail; otherwise the generated
sub-problems and the combinator turning their bounds into the conclusion's.
apply_processor dispatches on a recorded processor id and parameters, and is
what the proof validator replays.
*/

#pragma once

#include "tcomb/depgraph.hpp"
#include "tcomb/interpretation.hpp"
#include "tcomb/problem.hpp"
#include "tcomb/proof.hpp"

#include <optional>

namespace tcomb {

std::optional<ProcessorResult> proc_empty(const Problem& p);

/// Checks the recorded interpretation; closes the problem with the bound it
/// induces.
std::optional<ProcessorResult> proc_complexity_pair(const Problem& p, const CPParams& params);
/// Synthesizes an interpretation; returns its parameters with the result.
std::optional<std::pair<ProcessorResult, CPParams>> find_complexity_pair(const Problem& p, unsigned degree,
                                                                        unsigned coeff_max,
                                                                        const SynthesisOptions& options = {});

std::optional<ProcessorResult> proc_decompose(const Problem& p, const LabelSet& s1);
std::optional<ProcessorResult> proc_wdp(const Problem& p);
std::optional<ProcessorResult> proc_dt(const Problem& p);
std::optional<ProcessorResult> proc_predecessor_estimation(const Problem& p, const LabelSet& s1);
std::optional<ProcessorResult> proc_remove_weak_suffix(const Problem& p, const LabelSet& w1);
std::optional<ProcessorResult> proc_dg_decomposition(const Problem& p, const LabelSet& s_down,
                                                     const LabelSet& w_down);

/// Dispatch; a parameter record of the wrong kind makes the processor
/// inapplicable.
std::optional<ProcessorResult> apply_processor(ProcessorId id, const ProcessorParams& params, const Problem& p);

} // namespace tcomb
