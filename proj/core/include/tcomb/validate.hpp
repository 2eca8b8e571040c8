#pragma once

#include "tcomb/proof.hpp"

#include <string>

namespace tcomb {

struct ValidationResult {
    bool ok = true;
    /// Names the first failing node, e.g. `DGDecomposition at 1.1.1: ...`.
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/// Replays every inference with its recorded parameters and compares the
/// generated sub-problems and combined bound with the recorded premises.
/// Open assumptions make the proof invalid.
ValidationResult validate_proof(const ProofTree& pt);

} // namespace tcomb
