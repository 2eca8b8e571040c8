/*
Proof output.

Text: one block per node in preorder, headed by its path (`root`, `1`,
`1.2`, ...), with the processor, its parameters, interpretation lines, the
rules of the conclusion and the sub-judgements.

JSON (schema 1):

  { "schema": 1, "proof": NODE }
  NODE = { "kind": "axiom" | "assumption" | "inference",
           "processor": "DGDecomposition", "params": {...},
           "conclusion": { "problem": PROBLEM, "bound": 2 | null },
           "premises": [NODE, ...], "note": "..." }
  PROBLEM = { "signature": { "constructors": [{"name","arity"}], "defined": [...],
                             "infix": [...] },
              "strict" | "weak" | "q": [{"label","lhs","rhs"}],
              "start": { "kind": "basic", "terms": [...] } }

Terms are prefix strings such as `add#(s(x),y)`; an identifier is a
variable unless it names a signature symbol, its marked form or c_n.
*/

#pragma once

#include "tcomb/proof.hpp"

#include <string>
#include <string_view>

namespace tcomb {

std::string proof_to_text(const ProofTree& pt);

std::string proof_to_json(const ProofTree& pt, int indent = 2);
/// Throws ProofFormatError.
ProofTree parse_proof_json(std::string_view text);

/// Prefix term syntax used in JSON proofs. Throws ProofFormatError.
Term parse_prefix_term(std::string_view text, const Signature& sig);

} // namespace tcomb
