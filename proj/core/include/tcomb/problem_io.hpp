/*
TPDB-style problem files.

  (VAR x y)
  (INFIX + *)                  binary operators, lowest precedence first
  (CONSTRUCTORS s 0)           optional partition; `f/2` gives an arity
  (DEFINED add/2)
  (RULES
    add(0, y) -> y
    [b] add(s(x), y) -> s(add(x, y))
    f(x) ->= g(x)
  )
  (STRATEGY INNERMOST)
  (Q add(0, y) -> y)           explicit restriction, overrides INNERMOST
  (STARTTERM CONSTRUCTOR-BASED | FULL | MARKED-CONSTRUCTOR-BASED)

Rules without a `[label]` are labelled a, b, ..., z, aa, ... by position
among all rules of the RULES section. `->=` rules are weak. A trailing `#`
marks a symbol, `c_n` is the n-ary compound symbol. An argument list
must follow its symbol directly: `f (x)` is two terms. Without a partition,
the lhs roots are defined and everything else is a constructor.
(COMMENT ...) sections are skipped.
*/

#pragma once

#include "tcomb/problem.hpp"

#include <string>
#include <string_view>

namespace tcomb {

/// Throws ParseError (with line and column), ArityMismatch or
/// UndeclaredStrategy.
Problem parse_problem(std::string_view text);

/// Inverse of parse_problem up to whitespace. Explicit start sets have no file
/// syntax; throws std::invalid_argument for them.
std::string print_problem(const Problem& p);

/// a, b, ..., z, aa, ab, ...
std::string auto_label(std::size_t index);

} // namespace tcomb
