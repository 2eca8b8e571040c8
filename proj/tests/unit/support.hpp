#pragma once

#include "tcomb/depgraph.hpp"
#include "tcomb/derivation_tree.hpp"
#include "tcomb/dp_transform.hpp"
#include "tcomb/errors.hpp"
#include "tcomb/interpretation.hpp"
#include "tcomb/oracle.hpp"
#include "tcomb/problem_io.hpp"
#include "tcomb/processors.hpp"
#include "tcomb/proof_io.hpp"
#include "tcomb/strategy.hpp"
#include "tcomb/validate.hpp"

#include <random>
#include <string>
#include <string_view>

namespace fx {

using namespace tcomb;

inline constexpr const char* mult_text = R"(
(VAR x y)
(INFIX + *)
(RULES
  0 + y -> y
  s(x) + y -> x + y
  0 * y -> 0
  s(x) * y -> y + (x * y)
)
(STRATEGY INNERMOST)
)";

inline constexpr const char* exp_text = R"(
(VAR x)
(RULES
  d(0) -> 0
  d(s(x)) -> s(s(d(x)))
  e(0) -> s(0)
  e(s(x)) -> d(e(x))
)
(STRATEGY INNERMOST)
)";

inline Problem mult() { return parse_problem(mult_text); }
inline Problem exponential() { return parse_problem(exp_text); }

// <DT(R) / R, R, marked basic>
inline Problem mult_dp() { return dt_problem(mult()); }
inline Problem exp_dp() { return dt_problem(exponential()); }

// Mult after removing the leaves a#, c#: <{b#, d#} / R>.
inline Problem mult_core() {
    Problem p = mult_dp();
    p.strict = p.strict.with_labels({"b#", "d#"});
    return p;
}

// Exp after removing the leaves a#, c#: <{b#, d#} / R>.
inline Problem exp_core() {
    Problem p = exp_dp();
    p.strict = p.strict.with_labels({"b#", "d#"});
    return p;
}

inline Term term(const Problem& p, std::string_view s) { return parse_prefix_term(s, p.signature); }

inline Rule rule(const Problem& p, std::string_view l, std::string_view r, std::string label) {
    return Rule(term(p, l), term(p, r), std::move(label));
}

inline Term nat(const Problem& p, unsigned k) {
    Term t = term(p, "0");
    const Symbol s = *p.signature.lookup("s");
    for (unsigned i = 0; i < k; ++i) t = Term::apply(s, {t});
    return t;
}

inline LabelSet labels(std::initializer_list<const char*> ls) { return LabelSet(ls.begin(), ls.end()); }

// Random terms over a signature, with variables x1..x<vars>.
class TermGen {
public:
    TermGen(std::vector<Symbol> symbols, std::size_t vars, std::uint32_t seed)
        : symbols_(std::move(symbols)), vars_(vars), rng_(seed) {}

    Term operator()(std::size_t depth) {
        std::uniform_int_distribution<std::size_t> pick(0, symbols_.size() + vars_ - 1);
        for (;;) {
            const std::size_t k = pick(rng_);
            if (k >= symbols_.size()) return Term::variable("x" + std::to_string(k - symbols_.size() + 1));
            const Symbol& f = symbols_[k];
            if (depth == 0 && f.arity() > 0) continue;
            std::vector<Term> args;
            for (std::size_t i = 0; i < f.arity(); ++i) args.push_back((*this)(depth - 1));
            return Term::apply(f, std::move(args));
        }
    }

    Term ground(std::size_t depth) {
        std::vector<Symbol> consts;
        for (const auto& f : symbols_)
            if (f.arity() == 0) consts.push_back(f);
        std::uniform_int_distribution<std::size_t> pick(0, symbols_.size() - 1);
        for (;;) {
            const Symbol& f = symbols_[pick(rng_)];
            if (depth == 0 && f.arity() > 0) continue;
            std::vector<Term> args;
            for (std::size_t i = 0; i < f.arity(); ++i) args.push_back(ground(depth - 1));
            return Term::apply(f, std::move(args));
        }
    }

    std::mt19937& rng() { return rng_; }

private:
    std::vector<Symbol> symbols_;
    std::size_t vars_;
    std::mt19937 rng_;
};

inline std::vector<Symbol> mult_symbols() {
    return {Symbol::constructor("0", 0), Symbol::constructor("s", 1), Symbol::defined("+", 2),
            Symbol::defined("*", 2)};
}

} // namespace fx
