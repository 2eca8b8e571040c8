#include "support.hpp"

#include <doctest.h>

using namespace tcomb;

TEST_CASE("bound lattice") {
    const Bound u = Bound::unknown();
    CHECK(bound_add(Bound::poly(1), Bound::poly(2)) == Bound::poly(2));
    CHECK(bound_mul(Bound::poly(1), Bound::poly(1)) == Bound::poly(2));
    CHECK(bound_mul(Bound::poly(0), Bound::poly(3)) == Bound::poly(3));
    CHECK(bound_add(u, Bound::poly(0)) == u);
    CHECK(bound_mul(Bound::poly(2), u) == u);
    CHECK(to_string(Bound::poly(0)) == "O(1)");
    CHECK(to_string(Bound::poly(2)) == "O(n^2)");
    CHECK(to_string(u) == "?");
}

TEST_CASE("property: bound operations") {
    std::mt19937 rng(31337u);
    std::uniform_int_distribution<int> pick(-1, 4);
    auto draw = [&] {
        const int d = pick(rng);
        return d < 0 ? Bound::unknown() : Bound::poly(static_cast<unsigned>(d));
    };
    for (int i = 0; i < 500; ++i) {
        const Bound a = draw(), b = draw(), c = draw();
        CHECK(bound_add(a, b) == bound_add(b, a));
        CHECK(bound_mul(a, b) == bound_mul(b, a));
        CHECK(bound_add(bound_add(a, b), c) == bound_add(a, bound_add(b, c)));
        CHECK(bound_mul(bound_mul(a, b), c) == bound_mul(a, bound_mul(b, c)));
        CHECK(bound_mul(a, Bound::poly(0)) == a);
        if (a.is_poly() && b.is_poly()) {
            CHECK(bound_add(a, b).degree() >= a.degree());
            CHECK(bound_mul(a, b).degree() >= bound_add(a, b).degree());
        }
    }
}

TEST_CASE("problem classification") {
    const auto p = fx::mult();
    CHECK(is_innermost(p));
    CHECK_FALSE(is_dp_problem(p));
    CHECK_FALSE(check_well_formed(p));

    Problem full = p;
    full.q = Trs{};
    CHECK_FALSE(is_innermost(full));

    const auto dp = fx::mult_dp();
    CHECK(is_dp_problem(dp));
    CHECK(is_innermost(dp));
    CHECK(dp.strict_dps().size() == 4);
    CHECK(dp.weak_non_dps().size() == 4);
    CHECK(to_string(dp) == "<{a#, b#, c#, d#} / {a, b, c, d}, Q = {a, b, c, d}, marked-basic>");

    Problem unmarked_start = dp;
    unmarked_start.start = StartTerms::basic();
    CHECK_FALSE(is_dp_problem(unmarked_start));
}

TEST_CASE("well-formedness diagnostics") {
    auto p = fx::mult();
    p.strict.add(Rule(Term::apply(Symbol::defined("h", 1), {Term::variable("x")}), Term::variable("x"), "h"));
    CHECK(check_well_formed(p));
    auto q = fx::mult();
    q.weak.add(*q.strict.find("a"));
    CHECK(check_well_formed(q));
}

TEST_CASE("proof trees") {
    auto p = fx::mult();
    Problem empty = p;
    empty.weak = p.strict;
    empty.strict = Trs{};
    const ProofTree ax = ProofTree::axiom(empty);
    CHECK(ax.closed());
    CHECK(validate_proof(ax));
    CHECK(ax.conclusion().bound == Bound::poly(0));

    const ProofTree open = ProofTree::assumption(Judgement{p, Bound::unknown()}, "why");
    CHECK_FALSE(open.closed());
    const auto v = validate_proof(open);
    CHECK_FALSE(v);
    CHECK(v.diagnostic.find("Assumption at root") != std::string::npos);

    CHECK_FALSE(validate_proof(ProofTree::axiom(p)));
}

TEST_CASE("combinators") {
    ProcessorResult r{{}, Combinator::Sum};
    CHECK(combine(r, {Bound::poly(1), Bound::poly(2)}) == Bound::poly(2));
    r.combinator = Combinator::Product;
    CHECK(combine(r, {Bound::poly(1), Bound::poly(2)}) == Bound::poly(3));
    r.combinator = Combinator::Identity;
    CHECK(combine(r, {Bound::poly(1)}) == Bound::poly(1));
    r.combinator = Combinator::Constant;
    r.constant = Bound::poly(1);
    CHECK(combine(r, {}) == Bound::poly(1));
    CHECK(processor_from_string("DGDecomposition") == ProcessorId::DGDecomposition);
    CHECK_FALSE(processor_from_string("Bogus"));
}
