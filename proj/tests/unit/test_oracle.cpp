#include "support.hpp"

#include <doctest.h>

using namespace tcomb;

// Expected heights come from tests/oracle/innermost_heights.py, an
// independent implementation.

TEST_CASE("derivation heights of small mult terms") {
    const auto p = fx::mult();
    CHECK(dh_oracle(fx::term(p, "+(s(0),0)"), p.strict, p.q, 10) == OracleResult::exact(2));
    CHECK(dh_oracle(fx::term(p, "*(s(0),s(0))"), p.strict, p.q, 10) == OracleResult::exact(4));
    CHECK(dh_oracle(fx::term(p, "0"), p.strict, p.q, 10) == OracleResult::exact(0));
    CHECK(dh_oracle(fx::term(p, "*(s(0),s(0))"), p.strict, p.q, 3) == OracleResult::at_least(3));
    CHECK(to_string(OracleResult::exact(4)) == "Exact(4)");
    CHECK(to_string(OracleResult::at_least(3)) == "AtLeast(3)");
}

TEST_CASE("runtime complexity of mult") {
    const auto p = fx::mult();
    const std::size_t expected[] = {0, 0, 1, 3, 5, 7, 10, 13, 17};
    for (std::size_t n = 1; n <= 9; ++n) CHECK(cc_oracle(p, n, 60) == OracleResult::exact(expected[n - 1]));
}

TEST_CASE("exp grows exponentially") {
    const auto p = fx::exponential();
    const Symbol e = *p.signature.lookup("e");
    const std::size_t expected[] = {1, 4, 8, 14, 24};
    for (unsigned k = 0; k <= 4; ++k)
        CHECK(dh_oracle(Term::apply(e, {fx::nat(p, k)}), p.strict, p.q, 200) == OracleResult::exact(expected[k]));
}

TEST_CASE("relative steps on the undefined-complexity system") {
    const auto p = parse_problem(R"(
        (VAR x)
        (CONSTRUCTORS bot/0)
        (RULES
          g(s(x)) -> g(x)
          f(x) ->= f(s(x))
          f(x) ->= g(x)
        ))");
    CHECK(strict_step_oracle(fx::term(p, "g(s(s(bot)))"), p.strict, p.weak, p.q, 20) == OracleResult::exact(2));
    for (std::size_t b = 1; b <= 12; ++b)
        CHECK(strict_step_oracle(fx::term(p, "f(bot)"), p.strict, p.weak, p.q, b) == OracleResult::at_least(b));
    CHECK(strict_step_oracle(fx::term(p, "f(bot)"), Trs{}, p.weak, p.q, 5) == OracleResult::exact(0));
}

TEST_CASE("start terms") {
    const auto p = fx::mult();
    CHECK(enumerate_start_terms(p, 2).empty());
    const auto three = enumerate_start_terms(p, 3);
    CHECK(three.size() == 2);   // 0+0, 0*0
    for (const auto& t : enumerate_start_terms(p, 6)) {
        CHECK(is_basic(t));
        CHECK(is_ground(t));
        CHECK(t.size() <= 6);
    }
    CHECK_THROWS_AS(enumerate_start_terms(p, 12, 10), TooLarge);
    CHECK(cc_oracle(p, 1, 50) == OracleResult::exact(0));

    Problem weak_only = p;
    weak_only.weak = p.strict;
    weak_only.strict = Trs{};
    CHECK(cc_oracle(weak_only, 5, 50) == OracleResult::exact(0));
}

TEST_CASE("property: oracle facts on random ground terms") {
    const auto p = fx::mult();
    fx::TermGen gen(fx::mult_symbols(), 0, 4242u);
    for (int i = 0; i < 150; ++i) {
        const Term t = gen.ground(3);
        const auto r = dh_oracle(t, p.strict, p.q, 30);
        // exact values are stable under a larger budget
        if (r.is_exact()) CHECK(dh_oracle(t, p.strict, p.q, 60) == r);
        // zero exactly on normal forms
        CHECK((r == OracleResult::exact(0)) == q_successors(t, p.strict, p.q).empty());
        // no weak rules: both oracles agree
        CHECK(strict_step_oracle(t, p.strict, Trs{}, p.q, 30) == r);
        // innermost derivations are unrestricted derivations
        const auto full = dh_oracle(t, p.strict, Trs{}, 60);
        if (r.is_exact() && full.is_exact()) CHECK(r.value() <= full.value());
    }
}
