#include "dgd_bound.hpp"

#include <doctest.h>

using namespace tcomb;

TEST_CASE("decomposition bound on mult trees") {
    const auto core = fx::mult_core();
    std::size_t trees = 0, with_lower = 0;
    for (const auto& start : enumerate_start_terms(core, 6)) {
        for (const auto& t : enumerate_derivation_trees(core, start, 14).trees) {
            const auto c = fx::dgd_count(core, t, {"b#"});
            CHECK(fx::dgd_inequality(c, 2));
            CHECK(fx::dgd_root_bound(c, 2));
            ++trees;
            with_lower += c.roots > 0;
        }
    }
    CHECK(trees > 100);
    CHECK(with_lower > 10);
}

TEST_CASE("largest tree matches the step oracle") {
    const auto core = fx::mult_core();
    const Term start = fx::term(core, "*#(s(s(0)),s(0))");
    const auto e = enumerate_derivation_trees(core, start, 20);
    REQUIRE_FALSE(e.truncated);
    std::size_t best = 0;
    for (const auto& t : e.trees) best = std::max(best, fx::dgd_count(core, t, {"b#"}).total);
    CHECK(OracleResult::exact(best) == strict_step_oracle(start, core.strict, core.weak, core.q, 20));
}
