#include "support.hpp"

#include <doctest.h>

using namespace tcomb;

using Edge = std::tuple<std::string, std::string, std::size_t>;

TEST_CASE("tcap") {
    const auto p = fx::mult();
    const Term t1 = tcap(fx::term(p, "*(x,y)"), p.strict);
    CHECK(t1.is_variable());
    const Term t2 = tcap(fx::term(p, "s(x)"), p.strict);
    REQUIRE_FALSE(t2.is_variable());
    CHECK(t2.symbol().name() == "s");
    CHECK(t2.args()[0].is_variable());
    CHECK(t2.args()[0] != Term::variable("x"));

    const Term t3 = tcap(fx::term(p, "+#(y,*(x,y))"), p.strict);
    REQUIRE_FALSE(t3.is_variable());
    CHECK(t3.symbol().display_name() == "+#");
    CHECK(t3.args()[0].is_variable());
    CHECK(t3.args()[1].is_variable());
    CHECK(t3.args()[0] != t3.args()[1]);
}

TEST_CASE("graph of mult") {
    const auto g = estimate_dg(fx::mult_dp());
    CHECK(g.nodes().size() == 4);
    // includes d# -> a# through y := 0 in the first component
    const std::set<Edge> expected{{"d#", "d#", 2}, {"d#", "b#", 1}, {"d#", "c#", 2}, {"b#", "b#", 1},
                                  {"b#", "a#", 1}, {"d#", "a#", 1}};
    CHECK(g.labelled_edges() == expected);

    CHECK(predecessors(g, {"a#", "c#"}) == fx::labels({"b#", "d#"}));
    CHECK(predecessors(g, {}).empty());
    CHECK(predecessors(g, {"d#"}) == fx::labels({"d#"}));
    CHECK(successors(g, {"b#"}) == fx::labels({"a#", "b#"}));
    CHECK_FALSE(is_forward_closed(g, {"d#"}));
    CHECK(is_forward_closed(g, {"a#", "b#", "c#", "d#"}));
    CHECK(forward_closure(g, {"b#"}) == fx::labels({"a#", "b#"}));

    const auto core = estimate_dg(fx::mult_core());
    CHECK(is_forward_closed(core, {"b#"}));
    CHECK(core.edge_pairs() == std::set<std::pair<std::string, std::string>>{{"d#", "d#"}, {"d#", "b#"}, {"b#", "b#"}});
}

TEST_CASE("graph of exp") {
    const auto g = estimate_dg(fx::exp_core());
    const std::set<Edge> expected{{"b#", "b#", 1}, {"d#", "d#", 2}, {"d#", "b#", 1}};
    CHECK(g.labelled_edges() == expected);
    const auto comps = sccs(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == fx::labels({"b#"}));
    CHECK(comps[1] == fx::labels({"d#"}));
}

TEST_CASE("graph without components") {
    auto p = fx::mult_dp();
    p.strict = p.strict.with_labels({"c#"});
    CHECK(estimate_dg(p).edges().empty());
}

TEST_CASE("edge labels are component indices") {
    for (const auto& p : {fx::mult_dp(), fx::exp_dp(), wdp_problem(fx::mult())}) {
        const auto g = estimate_dg(p);
        for (const auto& e : g.edges()) {
            CHECK(e.component >= 1);
            CHECK(e.component <= dp_components(g.nodes()[e.from]).size());
        }
        CHECK(g.labelled_edges() == estimate_dg(p).labelled_edges());
    }
}

TEST_CASE("separation") {
    const auto p = fx::mult_dp();
    const auto infix = p.signature.infix_set();
    const Trs s = sep(p.strict.with_labels({"d#"}));
    REQUIRE(s.size() == 2);
    CHECK(to_string(s[0], infix) == "d#a: s(x) *# y -> y +# (x * y)");
    CHECK(to_string(s[1], infix) == "d#b: s(x) *# y -> x *# y");
    CHECK(sep(p.strict.with_labels({"a#"})).empty());
    CHECK(sep(Trs{}).empty());
    for (const auto& r : sep(p.strict))
        for (const auto& v : variables(r.rhs())) CHECK(occurs(v, r.lhs()));
}

TEST_CASE("chains and paths") {
    const auto p = fx::mult_dp();
    const auto g = estimate_dg(p);
    CHECK(is_path(g, Chain{{"d#", "b#", "b#", "a#"}, {1, 1, 1}}));
    CHECK_FALSE(is_path(g, Chain{{"d#", "b#"}, {2}}));
    CHECK_FALSE(is_path(g, Chain{{"b#", "d#"}, {1}}));
    CHECK(to_string(Chain{{"d#", "b#"}, {1}}) == "d# -1-> b#");
    const auto leaf = DerivationTree::leaf(fx::term(p, "s(0)"));
    CHECK(chains_of(*leaf, p).empty());
}

TEST_CASE("dot output") {
    const auto dot = to_dot(estimate_dg(fx::exp_core()));
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("\"d#\" -> \"b#\" [label=\"1\"]") != std::string::npos);
}
