#include "support.hpp"

#include <doctest.h>

using namespace tcomb;

namespace {

Symbol f2() { return Symbol::defined("f", 2); }
Symbol g1() { return Symbol::defined("g", 1); }
Symbol a0() { return Symbol::constructor("a", 0); }
Term x() { return Term::variable("x"); }
Term y() { return Term::variable("y"); }
Term a() { return Term::apply(a0()); }

} // namespace

TEST_CASE("symbols") {
    CHECK(f2().marked().display_name() == "f#");
    CHECK(f2().marked().unmarked() == f2());
    CHECK(Symbol::compound(3).display_name() == "c_3");
    CHECK_THROWS(Symbol::constructor("s", 1).marked());
    CHECK_THROWS(Symbol("c_2", 3, SymbolKind::Compound));
    CHECK(f2() != f2().marked());
}

TEST_CASE("term construction and equality") {
    CHECK_THROWS_AS(Term::apply(f2(), {x()}), ArityMismatch);
    const Term t = Term::apply(f2(), {Term::apply(g1(), {x()}), a()});
    CHECK(t.size() == 4);
    CHECK(t == Term::apply(f2(), {Term::apply(g1(), {x()}), a()}));
    CHECK(t != Term::apply(f2(), {Term::apply(g1(), {y()}), a()}));
    CHECK(x() < t);
    CHECK(to_string(t) == "f(g(x),a)");
}

TEST_CASE("positions") {
    const Term t = Term::apply(f2(), {Term::apply(g1(), {x()}), a()});
    const auto ps = positions(t);
    REQUIRE(ps.size() == 4);
    CHECK(ps[0].empty());
    CHECK(ps[1] == Position{1});
    CHECK(ps[2] == Position{1, 1});
    CHECK(ps[3] == Position{2});
    CHECK(subterm_at(t, {1, 1}) == x());
    CHECK(replace_at(t, {2}, y()) == Term::apply(f2(), {Term::apply(g1(), {x()}), y()}));
    CHECK_THROWS_AS(subterm_at(t, {3}), InvalidPosition);
    CHECK_THROWS_AS(subterm_at(t, {2, 1}), InvalidPosition);
    CHECK(to_string(Position{}) == "e");
    CHECK(to_string(Position{1, 2}) == "1.2");
}

TEST_CASE("variables and ground terms") {
    const Term t = Term::apply(f2(), {y(), Term::apply(g1(), {x()})});
    CHECK(variables(t) == std::vector<std::string>{"y", "x"});
    CHECK(occurs("x", t));
    CHECK_FALSE(occurs("z", t));
    CHECK_FALSE(is_ground(t));
    CHECK(is_ground(a()));
}

TEST_CASE("matching") {
    const Term pat = Term::apply(f2(), {x(), x()});
    CHECK(match_term(pat, Term::apply(f2(), {a(), a()})));
    CHECK_FALSE(match_term(pat, Term::apply(f2(), {a(), y()})));
    const auto s = match_term(Term::apply(g1(), {x()}), Term::apply(g1(), {Term::apply(g1(), {y()})}));
    REQUIRE(s);
    CHECK(s->lookup("x") == Term::apply(g1(), {y()}));
}

TEST_CASE("unification") {
    const auto s = unify_terms(Term::apply(f2(), {x(), Term::apply(g1(), {y()})}), Term::apply(f2(), {a(), Term::apply(g1(), {x()})}));
    REQUIRE(s);
    CHECK(s->apply(x()) == a());
    CHECK(s->apply(y()) == a());
    CHECK_FALSE(unify_terms(x(), Term::apply(g1(), {x()})));
    CHECK_FALSE(unify_terms(Term::apply(g1(), {x()}), a()));
}

TEST_CASE("fresh variables do not clash") {
    const Term t = Term::apply(f2(), {x(), x()});
    const Term r = rename_fresh(t);
    CHECK(r.args()[0] == r.args()[1]);
    CHECK(r.args()[0] != x());
    CHECK(r.args()[0].variable_name().front() == '?');
}

TEST_CASE("marking and compounds") {
    const Term t = Term::apply(f2(), {a(), x()});
    CHECK(mark(t).symbol() == f2().marked());
    CHECK(unmark(mark(t)) == t);
    CHECK(mark(x()) == x());
    CHECK(mark(a()) == a());
    CHECK(com({t}) == t);
    const Term c = com({t, a()});
    CHECK(c.symbol() == Symbol::compound(2));
    CHECK(com_components(c) == std::vector<Term>{t, a()});
    CHECK(com_components(t) == std::vector<Term>{t});
    CHECK(com({}).symbol() == Symbol::compound(0));
}

TEST_CASE("basic terms") {
    CHECK(is_basic(Term::apply(f2(), {a(), x()})));
    CHECK(is_basic(mark(Term::apply(f2(), {a(), x()}))));
    CHECK_FALSE(is_basic(Term::apply(f2(), {Term::apply(g1(), {x()}), a()})));
    CHECK_FALSE(is_basic(a()));
    CHECK_FALSE(is_basic(x()));
}

TEST_CASE("replacement maps") {
    const Term t = com({Term::apply(g1(), {x()}), a()});
    CHECK(mu_positions(ReplacementMap::full(), t).size() == positions(t).size());
    CHECK(mu_positions(ReplacementMap::compound_only(), t) == std::set<Position>{{}, {1}, {2}});
    CHECK(mu_positions(ReplacementMap::none(), t) == std::set<Position>{{}});
    ReplacementMap mu = ReplacementMap::none();
    mu.set(g1(), {1});
    CHECK(mu.contains(g1(), 1));
    CHECK_THROWS_AS(mu.set(g1(), {2}), std::invalid_argument);
}

TEST_CASE("infix printing") {
    const auto p = fx::mult();
    const auto infix = p.signature.infix_set();
    CHECK(to_string(fx::term(p, "+(s(x),*(x,y))"), infix) == "s(x) + (x * y)");
    CHECK(to_string(fx::term(p, "+#(x,y)"), infix) == "x +# y");
}

TEST_CASE("property: positions, replacement and substitution") {
    fx::TermGen gen(fx::mult_symbols(), 3, 20261016u);
    for (int i = 0; i < 300; ++i) {
        const Term t = gen(4);
        const auto ps = positions(t);
        CHECK(ps.size() == t.size());
        for (const auto& p : ps) CHECK(replace_at(t, p, subterm_at(t, p)) == t);

        Substitution s;
        for (const auto& v : variables(t)) s.bind(v, gen(2));
        const Term inst = s.apply(t);
        const auto m = match_term(t, inst);
        REQUIRE(m);
        CHECK(m->apply(t) == inst);
        const auto u = unify_terms(t, inst);
        if (u) CHECK(u->apply(t) == u->apply(inst));
    }
}

TEST_CASE("property: unifiers unify") {
    fx::TermGen gen(fx::mult_symbols(), 2, 7u);
    int unified = 0;
    for (int i = 0; i < 500; ++i) {
        const Term s = gen(3), t = rename_fresh(gen(3));
        if (auto u = unify_terms(s, t)) {
            ++unified;
            CHECK(u->apply(s) == u->apply(t));
        }
    }
    CHECK(unified > 20);
}
