#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace tcomb;

TEST_CASE("parsing mult") {
    const auto p = fx::mult();
    CHECK(p.strict.labels() == fx::labels({"a", "b", "c", "d"}));
    CHECK(p.weak.empty());
    CHECK(p.q == p.strict);
    CHECK(p.start.kind == StartKind::BasicTerms);
    CHECK(to_string(*p.strict.find("d"), p.signature.infix_set()) == "d: s(x) * y -> y + (x * y)");
    CHECK(p.signature.lookup("s")->is_constructor());
    CHECK(p.signature.lookup("*")->is_defined());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_problem("(VAR x y) (RULES f(x) -> y)"), ParseError);
    CHECK_THROWS_AS(parse_problem("(VAR x) (RULES f(x) -> f(x, x))"), ArityMismatch);
    CHECK_THROWS_AS(parse_problem("(VAR x) (RULES f(x) -> x) (STRATEGY OUTERMOST)"), UndeclaredStrategy);
    CHECK_THROWS_AS(parse_problem("(VAR x) (RULES f(x) -> )"), ParseError);
    CHECK_THROWS_AS(parse_problem("(VAR x) (RULES x -> x)"), ParseError);
    CHECK_THROWS_AS(parse_problem("(BOGUS)"), ParseError);
    try {
        parse_problem("(VAR x)\n(RULES\n  f(x) -> g(x\n)");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("4:") != std::string::npos);
    }
    try {
        parse_problem("(VAR x)\n(RULES f(x) -> x\n  f(x, x) -> x)");
        FAIL("no error");
    } catch (const ArityMismatch& e) {
        CHECK(std::string(e.what()).rfind("3:", 0) == 0);
    }
}

TEST_CASE("edge cases") {
    const auto empty = parse_problem("(VAR) (RULES)");
    CHECK(empty.strict.empty());
    const auto c = parse_problem("(COMMENT anything ( nested ) here) (VAR x) (RULES f(x) ->= x)");
    CHECK(c.weak.size() == 1);
    CHECK(c.weak[0].label() == "a");
    CHECK(auto_label(0) == "a");
    CHECK(auto_label(25) == "z");
    CHECK(auto_label(26) == "aa");
    CHECK(auto_label(27) == "ab");
}

TEST_CASE("printing round trips") {
    for (const auto& p : {fx::mult(), fx::exponential(), fx::mult_dp(), fx::exp_core(), wdp_problem(fx::mult())}) {
        const auto text = print_problem(p);
        CHECK_MESSAGE(parse_problem(text) == p, text);
    }
    Problem ex = fx::mult();
    ex.start = StartTerms::explicit_set({fx::term(ex, "0")});
    CHECK_THROWS_AS(print_problem(ex), std::invalid_argument);
}

TEST_CASE("property: random problems round trip") {
    fx::TermGen gen(fx::mult_symbols(), 2, 4242u);
    std::uniform_int_distribution<int> n_rules(0, 4), coin(0, 1);
    int tested = 0;
    for (int i = 0; i < 200; ++i) {
        Problem p = fx::mult();
        p.strict = Trs{};
        p.weak = Trs{};
        const int n = n_rules(gen.rng());
        for (int k = 0; k < n; ++k) {
            Term l = gen(3);
            if (l.is_variable() || !l.symbol().is_defined()) continue;
            Term r = gen(3);
            bool ok = true;
            for (const auto& v : variables(r)) ok = ok && occurs(v, l);
            if (!ok) continue;
            Rule rule(l, r, auto_label(k));
            (coin(gen.rng()) ? p.strict : p.weak).add(rule);
        }
        p.q = coin(gen.rng()) ? p.strict + p.weak : Trs{};
        const auto text = print_problem(p);
        const auto back = parse_problem(text);
        CHECK(back.strict == p.strict);
        CHECK(back.weak == p.weak);
        CHECK(back.q.labels() == p.q.labels());
        ++tested;
    }
    CHECK(tested == 200);
}

TEST_CASE("prefix terms") {
    const auto p = fx::mult_dp();
    const Term t = parse_prefix_term("c_2(+#(y,*(x,y)),*#(x,y))", p.signature);
    CHECK(t.symbol().is_compound());
    CHECK(t.args()[0].symbol().is_marked());
    CHECK(t.args()[0].args()[0] == Term::variable("y"));
    CHECK_THROWS_AS(parse_prefix_term("*(x", p.signature), ProofFormatError);
    CHECK_THROWS_AS(parse_prefix_term("s(x,y)", p.signature), ProofFormatError);
}

TEST_CASE("proof json round trip") {
    const auto pt = default_strategy(fx::mult());
    const auto text = proof_to_json(pt);
    const auto back = parse_proof_json(text);
    CHECK(back == pt);
    CHECK(validate_proof(back).ok);
    CHECK(proof_to_json(back) == text);
    const auto j = nlohmann::json::parse(text);
    CHECK(j["schema"] == 1);
    CHECK(j["proof"]["conclusion"]["bound"] == 2);

    const auto open = default_strategy(fx::exponential());
    CHECK(parse_proof_json(proof_to_json(open, -1)) == open);

    CHECK_THROWS_AS(parse_proof_json("{"), ProofFormatError);
    CHECK_THROWS_AS(parse_proof_json(R"({"schema": 2, "proof": {}})"), ProofFormatError);
    auto bad = j;
    bad["proof"]["processor"] = "Magic";
    CHECK_THROWS_AS(parse_proof_json(bad.dump()), ProofFormatError);
}

TEST_CASE("tampered proofs are rejected") {
    const auto pt = default_strategy(fx::mult());
    auto j = nlohmann::json::parse(proof_to_json(pt));

    auto lowered = j;
    lowered["proof"]["conclusion"]["bound"] = 1;
    const auto v1 = validate_proof(parse_proof_json(lowered.dump()));
    CHECK_FALSE(v1.ok);
    CHECK(v1.diagnostic.find("root") != std::string::npos);

    auto dropped = j;
    auto& dgd = dropped["proof"]["premises"][0]["premises"][0]["premises"][0];
    REQUIRE(dgd["processor"] == "DGDecomposition");
    auto& weak = dgd["premises"][1]["conclusion"]["problem"]["weak"];
    nlohmann::json kept = nlohmann::json::array();
    for (const auto& r : weak)
        if (r["label"].get<std::string>().find('#') == std::string::npos) kept.push_back(r);
    REQUIRE(kept.size() < weak.size());
    weak = kept;
    const auto v2 = validate_proof(parse_proof_json(dropped.dump()));
    CHECK_FALSE(v2.ok);
    CHECK(v2.diagnostic.find("DGDecomposition at 1.1.1") != std::string::npos);
}

TEST_CASE("text proofs") {
    const auto text = proof_to_text(default_strategy(fx::mult()));
    CHECK(text.find("[root] DependencyTuples") != std::string::npos);
    CHECK(text.find("DGDecomposition") != std::string::npos);
    CHECK(text.find("O(n^2)") != std::string::npos);
}
