#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <map>

using namespace tcomb;

namespace {

std::map<std::string, std::size_t> rule_counts(const DerivationTree& t) {
    std::map<std::string, std::size_t> out;
    std::function<void(const DerivationTree&)> walk = [&](const DerivationTree& n) {
        if (n.rule) ++out[n.rule->label()];
        for (const auto& c : n.children) walk(*c);
    };
    walk(t);
    return out;
}

bool all_nodes(const DerivationTree& t, const std::function<bool(const DerivationTree&)>& pred) {
    if (!pred(t)) return false;
    for (const auto& c : t.children)
        if (!all_nodes(*c, pred)) return false;
    return true;
}

} // namespace

TEST_CASE("trivial enumerations") {
    const auto p = fx::mult_dp();
    const auto nf = enumerate_derivation_trees(p, fx::term(p, "s(0)"), 10);
    REQUIRE(nf.trees.size() == 1);
    CHECK(nf.trees[0]->size() == 0);
    CHECK_FALSE(nf.truncated);

    const auto zero = enumerate_derivation_trees(p, fx::term(p, "*#(s(0),s(0))"), 0);
    REQUIRE(zero.trees.size() == 1);
    CHECK(zero.trees[0]->children.empty());
    CHECK(zero.truncated);
}

TEST_CASE("the tree of s(s(0)) *# s(0)") {
    const auto p = fx::mult_dp();
    const auto trees = enumerate_derivation_trees(p, fx::term(p, "*#(s(s(0)),s(0))"), 20);
    const auto dps = p.strict_dps().labels();
    // two d# steps, and one b# step below the first component of the root
    const std::set<Chain> wanted{Chain{{"d#", "b#"}, {1}}, Chain{{"d#", "d#"}, {2}}};
    std::size_t found = 0;
    for (const auto& t : trees.trees) {
        if (chains_of(*t, p) != wanted) continue;
        const auto counts = rule_counts(*t);
        if (counts.count("a#") || counts.count("c#")) continue;
        ++found;
        CHECK(counts.at("d#") == 2);
        CHECK(counts.at("b#") == 1);
        CHECK(tree_size_restricted(*t, dps) == 3);
        CHECK(tree_size_restricted(*t, LabelSet{}) == 0);
        CHECK(tree_size_restricted(*t, p.strict) == 3);
        REQUIRE(t->children.size() == 2);
        CHECK(t->children[1]->rule->label() == "d#");
    }
    CHECK(found > 0);
}

TEST_CASE("enumerated trees are derivation trees") {
    const auto p = fx::mult_dp();
    for (const auto& start : enumerate_start_terms(p, 5)) {
        const auto e = enumerate_derivation_trees(p, start, 8);
        for (const auto& t : e.trees) {
            CHECK_FALSE(check_derivation_tree(p, *t));
            CHECK(t->size() <= 8);
            // compound symbols only above non-compound ones
            CHECK(all_nodes(*t, [](const DerivationTree& n) {
                for (const auto& a : n.label.is_variable() ? std::vector<Term>{} : n.label.args())
                    if (!a.is_variable() && a.symbol().is_compound()) return false;
                return !n.label.symbol().is_compound();
            }));
        }
    }
}

TEST_CASE("trees are distinct") {
    const auto p = fx::mult_dp();
    const auto e = enumerate_derivation_trees(p, fx::term(p, "*#(s(0),s(0))"), 12);
    for (std::size_t i = 0; i < e.trees.size(); ++i)
        for (std::size_t j = i + 1; j < e.trees.size(); ++j) CHECK_FALSE(structurally_equal(*e.trees[i], *e.trees[j]));
}

TEST_CASE("trimming") {
    const auto p = fx::mult_dp();
    const auto e = enumerate_derivation_trees(p, fx::term(p, "*#(s(s(0)),s(0))"), 14);
    const LabelSet all = p.all_rules().labels();
    const LabelSet kept = fx::labels({"b#", "d#", "a", "b", "c", "d"});
    Problem restricted = p;
    restricted.strict = p.strict.with_labels(kept);
    for (const auto& t : e.trees) {
        CHECK(structurally_equal(*trim(t, all), *t));
        const auto none = trim(t, {});
        CHECK(none->children.empty());
        CHECK(none->label == t->label);

        const auto cut = trim(t, kept);
        const auto counts = rule_counts(*cut);
        CHECK(counts.count("a#") == 0);
        CHECK(counts.count("c#") == 0);
        CHECK_FALSE(check_derivation_tree(restricted, *cut));
        CHECK(tree_size_restricted(*cut, kept) == tree_size_restricted(*t, kept));
    }
}

TEST_CASE("rendering") {
    const auto p = fx::mult_dp();
    const auto e = enumerate_derivation_trees(p, fx::term(p, "+#(s(0),0)"), 5);
    const auto text = to_string(*e.trees.back(), p.signature.infix_set());
    CHECK(text.find("s(0) +# 0") != std::string::npos);
    CHECK(text.find("[b#]") != std::string::npos);
}
