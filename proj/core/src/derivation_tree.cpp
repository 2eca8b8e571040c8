#include "tcomb/derivation_tree.hpp"

#include "tcomb/errors.hpp"
#include "tcomb/oracle.hpp"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace tcomb {

TreePtr DerivationTree::leaf(Term t) {
    return std::make_shared<const DerivationTree>(DerivationTree{std::move(t), std::nullopt, {}});
}

TreePtr DerivationTree::node(Term t, Rule r, std::vector<TreePtr> children) {
    return std::make_shared<const DerivationTree>(DerivationTree{std::move(t), std::move(r), std::move(children)});
}

std::size_t DerivationTree::size() const {
    if (!rule) return 0;
    std::size_t n = 1;
    for (const auto& c : children) n += c->size();
    return n;
}

bool structurally_equal(const DerivationTree& a, const DerivationTree& b) {
    if (!(a.label == b.label) || a.rule != b.rule || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i])) return false;
    return true;
}

namespace {

class TreeEnumerator {
public:
    TreeEnumerator(const Problem& p, std::size_t cap) : all_(p.all_rules()), q_(p.q), cap_(cap) {
        for (const auto& r : all_) rules_.push_back(&r);
    }

    const std::vector<TreePtr>& trees_of(const Term& t, std::size_t k) {
        auto& slots = memo_[t];
        if (slots.size() <= k) slots.resize(k + 1);
        if (slots[k]) return *slots[k];
        std::vector<TreePtr> out;
        if (k == 0) {
            out.push_back(DerivationTree::leaf(t));
        } else {
            for (const auto& [rule, comps] : steps_of(t)) {
                std::vector<TreePtr> chosen;
                distribute(t, *rule, comps, 0, k - 1, chosen, out);
            }
        }
        // memo_ may have rehashed during recursion.
        auto& again = memo_[t];
        again[k] = std::make_shared<std::vector<TreePtr>>(std::move(out));
        return *again[k];
    }

private:
    using StepList = std::vector<std::pair<const Rule*, std::vector<Term>>>;

    const StepList& steps_of(const Term& t) {
        if (auto it = steps_.find(t); it != steps_.end()) return it->second;
        StepList list;
        for (auto& s : q_steps(t, rules_, q_)) {
            auto comps = com_components(s.result);
            bool dup = false;
            for (const auto& [r, c] : list)
                if (r == s.rule && c == comps) {
                    dup = true;
                    break;
                }
            if (!dup) list.emplace_back(s.rule, std::move(comps));
        }
        return steps_.emplace(t, std::move(list)).first->second;
    }

    void distribute(const Term& t, const Rule& rule, const std::vector<Term>& comps, std::size_t i,
                    std::size_t remaining, std::vector<TreePtr>& chosen, std::vector<TreePtr>& out) {
        if (i == comps.size()) {
            if (remaining != 0) return;
            if (++produced_ > cap_) throw TooLarge("derivation tree enumeration exceeds the cap");
            out.push_back(DerivationTree::node(t, rule, chosen));
            return;
        }
        const bool last = i + 1 == comps.size();
        for (std::size_t k = last ? remaining : 0; k <= remaining; ++k) {
            // Copy: trees_of may reallocate memo storage.
            const std::vector<TreePtr> subtrees = trees_of(comps[i], k);
            for (const auto& sub : subtrees) {
                chosen.push_back(sub);
                distribute(t, rule, comps, i + 1, remaining - k, chosen, out);
                chosen.pop_back();
            }
        }
    }

    Trs all_;
    std::vector<const Rule*> rules_;
    const Trs& q_;
    std::size_t cap_;
    std::size_t produced_ = 0;
    std::unordered_map<Term, std::vector<std::shared_ptr<std::vector<TreePtr>>>, TermHash> memo_;
    std::unordered_map<Term, StepList, TermHash> steps_;
};

} // namespace

TreeEnumeration enumerate_derivation_trees(const Problem& p, const Term& t, std::size_t budget,
                                           std::size_t cap) {
    TreeEnumeration result;
    TreeEnumerator en(p, cap);
    for (std::size_t k = 0; k <= budget; ++k) {
        const auto& ts = en.trees_of(t, k);
        result.trees.insert(result.trees.end(), ts.begin(), ts.end());
    }
    const Trs all = p.all_rules();
    result.truncated = !dh_oracle(t, all, p.q, budget).is_exact();
    return result;
}

std::size_t tree_size_restricted(const DerivationTree& tr, const LabelSet& rules) {
    std::size_t n = tr.rule && rules.count(tr.rule->label()) ? 1 : 0;
    for (const auto& c : tr.children) n += tree_size_restricted(*c, rules);
    return n;
}

std::size_t tree_size_restricted(const DerivationTree& tr, const Trs& rules) {
    return tree_size_restricted(tr, rules.labels());
}

TreePtr trim(const TreePtr& tr, const LabelSet& rules) {
    if (!tr->rule) return tr;
    if (!rules.count(tr->rule->label())) return DerivationTree::leaf(tr->label);
    std::vector<TreePtr> children;
    children.reserve(tr->children.size());
    for (const auto& c : tr->children) children.push_back(trim(c, rules));
    return DerivationTree::node(tr->label, *tr->rule, std::move(children));
}

std::optional<std::string> check_derivation_tree(const Problem& p, const DerivationTree& tr) {
    if (!tr.rule) {
        if (!tr.children.empty()) return "leaf " + to_string(tr.label) + " has children";
        return std::nullopt;
    }
    const Trs all = p.all_rules();
    const Rule* rule = all.find(tr.rule->label());
    if (!rule || !(*rule == *tr.rule)) return "rule " + tr.rule->label() + " is not a rule of the problem";
    std::vector<Term> labels;
    for (const auto& c : tr.children) labels.push_back(c->label);
    const Term target = com(labels);
    bool found = false;
    for (const auto& s : q_steps(tr.label, {rule}, p.q))
        if (s.result == target) {
            found = true;
            break;
        }
    if (!found)
        return "no " + rule->label() + " step from " + to_string(tr.label) + " to " + to_string(target);
    for (const auto& c : tr.children)
        if (auto e = check_derivation_tree(p, *c)) return e;
    return std::nullopt;
}

namespace {

void render(std::ostream& os, const DerivationTree& tr, const std::set<std::string>& infix, std::size_t depth) {
    os << std::string(2 * depth, ' ') << to_string(tr.label, infix);
    if (tr.rule) os << "   [" << tr.rule->label() << "]";
    os << '\n';
    for (const auto& c : tr.children) render(os, *c, infix, depth + 1);
}

} // namespace

std::string to_string(const DerivationTree& tr, const std::set<std::string>& infix) {
    std::ostringstream os;
    render(os, tr, infix, 0);
    return os.str();
}

} // namespace tcomb
