#include "tcomb/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcomb {

Rule::Rule(Term lhs, Term rhs, std::string label)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), label_(std::move(label)) {
    if (lhs_.is_variable())
        throw std::invalid_argument("rule lhs is a variable: " + to_string(lhs_));
    for (const auto& v : variables(rhs_))
        if (!occurs(v, lhs_))
            throw std::invalid_argument("variable " + v + " of the rhs does not occur in the lhs of " +
                                        to_string(lhs_) + " -> " + to_string(rhs_));
}

std::string to_string(const Rule& rule, const std::set<std::string>& infix, bool weak) {
    std::string s;
    if (!rule.label().empty()) s += rule.label() + ": ";
    s += to_string(rule.lhs(), infix);
    s += weak ? " ->= " : " -> ";
    s += to_string(rule.rhs(), infix);
    return s;
}

Trs::Trs(std::vector<Rule> rules) {
    for (auto& r : rules) add(std::move(r));
}

void Trs::add(Rule rule) {
    if (!rule.label().empty() && contains(rule.label()))
        throw std::invalid_argument("duplicate rule label " + rule.label());
    rules_.push_back(std::move(rule));
}

const Rule* Trs::find(std::string_view label) const {
    for (const auto& r : rules_)
        if (r.label() == label) return &r;
    return nullptr;
}

LabelSet Trs::labels() const {
    LabelSet out;
    for (const auto& r : rules_) out.insert(r.label());
    return out;
}

Trs Trs::filter(const std::function<bool(const Rule&)>& keep) const {
    Trs out;
    for (const auto& r : rules_)
        if (keep(r)) out.rules_.push_back(r);
    return out;
}

Trs Trs::dps() const {
    return filter([](const Rule& r) { return r.is_dp(); });
}

Trs Trs::non_dps() const {
    return filter([](const Rule& r) { return !r.is_dp(); });
}

Trs Trs::with_labels(const LabelSet& labels) const {
    return filter([&](const Rule& r) { return labels.count(r.label()) > 0; });
}

Trs Trs::without_labels(const LabelSet& labels) const {
    return filter([&](const Rule& r) { return labels.count(r.label()) == 0; });
}

Trs operator+(const Trs& a, const Trs& b) {
    Trs out = a;
    for (const auto& r : b) out.add(r);
    return out;
}

namespace {

bool root_matches_any(const Term& t, const Trs& q) {
    for (const auto& r : q)
        if (match_term(r.lhs(), t)) return true;
    return false;
}

// Returns whether t is a Q normal form; appends the steps of the subtree in
// preorder, with results expressed relative to t.
bool collect_steps(const Term& t, Position& pos, const std::vector<const Rule*>& rules,
                   const Trs& q, std::vector<Step>& out) {
    if (t.is_variable()) return true;
    const auto& args = t.args();
    std::vector<std::vector<Step>> below(args.size());
    bool all_nf = true;
    for (std::size_t i = 0; i < args.size(); ++i) {
        pos.push_back(i + 1);
        all_nf = collect_steps(args[i], pos, rules, q, below[i]) && all_nf;
        pos.pop_back();
    }
    if (all_nf) {
        for (const Rule* rule : rules) {
            auto sigma = match_term(rule->lhs(), t);
            if (sigma) out.push_back(Step{pos, rule, sigma->apply(rule->rhs())});
        }
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        for (auto& s : below[i]) {
            std::vector<Term> new_args = args;
            new_args[i] = std::move(s.result);
            s.result = Term::apply(t.symbol(), std::move(new_args));
            out.push_back(std::move(s));
        }
    }
    return all_nf && !root_matches_any(t, q);
}

} // namespace

bool is_q_normal_form(const Term& t, const Trs& q) {
    if (q.empty() || t.is_variable()) return true;
    for (const auto& a : t.args())
        if (!is_q_normal_form(a, q)) return false;
    return !root_matches_any(t, q);
}

std::vector<Step> q_steps(const Term& t, const std::vector<const Rule*>& rules, const Trs& q) {
    std::vector<Step> out;
    Position pos;
    collect_steps(t, pos, rules, q, out);
    return out;
}

std::vector<Step> q_successors(const Term& t, const Trs& r, const Trs& q) {
    std::vector<const Rule*> rules;
    for (const auto& rule : r) rules.push_back(&rule);
    return q_steps(t, rules, q);
}

} // namespace tcomb
