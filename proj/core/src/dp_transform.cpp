#include "tcomb/dp_transform.hpp"

#include "tcomb/errors.hpp"

namespace tcomb {

namespace {

std::string dp_label(const Rule& r) { return r.label().empty() ? std::string{} : r.label() + "#"; }

void constructor_context_holes(const Term& t, std::vector<Term>& out) {
    if (!t.is_variable() && t.symbol().is_constructor()) {
        for (const auto& a : t.args()) constructor_context_holes(a, out);
        return;
    }
    out.push_back(mark(t));
}

void defined_subterms(const Term& t, std::vector<Term>& out) {
    if (t.is_variable()) return;
    if (t.symbol().is_defined()) out.push_back(mark(t));
    for (const auto& a : t.args()) defined_subterms(a, out);
}

void require_plain(const Rule& r) {
    for (const Term* t : {&r.lhs(), &r.rhs()})
        if (contains_kind(*t, SymbolKind::Marked) || contains_kind(*t, SymbolKind::Compound))
            throw NotApplicable("rule " + to_string(r) + " already contains marked or compound symbols");
    if (!r.lhs().symbol().is_defined())
        throw NotApplicable("lhs root of " + to_string(r) + " is not a defined symbol");
}

void require_basic_start(const Problem& p) {
    if (p.start.kind != StartKind::BasicTerms)
        throw NotApplicable("start terms are not basic terms");
    for (const Trs* trs : {&p.strict, &p.weak})
        for (const auto& r : *trs) require_plain(r);
}

} // namespace

Rule wdp(const Rule& rule) {
    std::vector<Term> comps;
    constructor_context_holes(rule.rhs(), comps);
    return Rule(mark(rule.lhs()), com(std::move(comps)), dp_label(rule));
}

Rule dt(const Rule& rule) {
    std::vector<Term> comps;
    defined_subterms(rule.rhs(), comps);
    return Rule(mark(rule.lhs()), com(std::move(comps)), dp_label(rule));
}

Trs wdp(const Trs& rules) {
    Trs out;
    for (const auto& r : rules) out.add(wdp(r));
    return out;
}

Trs dt(const Trs& rules) {
    Trs out;
    for (const auto& r : rules) out.add(dt(r));
    return out;
}

Problem wdp_problem(const Problem& p) {
    require_basic_start(p);
    Problem out = p;
    out.strict = wdp(p.strict) + p.strict;
    out.weak = wdp(p.weak) + p.weak;
    out.start = StartTerms::marked_basic();
    return out;
}

Problem dt_problem(const Problem& p) {
    require_basic_start(p);
    if (!is_innermost(p)) throw NotApplicable("dependency tuples need an innermost problem");
    Problem out = p;
    out.strict = dt(p.strict);
    out.weak = dt(p.weak) + p.strict + p.weak;
    out.start = StartTerms::marked_basic();
    return out;
}

} // namespace tcomb
