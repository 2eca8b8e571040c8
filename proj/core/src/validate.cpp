#include "tcomb/validate.hpp"

#include "tcomb/processors.hpp"

namespace tcomb {

namespace {

std::string where(const ProofTree& pt, const std::string& path) {
    const std::string name = pt.kind() == ProofTree::Kind::Axiom        ? "Axiom"
                             : pt.kind() == ProofTree::Kind::Assumption ? "Assumption"
                                                                        : std::string(to_string(pt.processor()));
    return name + " at " + (path.empty() ? "root" : path);
}

ValidationResult fail(const ProofTree& pt, const std::string& path, const std::string& why) {
    return ValidationResult{false, where(pt, path) + ": " + why};
}

ValidationResult check(const ProofTree& pt, const std::string& path) {
    const Judgement& j = pt.conclusion();
    switch (pt.kind()) {
    case ProofTree::Kind::Assumption:
        return fail(pt, path, "open assumption" + (pt.note().empty() ? "" : " (" + pt.note() + ")"));
    case ProofTree::Kind::Axiom:
        if (!j.problem.strict.empty()) return fail(pt, path, "strict component is not empty");
        if (!(j.bound == Bound::poly(0))) return fail(pt, path, "axiom concludes " + to_string(j.bound));
        if (!pt.premises().empty()) return fail(pt, path, "axiom has premises");
        return {};
    case ProofTree::Kind::Inference: break;
    }
    const auto result = apply_processor(pt.processor(), pt.params(), j.problem);
    if (!result) return fail(pt, path, "side conditions do not hold for the recorded parameters");
    const auto& premises = pt.premises();
    if (result->subproblems.size() != premises.size())
        return fail(pt, path, "expected " + std::to_string(result->subproblems.size()) + " premises, found " +
                                  std::to_string(premises.size()));
    std::vector<Bound> bounds;
    for (std::size_t i = 0; i < premises.size(); ++i) {
        if (!(premises[i].conclusion().problem == result->subproblems[i]))
            return fail(pt, path, "premise " + std::to_string(i + 1) + " differs from the generated sub-problem " +
                                      to_string(result->subproblems[i]));
        bounds.push_back(premises[i].conclusion().bound);
    }
    const Bound expected = combine(*result, bounds);
    if (!(expected == j.bound))
        return fail(pt, path, "conclusion bound " + to_string(j.bound) + " does not equal the " +
                                  std::string(to_string(result->combinator)) + " of the premises, " +
                                  to_string(expected));
    for (std::size_t i = 0; i < premises.size(); ++i) {
        const std::string sub = path.empty() ? std::to_string(i + 1) : path + "." + std::to_string(i + 1);
        if (auto r = check(premises[i], sub); !r) return r;
    }
    return {};
}

} // namespace

ValidationResult validate_proof(const ProofTree& pt) { return check(pt, ""); }

} // namespace tcomb
