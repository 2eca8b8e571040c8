#include "tcomb/oracle.hpp"

#include "tcomb/errors.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace tcomb {

std::string to_string(const OracleResult& r) {
    return (r.is_exact() ? "Exact(" : "AtLeast(") + std::to_string(r.value()) + ")";
}

namespace {

struct Truncated {};

class Explorer {
public:
    Explorer(const Trs& s, const Trs& w, const Trs& q, std::size_t budget) : q_(q), budget_(budget) {
        for (const auto& r : s) rules_.push_back(&r);
        strict_count_ = rules_.size();
        for (const auto& r : w) rules_.push_back(&r);
    }

    // Longest derivation and maximal strict step count from t, or nullopt
    // when truncated.
    std::optional<std::size_t> strict_steps(const Term& t) {
        try {
            return explore(t, 0).strict;
        } catch (const Truncated&) {
            on_stack_.clear();
            return std::nullopt;
        }
    }

private:
    struct Info {
        std::size_t length = 0;
        std::size_t strict = 0;
    };

    bool is_strict(const Rule* r) const {
        for (std::size_t i = 0; i < strict_count_; ++i)
            if (rules_[i] == r) return true;
        return false;
    }

    Info explore(const Term& t, std::size_t depth) {
        if (auto it = memo_.find(t); it != memo_.end()) {
            if (depth + it->second.length > budget_) throw Truncated{};
            return it->second;
        }
        if (on_stack_.count(t)) throw Truncated{};
        auto steps = q_steps(t, rules_, q_);
        if (steps.empty()) return memo_.emplace(t, Info{}).first->second;
        if (depth >= budget_) throw Truncated{};
        on_stack_.insert(t);
        Info best;
        for (const auto& step : steps) {
            Info child = explore(step.result, depth + 1);
            best.length = std::max(best.length, child.length + 1);
            best.strict = std::max(best.strict, child.strict + (is_strict(step.rule) ? 1 : 0));
        }
        on_stack_.erase(t);
        return memo_.emplace(t, best).first->second;
    }

    std::vector<const Rule*> rules_;
    std::size_t strict_count_ = 0;
    const Trs& q_;
    std::size_t budget_;
    std::unordered_map<Term, Info, TermHash> memo_;
    std::unordered_set<Term, TermHash> on_stack_;
};

} // namespace

OracleResult strict_step_oracle(const Term& t, const Trs& s, const Trs& w, const Trs& q,
                                std::size_t budget) {
    if (s.empty()) return OracleResult::exact(0);
    Explorer ex(s, w, q, budget);
    auto n = ex.strict_steps(t);
    return n ? OracleResult::exact(*n) : OracleResult::at_least(budget);
}

OracleResult dh_oracle(const Term& t, const Trs& r, const Trs& q, std::size_t budget) {
    return strict_step_oracle(t, r, Trs{}, q, budget);
}

// start terms --------------------------------------------------------------------------

namespace {

class GroundTerms {
public:
    GroundTerms(std::vector<Symbol> symbols, std::size_t cap) : symbols_(std::move(symbols)), cap_(cap) {}

    // Ground terms of exactly the given size.
    const std::vector<Term>& of_size(std::size_t size) {
        if (auto it = by_size_.find(size); it != by_size_.end()) return it->second;
        std::vector<Term> out;
        for (const auto& f : symbols_) {
            if (size < 1 + f.arity()) continue;
            std::vector<Term> args;
            fill(f, size - 1, args, out);
        }
        return by_size_.emplace(size, std::move(out)).first->second;
    }

    // Every term f(t1..tn) of the given total size with ti from this family.
    void apply_root(const Symbol& f, std::size_t size, std::vector<Term>& out) {
        if (size < 1 + f.arity()) return;
        std::vector<Term> args;
        fill(f, size - 1, args, out);
    }

private:
    void fill(const Symbol& f, std::size_t remaining, std::vector<Term>& args, std::vector<Term>& out) {
        const std::size_t i = args.size();
        if (i == f.arity()) {
            if (remaining != 0) return;
            if (out.size() >= cap_) throw TooLarge("start term enumeration exceeds the cap");
            out.push_back(Term::apply(f, args));
            return;
        }
        const std::size_t rest = f.arity() - i - 1;   // each later argument needs size >= 1
        for (std::size_t k = 1; k + rest <= remaining; ++k) {
            for (const auto& a : of_size(k)) {
                args.push_back(a);
                fill(f, remaining - k, args, out);
                args.pop_back();
            }
        }
    }

    std::vector<Symbol> symbols_;
    std::size_t cap_;
    std::map<std::size_t, std::vector<Term>> by_size_;
};

} // namespace

std::vector<Term> constructor_ground_terms(const Signature& sig, std::size_t max_size, std::size_t cap) {
    GroundTerms gen(sig.constructors, cap);
    std::vector<Term> out;
    for (std::size_t k = 1; k <= max_size; ++k) {
        const auto& ts = gen.of_size(k);
        out.insert(out.end(), ts.begin(), ts.end());
        if (out.size() > cap) throw TooLarge("constructor term enumeration exceeds the cap");
    }
    return out;
}

std::vector<Term> enumerate_start_terms(const Problem& p, std::size_t max_size, std::size_t cap) {
    std::vector<Term> out;
    switch (p.start.kind) {
    case StartKind::Explicit:
        for (const auto& t : p.start.terms)
            if (t.size() <= max_size) out.push_back(t);
        return out;
    case StartKind::AllTerms: {
        std::vector<Symbol> all = p.signature.constructors;
        all.insert(all.end(), p.signature.defined.begin(), p.signature.defined.end());
        GroundTerms gen(all, cap);
        for (std::size_t k = 1; k <= max_size; ++k) {
            const auto& ts = gen.of_size(k);
            out.insert(out.end(), ts.begin(), ts.end());
            if (out.size() > cap) throw TooLarge("start term enumeration exceeds the cap");
        }
        return out;
    }
    case StartKind::BasicTerms:
    case StartKind::MarkedBasicTerms: {
        const bool marked = p.start.kind == StartKind::MarkedBasicTerms;
        GroundTerms gen(p.signature.constructors, cap);
        for (std::size_t k = 1; k <= max_size; ++k)
            for (const auto& f : p.signature.defined) {
                gen.apply_root(marked ? f.marked() : f, k, out);
                if (out.size() > cap) throw TooLarge("start term enumeration exceeds the cap");
            }
        return out;
    }
    }
    return out;
}

OracleResult cc_oracle(const Problem& p, std::size_t n, std::size_t budget, std::size_t cap) {
    if (p.strict.empty()) return OracleResult::exact(0);
    Explorer ex(p.strict, p.weak, p.q, budget);
    std::size_t best = 0;
    for (const auto& t : enumerate_start_terms(p, n, cap)) {
        auto v = ex.strict_steps(t);
        if (!v) return OracleResult::at_least(budget);
        best = std::max(best, *v);
    }
    return OracleResult::exact(best);
}

} // namespace tcomb
