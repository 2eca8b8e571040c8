#include "tcomb/interpretation.hpp"

#include "tcomb/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tcomb {

namespace {

struct Candidate {
    unsigned degree;
    unsigned weight;
    Polynomial poly;
};

// Enumerates coefficient vectors over 0..coeff_max.
void for_each_vector(std::size_t n, unsigned coeff_max, std::vector<unsigned>& cur,
                     const std::function<void(const std::vector<unsigned>&)>& f) {
    if (cur.size() == n) {
        f(cur);
        return;
    }
    for (unsigned c = 0; c <= coeff_max; ++c) {
        cur.push_back(c);
        for_each_vector(n, coeff_max, cur, f);
        cur.pop_back();
    }
}

std::vector<unsigned> unit(std::size_t arity, std::size_t i, unsigned e) {
    std::vector<unsigned> v(arity, 0);
    v[i] = e;
    return v;
}

std::vector<Polynomial> candidates_for(const Symbol& f, bool frozen, unsigned degree, unsigned coeff_max,
                                       const std::set<std::size_t>& monotone) {
    const std::size_t n = f.arity();
    std::vector<Candidate> out;
    if (frozen) {
        for (unsigned c = 0; c <= coeff_max; ++c) {
            Polynomial p = Polynomial::constant(c);
            for (std::size_t i = 0; i < n; ++i) p += Polynomial::variable(i);
            out.push_back({1, c, p});
        }
    } else {
        // Monomials: x_i, then x_i^2, then x_1*x_2 for binary symbols, then the constant.
        std::vector<std::vector<unsigned>> monomials;
        for (std::size_t i = 0; i < n; ++i) monomials.push_back(unit(n, i, 1));
        if (degree >= 2) {
            for (std::size_t i = 0; i < n; ++i) monomials.push_back(unit(n, i, 2));
            if (n == 2) monomials.push_back({1, 1});
        }
        monomials.push_back(std::vector<unsigned>(n, 0));
        std::vector<unsigned> cur;
        for_each_vector(monomials.size(), coeff_max, cur, [&](const std::vector<unsigned>& cs) {
            for (auto i : monotone) {
                const bool lin = cs[i - 1] > 0;
                const bool sq = degree >= 2 && cs[n + i - 1] > 0;
                if (!lin && !sq) return;
            }
            Polynomial p;
            unsigned d = 0, w = 0;
            for (std::size_t k = 0; k < monomials.size(); ++k) {
                if (cs[k] == 0) continue;
                p += Polynomial::monomial(cs[k], monomials[k]);
                w += cs[k];
                unsigned md = 0;
                for (auto e : monomials[k]) md += e;
                d = std::max(d, md);
            }
            out.push_back({d, w, std::move(p)});
        });
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.weight < b.weight;
    });
    std::vector<Polynomial> polys;
    polys.reserve(out.size());
    for (auto& c : out) polys.push_back(std::move(c.poly));
    return polys;
}

struct RuleCheck {
    const Rule* rule;
    bool strict;
    std::vector<std::map<std::string, std::int64_t>> samples;
};

// Points where [l] > [r] (or >=) must hold; failing at one of them rejects a
// candidate without expanding polynomials.
std::vector<std::map<std::string, std::int64_t>> sample_points(const Rule& r) {
    const auto vars = variables(r.lhs());
    std::vector<std::map<std::string, std::int64_t>> out;
    for (std::int64_t v : {0, 1, 3}) {
        std::map<std::string, std::int64_t> env;
        for (const auto& x : vars) env[x] = v;
        out.push_back(std::move(env));
    }
    for (const auto& x : vars) {
        std::map<std::string, std::int64_t> env;
        for (const auto& y : vars) env[y] = y == x ? 7 : 0;
        out.push_back(std::move(env));
    }
    return out;
}

bool passes_samples(const PolyInterp& interp, const RuleCheck& rc) {
    try {
        for (const auto& env : rc.samples) {
            const auto l = interp.eval(rc.rule->lhs(), env), r = interp.eval(rc.rule->rhs(), env);
            if (rc.strict ? l <= r : l < r) return false;
        }
    } catch (const TooLarge&) {
    }
    return true;
}

bool orients(const PolyInterp& interp, const RuleCheck& rc) {
    if (!passes_samples(interp, rc)) return false;
    return rc.strict ? orients_strictly(interp, *rc.rule) : orients_weakly(interp, *rc.rule);
}

class Search {
public:
    Search(const Problem& p, unsigned degree, unsigned coeff_max, const SynthesisOptions& options)
        : options_(options) {
        const bool all_terms = p.start.kind == StartKind::AllTerms;
        const ReplacementMap mu = usable_replacement_map(p, Part::Strict);

        // Weak non-DP rules, weak DPs, then strict rules.
        std::vector<RuleCheck> ordered;
        for (const auto& r : p.weak)
            if (!r.is_dp()) ordered.push_back({&r, false, sample_points(r)});
        for (const auto& r : p.weak)
            if (r.is_dp()) ordered.push_back({&r, false, sample_points(r)});
        for (const auto& r : p.strict) ordered.push_back({&r, true, sample_points(r)});

        std::map<Symbol, std::size_t> index;
        auto add_symbol = [&](const Symbol& f) {
            if (index.count(f)) return;
            index.emplace(f, symbols_.size());
            symbols_.push_back(f);
        };
        for (const auto& rc : ordered) {
            auto syms = function_symbols(rc.rule->lhs());
            for (const auto& f : function_symbols(rc.rule->rhs()))
                if (std::find(syms.begin(), syms.end(), f) == syms.end()) syms.push_back(f);
            std::stable_partition(syms.begin(), syms.end(),
                                  [](const Symbol& f) { return f.is_constructor() || f.is_compound(); });
            for (const auto& f : syms) add_symbol(f);
        }
        for (const auto& f : problem_symbols(p)) add_symbol(f);

        const std::size_t m = symbols_.size();
        ready_.resize(m);
        std::vector<std::set<std::size_t>> rule_symbols;
        for (const auto& rc : ordered) {
            std::set<std::size_t> ids;
            for (const auto& f : function_symbols(rc.rule->lhs())) ids.insert(index.at(f));
            for (const auto& f : function_symbols(rc.rule->rhs())) ids.insert(index.at(f));
            ready_[*ids.rbegin()].push_back(rc);
            rule_symbols.push_back(std::move(ids));
        }
        relevant_.resize(m + 1);
        for (std::size_t k = 0; k <= m; ++k) {
            std::set<std::size_t> rel;
            for (const auto& ids : rule_symbols)
                if (*ids.rbegin() >= k)
                    for (auto j : ids)
                        if (j < k) rel.insert(j);
            relevant_[k].assign(rel.begin(), rel.end());
        }
        for (const auto& f : symbols_) {
            const bool frozen = f.is_constructor() || f.is_compound() || all_terms;
            candidates_.push_back(candidates_for(f, frozen, degree, coeff_max, mu.positions(f)));
        }
        choice_.assign(m, 0);
    }

    std::optional<PolyInterp> run() {
        try {
            if (dfs(0)) return interp_;
        } catch (const Timeout&) {
        }
        return std::nullopt;
    }

private:
    struct Timeout {};

    bool dfs(std::size_t k) {
        if (k == symbols_.size()) return true;
        if (options_.deadline && (++ticks_ & 0xFF) == 0 && std::chrono::steady_clock::now() > *options_.deadline)
            throw Timeout{};
        std::vector<std::size_t> key;
        key.reserve(relevant_[k].size() + 1);
        key.push_back(k);
        for (auto j : relevant_[k]) key.push_back(choice_[j]);
        if (failed_.count(key)) return false;
        for (std::size_t c = 0; c < candidates_[k].size(); ++c) {
            choice_[k] = c;
            interp_.set(symbols_[k], candidates_[k][c]);
            bool ok = true;
            for (const auto& rc : ready_[k]) {
                ok = orients(interp_, rc);
                if (!ok) break;
            }
            if (ok && dfs(k + 1)) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

    SynthesisOptions options_;
    std::vector<Symbol> symbols_;
    std::vector<std::vector<Polynomial>> candidates_;
    std::vector<std::vector<RuleCheck>> ready_;
    std::vector<std::vector<std::size_t>> relevant_;
    std::vector<std::size_t> choice_;
    std::set<std::vector<std::size_t>> failed_;
    PolyInterp interp_;
    std::size_t ticks_ = 0;
};

} // namespace

std::optional<OrderPair> synthesize(const Problem& p, unsigned degree, unsigned coeff_max,
                                    const SynthesisOptions& options) {
    if (degree < 1 || degree > 2) throw std::invalid_argument("synthesis degree must be 1 or 2");
    Search search(p, degree, coeff_max, options);
    auto interp = search.run();
    if (!interp) return std::nullopt;
    OrderPair op = make_order_pair(std::move(*interp), p);
    // Shape, coverage and monotonicity checked once more on the final pair.
    if (check_complexity_pair(op, p, degree, coeff_max)) return std::nullopt;
    return op;
}

} // namespace tcomb
