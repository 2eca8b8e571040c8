#pragma once

#include "support.hpp"

#include <algorithm>
#include <functional>

namespace fx {

struct DgdCount {
    std::size_t total = 0;      // strict DP applications in T
    std::size_t upper = 0;      // strict DP applications in T restricted to the upper rules
    std::size_t roots = 0;      // maximal subtrees rooted in a lower DP
    std::size_t lower_max = 0;  // most strict lower DP applications in one of them
};

// Counts for the decomposition of p into the DPs outside `down` and those in it.
inline DgdCount dgd_count(const Problem& p, const TreePtr& t, const LabelSet& down) {
    const LabelSet strict_dps = p.strict_dps().labels();
    LabelSet up_rules = p.all_rules().labels();
    for (const auto& l : down) up_rules.erase(l);
    LabelSet up_strict, down_strict;
    for (const auto& l : strict_dps) (down.count(l) ? down_strict : up_strict).insert(l);

    DgdCount c;
    c.total = tree_size_restricted(*t, strict_dps);
    c.upper = tree_size_restricted(*trim(t, up_rules), up_strict);
    std::function<void(const DerivationTree&)> walk = [&](const DerivationTree& n) {
        if (n.rule && down.count(n.rule->label())) {
            ++c.roots;
            c.lower_max = std::max(c.lower_max, tree_size_restricted(n, down_strict));
            return;
        }
        for (const auto& ch : n.children) walk(*ch);
    };
    walk(*t);
    return c;
}

inline bool dgd_inequality(const DgdCount& c, std::size_t k) {
    return c.total <= c.upper + std::max<std::size_t>(1, c.upper * k) * c.lower_max;
}

inline bool dgd_root_bound(const DgdCount& c, std::size_t k) {
    return c.roots <= std::max<std::size_t>(1, c.upper * k);
}

} // namespace fx
