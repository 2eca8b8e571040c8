"""Independent innermost derivation heights for the mult and exp fixtures.

Terms are tuples (symbol, args...). Values printed here are frozen into the
C++ tests.
"""
from functools import lru_cache
import itertools

MULT = [
    (("+", ("0",), "y"), "y"),
    (("+", ("s", "x"), "y"), ("+", "x", "y")),
    (("*", ("0",), "y"), ("0",)),
    (("*", ("s", "x"), "y"), ("+", "y", ("*", "x", "y"))),
]
EXP = [
    (("d", ("0",)), ("0",)),
    (("d", ("s", "x")), ("s", ("s", ("d", "x")))),
    (("e", ("0",)), ("s", ("0",))),
    (("e", ("s", "x")), ("d", ("e", "x"))),
]


def match(pat, t, sub):
    if isinstance(pat, str):
        if pat in sub:
            return sub[pat] == t
        sub[pat] = t
        return True
    if pat[0] != t[0] or len(pat) != len(t):
        return False
    return all(match(p, a, sub) for p, a in zip(pat[1:], t[1:]))


def inst(t, sub):
    if isinstance(t, str):
        return sub[t]
    return (t[0],) + tuple(inst(a, sub) for a in t[1:])


def root_reducts(t, rules):
    out = []
    for l, r in rules:
        sub = {}
        if match(l, t, sub):
            out.append(inst(r, sub))
    return out


def is_nf(t, rules):
    return not root_reducts(t, rules) and all(is_nf(a, rules) for a in t[1:])


def successors(t, rules):
    out = []
    for i, a in enumerate(t[1:], 1):
        for b in successors(a, rules):
            out.append(t[:i] + (b,) + t[i + 1:])
    if all(is_nf(a, rules) for a in t[1:]):
        out.extend(root_reducts(t, rules))
    return out


def height(rules):
    @lru_cache(maxsize=None)
    def h(t):
        return max((1 + h(u) for u in successors(t, rules)), default=0)
    return h


def size(t):
    return 1 + sum(size(a) for a in t[1:])


def nat_terms(n):
    """Constructor terms over 0/0 and s/1 of size exactly n."""
    return [] if n < 1 else [nat(n - 1)]


def nat(k):
    t = ("0",)
    for _ in range(k):
        t = ("s", t)
    return t


def basic(symbols, n):
    out = []
    for f, ar in symbols:
        for split in itertools.product(range(1, n), repeat=ar):
            if 1 + sum(split) != n:
                continue
            for args in itertools.product(*(nat_terms(k) for k in split)):
                out.append((f,) + args)
    return out


def cc(rules, symbols, n):
    h = height(rules)
    return max((h(t) for m in range(1, n + 1) for t in basic(symbols, m)), default=0)


if __name__ == "__main__":
    hm = height(MULT)
    print("dh(s(0)*s(0)) =", hm(("*", nat(1), nat(1))))
    print("dh(s(0)+0) =", hm(("+", nat(1), nat(0))))
    print("mult cc:", [cc(MULT, [("+", 2), ("*", 2)], n) for n in range(1, 10)])
    he = height(EXP)
    print("exp dh(e(s^k 0)):", [he(("e", nat(k))) for k in range(0, 6)])
