"""Independent reference computations, deliberately naive.

Nothing here reuses the package's enumeration or division code: type-A
paths are generated from up/down step words, characters come from the full
cartesian product of path sets, and B2 characters come from the Weyl
group sum or the dimension formula.
"""
from __future__ import annotations

import itertools
from collections import Counter
from math import comb


def type_a_paths(n: int, i: int, k: int) -> list[tuple[tuple[int, int], ...]]:
    """Lattice paths (0, i+k) -> (n+1, n+1-i+k) with unit up/down steps."""
    start, end = i + k, n + 1 - i + k
    out = []
    for downs in itertools.combinations(range(n + 1), n + 1 - i):
        y, pts = start, [(0, start)]
        for x in range(n + 1):
            y += 1 if x in downs else -1
            pts.append((x + 1, y))
        if y == end:
            out.append(tuple(pts))
    return out


def type_a_monomial(path) -> Counter:
    """Local minima give Y_{x,y}, local maxima give Y_{x,y}^{-1}."""
    mon: Counter = Counter()
    for (_, a), (x, y), (_, b) in zip(path, path[1:], path[2:]):
        if a == b == y + 1:
            mon[(x, y)] += 1
        elif a == b == y - 1:
            mon[(x, y)] -= 1
    return Counter({p: e for p, e in mon.items() if e})


def _above(p, q) -> bool:
    """Every shared column of p lies strictly above (smaller y than) q."""
    qcols: dict[int, list[int]] = {}
    for x, y in q:
        qcols.setdefault(x, []).append(y)
    for x, y in p:
        if x in qcols and y >= min(qcols[x]):
            return False
    return True


def brute_type_a_character(n: int, points) -> Counter:
    """Sum of monomials over all pairwise non-overlapping tuples, as a Counter of frozensets."""
    sets = [type_a_paths(n, i, k) for i, k in points]
    out: Counter = Counter()
    for tup in itertools.product(*sets):
        if all(_above(tup[s], tup[t]) for s in range(len(tup)) for t in range(s + 1, len(tup))):
            mon: Counter = Counter()
            for p in tup:
                mon.update(type_a_monomial(p))
            out[frozenset((pt, e) for pt, e in mon.items() if e)] += 1
    return out


def brute_character_from_paths(path_sets, height, monomial) -> Counter:
    """Generic brute force: path_sets are lists of point lists with (column, base, eps)."""
    out: Counter = Counter()
    for tup in itertools.product(*path_sets):
        ok = True
        for s in range(len(tup)):
            for t in range(s + 1, len(tup)):
                lower: dict[int, int] = {}
                for x, b, e in tup[t]:
                    h = height(b, e)
                    lower[x] = min(lower.get(x, h), h)
                if any(x in lower and height(b, e) >= lower[x] for x, b, e in tup[s]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            mon: Counter = Counter()
            for p in tup:
                mon.update(monomial(p))
            out[frozenset((pt, e) for pt, e in mon.items() if e)] += 1
    return out


def path_count_a(n: int, i: int) -> int:
    return comb(n + 1, i)


# -- B2 -------------------------------------------------------------------------------


def weyl_dim_b2(a: int, b: int) -> int:
    """Weyl dimension formula for B2 in the basis of fundamental weights."""
    l1, l2 = a + 1, b + 1
    return (l1 * l2 * (l1 + l2) * (2 * l1 + l2)) // (1 * 1 * 2 * 3)


def _reflect(w, root):
    """Reflection in the Euclidean model, e1/e2 coordinates."""
    x, y = w
    rx, ry = root
    c = 2 * (x * rx + y * ry) / (rx * rx + ry * ry)
    return (x - c * rx, y - c * ry)


def _to_e(a, b):
    # w1 = e1, w2 = (e1 + e2)/2
    return (a + b / 2, b / 2)


def _from_e(x, y):
    b = 2 * y
    return (round(x - y), round(b))


def weyl_group_numerator_b2(a: int, b: int) -> Counter:
    """sum_w sign(w) e^{w(lambda+rho)} generated by closure under reflections."""
    roots = [(1, -1), (0, 1)]
    start = (_to_e(a + 1, b + 1), 1)
    seen = {start[0]: 1}
    frontier = [start]
    while frontier:
        nxt = []
        for w, sgn in frontier:
            for r in roots:
                v = _reflect(w, r)
                v = (round(v[0] * 2) / 2, round(v[1] * 2) / 2)
                if v not in seen:
                    seen[v] = -sgn
                    nxt.append((v, -sgn))
        frontier = nxt
    return Counter({_from_e(*w): s for w, s in seen.items()})


def b2_character_by_division(a: int, b: int) -> Counter:
    """Weyl group sum divided by the Weyl denominator, by plain long division."""
    num = weyl_group_numerator_b2(a, b)
    den = weyl_group_numerator_b2(0, 0)
    # solve num = den * q by peeling the lexicographically largest term
    rem = Counter(num)
    q: Counter = Counter()
    lead_d = max(den)
    while any(rem.values()):
        lead = max(w for w, c in rem.items() if c)
        shift = (lead[0] - lead_d[0], lead[1] - lead_d[1])
        c = rem[lead] // den[lead_d]
        q[shift] += c
        for w, cw in den.items():
            t = (w[0] + shift[0], w[1] + shift[1])
            rem[t] -= c * cw
        rem = Counter({w: c for w, c in rem.items() if c})
    return q


# -- sl2 --------------------------------------------------------------------------------


def sl2_fundamental(k: int) -> list[Counter]:
    return [Counter({k: 1}), Counter({k + 2: -1})]


def sl2_weyl_brute(shifts) -> Counter:
    """Weyl module character: product of fundamental characters."""
    out: Counter = Counter()
    for choice in itertools.product(*(sl2_fundamental(k) for k in shifts)):
        mon: Counter = Counter()
        for c in choice:
            mon.update(c)
        out[frozenset((k, e) for k, e in mon.items() if e)] += 1
    return out


def sl2_string_brute(k: int, m: int) -> Counter:
    """Simple module of a q-string, as an A1 snake through the path oracle."""
    raw = brute_type_a_character(1, [(1, k + 2 * t) for t in range(m)])
    return Counter({frozenset((y, e) for (_, y), e in mon): c for mon, c in raw.items()})
