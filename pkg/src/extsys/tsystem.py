"""Three-term relations among snake modules, and the classical families inside them."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .errors import BadParams, FamilyMismatch, InputError, NotApplicable, NotPrime, SnakeTooShort
from .laurent import Character, YMonomial
from .lattice import Algebra
from .paths import path_monomial, snake_lowered_path
from .qchar import snake_character
from .snakes import (
    NeighbourPair, Snake, neighbour_heights_ok, neighbour_snakes, prime_decomposition, validate_snake,
)


@dataclass(frozen=True)
class RelationInstance:
    top: Snake
    left: Snake
    right: Snake
    bottom: Snake
    nbrs: NeighbourPair

    @property
    def x(self) -> Snake:
        return self.nbrs.x

    @property
    def y(self) -> Snake:
        return self.nbrs.y

    @property
    def alg(self) -> Algebra:
        return self.top.alg

    def participants(self) -> dict[str, Snake]:
        return {"L": self.left, "R": self.right, "T": self.top, "B": self.bottom,
                "X": self.x, "Y": self.y}

    def to_json(self) -> dict:
        out = {"algebra": str(self.alg)}
        out.update({k: s.to_json() for k, s in self.participants().items()})
        return out


def extended_relation(s: Snake) -> RelationInstance:
    if len(s) < 2:
        raise SnakeTooShort(f"need at least two points, got {len(s)}")
    if not s.prime:
        raise NotPrime(f"snake {s} is not prime")
    return RelationInstance(
        top=s,
        left=s.drop_last(),
        right=s.drop_first(),
        bottom=s.drop_first().drop_last(),
        nbrs=neighbour_snakes(s),
    )


# -- dominant monomial catalogs ---------------------------------------------------------


def dominant_catalog(s: Snake) -> tuple[list[YMonomial], list[YMonomial]]:
    """Expected dominant monomials of chi(L)chi(R) and of chi(T)chi(B).

    Entry R (1 <= R <= len) keeps the first R-1 paths highest and takes the
    snake-lowered path for the others; all are multiplied by mon(R).
    """
    alg = s.alg
    pts = s.points
    lowered = [path_monomial(snake_lowered_path(alg, a, b)) for a, b in zip(pts, pts[1:])]
    right = s.drop_first().monomial()
    lhs = []
    for R in range(1, len(pts) + 1):
        m = YMonomial.from_points(pts[: R - 1])
        for mon in lowered[R - 1:]:
            m = m * mon
        lhs.append(m * right)
    return lhs, lhs[1:]


@dataclass
class VerificationReport:
    identity_holds: bool
    lhs_dominant: list[tuple[YMonomial, int]]
    rhs1_dominant: list[tuple[YMonomial, int]]
    lhs_catalog_ok: bool
    rhs1_catalog_ok: bool
    xy_special: bool
    heights_ok: bool
    dims: tuple[int, int, int, int, int, int]
    notes: list[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return (self.identity_holds and self.lhs_catalog_ok and self.rhs1_catalog_ok
                and self.xy_special and self.heights_ok)

    def dims_line(self) -> str:
        l, r, t, b, x, y = self.dims
        return f"{l}*{r} = {t}*{b} + {x}*{y}"

    def to_json(self) -> dict:
        return {
            "identity_holds": self.identity_holds,
            "lhs_dominant": [{"m": m.to_json(), "c": c} for m, c in self.lhs_dominant],
            "rhs1_dominant": [{"m": m.to_json(), "c": c} for m, c in self.rhs1_dominant],
            "lhs_catalog_ok": self.lhs_catalog_ok,
            "rhs1_catalog_ok": self.rhs1_catalog_ok,
            "xy_special": self.xy_special,
            "heights_ok": self.heights_ok,
            "dims": list(self.dims),
            "verified": self.verified,
            "notes": list(self.notes),
        }


def _catalog_matches(found, expected) -> bool:
    return all(c == 1 for _, c in found) and sorted(m for m, _ in found) == sorted(expected)


def verify_relation(r: RelationInstance, cap: int | None = None) -> VerificationReport:
    ch = {k: snake_character(s, cap) for k, s in r.participants().items()}
    lr = ch["L"] * ch["R"]
    tb = ch["T"] * ch["B"]
    xy = ch["X"] * ch["Y"]
    lhs_dom = lr.dominant_terms()
    tb_dom = tb.dominant_terms()
    exp_lhs, exp_tb = dominant_catalog(r.top)
    rep = VerificationReport(
        identity_holds=lr == tb + xy,
        lhs_dominant=lhs_dom,
        rhs1_dominant=tb_dom,
        lhs_catalog_ok=len(lhs_dom) == len(r.top) and _catalog_matches(lhs_dom, exp_lhs),
        rhs1_catalog_ok=_catalog_matches(tb_dom, exp_tb),
        xy_special=xy.is_special(),
        heights_ok=neighbour_heights_ok(r.top, r.nbrs),
        dims=tuple(ch[k].dim() for k in "LRTBXY"),
    )
    for name, ok in (("identity", rep.identity_holds), ("L*R dominant catalog", rep.lhs_catalog_ok),
                     ("T*B dominant catalog", rep.rhs1_catalog_ok),
                     ("X*Y special", rep.xy_special), ("neighbour heights", rep.heights_ok)):
        if not ok:
            rep.notes.append(f"{name} check failed")
    return rep


@dataclass
class NonPrimeReport:
    identity_holds: bool
    factors_match: bool
    special: bool
    dims: tuple[int, int, int, int]

    @property
    def verified(self) -> bool:
        return self.identity_holds and self.factors_match

    def dims_line(self) -> str:
        l, r, t, b = self.dims
        return f"{l}*{r} = {t}*{b}"

    def to_json(self) -> dict:
        return {
            "identity_holds": self.identity_holds,
            "factors_match": self.factors_match,
            "special": self.special,
            "dims": dict(zip("LRTB", self.dims)),
            "verified": self.verified,
        }


def nonprime_report(s: Snake, cap: int | None = None) -> NonPrimeReport:
    if len(s) < 2:
        raise SnakeTooShort(f"need at least two points, got {len(s)}")
    if s.prime:
        raise NotApplicable(f"snake {s} is prime")
    parts = {"L": s.drop_last(), "R": s.drop_first(), "T": s, "B": s.drop_first().drop_last()}
    ch = {k: snake_character(v, cap) for k, v in parts.items()}
    lr = ch["L"] * ch["R"]

    def factors(*snakes):
        return sorted(f.points for x in snakes for f in prime_decomposition(x) if f.points)

    return NonPrimeReport(
        identity_holds=lr == ch["T"] * ch["B"],
        factors_match=factors(parts["L"], parts["R"]) == factors(parts["T"], parts["B"]),
        special=lr.is_special(),
        dims=tuple(ch[k].dim() for k in "LRTB"),
    )


def verify_nonprime(s: Snake, cap: int | None = None) -> bool:
    """chi(L)chi(R) = chi(T)chi(B), with both sides built from the same prime factors.

    The product need not have a single dominant term: nested strings such as
    A2 (1,0),(1,4),(1,6) give a simple tensor product with two.
    """
    return nonprime_report(s, cap).verified


# -- families ---------------------------------------------------------------------------


class Family(str, Enum):
    KR = "KR"
    TWO_NODE = "TwoNode"
    TWO_NODE_TILDE = "TwoNodeTilde"
    A_MIN_AFF = "AMinAff"
    A_MIN_AFF_TILDE = "AMinAffTilde"
    B_MIN_AFF = "BMinAff"
    B_MIN_AFF_TILDE = "BMinAffTilde"
    B_WRAPPING = "BWrapping"


def _st(alg: Algebra, i: int, k: int, m: int) -> list[tuple[int, int]]:
    if not 1 <= i <= alg.rank:
        return []
    step = 2 * alg.r(i)
    return [(i, k + step * t) for t in range(m)]


def _chain(alg: Algebra, a: int, k: int, ns: Sequence[int], direction: int):
    """Strings on nodes a, a+d, a+2d, ... with the minimal-affinization shift rule."""
    pts, kk, node = [], k, a
    for n in ns:
        pts += _st(alg, node, kk, n)
        nxt = node + direction
        ri, rj = alg.r(node), alg.r(nxt)
        kk += 2 * n * ri - ri + rj + max(ri, rj)
        node = nxt
    return pts, kk


def W(alg: Algebra, a: int, k: int, ns: Sequence[int]) -> YMonomial:
    return YMonomial.from_points(_chain(alg, a, k, ns, 1)[0])


def Wt(alg: Algebra, a: int, k: int, ns: Sequence[int]) -> YMonomial:
    return YMonomial.from_points(_chain(alg, a, k, ns, -1)[0])


def Ww(alg: Algebra, a: int, k: int, left: Sequence[int], spin: int, right: Sequence[int]) -> YMonomial:
    """Wrapping string product: nodes a..N-1, a spinor string of odd length, then N-1 downwards.

    ``right[0]`` is the string on node N-1, ``right[1]`` on node N-2, and so on.
    """
    n = alg.rank
    if len(left) != n - a:
        raise BadParams(f"wrapping data needs {n - a} strings before the spinor, got {len(left)}")
    pts, start = _chain(alg, a, k, list(left), 1)
    tail, _ = _chain(alg, n, start, [spin] + list(right), -1)
    return YMonomial.from_points(pts + tail)


def _floor2(x: int) -> int:
    return x // 2


def _s(x: int) -> int:
    return x % 2


Printed = dict  # keys T, L, R, B -> YMonomial; "XY" -> (YMonomial, YMonomial)


def _support(lam: Sequence[int]) -> tuple[int, int]:
    nz = [i + 1 for i, v in enumerate(lam) if v > 0]
    if not nz:
        raise BadParams("highest weight must be nonzero")
    return nz[0], nz[-1]


def _minaff_tables(alg: Algebra, family: Family, k: int, lam: Sequence[int]) -> Printed:
    N = alg.rank
    if len(lam) != N:
        raise BadParams(f"expected {N} weight coefficients, got {len(lam)}")
    if any(v < 0 for v in lam):
        raise BadParams("weight coefficients must be nonnegative")
    a, b = _support(lam)
    L = {i: lam[i - 1] for i in range(1, N + 1)}

    def seg(lo, hi):
        return [L[i] for i in range(lo, hi + 1)]

    def desc(hi, lo):
        return [L[i] for i in range(hi, lo - 1, -1)]

    if family is Family.A_MIN_AFF:
        if b - a < 1:
            raise BadParams("needs at least two nodes in the support")
        full = seg(a, b)
        minus_b = full[:-1] + [full[-1] - 1]
        minus_a = [full[0] - 1] + full[1:]
        both = [full[0] - 1] + full[1:-1] + [full[-1] - 1] if len(full) > 1 else [full[0] - 2]
        return {"T": W(alg, a, k, full), "L": W(alg, a, k, minus_b), "R": W(alg, a, k + 2, minus_a),
                "B": W(alg, a, k + 2, both),
                "XY": (W(alg, a - 1, k + 1, minus_b), W(alg, a + 1, k + 1, minus_a))}
    if family is Family.A_MIN_AFF_TILDE:
        if b - a < 1:
            raise BadParams("needs at least two nodes in the support")
        full = desc(b, a)
        minus_a = full[:-1] + [full[-1] - 1]
        minus_b = [full[0] - 1] + full[1:]
        both = [full[0] - 1] + full[1:-1] + [full[-1] - 1]
        return {"T": Wt(alg, b, k, full), "L": Wt(alg, b, k, minus_a), "R": Wt(alg, b, k + 2, minus_b),
                "B": Wt(alg, b, k + 2, both),
                "XY": (Wt(alg, b + 1, k + 1, minus_a), Wt(alg, b - 1, k + 1, minus_b))}
    if b - a < 2:
        raise BadParams("needs at least three nodes between the extreme support nodes")
    if family is Family.B_MIN_AFF:
        full = seg(a, b)
        minus_b = full[:-1] + [full[-1] - 1]
        minus_a = [full[0] - 1] + full[1:]
        both = [full[0] - 1] + full[1:-1] + [full[-1] - 1]
        sh = k + 2 * alg.r(a)
        if b < N:
            X = W(alg, a - 1, k + 2, minus_b)
        else:
            X = W(alg, a - 1, k + 2, seg(a, N - 1) + [_floor2(L[N] - 1)])
        if b < N - 1:
            Y = W(alg, a + 1, k + 2, minus_a)
        elif b == N - 1:
            Y = W(alg, a + 1, k + 2, [L[a] - 1] + seg(a + 1, N - 2) + [2 * L[N - 1]])
        else:
            Y = Ww(alg, a + 1, k + 2, [L[a] - 1] + seg(a + 1, N - 2), 2 * L[N - 1] + 1,
                   [_floor2(L[N])])
        return {"T": W(alg, a, k, full), "L": W(alg, a, k, minus_b), "R": W(alg, a, sh, minus_a),
                "B": W(alg, a, sh, both), "XY": (X, Y)}
    if family is Family.B_MIN_AFF_TILDE:
        full = desc(b, a)
        minus_a = full[:-1] + [full[-1] - 1]
        minus_b = [full[0] - 1] + full[1:]
        both = [full[0] - 1] + full[1:-1] + [full[-1] - 1]
        sh = k + 2 * alg.r(b)
        if b < N - 1:
            X = Wt(alg, b + 1, k + 2, minus_a)
        elif b == N - 1:
            X = Wt(alg, N, k + 1, [2 * L[N - 1]] + desc(N - 2, a + 1) + [L[a] - 1])
        else:
            X = Ww(alg, N - 1, k + 1 + 2 * _s(L[N]), [_floor2(L[N])], 2 * L[N - 1] + 1,
                   desc(N - 2, a + 1) + [L[a] - 1])
        if b < N:
            Y = Wt(alg, b - 1, k + 2, minus_b)
        else:
            Y = Wt(alg, N - 1, k + 1 + 2 * _s(L[N] - 1), [_floor2(L[N] - 1)] + desc(N - 1, a))
        return {"T": Wt(alg, b, k, full), "L": Wt(alg, b, k, minus_a), "R": Wt(alg, b, sh, minus_b),
                "B": Wt(alg, b, sh, both), "XY": (X, Y)}
    raise AssertionError(family)


def _kr_table(alg: Algebra, i: int, k: int, m: int) -> Printed:
    N = alg.rank
    alg.check_node(i)
    if m < 2:
        raise BadParams("KR relations need m >= 2")
    st = lambda j, kk, mm: W(alg, j, kk, [mm])  # noqa: E731
    sh = k + 2 * alg.r(i)
    out = {"T": st(i, k, m), "L": st(i, k, m - 1), "R": st(i, sh, m - 1), "B": st(i, sh, m - 2)}
    if not alg.is_b:
        out["XY"] = (st(i - 1, k + 1, m - 1), st(i + 1, k + 1, m - 1))
    elif i < N - 1:
        out["XY"] = (st(i - 1, k + 2, m - 1), st(i + 1, k + 2, m - 1))
    elif i == N - 1:
        out["XY"] = (st(N - 2, k + 2, m - 1), st(N, k + 1, 2 * m - 2))
    else:
        out["XY"] = (st(N - 1, k + 1, m // 2), st(N - 1, k + 3, (m - 1) // 2))
    return out


def _two_node_table(alg: Algebra, tilde: bool, i: int, k: int, m: int, n: int) -> Printed:
    N = alg.rank
    if m < 1 or n < 1:
        raise BadParams("two-node relations need m, n >= 1")
    if not tilde:
        if not 1 <= i <= N - 1:
            raise BadParams(f"node {i} has no right-hand neighbour in {alg}")
        w = lambda j, kk, p, q: W(alg, j, kk, [p, q])  # noqa: E731
        sh = k + 2 * alg.r(i)
        out = {"T": w(i, k, m, n), "L": w(i, k, m, n - 1), "R": w(i, sh, m - 1, n),
               "B": w(i, sh, m - 1, n - 1)}
        if not alg.is_b:
            out["XY"] = (w(i - 1, k + 1, m, n - 1), w(i + 1, k + 1, m - 1, n))
        elif i < N - 2:
            out["XY"] = (w(i - 1, k + 2, m, n - 1), w(i + 1, k + 2, m - 1, n))
        elif i == N - 2:
            # the second string of Y lands on the spinor node, so it doubles
            out["XY"] = (w(i - 1, k + 2, m, n - 1), w(i + 1, k + 2, m - 1, 2 * n))
        else:
            out["XY"] = (w(N - 2, k + 2, m, _floor2(n - 1)),
                         Wt(alg, N, k + 1, [2 * m - 1, _floor2(n)]))
        return out
    if not 2 <= i <= N:
        raise BadParams(f"node {i} has no left-hand neighbour in {alg}")
    wt = lambda j, kk, p, q: Wt(alg, j, kk, [p, q])  # noqa: E731
    sh = k + 2 * alg.r(i)
    out = {"T": wt(i, k, m, n), "L": wt(i, k, m, n - 1), "R": wt(i, sh, m - 1, n),
           "B": wt(i, sh, m - 1, n - 1)}
    if not alg.is_b:
        out["XY"] = (wt(i + 1, k + 1, m, n - 1), wt(i - 1, k + 1, m - 1, n))
    elif i < N - 1:
        out["XY"] = (wt(i + 1, k + 2, m, n - 1), wt(i - 1, k + 2, m - 1, n))
    elif i == N - 1:
        out["XY"] = (wt(N, k + 1, 2 * m, n - 1), wt(i - 1, k + 2, m - 1, n))
    else:
        out["XY"] = (W(alg, N - 1, k + 1 + 2 * _s(m), [_floor2(m), 2 * n - 1]),
                     wt(N - 1, k + 1 + 2 * _s(m - 1), _floor2(m - 1), n))
    return out


def _wrapping_table(alg: Algebra, k: int, lam: Sequence[int], spin: int,
                    lam_bar: Sequence[int]) -> Printed:
    """``lam[i-1]`` and ``lam_bar[i-1]`` are the coefficients attached to node i."""
    N = alg.rank
    if not alg.is_b:
        raise BadParams("wrapping modules live in type B")
    if len(lam) != N - 1 or len(lam_bar) != N - 1:
        raise BadParams(f"expected {N - 1} coefficients on each side")
    if spin < 0 or any(v < 0 for v in lam) or any(v < 0 for v in lam_bar):
        raise BadParams("coefficients must be nonnegative")
    Lm = {i: lam[i - 1] for i in range(1, N)}
    Lb = {i: lam_bar[i - 1] for i in range(1, N)}
    a = min([i for i in range(1, N) if Lm[i] > 0] + [N])
    b = min([i for i in range(1, N) if Lb[i] > 0] + [N])
    if a > N - 1 or b > N - 1:
        raise BadParams("both sides need a positive coefficient")

    def left(first):
        return [first] + [Lm[i] for i in range(a + 1, N)]

    def right(last):
        seq = [Lb[i] for i in range(N - 1, b - 1, -1)]
        return seq[:-1] + [last]

    c = 2 * spin + 1
    sh = k + 2 * alg.r(a)
    out = {
        "T": Ww(alg, a, k, left(Lm[a]), c, right(Lb[b])),
        "L": Ww(alg, a, k, left(Lm[a]), c, right(Lb[b] - 1)),
        "R": Ww(alg, a, sh, left(Lm[a] - 1), c, right(Lb[b])),
        "B": Ww(alg, a, sh, left(Lm[a] - 1), c, right(Lb[b] - 1)),
    }
    if b < N - 1:
        X = Ww(alg, a - 1, k + 2, left(Lm[a]) + [spin], 2 * Lb[N - 1] + 1,
               [Lb[i] for i in range(N - 2, b, -1)] + [Lb[b] - 1])
    else:
        X = W(alg, a - 1, k + 2, left(Lm[a]) + [spin, 2 * Lb[N - 1] - 1])
    if a < N - 1:
        Y = Ww(alg, a + 1, k + 2, [Lm[a] - 1] + [Lm[i] for i in range(a + 1, N - 1)],
               2 * Lm[N - 1] + 1, [spin] + right(Lb[b]))
    else:
        Y = Wt(alg, N, k + 1, [2 * Lm[N - 1] - 1, spin] + right(Lb[b]))
    out["XY"] = (X, Y)
    return out


def printed_participants(family: Family | str, alg: Algebra, params: Mapping) -> Printed:
    """Participants of a family relation, from the closed-form string formulas."""
    family = Family(family)
    p = dict(params)
    try:
        if family is Family.KR:
            return _kr_table(alg, p["i"], p["k"], p["m"])
        if family in (Family.TWO_NODE, Family.TWO_NODE_TILDE):
            return _two_node_table(alg, family is Family.TWO_NODE_TILDE,
                                   p["i"], p["k"], p["m"], p["n"])
        if family is Family.B_WRAPPING:
            return _wrapping_table(alg, p["k"], tuple(p["lam"]), p["spin"], tuple(p["lam_bar"]))
        if family in (Family.A_MIN_AFF, Family.A_MIN_AFF_TILDE) and alg.is_b:
            raise BadParams(f"{family.value} is a type A family")
        if family in (Family.B_MIN_AFF, Family.B_MIN_AFF_TILDE) and not alg.is_b:
            raise BadParams(f"{family.value} is a type B family")
        return _minaff_tables(alg, family, p["k"], tuple(p["lam"]))
    except KeyError as exc:
        raise BadParams(f"missing parameter {exc.args[0]!r} for {family.value}") from None


def _as_snake(alg: Algebra, m: YMonomial) -> Snake:
    pts = []
    for (i, k), e in sorted(m.items(), key=lambda t: (t[0][1], t[0][0])):
        if e < 0:
            raise BadParams(f"string product {m} is not dominant")
        pts += [(i, k)] * e
    try:
        return validate_snake(alg, pts)
    except InputError as exc:
        raise BadParams(f"family data gives {m}, which is not a snake: {exc}") from None


def family_instance(family: Family | str, alg: Algebra, params: Mapping) -> RelationInstance:
    """Build a family's top snake and check the derived relation against the closed forms."""
    printed = printed_participants(family, alg, params)
    top = _as_snake(alg, printed["T"])
    if len(top) < 2 or not top.prime:
        raise BadParams(f"family top {top} is not a prime snake of length >= 2")
    rel = extended_relation(top)
    derived = {k: s.monomial() for k, s in rel.participants().items()}
    bad = [k for k in "LRTB" if derived[k] != printed[k]]
    if sorted(printed["XY"]) != sorted((derived["X"], derived["Y"])):
        bad.append("XY")
    if bad:
        shown = {k: (str(printed[k]) if k != "XY" else tuple(map(str, printed[k]))) for k in bad}
        got = {k: (str(derived[k]) if k != "XY" else (str(derived["X"]), str(derived["Y"])))
               for k in bad}
        raise FamilyMismatch(
            f"{Family(family).value} {dict(params)}: closed form disagrees on {', '.join(bad)}",
            printed=shown, derived=got,
        )
    return rel
