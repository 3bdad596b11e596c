"""Rank-one characters, the truncation certificate, and the exclusion step it supports."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import BadR, NotDominant, NotInRootLattice, PreconditionFailed
from .laurent import Character, YMonomial, a_factorize, beta_project
from .lattice import Algebra
from .paths import highest_path, path_monomial, enumerate_paths, snake_lowered_path, weakly_above
from .qchar import snake_character

Point = tuple[int, int]


@dataclass(frozen=True)
class QString:
    """Y_{i,k} Y_{i,k+2r} ... Y_{i,k+2r(m-1)}."""

    start: int
    length: int
    node: int = 1
    r: int = 1

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("a q-string has length at least 1")

    @property
    def end(self) -> int:
        return self.start + 2 * self.r * (self.length - 1)

    def shifts(self) -> list[int]:
        return [self.start + 2 * self.r * t for t in range(self.length)]

    def monomial(self) -> YMonomial:
        return YMonomial.from_points((self.node, k) for k in self.shifts())

    def character(self) -> Character:
        ks = self.shifts()
        step = 2 * self.r
        terms = []
        for j in range(self.length + 1):
            head = [((self.node, k), 1) for k in ks[: self.length - j]]
            tail = [((self.node, k + step), -1) for k in ks[self.length - j:]]
            terms.append(YMonomial(head + tail))
        return Character.from_monomials(terms)

    def special_position(self, other: "QString") -> bool:
        """True when the union is a strictly longer string than either."""
        a, b = sorted((self, other), key=lambda s: (s.start, s.end))
        step = 2 * self.r
        if (b.start - a.start) % step or b.start > a.end + step:
            return False
        return b.end > a.end and b.start > a.start


def _single_node(m: YMonomial) -> int | None:
    nodes = m.nodes()
    if len(nodes) > 1:
        raise PreconditionFailed(f"{m} involves several nodes")
    return next(iter(nodes), None)


def string_decompose(m: YMonomial, r: int = 1) -> list[QString]:
    """General-position string multiset of a dominant single-node monomial."""
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")
    node = _single_node(m)
    counts = {k: e for (_, k), e in m.items()}
    step = 2 * r
    out = []
    while counts:
        k0 = min(counts)
        k = k0
        while counts.get(k, 0) > 0:
            counts[k] -= 1
            if not counts[k]:
                del counts[k]
            k += step
        out.append(QString(k0, (k - k0) // step, node, r))
    for x in range(len(out)):
        for y in range(x + 1, len(out)):
            if out[x].special_position(out[y]):
                raise AssertionError(f"strings {out[x]} and {out[y]} are in special position")
    return out


def sl2_simple_qchar(m: YMonomial, r: int = 1) -> Character:
    out = Character.one()
    for s in string_decompose(m, r):
        out = out * s.character()
    return out


def sl2_weyl_qchar(m: YMonomial, r: int = 1) -> Character:
    if not m.is_dominant():
        raise NotDominant(f"{m} is not dominant")
    out = Character.one()
    for (i, k), e in m.items():
        fund = Character.from_monomials([YMonomial({(i, k): 1}), YMonomial({(i, k + 2 * r): -1})])
        for _ in range(e):
            out = out * fund
    return out


def sl2_a(node: int, a: int, r: int = 1) -> YMonomial:
    return YMonomial({(node, a - r): 1, (node, a + r): 1})


def sl2_factorize(ratio: YMonomial, node: int, r: int = 1) -> dict[int, int] | None:
    """Exponents f with ratio = prod_a A_a^{f_a} in the rank-one ring, or None."""
    rest = {k: e for (i, k), e in ratio.items() if i == node}
    if len(rest) != len(ratio):
        return None
    floor = min(rest, default=0)
    f: dict[int, int] = {}
    while rest:
        top = max(rest)
        if top - 2 * r < floor:
            return None
        e = rest[top]
        a = top - r
        f[a] = f.get(a, 0) + e
        for k in (top, top - 2 * r):
            v = rest.get(k, 0) - e
            if v:
                rest[k] = v
            else:
                rest.pop(k, None)
    return {a: e for a, e in f.items() if e}


def sl2_truncate(c: Character, top: YMonomial, shifts: Iterable[int], node: int, r: int = 1) -> Character:
    allowed = set(shifts)
    keep = {}
    for m, coeff in c.items():
        f = sl2_factorize(m / top, node, r)
        if f is not None and all(e < 0 for e in f.values()) and set(f) <= allowed:
            keep[m] = coeff
    return Character(keep)


# -- the trichotomy --------------------------------------------------------------------


class Case(str, Enum):
    I = "CaseI"  # noqa: E741
    II = "CaseII"
    III = "CaseIII"


class TrichotomyResult(NamedTuple):
    case: Case | None
    in_simple: bool
    in_weyl: bool

    @property
    def consistent(self) -> bool:
        if self.case is Case.I:
            return self.in_simple
        if self.case is Case.II:
            return self.in_weyl and not self.in_simple
        if self.case is Case.III:
            return not self.in_weyl
        return False


def sl2_trichotomy(M: YMonomial, m: YMonomial, a: int, U: Iterable[int], r: int = 1) -> TrichotomyResult:
    """Classify the lowering of m at shift a by the exponent inequalities.

    ``U`` holds the allowed lowering shifts; ``a`` must be one of them.
    """
    node = _single_node(M) or _single_node(m) or 1
    U = set(U)
    if a not in U:
        raise PreconditionFailed(f"shift {a} is not in the truncation region")
    simple = sl2_simple_qchar(M, r)
    trunc = sl2_truncate(simple, M, U, node, r)
    if not trunc.is_thin():
        raise PreconditionFailed(f"L({M}) is not thin in the region")
    if m not in trunc:
        raise PreconditionFailed(f"{m} is not a term of the truncated character of L({M})")
    lo, hi = m.exponent(node, a - r), m.exponent(node, a + r)
    if lo <= 0:
        case = Case.III
    elif lo == hi + 1:
        case = Case.I
    elif lo <= hi:
        case = Case.II
    else:
        case = None
    lowered = m / sl2_a(node, a, r)
    return TrichotomyResult(case, lowered in simple, lowered in sl2_weyl_qchar(M, r))


# -- truncation certificate ---------------------------------------------------------------


@dataclass(frozen=True)
class TruncationRegion:
    points: frozenset

    @classmethod
    def of(cls, pts: Iterable[Point]) -> "TruncationRegion":
        return cls(frozenset((int(i), int(k)) for i, k in pts))

    def __contains__(self, p):
        return tuple(p) in self.points

    def __iter__(self):
        return iter(sorted(self.points))

    def __len__(self):
        return len(self.points)

    def on_node(self, i: int) -> set[int]:
        return {k for j, k in self.points if j == i}

    def to_json(self) -> list:
        return [list(p) for p in self]


@dataclass
class NodeCheck:
    m: YMonomial
    node: int
    witness: YMonomial | None
    lhs: Character | None
    rhs: Character
    witnesses: int

    @property
    def ok(self) -> bool:
        return self.witnesses == 1

    def to_json(self) -> dict:
        return {
            "m": self.m.to_json(),
            "node": self.node,
            "witness": None if self.witness is None else self.witness.to_json(),
            "lhs": None if self.lhs is None else self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "witnesses": self.witnesses,
            "ok": self.ok,
        }


@dataclass
class ThmACertificate:
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    node_checks: list[NodeCheck] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii and self.cond_iv

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "i": self.cond_i,
            "ii": self.cond_ii,
            "iii": self.cond_iii,
            "iv": self.cond_iv,
            "node_checks": [c.to_json() for c in self.node_checks],
            "failures": list(self.failures),
        }


def _factor(num: YMonomial, den: YMonomial, alg: Algebra):
    try:
        return a_factorize(num, den, alg)
    except NotInRootLattice:
        return None


def _node_dominant(m: YMonomial, node: int) -> bool:
    return all(e >= 0 for (i, _), e in m.items() if i == node)


def _bump(f: frozenset, p: Point, d: int) -> frozenset:
    g = dict(f)
    v = g.get(p, 0) + d
    if v:
        g[p] = v
    else:
        g.pop(p, None)
    return frozenset(g.items())


@lru_cache(maxsize=None)
def _sl2_truncated(top: YMonomial, shifts: frozenset, node: int, r: int) -> Character:
    return sl2_truncate(sl2_simple_qchar(top, r), top, shifts, node, r)


def thmA_verify(alg: Algebra, m_plus: YMonomial, M_set, U) -> ThmACertificate:
    """Check the four hypotheses; members are compared through their A-exponents over m_+."""
    M_list = list(dict.fromkeys(M_set))
    U = U if isinstance(U, TruncationRegion) else TruncationRegion.of(U)
    fails: list[str] = []

    expo: dict[YMonomial, frozenset] = {}
    cond_i = True
    for m in M_list:
        f = _factor(m, m_plus, alg)
        if f is not None:
            expo[m] = frozenset(f.items())
        if f is None or not f.is_nonpositive() or not f.support() <= U.points:
            cond_i = False
            fails.append(f"(i): {m} is not in m_+ Q^-_U")
    by_expo = {f: m for m, f in expo.items()}

    dom = {m for m in M_list if m.is_dominant()}
    cond_ii = dom == {m_plus}
    if not cond_ii:
        fails.append(f"(ii): dominant members {sorted(map(str, dom))}")

    cond_iii = True
    support = set(U.points).union(*(dict(f) for f in expo.values()))
    for m, f in expo.items():
        for ia in U:
            low = _bump(f, ia, -1)
            if low in by_expo:
                continue
            for jb in sorted(support):
                x = by_expo.get(_bump(low, jb, 1)) if jb != ia else None
                if x is not None:
                    cond_iii = False
                    fails.append(f"(iii): {m} lowered at {ia} returns via {jb} to {x}")

    checks = []
    for i in alg.nodes:
        classes: dict[frozenset, list[YMonomial]] = {}
        for m, f in expo.items():
            classes.setdefault(frozenset(t for t in f if t[0][0] != i), []).append(m)
        r = alg.r(i)
        shifts = frozenset(U.on_node(i))
        for m, f in expo.items():
            cls = classes[frozenset(t for t in f if t[0][0] != i)]
            rhs = Character.from_monomials(beta_project(x, i) for x in cls)
            found, lhs_found = [], None
            for cand in cls:
                if not _node_dominant(cand, i):
                    continue
                lhs = _sl2_truncated(beta_project(cand, i), shifts, i, r)
                if lhs == rhs:
                    found.append(cand)
                    lhs_found = lhs
            checks.append(NodeCheck(m, i, found[0] if found else None, lhs_found, rhs, len(found)))
    checks.sort(key=lambda c: (M_list.index(c.m), c.node))
    cond_iv = all(c.ok for c in checks)
    for c in checks:
        if not c.ok:
            fails.append(f"(iv): {c.m} at node {c.node} has {c.witnesses} witnesses")
    if len(expo) < len(M_list):
        fails.append("(iii), (iv): members outside the root cone were skipped")
    return ThmACertificate(cond_i, cond_ii, cond_iii, cond_iv, checks, fails)


# -- exclusion ---------------------------------------------------------------------------


@dataclass
class ExclusionCertificate:
    R: int
    n: YMonomial
    region: TruncationRegion
    candidates: list[YMonomial]
    thmA: ThmACertificate
    witness: YMonomial
    absent: bool

    @property
    def ok(self) -> bool:
        return self.thmA.verdict and self.absent

    def to_json(self) -> dict:
        return {
            "R": self.R,
            "n": self.n.to_json(),
            "U": self.region.to_json(),
            "M": [m.to_json() for m in self.candidates],
            "thmA": self.thmA.to_json(),
            "witness": self.witness.to_json(),
            "absent": self.absent,
            "ok": self.ok,
        }


def exclusion_certificate(rel, R: int, cap: int | None = None) -> ExclusionCertificate:
    """Show L(n) is not a composition factor of T (x) B for the R-th dominant monomial n."""
    top = rel.top
    alg = top.alg
    T = len(top)
    if not 2 <= R <= T - 1:
        raise BadR(f"R must lie in 2..{T - 1}, got {R}")
    pts = top.points
    snake = [snake_lowered_path(alg, a, b) for a, b in zip(pts, pts[1:])]
    n = top.monomial() * YMonomial.from_points(pts[1 : R - 1])
    for p in snake[R - 1:]:
        n = n * path_monomial(p)
    iR, kR = pts[R - 1]
    high = highest_path(alg, iR, kR)
    low = snake[R - 1]
    moves = a_factorize(path_monomial(low), path_monomial(high), alg)
    region = TruncationRegion.of(moves.support())
    base = n / path_monomial(high)
    cands = [base * path_monomial(p) for p in enumerate_paths(alg, iR, kR) if weakly_above(p, low)]
    cert = thmA_verify(alg, n, cands, region)
    witness = base * path_monomial(low)
    tb = snake_character(top, cap) * snake_character(rel.bottom, cap)
    return ExclusionCertificate(R, n, region, cands, cert, witness, witness not in tb)
