"""Finite-type B2 characters and the decomposition of restricted B2 snake modules."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

from .errors import BadParams, DivisionNotExact, NotACharacter, NotDominant
from .lattice import Algebra
from .qchar import restrict_weights, snake_character
from .snakes import Snake, validate_snake

B2 = Algebra("B", 2)


class GWeight(NamedTuple):
    """Weight a*w1 + b*w2."""

    a: int
    b: int

    @property
    def dominant(self) -> bool:
        return self.a >= 0 and self.b >= 0

    def __str__(self):
        return f"({self.a},{self.b})"


RHO = GWeight(1, 1)


def s1(w) -> GWeight:
    a, b = w
    return GWeight(-a, b + 2 * a)


def s2(w) -> GWeight:
    a, b = w
    return GWeight(a + b, -b)


def _weyl_group():
    """The eight elements as (sign, map) pairs, generated from s1 and s2."""
    elems = {(): (1, lambda w: GWeight(*w))}
    frontier = [()]
    while frontier:
        nxt = []
        for word in frontier:
            sign, f = elems[word]
            for name, g in (("1", s1), ("2", s2)):
                new = word + (name,)
                if len(new) > 4 or (word and word[-1] == name):
                    continue
                elems[new] = (-sign, lambda w, f=f, g=g: g(f(w)))
                nxt.append(new)
        frontier = nxt
    # s1s2s1s2 = s2s1s2s1 is the longest element; keep one copy
    elems.pop(("2", "1", "2", "1"))
    return list(elems.values())


WEYL_GROUP = _weyl_group()


class GCharacter:
    """Finite integer combination of weights."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        t: dict[GWeight, int] = {}
        for w, c in items:
            w = GWeight(*w)
            t[w] = t.get(w, 0) + int(c)
        self._t = {w: c for w, c in t.items() if c}

    @classmethod
    def of(cls, w) -> "GCharacter":
        return cls({GWeight(*w): 1})

    def items(self):
        return self._t.items()

    def coeff(self, w) -> int:
        return self._t.get(GWeight(*w), 0)

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        return isinstance(other, GCharacter) and self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __add__(self, other: "GCharacter"):
        return GCharacter(list(self._t.items()) + list(other._t.items()))

    def __sub__(self, other: "GCharacter"):
        return GCharacter(list(self._t.items()) + [(w, -c) for w, c in other._t.items()])

    def __mul__(self, other):
        if isinstance(other, int):
            return GCharacter({w: c * other for w, c in self._t.items()})
        out: dict[GWeight, int] = {}
        for (a, b), c in self._t.items():
            for (a2, b2), c2 in other._t.items():
                w = GWeight(a + a2, b + b2)
                out[w] = out.get(w, 0) + c * c2
        return GCharacter(out)

    __rmul__ = __mul__

    def dim(self) -> int:
        return sum(self._t.values())

    def is_weyl_symmetric(self) -> bool:
        return all(self.coeff(s(w)) == c for w, c in self._t.items() for s in (s1, s2))

    def sorted_terms(self) -> list[tuple[GWeight, int]]:
        return sorted(self._t.items(), key=lambda t: (-(t[0].a + t[0].b), -t[0].a))

    def __repr__(self):
        return "GCharacter(" + ", ".join(f"{w}:{c}" for w, c in self.sorted_terms()) + ")"

    def to_json(self) -> dict:
        return {"terms": [[w.a, w.b, c] for w, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "GCharacter":
        return cls(((a, b), c) for a, b, c in obj["terms"])


def _check_dominant(lam) -> GWeight:
    lam = GWeight(*lam)
    if not lam.dominant:
        raise NotDominant(f"{lam} is not dominant")
    return lam


def weyl_numerator(lam) -> GCharacter:
    l1, l2 = _check_dominant(lam)
    return GCharacter([
        ((l1 + 1, l2 + 1), 1),
        ((-l1 - 1, l2 + 2 * l1 + 3), -1),
        ((l2 + l1 + 2, -l2 - 1), -1),
        ((-l2 - l1 - 2, l2 + 2 * l1 + 3), 1),
        ((l2 + l1 + 2, -l2 - 2 * l1 - 3), 1),
        ((-l2 - l1 - 2, l2 + 1), -1),
        ((l1 + 1, -l2 - 2 * l1 - 3), -1),
        ((-l1 - 1, -l2 - 1), 1),
    ])


def _lex(w: GWeight):
    return (w.a, w.b)


def _divide(num: GCharacter, den: GCharacter) -> GCharacter:
    """Exact division of Laurent polynomials in two variables, lex order on (a, b)."""
    if not den:
        raise DivisionNotExact("division by zero")
    lead_d = max((w for w, _ in den.items()), key=_lex)
    cd = den.coeff(lead_d)
    na = [w.a for w, _ in num.items()] or [0]
    nb = [w.b for w, _ in num.items()] or [0]
    da = [w.a for w, _ in den.items()]
    db = [w.b for w, _ in den.items()]
    lo = (min(na) - min(da), min(nb) - min(db))
    hi = (max(na) - max(da), max(nb) - max(db))
    rem = dict(num.items())
    quot: dict[GWeight, int] = {}
    while rem:
        lead = max(rem, key=_lex)
        q = GWeight(lead.a - lead_d.a, lead.b - lead_d.b)
        c, r = divmod(rem[lead], cd)
        if r or not (lo[0] <= q.a <= hi[0] and lo[1] <= q.b <= hi[1]):
            raise DivisionNotExact(f"{num!r} is not divisible by {den!r}")
        quot[q] = c
        for w, cw in den.items():
            t = GWeight(q.a + w.a, q.b + w.b)
            v = rem.get(t, 0) - c * cw
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return GCharacter(quot)


@lru_cache(maxsize=None)
def weyl_character(lam) -> GCharacter:
    lam = _check_dominant(lam)
    return _divide(weyl_numerator(lam), weyl_numerator((0, 0)))


def weyl_dimension(lam) -> int:
    a, b = _check_dominant(lam)
    return (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) // 6


def _strip_key(w: GWeight):
    return (w.a + w.b, w.a)


def decompose(c: GCharacter) -> dict[GWeight, int]:
    """Multiplicities of simple modules, by repeatedly removing the highest dominant weight."""
    rem = GCharacter(c.items())
    out: dict[GWeight, int] = {}
    while rem:
        dom = [w for w, _ in rem.items() if w.dominant]
        if not dom:
            raise NotACharacter(f"residue {rem!r} has no dominant weight")
        top = max(dom, key=_strip_key)
        mult = rem.coeff(top)
        if mult < 0:
            raise NotACharacter(f"negative multiplicity {mult} at {top}")
        out[top] = mult
        rem = rem - weyl_character(top) * mult
    return dict(sorted(out.items(), key=lambda t: _strip_key(t[0]), reverse=True))


def character_of(mults: Mapping) -> GCharacter:
    out = GCharacter()
    for w, c in mults.items():
        out = out + weyl_character(GWeight(*w)) * c
    return out


# -- restricted snake modules -----------------------------------------------------------


def wq_points(m: int, mid: int, n: int) -> list[tuple[int, int]]:
    if min(m, mid, n) < 0:
        raise BadParams("string lengths must be nonnegative")
    pts = [(1, 4 * t) for t in range(m)]
    pts += [(2, 4 * m + 1 + 2 * t) for t in range(mid)]
    pts += [(1, 4 * m + 2 * mid + 4 * (t + 1)) for t in range(n)]
    return pts


def wq_snake(m: int, mid: int, n: int) -> Snake:
    return validate_snake(B2, wq_points(m, mid, n))


@lru_cache(maxsize=None)
def wq_character(m: int, mid: int, n: int = 0, cap: int | None = None) -> GCharacter:
    """Restriction to the finite-type algebra of the snake module with these strings."""
    c = snake_character(wq_snake(m, mid, n), cap)
    return GCharacter(restrict_weights(c, 2))


def wq_decompose(m: int, mid: int, n: int = 0, cap: int | None = None) -> dict[GWeight, int]:
    return decompose(wq_character(m, mid, n, cap))


def wq_expected(m: int, mid: int, n: int = 0) -> dict[GWeight, int]:
    """Closed-form decomposition for both parities of the middle string."""
    k, odd = divmod(mid, 2)
    out: Counter = Counter()
    for i in range(min(m, n) + 1):
        top = k if odd else i + k
        for j in range(top + 1):
            out[GWeight(m + n - 2 * i, 2 * i + 2 * k - 2 * j + odd)] += 1
    return dict(out)


def wq_dimension(m: int, k: int, n: int) -> int:
    """Dimension for odd middle string length 2k+1."""
    num = (k + 1) * (n + 1) * (m + 1) * (n + k + 2) * (m + k + 2) * (n + m + k + 3)
    return num // 3


# -- Q-system -------------------------------------------------------------------------


@dataclass
class QSystemCheck:
    relation: int
    params: tuple[int, ...]
    holds: bool
    dims: tuple[int, int, int]

    def to_json(self) -> dict:
        return {"relation": self.relation, "params": list(self.params), "holds": self.holds,
                "dims": list(self.dims)}


@dataclass
class QSystemReport:
    checks: list[QSystemCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def _relation(lhs, r1, r2) -> tuple[bool, tuple[int, int, int]]:
    L = lhs[0] * lhs[1]
    A = r1[0] * r1[1]
    B = r2[0] * r2[1]
    return L == A + B, (L.dim(), A.dim(), B.dim())


def verify_b2_qsystem(max_index: int = 2, cap: int | None = None) -> QSystemReport:
    """Check the four B2 Q-system relations for all indices up to ``max_index``."""
    if max_index < 0:
        raise BadParams("max_index must be nonnegative")
    W = lambda m, mid, n=0: wq_character(m, mid, n, cap)  # noqa: E731
    rep = QSystemReport()
    rng = range(max_index + 1)
    for m in rng:
        for k in rng:
            for n in rng:
                ok, d = _relation(
                    (W(m, 2 * k + 1, n + 1), W(m + 1, 2 * k + 1, n)),
                    (W(m + 1, 2 * k + 1, n + 1), W(m, 2 * k + 1, n)),
                    (W(k, 2 * n + 1), W(k, 2 * m + 1)),
                )
                rep.checks.append(QSystemCheck(1, (m, k, n), ok, d))
    for m in rng:
        for k in rng:
            ok, d = _relation(
                (W(m + 1, 2 * k), W(m, 2 * k + 1)),
                (W(m + 1, 2 * k + 1), W(m, 2 * k)),
                (W(k, 0), W(k, 2 * m + 1)),
            )
            rep.checks.append(QSystemCheck(2, (m, k), ok, d))
    for m in rng:
        ok, d = _relation((W(m + 1, 0), W(m + 1, 0)), (W(m + 2, 0), W(m, 0)), (W(0, 2 * m + 2), W(0, 0)))
        rep.checks.append(QSystemCheck(3, (m,), ok, d))
    for k in rng:
        ok, d = _relation(
            (W(0, k + 1), W(0, k + 1)),
            (W(0, k + 2), W(0, k)),
            (W((k + 1) // 2, 0), W((k + 2) // 2, 0)),
        )
        rep.checks.append(QSystemCheck(4, (k,), ok, d))
    return rep
