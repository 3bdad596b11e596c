"""Laurent monomials in the variables Y_{i,k} and integer characters built from them."""
from __future__ import annotations

import re
from collections.abc import Iterable, Mapping

from .errors import InputError, NotInRootLattice

Point = tuple[int, int]


class YMonomial:
    """An immutable Laurent monomial, stored as a sorted tuple of ((i, k), exponent)."""

    __slots__ = ("_f", "_h")

    def __init__(self, exps: Mapping[Point, int] | Iterable[tuple[Point, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict[Point, int] = {}
        for (i, k), e in items:
            key = (int(i), int(k))
            acc[key] = acc.get(key, 0) + int(e)
        self._f = tuple(sorted((p, e) for p, e in acc.items() if e))
        self._h = None

    @classmethod
    def _raw(cls, f):
        obj = cls.__new__(cls)
        obj._f = f
        obj._h = None
        return obj

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> "YMonomial":
        return cls([(p, 1) for p in points])

    @classmethod
    def one(cls) -> "YMonomial":
        return _ONE

    def items(self):
        return self._f

    def __iter__(self):
        return iter(self._f)

    def __len__(self):
        return len(self._f)

    def __bool__(self):
        return True

    def __hash__(self):
        if self._h is None:
            self._h = hash(self._f)
        return self._h

    def __eq__(self, other):
        return isinstance(other, YMonomial) and self._f == other._f

    def __lt__(self, other):
        return self._f < other._f

    def __le__(self, other):
        return self._f <= other._f

    def __mul__(self, other):
        if not isinstance(other, YMonomial):
            return NotImplemented
        if not other._f:
            return self
        if not self._f:
            return other
        d = dict(self._f)
        for p, e in other._f:
            v = d.get(p, 0) + e
            if v:
                d[p] = v
            else:
                del d[p]
        return YMonomial._raw(tuple(sorted(d.items())))

    def inverse(self) -> "YMonomial":
        return YMonomial._raw(tuple((p, -e) for p, e in self._f))

    def __truediv__(self, other):
        if not isinstance(other, YMonomial):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n == 0:
            return _ONE
        return YMonomial._raw(tuple((p, e * n) for p, e in self._f))

    def exponent(self, i: int, k: int) -> int:
        for p, e in self._f:
            if p == (i, k):
                return e
        return 0

    def is_one(self) -> bool:
        return not self._f

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self._f)

    def is_antidominant(self) -> bool:
        return all(e < 0 for _, e in self._f)

    def nodes(self) -> set[int]:
        return {i for (i, _), _ in self._f}

    def __repr__(self):
        return f"YMonomial({self})"

    def __str__(self):
        if not self._f:
            return "1"
        parts = []
        for (i, k), e in self._f:
            parts.append(f"Y_{{{i},{k}}}" + ("" if e == 1 else f"^{{{e}}}"))
        return "".join(parts)

    def to_json(self) -> dict:
        return {"factors": [[i, k, e] for (i, k), e in self._f]}

    @classmethod
    def from_json(cls, obj) -> "YMonomial":
        try:
            return cls([((int(i), int(k)), int(e)) for i, k, e in obj["factors"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad monomial {obj!r}") from exc


_ONE = YMonomial()


def Y(i: int, k: int, e: int = 1) -> YMonomial:
    return YMonomial(((((i, k)), e),))


_FACTOR_RE = re.compile(r"Y_\{\s*(-?\d+)\s*,\s*(-?\d+)\s*\}(?:\^\{\s*(-?\d+)\s*\}|\^(-?\d+))?")


def parse_monomial(text: str) -> YMonomial:
    """Parse the printed form, e.g. "Y_{1,2}^{-1}Y_{2,1}"; "1" is the empty monomial."""
    body = text.replace(" ", "").replace("*", "")
    if body in ("", "1"):
        return _ONE
    factors, pos = [], 0
    for m in _FACTOR_RE.finditer(body):
        if m.start() != pos:
            break
        e = m.group(3) or m.group(4) or "1"
        factors.append(((int(m.group(1)), int(m.group(2))), int(e)))
        pos = m.end()
    if pos != len(body):
        raise InputError(f"cannot parse monomial {text!r} near position {pos}")
    return YMonomial(factors)


def u_exponent(m: YMonomial, i: int, k: int) -> int:
    return m.exponent(i, k)


def is_dominant(m: YMonomial) -> bool:
    return m.is_dominant()


def is_antidominant(m: YMonomial) -> bool:
    return m.is_antidominant()


def weight(m: YMonomial, rank: int) -> tuple[int, ...]:
    w = [0] * rank
    for (i, _), e in m.items():
        w[i - 1] += e
    return tuple(w)


def height(m: YMonomial, alg) -> int:
    return sum(e * alg.r(i) for (i, _), e in m.items())


def beta_project(m: YMonomial, j: int) -> YMonomial:
    return YMonomial._raw(tuple(t for t in m.items() if t[0][0] == j))


class Character:
    """A finite Z-linear combination of YMonomials with no zero coefficients."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[YMonomial, int] | Iterable[tuple[YMonomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[YMonomial, int] = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        self._t = {m: c for m, c in acc.items() if c}

    @classmethod
    def _raw(cls, d):
        obj = cls.__new__(cls)
        obj._t = d
        return obj

    @classmethod
    def one(cls) -> "Character":
        return cls._raw({_ONE: 1})

    @classmethod
    def of(cls, m: YMonomial) -> "Character":
        return cls._raw({m: 1})

    @classmethod
    def from_monomials(cls, ms: Iterable[YMonomial]) -> "Character":
        acc: dict[YMonomial, int] = {}
        for m in ms:
            acc[m] = acc.get(m, 0) + 1
        return cls._raw(acc)

    def items(self):
        return self._t.items()

    def monomials(self):
        return self._t.keys()

    def coeff(self, m: YMonomial) -> int:
        return self._t.get(m, 0)

    def __contains__(self, m):
        return m in self._t

    def __len__(self):
        return len(self._t)

    def __iter__(self):
        return iter(self._t)

    def __eq__(self, other):
        return isinstance(other, Character) and self._t == other._t

    __hash__ = None

    def __add__(self, other):
        d = dict(self._t)
        for m, c in other._t.items():
            v = d.get(m, 0) + c
            if v:
                d[m] = v
            else:
                d.pop(m, None)
        return Character._raw(d)

    def __neg__(self):
        return Character._raw({m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Character._raw({m: c * other for m, c in self._t.items()} if other else {})
        if isinstance(other, YMonomial):
            return Character._raw({m * other: c for m, c in self._t.items()})
        d: dict[YMonomial, int] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                m = m1 * m2
                d[m] = d.get(m, 0) + c1 * c2
        return Character._raw({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def dim(self) -> int:
        return sum(self._t.values())

    def sorted_terms(self) -> list[tuple[YMonomial, int]]:
        return sorted(self._t.items(), key=lambda t: t[0]._f)

    def dominant_terms(self) -> list[tuple[YMonomial, int]]:
        return [(m, c) for m, c in self.sorted_terms() if m.is_dominant()]

    def antidominant_terms(self) -> list[tuple[YMonomial, int]]:
        return [(m, c) for m, c in self.sorted_terms() if m.is_antidominant()]

    def is_thin(self) -> bool:
        return all(c <= 1 for c in self._t.values())

    def is_special(self) -> bool:
        return len(self.dominant_terms()) == 1

    def is_antispecial(self) -> bool:
        return len(self.antidominant_terms()) == 1

    def __repr__(self):
        return f"Character({self})"

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            out.append(str(m) if c == 1 else f"{c}*{m}")
        return " + ".join(out)

    def to_json(self) -> dict:
        return {"terms": [{"m": m.to_json(), "c": c} for m, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj) -> "Character":
        try:
            return cls([(YMonomial.from_json(t["m"]), int(t["c"])) for t in obj["terms"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad character {obj!r}") from exc


def multiply(x, y):
    return x * y


def dominant_terms(c: Character) -> list[tuple[YMonomial, int]]:
    return c.dominant_terms()


class AFactorization(Mapping):
    """Exponents f with ratio = prod A_{i,k}^{f(i,k)}."""

    def __init__(self, factors: Mapping[Point, int]):
        self._d = {p: e for p, e in sorted(factors.items()) if e}

    def __getitem__(self, key):
        return self._d[key]

    def __iter__(self):
        return iter(self._d)

    def __len__(self):
        return len(self._d)

    def __repr__(self):
        return f"AFactorization({self._d})"

    def is_nonpositive(self) -> bool:
        return all(e < 0 for e in self._d.values())

    def degree(self) -> int:
        """v = -(sum of exponents)."""
        return -sum(self._d.values())

    def support(self) -> set[Point]:
        return set(self._d)


def a_factorize(num: YMonomial, den: YMonomial, alg) -> AFactorization:
    """Solve num/den = prod A^f by peeling off the factor of largest shift."""
    from .lattice import in_lattice

    ratio = dict((num / den).items())
    floor = min((k for (_, k) in ratio), default=0)
    f: dict[Point, int] = {}
    while ratio:
        top = max(k for (_, k) in ratio)
        if top < floor:
            raise NotInRootLattice(f"{num}/{den} is not a product of A-variables")
        for (i, k), e in [(p, e) for p, e in ratio.items() if p[1] == top]:
            centre = k - alg.r(i)
            if not in_lattice(alg, i, centre, shifted=True):
                raise NotInRootLattice(f"{num}/{den} is not a product of A-variables")
            f[(i, centre)] = f.get((i, centre), 0) + e
            for p, a in alg.a_exps(i, centre).items():
                if not 1 <= p[0] <= alg.rank:
                    continue
                v = ratio.get(p, 0) - a * e
                if v:
                    ratio[p] = v
                else:
                    ratio.pop(p, None)
    out = AFactorization(f)
    check = YMonomial()
    for (i, k), e in out.items():
        check = check * YMonomial(alg.a_exps(i, k)) ** e
    if check != num / den:
        raise NotInRootLattice(f"re-expansion failed for {num}/{den}")
    return out


def truncate_character(c: Character, m_plus: YMonomial, U, alg) -> Character:
    U = set(U)
    keep = {}
    for m, coeff in c.items():
        try:
            f = a_factorize(m, m_plus, alg)
        except NotInRootLattice:
            continue
        if all(e < 0 for e in f.values()) and f.support() <= U:
            keep[m] = coeff
    return Character._raw(keep)
