"""Lattice paths P_{i,k}, their corners and monomials, and moves between them.

A point of a path is a triple (x, base, eps).  In the spinor column of type B
the height is base + eps*epsilon for a fixed small epsilon, everywhere else
eps is 0.  Heights are compared through the integer 4*base + eps, which
realises the order minus < none < plus at equal base.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import InputError, MoveNotApplicable, NotPrimePosition, ShapeMismatch
from .lattice import Algebra, check_point, iota, iota_inverse
from .laurent import YMonomial

Point3 = tuple[int, int, int]


def height_key(base: int, eps: int) -> int:
    return 4 * base + eps


@dataclass(frozen=True)
class CornerSet:
    upper: frozenset
    lower: frozenset


class Path:
    __slots__ = ("alg", "i", "k", "points", "_corners", "_mon", "_cols")

    def __init__(self, alg: Algebra, i: int, k: int, points: tuple[Point3, ...]):
        self.alg = alg
        self.i = i
        self.k = k
        self.points = tuple(points)
        self._corners = None
        self._mon = None
        self._cols = None

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.alg == other.alg
            and (self.i, self.k) == (other.i, other.k)
            and self.points == other.points
        )

    def __hash__(self):
        return hash((self.alg, self.i, self.k, self.points))

    def __repr__(self):
        body = ",".join(_fmt_point(p) for p in self.points)
        return f"Path[{self.i},{self.k}]({body})"

    def heights(self) -> list[int]:
        return [height_key(b, e) for _, b, e in self.points]

    def columns(self) -> dict[int, list[int]]:
        """Column -> list of height keys."""
        if self._cols is None:
            cols: dict[int, list[int]] = {}
            for x, b, e in self.points:
                cols.setdefault(x, []).append(height_key(b, e))
            self._cols = cols
        return self._cols

    def to_json(self) -> list:
        return [list(p) for p in self.points]


def _fmt_point(p: Point3) -> str:
    x, b, e = p
    suffix = {0: "", 1: "+e", -1: "-e"}[e]
    return f"({x},{b}{suffix})"


# -- enumeration ----------------------------------------------------------------


def _type_a_points(n: int, i: int, k: int) -> list[tuple[Point3, ...]]:
    out = []
    for downs in combinations(range(n + 1), i):
        y = i + k
        pts = [(0, y, 0)]
        for r in range(n + 1):
            y += -1 if r in downs else 1
            pts.append((r + 1, y, 0))
        out.append(tuple(pts))
    return out


def _spinor_halves(n: int, ell: int) -> list[tuple[Point3, ...]]:
    if ell % 4 == 3:
        cols = [2 * t for t in range(n)]
    else:
        cols = [4 * n - 2 - 2 * t for t in range(n)]
    out = []
    for steps in product((-1, 1), repeat=n):
        y = ell + 2 * n - 1
        pts = [(cols[0], y, 0)]
        for s in steps[:-1]:
            y += 2 * s
            pts.append((cols[len(pts)], y, 0))
        s = steps[-1]
        pts.append((2 * n - 1, y + s, s))
        out.append(tuple(pts))
    return out


@lru_cache(maxsize=None)
def _enumerate(alg: Algebra, i: int, k: int) -> tuple[Path, ...]:
    n = alg.rank
    if not alg.is_b:
        raw = _type_a_points(n, i, k)
    elif i == n:
        raw = _spinor_halves(n, k)
    else:
        shift = 2 * n - 2 * i - 1
        raw = []
        for a in _spinor_halves(n, k - shift):
            ya = height_key(*a[-1][1:])
            for abar in _spinor_halves(n, k + shift):
                if ya > height_key(*abar[-1][1:]):
                    raw.append(a + tuple(reversed(abar)))
    return tuple(Path(alg, i, k, pts) for pts in sorted(raw))


def enumerate_paths(alg: Algebra, i: int, k: int) -> list[Path]:
    check_point(alg, i, k)
    return list(_enumerate(alg, i, k))


@lru_cache(maxsize=None)
def _by_monomial(alg: Algebra, i: int, k: int) -> dict[YMonomial, Path]:
    table = {}
    for p in _enumerate(alg, i, k):
        m = path_monomial(p)
        if m in table:
            raise AssertionError(f"two paths of P_{i},{k} share the monomial {m}")
        table[m] = p
    return table


def path_by_monomial(alg: Algebra, i: int, k: int, m: YMonomial) -> Path | None:
    return _by_monomial(alg, i, k).get(m)


def path_from_points(alg: Algebra, i: int, k: int, points) -> Path:
    """Validate a point list against the enumerated set P_{i,k}."""
    check_point(alg, i, k)
    pts = tuple((int(x), int(b), int(e)) for x, b, e in points)
    p = Path(alg, i, k, pts)
    if p not in _membership(alg, i, k):
        raise InputError(f"not a path of P_{{{i},{k}}}: {pts}")
    return p


@lru_cache(maxsize=None)
def _membership(alg, i, k):
    return frozenset(_enumerate(alg, i, k))


# -- corners and monomials -------------------------------------------------------


def corners(p: Path, alg: Algebra | None = None) -> CornerSet:
    if p._corners is not None:
        return p._corners
    alg = p.alg
    pts = p.points
    hs = p.heights()
    if alg.is_b:
        n = alg.rank
        skip = {0, 2 * n - 1, 4 * n - 2}
    else:
        skip = {0, alg.rank + 1}
    upper, lower = set(), set()
    for r in range(1, len(pts) - 1):
        x, base, _ = pts[r]
        if x in skip:
            continue
        h, hp, hn = hs[r], hs[r - 1], hs[r + 1]
        if hp > h < hn:
            upper.add(iota_inverse(alg, x, base))
        elif hp < h > hn:
            lower.add(iota_inverse(alg, x, base))
    if alg.is_b:
        n = alg.rank
        spin = {(b, e) for x, b, e in pts if x == 2 * n - 1}
        for b, e in spin:
            if e == -1 and (b, 1) not in spin:
                upper.add((n, b))
            elif e == 1 and (b, -1) not in spin:
                lower.add((n, b))
    p._corners = CornerSet(frozenset(upper), frozenset(lower))
    return p._corners


def path_monomial(p: Path, alg: Algebra | None = None) -> YMonomial:
    if p._mon is None:
        c = corners(p)
        p._mon = YMonomial([(q, 1) for q in c.upper] + [(q, -1) for q in c.lower])
    return p._mon


# -- distinguished paths -----------------------------------------------------------


@lru_cache(maxsize=None)
def _highest(alg, i, k):
    found = [p for p in _enumerate(alg, i, k) if not corners(p).lower]
    if len(found) != 1:
        raise AssertionError(f"P_{i},{k} has {len(found)} paths without lower corners")
    return found[0]


@lru_cache(maxsize=None)
def _lowest(alg, i, k):
    found = [p for p in _enumerate(alg, i, k) if not corners(p).upper]
    if len(found) != 1:
        raise AssertionError(f"P_{i},{k} has {len(found)} paths without upper corners")
    return found[0]


def highest_path(alg: Algebra, i: int, k: int) -> Path:
    check_point(alg, i, k)
    return _highest(alg, i, k)


def lowest_path(alg: Algebra, i: int, k: int) -> Path:
    check_point(alg, i, k)
    return _lowest(alg, i, k)


@lru_cache(maxsize=None)
def _snake_lowered(alg, i, k, i2, k2):
    found = [p for p in _enumerate(alg, i, k) if corners(p).lower == {(i2, k2)}]
    if len(found) != 1:
        raise AssertionError(
            f"expected one path of P_{i},{k} with lower corners {{({i2},{k2})}}, found {len(found)}"
        )
    return found[0]


def snake_lowered_path(alg: Algebra, frm, to) -> Path:
    from .snakes import position_kind

    if not position_kind(alg, frm, to).prime:
        raise NotPrimePosition(f"{tuple(to)} is not in prime snake position after {tuple(frm)}")
    return _snake_lowered(alg, frm[0], frm[1], to[0], to[1])


# -- moves -------------------------------------------------------------------------


def _check_move_point(alg, j, l):
    check_point(alg, j, l, shifted=True)


def can_lower(p: Path, j: int, l: int, alg: Algebra | None = None) -> bool:
    alg = p.alg
    _check_move_point(alg, j, l)
    r = alg.r(j)
    up = corners(p).upper
    return (j, l - r) in up and (j, l + r) not in up


def can_raise(p: Path, j: int, l: int, alg: Algebra | None = None) -> bool:
    alg = p.alg
    _check_move_point(alg, j, l)
    r = alg.r(j)
    low = corners(p).lower
    return (j, l + r) in low and (j, l - r) not in low


def _moved(p: Path, j: int, l: int, sign: int) -> Path:
    alg = p.alg
    target = path_monomial(p) * YMonomial(alg.a_exps(j, l)) ** sign
    q = path_by_monomial(alg, p.i, p.k, target)
    if q is None:
        raise AssertionError(f"move at ({j},{l}) left P_{p.i},{p.k}")
    return q


def lower(p: Path, j: int, l: int, alg: Algebra | None = None) -> Path:
    if not can_lower(p, j, l):
        raise MoveNotApplicable(f"cannot lower {p} at ({j},{l})")
    return _moved(p, j, l, -1)


def raise_(p: Path, j: int, l: int, alg: Algebra | None = None) -> Path:
    if not can_raise(p, j, l):
        raise MoveNotApplicable(f"cannot raise {p} at ({j},{l})")
    return _moved(p, j, l, 1)


def lowering_moves(p: Path) -> list[tuple[int, int]]:
    alg = p.alg
    out = []
    for j, k in sorted(corners(p).upper):
        l = k + alg.r(j)
        if can_lower(p, j, l):
            out.append((j, l))
    return out


def raising_moves(p: Path) -> list[tuple[int, int]]:
    alg = p.alg
    out = []
    for j, k in sorted(corners(p).lower):
        l = k - alg.r(j)
        if can_raise(p, j, l):
            out.append((j, l))
    return out


# -- comparisons -------------------------------------------------------------------


def strictly_above(p: Path, q: Path) -> bool:
    qc = q.columns()
    for x, hs in p.columns().items():
        other = qc.get(x)
        if other is not None and max(hs) >= min(other):
            return False
    return True


def weakly_above(p: Path, q: Path) -> bool:
    """Pointwise comparison of two paths of the same set P_{i,k}."""
    if (p.alg, p.i, p.k) != (q.alg, q.i, q.k):
        raise ShapeMismatch("paths belong to different sets")
    return all(height_key(*a[1:]) <= height_key(*b[1:]) for a, b in zip(p.points, q.points))


def bott(p: Path, q: Path) -> Path:
    if (p.alg, p.i, p.k) != (q.alg, q.i, q.k):
        raise ShapeMismatch("bott needs two paths of the same P_{i,k}")
    pts = []
    for a, b in zip(p.points, q.points):
        if a[0] != b[0]:
            raise ShapeMismatch("paths visit columns in different orders")
        pts.append(a if height_key(*a[1:]) >= height_key(*b[1:]) else b)
    out = Path(p.alg, p.i, p.k, tuple(pts))
    if out not in _membership(p.alg, p.i, p.k):
        raise AssertionError("pointwise maximum left the path set")
    return out


def plane_anchor(alg: Algebra, i: int, k: int) -> Point3:
    """The point a highest path of P_{i,k} passes through."""
    if alg.is_b and i == alg.rank:
        return (2 * alg.rank - 1, k, -1)
    x, y = iota(alg, i, k)
    return (x, y, 0)
