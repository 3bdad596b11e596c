"""Snake positions, validated snakes, neighbouring points and neighbouring snakes."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import (
    AssignmentFailed,
    InputError,
    InvalidLatticePoint,
    NotASnake,
    NotPrime,
    NotPrimePosition,
    SnakeTooShort,
)
from .lattice import Algebra, check_point, in_lattice, iota
from .laurent import YMonomial, height

NONE, SNAKE, MINIMAL = "none", "snake", "minimal"


class Position(NamedTuple):
    kind: str
    prime: bool

    @property
    def is_snake(self) -> bool:
        return self.kind != NONE


def _bounds(alg: Algebra, i: int, i2: int) -> tuple[int, int, int | None]:
    """(lower bound, residue mod 4 or None, prime upper bound) for k'-k."""
    n = alg.rank
    if not alg.is_b:
        # the reflected bound 2N+2-i-i' is the image of i+i' under i -> N+1-i
        return abs(i2 - i) + 2, None, min(i + i2, 2 * n + 2 - i - i2)
    d = abs(i2 - i)
    if i == i2 == n:
        return 2, 2, 4 * n - 2
    if i == n or i2 == n:
        return 2 * d + 3, (2 * d - 1) % 4, 2 * i + 2 * i2 - 1
    return 2 * d + 4, (2 * d) % 4, 2 * i + 2 * i2


def position_kind(alg: Algebra, p, q) -> Position:
    (i, k), (i2, k2) = p, q
    check_point(alg, i, k)
    check_point(alg, i2, k2)
    low, res, high = _bounds(alg, i, i2)
    gap = k2 - k
    if gap < low or (res is not None and gap % 4 != res):
        return Position(NONE, False)
    return Position(MINIMAL if gap == low else SNAKE, gap <= high)


@dataclass(frozen=True)
class Snake:
    alg: Algebra
    points: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, idx):
        return self.points[idx]

    def __str__(self):
        return ",".join(f"({i},{k})" for i, k in self.points) or "()"

    @cached_property
    def positions(self) -> tuple[Position, ...]:
        return tuple(position_kind(self.alg, a, b) for a, b in zip(self.points, self.points[1:]))

    @property
    def minimal(self) -> bool:
        return all(p.kind == MINIMAL for p in self.positions)

    @property
    def prime(self) -> bool:
        return all(p.prime for p in self.positions)

    def monomial(self) -> YMonomial:
        return YMonomial.from_points(self.points)

    def drop_last(self) -> "Snake":
        return Snake(self.alg, self.points[:-1])

    def drop_first(self) -> "Snake":
        return Snake(self.alg, self.points[1:])

    def shifted(self, c: int) -> "Snake":
        return Snake(self.alg, tuple((i, k + c) for i, k in self.points))

    def to_json(self) -> list:
        return [list(p) for p in self.points]


def validate_snake(alg: Algebra, pts) -> Snake:
    points = []
    for idx, p in enumerate(pts):
        try:
            i, k = (int(v) for v in p)
            check_point(alg, i, k)
        except InvalidLatticePoint as exc:
            raise NotASnake(f"point {idx}: {exc}", index=idx) from exc
        except (TypeError, ValueError) as exc:
            raise NotASnake(f"point {idx} is not a pair of integers", index=idx) from exc
        points.append((i, k))
    for idx in range(1, len(points)):
        if not position_kind(alg, points[idx - 1], points[idx]).is_snake:
            raise NotASnake(
                f"{points[idx]} is not in snake position after {points[idx - 1]}", index=idx
            )
    return Snake(alg, tuple(points))


_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_snake_text(text: str) -> list[tuple[int, int]]:
    """Parse the "(i,k),(i,k),..." syntax (whitespace allowed)."""
    stripped = text.strip()
    if stripped in ("", "()"):
        return []
    pts = [(int(a), int(b)) for a, b in _PAIR_RE.findall(stripped)]
    rebuilt = _PAIR_RE.sub("", stripped).replace(",", "").strip()
    if rebuilt or not pts:
        raise InputError(f"cannot parse snake {text!r}")
    return pts


# -- neighbouring points ------------------------------------------------------------


def _starts_left(alg: Algebra, i: int, k: int) -> bool:
    """Whether paths of P_{i,k} are traversed starting from column 0."""
    if not alg.is_b:
        return True
    n = alg.rank
    first = k if i == n else k - (2 * n - 2 * i - 1)
    return first % 4 == 3


def neighbouring_points(alg: Algebra, p, q) -> tuple[tuple, tuple]:
    """Upper corners of the snake-lowered path, split at its lower corner.

    The first group is the one lying on the column-0 side of the lower corner
    and the second the one on the far side.
    """
    from .paths import corners, iota_inverse, snake_lowered_path

    path = snake_lowered_path(alg, p, q)
    cs = corners(path)
    seq = []
    pts = path.points
    n = alg.rank
    seen = set()
    lower_at = None
    for r, (x, b, e) in enumerate(pts):
        if alg.is_b and x == 2 * n - 1:
            pt = (n, b)
        else:
            try:
                pt = iota_inverse(alg, x, b)
            except InvalidLatticePoint:
                continue
        if pt in seen:
            continue
        if pt in cs.lower:
            lower_at = len(seq)
            seq.append(pt)
            seen.add(pt)
        elif pt in cs.upper:
            seq.append(pt)
            seen.add(pt)
    before = tuple(sorted(seq[:lower_at], key=lambda t: (t[1], t[0])))
    after = tuple(sorted(seq[lower_at + 1 :], key=lambda t: (t[1], t[0])))
    if len(before) + len(after) != len(cs.upper):
        raise AssertionError("corner bookkeeping failed")
    if _starts_left(alg, *p):
        return before, after
    return after, before


def closed_form_neighbours(alg: Algebra, p, q) -> tuple[tuple, tuple]:
    """Closed-form neighbouring points, used as an independent cross-check.

    Type B entries for i = N, i' < N are given in their parity-consistent
    form; see the project notes for the reading adopted there.
    """
    (i, k), (i2, k2) = p, q
    if not position_kind(alg, p, q).prime:
        raise NotPrimePosition(f"{q} is not in prime snake position after {p}")
    n = alg.rank
    gap = k2 - k
    if not alg.is_b:
        x = () if k + i == k2 - i2 else (((i + k + i2 - k2) // 2, (i + k - i2 + k2) // 2),)
        y = () if k + n + 1 - i == k2 - (n + 1 - i2) else (((i2 + k2 + i - k) // 2, (i2 + k2 - i + k) // 2),)
        return x, y

    def quarter(num, shift2):
        if num % 4 or shift2 % 2:
            raise AssertionError("non-integral neighbouring point")
        return () if num == 0 else ((num // 4, shift2 // 2),)

    if i < n and i2 < n:
        back = () if gap == 2 * i + 2 * i2 else quarter(2 * i + k + 2 * i2 - k2, 2 * i + k - 2 * i2 + k2)
        if gap <= 4 * n - 4 - 2 * i - 2 * i2:
            fwd = quarter(2 * i2 + k2 + 2 * i - k, 2 * i2 + k2 - 2 * i + k)
        else:
            fwd = ((n, k + 2 * n - 1 - 2 * i), (n, k2 - 2 * n + 1 + 2 * i2))
    elif i < n:
        back = () if gap == 2 * i + 2 * n - 1 else quarter(2 * i + k + 2 * n - 1 - k2, 2 * i + k - 2 * n + 1 + k2)
        fwd = ((n, k + 2 * n - 1 - 2 * i),)
    elif i2 < n:
        back = ((n, k2 - 2 * n + 1 + 2 * i2),)
        if gap == 2 * n - 1 + 2 * i2:
            fwd = ()
        else:
            fwd = quarter(2 * n - 1 + k + 2 * i2 - k2, 2 * n - 1 + k - 2 * i2 + k2)
    else:
        back = ()
        fwd = quarter(4 * n - 2 + k - k2, k + k2)
    left = (2 * n - 2 * i - k) % 4 == 2 if i < n else k % 4 == 1
    return (back, fwd) if left else (fwd, back)


# -- neighbouring snakes -------------------------------------------------------------


@dataclass(frozen=True)
class NeighbourPair:
    x: Snake
    y: Snake
    swaps: tuple[int, ...] = ()


def _chain_ok(alg: Algebra, chain: list, group: tuple) -> bool:
    prev = chain[-1] if chain else None
    for pt in group:
        if prev is not None and not position_kind(alg, prev, pt).is_snake:
            return False
        prev = pt
    return True


def neighbour_snakes(s: Snake) -> NeighbourPair:
    """Concatenate neighbouring points into two chains.

    Each adjacent pair contributes two groups; the search tries, pair by pair,
    the geometric orientation first and the swapped one second, returning the
    first assignment (in that lexicographic order) under which both chains are
    snakes with no common point.
    """
    if len(s) < 2:
        raise SnakeTooShort("neighbouring snakes need at least two points")
    if not s.prime:
        raise NotPrime(f"snake {s} is not prime")
    alg = s.alg
    groups = [neighbouring_points(alg, a, b) for a, b in zip(s.points, s.points[1:])]

    def search(t, xs, ys, bits):
        if t == len(groups):
            if set(xs) & set(ys):
                return None
            return xs, ys, bits
        g0, g1 = groups[t]
        for bit, (gx, gy) in enumerate(((g0, g1), (g1, g0))):
            if _chain_ok(alg, xs, gx) and _chain_ok(alg, ys, gy):
                found = search(t + 1, xs + list(gx), ys + list(gy), bits + (bit,))
                if found:
                    return found
        return None

    found = search(0, [], [], ())
    if found is None:
        raise AssignmentFailed(f"no valid neighbour assignment for {s}", data=groups)
    xs, ys, bits = found
    return NeighbourPair(Snake(alg, tuple(xs)), Snake(alg, tuple(ys)), bits)


def neighbour_heights_ok(s: Snake, pair: NeighbourPair) -> bool:
    """Neighbours are never higher than the snake.

    Equality needs type B with both end points on the spinor node; this is
    wider than the all-spinor case, e.g. B3 (3,1),(2,6),(3,11) has the
    neighbour (1,4),(1,8) of the same height.
    """
    alg = s.alg
    top = height(s.monomial(), alg)
    spinor_ends = alg.is_b and s.points[0][0] == alg.rank == s.points[-1][0]
    for side in (pair.x, pair.y):
        h = height(side.monomial(), alg)
        if h > top or (h == top and not spinor_ends):
            return False
    return True


# -- classification -----------------------------------------------------------------


def _monotonic(seq) -> bool:
    seq = list(seq)
    return all(a <= b for a, b in zip(seq, seq[1:])) or all(a >= b for a, b in zip(seq, seq[1:]))


def is_minimal_affinization(s: Snake) -> bool:
    return s.minimal and _monotonic(i for i, _ in s.points)


def is_wrapping(s: Snake) -> bool:
    return s.minimal and _monotonic(iota(s.alg, i, k)[0] for i, k in s.points)


def prime_decomposition(s: Snake) -> list[Snake]:
    if not s.points:
        return []
    out, cur = [], [s.points[0]]
    for pos, pt in zip(s.positions, s.points[1:]):
        if pos.prime:
            cur.append(pt)
        else:
            out.append(Snake(s.alg, tuple(cur)))
            cur = [pt]
    out.append(Snake(s.alg, tuple(cur)))
    return out


def snakes_in_window(alg: Algebra, length: int, kmin: int, kmax: int, prime_only=False):
    """All snakes of a given length with every shift in [kmin, kmax]."""
    pts = [(i, k) for k in range(kmin, kmax + 1) for i in alg.nodes if in_lattice(alg, i, k)]

    def grow(prefix):
        if len(prefix) == length:
            yield Snake(alg, tuple(prefix))
            return
        last = prefix[-1]
        for q in pts:
            if q[1] <= last[1]:
                continue
            pos = position_kind(alg, last, q)
            if pos.is_snake and (pos.prime or not prime_only):
                yield from grow(prefix + [q])

    if length == 0:
        yield Snake(alg, ())
        return
    for p in pts:
        yield from grow([p])
