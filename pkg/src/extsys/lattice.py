"""Cartan data for types A_N and B_N, the parity lattices and the plane embedding."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, InvalidLatticePoint, OutOfRange

TYPE_A = "A"
TYPE_B = "B"


@dataclass(frozen=True)
class Algebra:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in (TYPE_A, TYPE_B):
            raise InputError(f"unknown type {self.kind!r}")
        if not isinstance(self.rank, int) or self.rank < (1 if self.kind == TYPE_A else 2):
            raise InputError(f"bad rank {self.rank!r} for type {self.kind}")

    def __str__(self):
        return f"{self.kind}{self.rank}"

    @property
    def is_b(self) -> bool:
        return self.kind == TYPE_B

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def r(self, i: int) -> int:
        """Symmetrizer r_i; node 0 and node N+1 get the value used by the boundary formulas."""
        if self.kind == TYPE_A:
            return 1
        return 1 if i == self.rank else 2

    def cartan(self, i: int, j: int) -> int:
        """C_ij = 2<a_i,a_j>/<a_i,a_i>."""
        if i == j:
            return 2
        if abs(i - j) != 1:
            return 0
        if self.kind == TYPE_B and i == self.rank:
            return -2
        return -1

    @cached_property
    def width(self) -> int:
        """Number of columns of the path plane."""
        return self.rank + 2 if self.kind == TYPE_A else 4 * self.rank - 1

    @cached_property
    def spinor_column(self) -> int | None:
        return 2 * self.rank - 1 if self.kind == TYPE_B else None

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise OutOfRange(f"node {i} outside 1..{self.rank} for {self}")

    def a_exps(self, i: int, k: int) -> dict[tuple[int, int], int]:
        """Exponents of the Y-variables in A_{i,k} (no validation)."""
        ri = self.r(i)
        out = {(i, k - ri): 1, (i, k + ri): 1}
        for j in (i - 1, i + 1):
            if not 1 <= j <= self.rank:
                continue
            c = self.cartan(j, i)
            if c == -1:
                out[(j, k)] = -1
            elif c == -2:
                out[(j, k - 1)] = -1
                out[(j, k + 1)] = -1
        return out


_ALG_RE = re.compile(r"^\s*([AaBb])\s*(\d+)\s*$")


def parse_algebra(text: str) -> Algebra:
    m = _ALG_RE.match(text)
    if not m:
        raise InputError(f"cannot parse algebra {text!r}; expected e.g. A2 or B3")
    return Algebra(m.group(1).upper(), int(m.group(2)))


def algebra_from_json(obj) -> Algebra:
    try:
        return Algebra(str(obj["kind"]), int(obj["rank"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad algebra object {obj!r}") from exc


def algebra_to_json(alg: Algebra) -> dict:
    return {"kind": alg.kind, "rank": alg.rank}


def in_lattice(alg: Algebra, i: int, k: int, shifted: bool = False) -> bool:
    alg.check_node(i)
    if shifted:
        k -= alg.r(i)
    if alg.kind == TYPE_A:
        return (i - k) % 2 == 1
    if i == alg.rank:
        return k % 2 == 1
    return k % 2 == 0


def check_point(alg: Algebra, i: int, k: int, shifted: bool = False) -> None:
    try:
        ok = in_lattice(alg, i, k, shifted)
    except OutOfRange as exc:
        raise InvalidLatticePoint(str(exc)) from exc
    if not ok:
        name = "shifted lattice" if shifted else "lattice"
        raise InvalidLatticePoint(f"({i},{k}) is not in the {name} of {alg}")


def iota(alg: Algebra, i: int, k: int) -> tuple[int, int]:
    check_point(alg, i, k)
    if alg.kind == TYPE_A:
        return (i, k)
    n = alg.rank
    if i == n:
        return (2 * n - 1, k)
    if (2 * n + k - 2 * i) % 4 == 2:
        return (2 * i, k)
    return (4 * n - 2 - 2 * i, k)


def iota_inverse(alg: Algebra, x: int, y: int) -> tuple[int, int]:
    """Inverse of iota on its image; raises InvalidLatticePoint elsewhere."""
    if alg.kind == TYPE_A:
        pt = (x, y)
    else:
        n = alg.rank
        if x == 2 * n - 1:
            pt = (n, y)
        elif x % 2 or not 0 < x < 4 * n - 2:
            raise InvalidLatticePoint(f"plane point ({x},{y}) is not in the image of iota")
        elif x < 2 * n - 1:
            pt = (x // 2, y)
        else:
            pt = ((4 * n - 2 - x) // 2, y)
    if not 1 <= pt[0] <= alg.rank or iota(alg, *pt) != (x, y):
        raise InvalidLatticePoint(f"plane point ({x},{y}) is not in the image of iota")
    return pt


def a_monomial(alg: Algebra, i: int, k: int):
    from .laurent import YMonomial

    check_point(alg, i, k, shifted=True)
    return YMonomial(alg.a_exps(i, k))


def simple_root(alg: Algebra, i: int) -> tuple[int, ...]:
    """Column i of the Cartan matrix."""
    return tuple(alg.cartan(j, i) for j in alg.nodes)
