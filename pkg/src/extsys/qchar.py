"""q-characters of snake modules via non-overlapping path tuples."""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernel
from .errors import TooLarge
from .laurent import Character, YMonomial, weight
from .paths import _enumerate, path_monomial
from .snakes import Snake

DEFAULT_MAX_TUPLES = 10**7
_BIG = 1 << 60


def max_tuples() -> int:
    """The enumeration cap: EXTSYS_MAX_TUPLES if set, else 10^7."""
    raw = os.environ.get("EXTSYS_MAX_TUPLES")
    return int(raw) if raw else DEFAULT_MAX_TUPLES


@dataclass(frozen=True)
class QCharReport:
    character: Character
    thin: bool
    special: bool
    antispecial: bool
    dim: int
    dominant: list

    def to_json(self) -> dict:
        return {
            "character": self.character.to_json(),
            "thin": self.thin,
            "special": self.special,
            "antispecial": self.antispecial,
            "dim": self.dim,
            "dominant": [{"m": m.to_json(), "c": c} for m, c in self.dominant],
        }


@lru_cache(maxsize=None)
def _path_arrays(alg, i, k):
    """Per-column min/max height arrays of every path in P_{i,k}."""
    paths = _enumerate(alg, i, k)
    w = alg.width
    lo = np.full((len(paths), w), _BIG, dtype=np.int64)
    hi = np.full((len(paths), w), -_BIG, dtype=np.int64)
    for j, p in enumerate(paths):
        for x, hs in p.columns().items():
            lo[j, x] = min(hs)
            hi[j, x] = max(hs)
    lo.setflags(write=False)
    hi.setflags(write=False)
    return lo, hi


def enumerate_nonoverlapping(s: Snake, cap: int | None = None) -> np.ndarray:
    """Index tuples into P_{i_t,k_t} of all non-overlapping path tuples."""
    cap = max_tuples() if cap is None else cap
    alg = s.alg
    lo, hi = zip(*(_path_arrays(alg, i, k) for i, k in s.points)) if s.points else ((), ())
    tuples, visited, overflow = kernel.enumerate_tuples(list(lo), list(hi), cap)
    if overflow:
        bound = 1
        for a in lo:
            bound *= a.shape[0]
        raise TooLarge(
            f"enumeration for {s} exceeded the cap of {cap} visited tuples "
            f"(cartesian bound {bound})",
            bound=bound,
        )
    return tuples


def _character_from_tuples(s: Snake, tuples: np.ndarray) -> Character:
    alg = s.alg
    if not s.points:
        return Character.one()
    mons = [[path_monomial(p) for p in _enumerate(alg, i, k)] for i, k in s.points]
    index: dict = {}
    for row in mons:
        for m in row:
            for pt, _ in m.items():
                index.setdefault(pt, len(index))
    keys = sorted(index)
    index = {pt: n for n, pt in enumerate(keys)}
    dense = []
    for row in mons:
        mat = np.zeros((len(row), len(keys)), dtype=np.int32)
        for j, m in enumerate(row):
            for pt, e in m.items():
                mat[j, index[pt]] = e
        dense.append(mat)
    total = np.zeros((tuples.shape[0], len(keys)), dtype=np.int32)
    for t, mat in enumerate(dense):
        total += mat[tuples[:, t]]
    rows, counts = np.unique(total, axis=0, return_counts=True)
    terms = {}
    for row, c in zip(rows, counts):
        nz = np.nonzero(row)[0]
        terms[YMonomial._raw(tuple((keys[n], int(row[n])) for n in nz))] = int(c)
    return Character._raw(terms)


@lru_cache(maxsize=4096)
def _snake_character(s: Snake, cap: int) -> Character:
    return _character_from_tuples(s, enumerate_nonoverlapping(s, cap))


def snake_character(s: Snake, cap: int | None = None) -> Character:
    return _snake_character(s, max_tuples() if cap is None else cap)


def report(c: Character) -> QCharReport:
    dom = c.dominant_terms()
    return QCharReport(
        character=c,
        thin=c.is_thin(),
        special=len(dom) == 1 and dom[0][1] == 1,
        antispecial=c.is_antispecial() and c.antidominant_terms()[0][1] == 1,
        dim=c.dim(),
        dominant=dom,
    )


def qchar_snake(s: Snake, cap: int | None = None) -> QCharReport:
    return report(snake_character(s, cap))


def qchar_tensor(snakes, cap: int | None = None) -> Character:
    out = Character.one()
    for s in snakes:
        out = out * snake_character(s, cap)
    return out


def dominant_terms(c: Character):
    return c.dominant_terms()


def restrict_weights(c: Character, rank: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for m, coeff in c.items():
        w = weight(m, rank)
        out[w] = out.get(w, 0) + coeff
    return {w: v for w, v in sorted(out.items()) if v}
