"""The acceptance suite: eleven exact checks spanning every module."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from .b2restrict import (
    GCharacter, decompose, verify_b2_qsystem, weyl_dimension, wq_decompose, wq_dimension, wq_expected,
)
from .errors import BadParams, NotACharacter, NotInRootLattice
from .laurent import Character, Y, YMonomial, a_factorize, truncate_character
from .lattice import Algebra, in_lattice, parse_algebra
from .paths import enumerate_paths
from .qchar import qchar_snake, restrict_weights, snake_character
from .sl2core import (
    PreconditionFailed, exclusion_certificate, sl2_simple_qchar, sl2_trichotomy, sl2_truncate,
    thmA_verify,
)
from .snakes import Snake, snakes_in_window, validate_snake
from .tsystem import (
    Family, VerificationReport, extended_relation, family_instance, verify_nonprime, verify_relation,
)

WINDOW = (0, 24)
SAMPLE_SEED = 20240601


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"

    def to_json(self) -> dict:
        return {"number": self.number, "name": self.name, "passed": self.passed,
                "detail": self.detail, "seconds": round(self.seconds, 3)}


# -- shared snake sets ----------------------------------------------------------------


@lru_cache(maxsize=None)
def window_snakes(name: str) -> tuple[Snake, ...]:
    """Length 1-3 snakes in the test window; a seeded sample of 200 for B3."""
    alg = parse_algebra(name)
    out = [s for n in (1, 2, 3) for s in snakes_in_window(alg, n, *WINDOW)]
    if name == "B3":
        out = random.Random(SAMPLE_SEED).sample(out, 200)
    return tuple(out)


RELATION_ALGEBRAS = ("A2", "A3", "B2", "B3")


@lru_cache(maxsize=None)
def relation_reports() -> tuple[tuple[Snake, VerificationReport], ...]:
    out = []
    for name in RELATION_ALGEBRAS:
        for s in window_snakes(name):
            if len(s) >= 2 and s.prime:
                out.append((s, verify_relation(extended_relation(s))))
    return tuple(out)


def _spot(alg: str, pts) -> str:
    return verify_relation(extended_relation(validate_snake(parse_algebra(alg), pts))).dims_line()


# -- criteria -------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    bad = []
    for n in range(1, 7):
        alg = Algebra("A", n)
        for i in alg.nodes:
            base = (i + 1) % 2
            for k in (base, base + 2, base + 6):
                if len(enumerate_paths(alg, i, k)) != comb(n + 1, i):
                    bad.append((str(alg), i, k))
    for n in range(2, 6):
        alg = Algebra("B", n)
        for k in (1, 3, 5, 7):
            if len(enumerate_paths(alg, n, k)) != 2 ** n:
                bad.append((str(alg), n, k))
    return not bad, f"mismatches {bad}" if bad else "A1-A6 binomial, B2-B5 2^N"


def criterion_2() -> tuple[bool, str]:
    def chars(alg, pt):
        return set(snake_character(validate_snake(parse_algebra(alg), [pt])).monomials())

    a1 = {Y(1, 0), Y(1, 2, -1)}
    a2 = {Y(1, 0), Y(1, 2, -1) * Y(2, 1), Y(2, 3, -1)}
    b2 = {Y(2, 1), Y(1, 2) * Y(2, 3, -1), Y(2, 5) * Y(1, 6, -1), Y(2, 7, -1)}
    got = [chars("A1", (1, 0)) == a1, chars("A2", (1, 0)) == a2, chars("B2", (2, 1)) == b2]
    return all(got), f"A1/A2/B2 exact sets {got}"


def criterion_3() -> tuple[bool, str]:
    total, bad = 0, []
    for name in RELATION_ALGEBRAS:
        for s in window_snakes(name):
            rep = qchar_snake(s)
            total += 1
            if not (rep.thin and rep.special and rep.antispecial):
                bad.append(str(s))
    return not bad, f"{total} snakes" + (f", failures {bad[:5]}" if bad else "")


def criterion_4() -> tuple[bool, str]:
    reps = relation_reports()
    bad = [str(s) for s, r in reps if not r.identity_holds]
    spots = {
        "A2": _spot("A2", [(1, 0), (1, 2)]),
        "B2 spinor": _spot("B2", [(2, 1), (2, 3)]),
        "B2 triple": _spot("B2", [(1, 0), (2, 5), (1, 10)]),
    }
    want = {"A2": "3*3 = 6*1 + 1*3", "B2 spinor": "4*4 = 11*1 + 1*5",
            "B2 triple": "16*16 = 60*4 + 4*4"}
    ok = not bad and spots == want
    return ok, f"{len(reps)} relations, {len(bad)} failures; {spots}"


def criterion_5() -> tuple[bool, str]:
    reps = relation_reports()
    bad = [str(s) for s, r in reps
           if not (r.lhs_catalog_ok and len(r.lhs_dominant) == len(s))]
    return not bad, f"{len(reps)} catalogs" + (f", failures {bad[:5]}" if bad else "")


def criterion_6() -> tuple[bool, str]:
    reps = relation_reports()
    bad = [str(s) for s, r in reps if not r.xy_special]
    return not bad, f"{len(reps)} neighbour products" + (f", failures {bad[:5]}" if bad else "")


def criterion_7() -> tuple[bool, str]:
    pool = []
    for name in ("A2", "A3", "B2"):
        alg = parse_algebra(name)
        pool += [s for n in (2, 3) for s in snakes_in_window(alg, n, 0, 12) if not s.prime]
    sample = random.Random(SAMPLE_SEED).sample(pool, 50)
    bad = [str(s) for s in sample if not verify_nonprime(s)]
    lengths = sorted({len(s) for s in sample})
    return not bad, f"50 snakes of lengths {lengths}" + (f", failures {bad}" if bad else "")


def family_cases() -> list[tuple[Family, str, dict]]:
    cases = []
    for name in ("A3", "B2", "B3"):
        alg = parse_algebra(name)
        for i in alg.nodes:
            k = next(k for k in range(4) if in_lattice(alg, i, k))
            for m in (2, 3):
                cases.append((Family.KR, name, {"i": i, "k": k, "m": m}))
            for fam in (Family.TWO_NODE, Family.TWO_NODE_TILDE):
                for m, n in itertools.product((1, 2), repeat=2):
                    cases.append((fam, name, {"i": i, "k": k, "m": m, "n": n}))
    cases.append((Family.B_WRAPPING, "B2", {"k": 0, "lam": [1], "spin": 0, "lam_bar": [1]}))
    cases.append((Family.B_WRAPPING, "B3", {"k": 0, "lam": [1, 0], "spin": 0, "lam_bar": [1, 0]}))
    return cases


def criterion_8() -> tuple[bool, str]:
    built, skipped, bad = 0, 0, []
    for fam, name, params in family_cases():
        try:
            rel = family_instance(fam, parse_algebra(name), params)
        except BadParams:
            # outside the family's index range, e.g. two-node relations need node i+1
            skipped += 1
            continue
        except Exception as exc:  # FamilyMismatch or anything unexpected
            bad.append(f"{fam.value} {name} {params}: {exc}")
            continue
        built += 1
        if not verify_relation(rel).identity_holds:
            bad.append(f"{fam.value} {name} {params}: identity")
    smallest = family_instance(Family.B_WRAPPING, parse_algebra("B2"),
                               {"k": 0, "lam": [1], "spin": 0, "lam_bar": [1]}).top
    ok = not bad and smallest.points == ((1, 0), (2, 5), (1, 10))
    return ok, f"{built} instances, {skipped} out of range" + (f", failures {bad[:3]}" if bad else "")


def criterion_9() -> tuple[bool, str]:
    bad = []
    for m, n in itertools.product(range(3), repeat=2):
        for mid in range(6):
            if wq_decompose(m, mid, n) != wq_expected(m, mid, n):
                bad.append(("decomp", m, mid, n))
    for m, k, n in itertools.product(range(3), repeat=3):
        dim = sum(weyl_dimension(w) * c for w, c in wq_expected(m, 2 * k + 1, n).items())
        if dim != wq_dimension(m, k, n):
            bad.append(("dim", m, k, n))
    spot = [wq_dimension(*t) for t in ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 0, 1))]
    q = verify_b2_qsystem(2)
    ok = not bad and q.ok and spot == [4, 16, 24, 60]
    return ok, f"decompositions and dimensions {len(bad)} failures; dims {spot}; Q-system {len(q.checks)} checks ok={q.ok}"


def a1_tsystem(m: int, k: int = 0) -> bool:
    """chi(W_m(k)) chi(W_m(k+2)) = chi(W_{m+1}(k)) chi(W_{m-1}(k+2)) + 1 in type A1."""
    def w(length, start):
        if length == 0:
            return Character.one()
        return sl2_simple_qchar(YMonomial.from_points((1, start + 2 * t) for t in range(length)))

    return w(m, k) * w(m, k + 2) == w(m + 1, k) * w(m - 1, k + 2) + Character.one()


def trichotomy_domain(max_len: int = 5, top_shift: int = 8):
    """Multiplicity-free node-1 monomials, which include every single q-string."""
    shifts = range(0, top_shift + 1, 2)
    for n in range(1, max_len + 1):
        for combo in itertools.combinations(shifts, n):
            yield YMonomial.from_points((1, k) for k in combo)


def trichotomy_regions(top_shift: int = 8):
    odd = list(range(-1, top_shift + 3, 2))
    yield odd
    for n in (1, 2):
        yield from (list(c) for c in itertools.combinations(odd, n))


def trichotomy_scan() -> tuple[int, int, list[str]]:
    checked, skipped, bad = 0, 0, []
    for M in trichotomy_domain():
        simple = sl2_simple_qchar(M)
        for U in trichotomy_regions():
            trunc = sl2_truncate(simple, M, U, 1)
            if not trunc.is_thin():
                skipped += 1
                continue
            for m in trunc.sorted_terms():
                for a in U:
                    res = sl2_trichotomy(M, m[0], a, U)
                    checked += 1
                    if not res.consistent:
                        bad.append(f"M={M} m={m[0]} a={a} {res.case}")
    return checked, skipped, bad


def a1_fundamental_instance(mutilated: bool = False):
    alg = Algebra("A", 1)
    M = [Y(1, 0)] if mutilated else [Y(1, 0), Y(1, 2, -1)]
    return thmA_verify(alg, Y(1, 0), M, [(1, 1)])


def criterion_10() -> tuple[bool, str]:
    tsys = [a1_tsystem(m) for m in range(1, 5)]
    checked, skipped, bad = trichotomy_scan()
    good = a1_fundamental_instance().verdict
    mutilated = a1_fundamental_instance(mutilated=True).verdict
    certs = []
    for name in ("A2", "B2"):
        alg = parse_algebra(name)
        for s in snakes_in_window(alg, 3, 0, 16, prime_only=True):
            if s.points[0][1] <= 1:
                certs.append((str(s), exclusion_certificate(extended_relation(s), 2).ok))
    failed = [s for s, ok in certs if not ok]
    ok = all(tsys) and not bad and good and not mutilated and not failed
    return ok, (f"A1 T-system {tsys}; trichotomy {checked} cases ({skipped} non-thin regions), "
                f"{len(bad)} inconsistent; certificate {good}/{mutilated}; "
                f"{len(certs)} exclusion certificates, {len(failed)} failed")


def truncation_regions(s: Snake, rng: random.Random, extra: int = 2):
    c = snake_character(s)
    top = s.monomial()
    support = set()
    for m in c.monomials():
        support |= a_factorize(m, top, s.alg).support()
    pts = sorted(support, key=lambda p: (p[1], p[0]))
    yield c, top, pts
    yield c, top, pts[: len(pts) // 2]
    for _ in range(extra):
        yield c, top, [p for p in pts if rng.random() < 0.5]


def criterion_11() -> tuple[bool, str]:
    bad = []
    b2 = window_snakes("B2")
    for s in b2:
        try:
            mults = decompose(GCharacter(restrict_weights(snake_character(s), 2)))
        except NotACharacter as exc:
            bad.append(f"{s}: {exc}")
            continue
        if any(v < 0 for v in mults.values()):
            bad.append(str(s))
    rng = random.Random(SAMPLE_SEED)
    truncs = 0
    for name in ("A2", "A3", "B2", "B3"):
        alg = parse_algebra(name)
        for s in (s for n in (1, 2, 3) for s in snakes_in_window(alg, n, 0, 8)):
            for c, top, U in truncation_regions(s, rng):
                t = truncate_character(c, top, U, alg)
                cert = thmA_verify(alg, top, list(t.monomials()), U)
                truncs += 1
                if not (cert.verdict and Character.from_monomials(t.monomials()) == t):
                    bad.append(f"{s} U={U}")
    return not bad, (f"{len(b2)} B2 restrictions, {truncs} certified truncations"
                     + (f", failures {bad[:3]}" if bad else ""))


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "path counts", criterion_1),
    (2, "fundamental characters", criterion_2),
    (3, "thin, special, anti-special", criterion_3),
    (4, "three-term relation", criterion_4),
    (5, "dominant catalog of L*R", criterion_5),
    (6, "X*Y special", criterion_6),
    (7, "non-prime isomorphisms", criterion_7),
    (8, "families", criterion_8),
    (9, "B2 restriction and Q-system", criterion_9),
    (10, "rank-one machinery", criterion_10),
    (11, "cross-module consistency", criterion_11),
]


def run_criterion(number: int) -> CriterionResult:
    _, name, fn = CRITERIA[number - 1]
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except (NotInRootLattice, PreconditionFailed) as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, name, bool(passed), detail, time.perf_counter() - t0)


def run_all() -> list[CriterionResult]:
    return [run_criterion(n) for n, _, _ in CRITERIA]
