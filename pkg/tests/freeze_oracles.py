"""Regenerate tests/data/oracles.json from the reference computations.

Run from the tests directory: python3 freeze_oracles.py
"""
import json
from pathlib import Path

import oracles

TYPE_A_CASES = [
    (1, [(1, 0)]),
    (2, [(1, 0)]),
    (2, [(2, 1)]),
    (2, [(1, 0), (1, 2)]),
    (2, [(1, 0), (2, 3)]),
    (2, [(1, 0), (1, 2), (1, 4)]),
    (3, [(2, 1), (2, 3), (2, 5)]),
    (3, [(1, 0), (2, 3), (1, 6)]),
    (3, [(1, 0), (3, 4)]),
    (4, [(2, 1), (3, 4)]),
]


def encode(counter):
    rows = []
    for mon, c in counter.items():
        rows.append([sorted([list(p) if isinstance(p, tuple) else p, e] for p, e in mon), c])
    return sorted(rows)


def main():
    data = {
        "type_a_characters": [
            {"rank": n, "snake": [list(p) for p in pts],
             "terms": encode(oracles.brute_type_a_character(n, pts))}
            for n, pts in TYPE_A_CASES
        ],
        "type_a_path_counts": {f"A{n}": [oracles.path_count_a(n, i) for i in range(1, n + 1)]
                               for n in range(1, 7)},
        "b2_weyl": [
            {"lam": [a, b], "dim": oracles.weyl_dim_b2(a, b),
             "numerator": sorted([list(w), c] for w, c in oracles.weyl_group_numerator_b2(a, b).items()),
             "character": sorted([list(w), c] for w, c in oracles.b2_character_by_division(a, b).items())}
            for a in range(4) for b in range(4)
        ],
        "sl2_strings": [
            {"start": 0, "length": m, "terms": encode(oracles.sl2_string_brute(0, m))}
            for m in range(1, 6)
        ],
        "sl2_weyl": [
            {"shifts": list(sh), "terms": encode(oracles.sl2_weyl_brute(sh))}
            for sh in [(0,), (0, 2), (0, 0), (0, 2, 4), (0, 0, 2), (0, 4)]
        ],
    }
    out = Path(__file__).with_name("data") / "oracles.json"
    out.write_text(json.dumps(data, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
