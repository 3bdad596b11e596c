"""Compare the compiled and pure-Python tuple enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from extsys import _kernel_py
from extsys.lattice import Algebra
from extsys.qchar import _path_arrays
from extsys.snakes import validate_snake

try:
    from extsys import _kernel
except ImportError:
    _kernel = None

CASES = [
    ("A3", [(1, 0), (2, 3), (3, 6)]),
    ("A4", [(2, 1), (2, 3), (3, 6), (4, 9)]),
    ("B2", [(1, 0), (2, 5), (1, 10)]),
    ("B3", [(1, 0), (1, 4), (3, 11)]),
    ("B3", [(1, 0), (1, 4), (1, 8), (3, 15)]),
]


def arrays(name, pts):
    s = validate_snake(Algebra(name[0], int(name[1:])), pts)
    lo, hi = zip(*(_path_arrays(s.alg, i, k) for i, k in s.points))
    return list(lo), list(hi)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernels = [("python", _kernel_py.enumerate_tuples)]
    if _kernel is not None:
        kernels.append(("cython", _kernel.enumerate_tuples))
    else:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'case':<32}{'tuples':>8}" + "".join(f"{n + ' ms':>12}" for n, _ in kernels) + f"{'speedup':>10}")
    for name, pts in CASES:
        lo, hi = arrays(name, pts)
        count = len(_kernel_py.enumerate_tuples(lo, hi, 10**8)[0])
        times = []
        for _, fn in kernels:
            best = min(timeit.repeat(lambda: fn(lo, hi, 10**8), number=1, repeat=args.repeat))
            times.append(best * 1e3)
        label = f"{name} {pts}"
        if len(label) > 30:
            label = label[:27] + "..."
        speed = f"{times[0] / times[-1]:.1f}x" if len(times) > 1 else "-"
        print(f"{label:<32}{count:>8}" + "".join(f"{t:>12.2f}" for t in times) + f"{speed:>10}")


if __name__ == "__main__":
    main()
