"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_enumerate.py [--orders 4 5 6 7] [--repeat 3]

Both kernels run the same backtracking search; the script checks that they
return identical results and reports the best wall-clock time of each.
"""

from __future__ import annotations

import argparse
import time

from peakit import _search_py

try:
    from peakit import _search as _compiled
except ImportError:
    _compiled = None


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=[4, 5, 6, 7])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--labeled", action="store_true", help="time labeled search instead")
    args = ap.parse_args()
    if _compiled is None:
        raise SystemExit("compiled kernel not built; run `pip install -e . --no-build-isolation`")

    print(f"{'order':>5} {'models':>7} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for n in args.orders:
        tp, rp = best_time(lambda: _search_py.search(n, args.labeled), args.repeat)
        tc, rc = best_time(lambda: _compiled.search(n, args.labeled), args.repeat)
        if rp != rc:
            raise SystemExit(f"kernels disagree at order {n}")
        print(f"{n:>5} {len(rc):>7} {tp:>10.4f} {tc:>11.4f} {tp / max(tc, 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
