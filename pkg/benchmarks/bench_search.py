"""Time the compiled and numpy scan kernels on the standard searches.

    python3 benchmarks/bench_search.py [--repeat N]
"""
import argparse
import time

from liehodge import _scan_py
from liehodge import lattice as L
from liehodge import search as S

try:
    from liehodge import _scan
except ImportError:
    _scan = None

CASES = [("E6", 26, None), ("E7", 15, "odd"), ("E7", 55, "odd")]


def _time(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()

    kernels = [("numpy", _scan_py.scan)]
    if _scan is not None:
        kernels.insert(0, ("cython", _scan.scan))
    else:
        print("compiled kernel not built; timing numpy only")

    print(f"{'case':<14}{'kernel':<8}{'seconds':>9}{'candidates':>12}{'rows':>6}")
    for label, bound, parity in CASES:
        rs = L.root_system(label)
        results = []
        for name, kernel in kernels:
            secs, res = _time(lambda: S.search_hodge_rows(rs, bound=bound, parity=parity, scanner=kernel),
                              args.repeat)
            results.append(res)
            case = f"{label} B={bound}"
            print(f"{case:<14}{name:<8}{secs:>9.3f}{res.candidates:>12}{len(res.rows):>6}")
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"kernels disagree on {label} B={bound}")
    print("kernels agree" if len(kernels) == 2 else "")


if __name__ == "__main__":
    main()
