"""Benchmark the compiled Gram-check kernel against the pure-Python fallback.

Usage: python bench/bench_verify.py [max_k]
"""

import sys
import time

from coinmard import _gram_py
from coinmard.hadamard import pack_rows, sylvester

try:
    from coinmard import _gram
except ImportError:
    _gram = None


def time_kernel(fn, packed, n, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(packed, n)
        best = min(best, time.perf_counter() - start)
        assert result is None
    return best


def main():
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    print(f"{'order':>6} {'compiled':>12} {'python':>12} {'speedup':>8}")
    for k in range(8, max_k + 1):
        m = sylvester(k)
        packed = pack_rows(m.n, m.rows)
        t_py = time_kernel(_gram_py.first_violation, packed, m.n)
        if _gram is None:
            print(f"{m.n:>6} {'n/a':>12} {t_py * 1000:>10.1f}ms {'':>8}")
            continue
        t_c = time_kernel(_gram.first_violation, packed, m.n)
        print(f"{m.n:>6} {t_c * 1000:>10.1f}ms {t_py * 1000:>10.1f}ms {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
