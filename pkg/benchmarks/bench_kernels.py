"""Time the compiled and pure-Python subset-enumeration kernels.

    python benchmarks/bench_kernels.py [--sizes 8 10 12 14] [--repeat 3]

Both backends must return identical sums; the script stops if they differ.
"""

from __future__ import annotations

import argparse
import random
import time

from airportfees import _kernels, _pykernels


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def _nested(x):
    return x.tolist() if hasattr(x, "tolist") else x


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 10, 12, 14])
    ap.add_argument("--blocks", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    if "compiled" not in _kernels.available_backends():
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    from airportfees import _ckernels

    rng = random.Random(args.seed)
    print(f"{'kernel':<14}{'n':>4}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for n in args.sizes:
        table = [0] + [rng.randint(0, 10**6) for _ in range((1 << n) - 1)]
        blocks = [0] * args.blocks
        for i in range(n):
            blocks[rng.randrange(args.blocks)] |= 1 << i
            blocks[rng.randrange(args.blocks)] |= 1 << i
        blocks = tuple(b for b in blocks if b)
        cases = [
            ("shapley", lambda: _pykernels.shapley_sums(table, n), lambda: _ckernels.shapley_sums(table, n)),
            ("configuration", lambda: _pykernels.configuration_sums(table, n, blocks),
             lambda: _ckernels.configuration_sums(table, n, blocks)),
        ]
        for name, slow, fast in cases:
            t_py, out_py = _time(slow, args.repeat)
            t_c, out_c = _time(fast, args.repeat)
            if _nested(out_py) != _nested(out_c):
                raise SystemExit(f"{name} n={n}: backends disagree")
            print(f"{name:<14}{n:>4}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>9.1f}x")


if __name__ == "__main__":
    main()
