"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints the best time per backend for each kernel and the speedup.
"""

import argparse
import random
import timeit

import numpy as np

from bicoh import kernels
from bicoh.cubes import HexSource, center_frames


def dynnikov_case():
    rng = random.Random(0)
    words = []
    for _ in range(200):
        n = rng.randint(3, 8)
        words.append((n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(60))))

    def run():
        for n, w in words:
            kernels.dynnikov_apply([0, 1] * n, w)
    return run


def crossings_case():
    frames = center_frames(HexSource(), 20000)
    xs = np.ascontiguousarray(frames[:, :, 0])
    ys = np.ascontiguousarray(frames[:, :, 1])

    def run():
        kernels.crossing_events(xs, ys, 1e-12)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    original = kernels.BACKEND
    print(f"{'kernel':<12} {'backend':<10} {'best (ms)':>10}")
    try:
        for name, make in (("dynnikov", dynnikov_case), ("crossings", crossings_case)):
            run = make()
            best = {}
            for b in backends:
                kernels.use_backend(b)
                best[b] = min(timeit.repeat(run, number=1, repeat=args.repeat))
                print(f"{name:<12} {b:<10} {best[b] * 1e3:>10.2f}")
            if len(best) == 2:
                print(f"{name:<12} speedup    {best['python'] / best['compiled']:>10.1f}x")
    finally:
        kernels.use_backend(original)


if __name__ == "__main__":
    main()
