"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import itertools
import random
import sys
import timeit

from skewgain import _pykernels

try:
    from skewgain import _ckernels
except ImportError:
    _ckernels = None


def complete_masks(n):
    return [((1 << n) - 1) & ~(1 << v) for v in range(n)]


def component_masks(n):
    adj = complete_masks(n)
    masks = [(1 << u) | (1 << v) for u, v in itertools.combinations(range(n), 2)]
    masks += [sum(1 << w for w in c) for c in _pykernels.simple_cycles(n, adj)]
    return masks


def random_poly(degree, seed=0):
    rng = random.Random(seed)
    return [1.0] + [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(degree)]


def cases():
    k8 = component_masks(8)
    poly = random_poly(40)
    return [
        ("simple_cycles K8", lambda impl: impl.simple_cycles(8, complete_masks(8))),
        ("simple_cycles K9", lambda impl: impl.simple_cycles(9, complete_masks(9))),
        ("disjoint_families K8", lambda impl: impl.disjoint_families(8, k8)),
        ("durand_kerner deg 40", lambda impl: impl.durand_kerner(poly)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available", file=sys.stderr)

    print(f"{'kernel':<24}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in cases():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<24}{py:>12.4f}{'-':>12}{'-':>10}")
            continue
        if not name.startswith("durand"):
            assert fn(_ckernels) == fn(_pykernels), name
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<24}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
