"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from latinterp import _pykernels
from latinterp.order import boolean, chain, downsets_of

try:
    from latinterp import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = random.Random(0)
    five = downsets_of(["x", "y", "z"], [("x", "y"), ("x", "z")])
    for lat, n in ((chain(8), 3), (boolean(4), 2), (five, 4)):
        elems = list(lat.elements)
        coeffs = sorted(rng.choice(elems) for _ in range(1 << n))
        size = 1 << n
        yield (
            f"value_table {lat.description} n={n}",
            lambda k, c=coeffs, n=n, e=elems: k.value_table(c, n, e),
        )
        yield (
            f"enumerate_monotone {lat.description} n={n}",
            lambda k, n=n, e=elems, s=size, top=lat.top: k.enumerate_monotone(n, e, [0] * s, [top] * s, 10**7),
        )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    print(f"{'case':<50}" + "".join(f"{name:>12}" for name, _ in backends) + "     speedup")
    for label, fn in cases():
        times = []
        for _, k in backends:
            reference = fn(k)
            times.append(min(timeit.repeat(lambda: fn(k), number=1, repeat=args.repeat)))
            if fn(backends[0][1]) != reference:
                raise SystemExit(f"backends disagree on {label}")
        speedup = f"{times[0] / times[1]:10.1f}x" if len(times) == 2 else ""
        print(f"{label:<50}" + "".join(f"{t * 1e3:10.2f}ms" for t in times) + speedup)


if __name__ == "__main__":
    main()
