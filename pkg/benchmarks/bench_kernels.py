"""Time the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--size N]
"""

import argparse
import timeit

import numpy as np

from qdnn._kernels import backends


def cases(size, rng):
    r = rng.random(size)
    codes4 = (rng.integers(0, 16, size)).astype(np.uint8)
    packed4 = np.packbits(np.unpackbits(codes4[:, None], axis=1, bitorder="little")[:, :4], bitorder="little")
    x = rng.random((32, 16, 14, 14))
    return {
        "aligned_codes k=4": lambda k: k.aligned_codes(r, 4),
        "legacy_codes k=4": lambda k: k.legacy_codes(r, 4),
        "switch_codes 4->2": lambda k: k.switch_codes(codes4, 4, 2),
        "pack_codes k=4": lambda k: k.pack_codes(codes4, 4),
        "unpack_codes k=4": lambda k: k.unpack_codes(packed4, 4, size),
        "im2col 3x3 s1 p1": lambda k: k.im2col(x, 3, 3, 1, 1),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--size", type=int, default=1 << 20)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    impls = backends()
    names = list(impls)
    print(f"{'kernel':<22}" + "".join(f"{n:>14}" for n in names) + ("  py/cy ratio" if len(names) > 1 else ""))
    for label, fn in cases(args.size, rng).items():
        times = []
        for n in names:
            mod = impls[n]
            fn(mod)  # warm up
            times.append(min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)))
        row = f"{label:<22}" + "".join(f"{t * 1e3:>12.2f}ms" for t in times)
        if "python" in impls and "cython" in impls:
            row += f"{times[names.index('python')] / times[names.index('cython')]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
