"""Time the compiled kernels against the numpy fallback.

Usage::

    python benchmarks/bench_kernels.py [--repeat 20]

Shapes follow the LeNet-5 convolution and pooling layers at batch 128.
"""

import argparse
import timeit

import numpy as np

from marsrank.kernels import backends

CASES = {
    "im2col conv1 (128,1,28,28) k5": ("im2col", (128, 1, 28, 28), 5),
    "im2col conv2 (128,20,12,12) k5": ("im2col", (128, 20, 12, 12), 5),
    "col2im conv2 (128,20,12,12) k5": ("col2im", (128, 20, 12, 12), 5),
    "maxpool fwd (128,20,24,24)": ("pool", (128, 20, 24, 24), 2),
    "maxpool bwd (128,20,24,24)": ("pool_bwd", (128, 20, 24, 24), 2),
}


def make_call(mod, op, shape, k, rng):
    x = rng.normal(size=shape)
    B, C, H, W = shape
    if op == "im2col":
        return lambda: mod.im2col(x, k, k, 1, 0)
    if op == "col2im":
        cols = mod.im2col(x, k, k, 1, 0)
        return lambda: mod.col2im(cols, C, H, W, k, k, 1, 0)
    out, arg = mod.maxpool_forward(x, k, k)
    if op == "pool":
        return lambda: mod.maxpool_forward(x, k, k)
    return lambda: mod.maxpool_backward(out, arg, H, W)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    mods = backends()
    rng = np.random.default_rng(0)
    names = sorted(mods)
    print(f"{'case':<34}" + "".join(f"{n:>12}" for n in names) + ("     speed-up" if len(names) > 1 else ""))
    for label, (op, shape, k) in CASES.items():
        times = {}
        for n in names:
            fn = make_call(mods[n], op, shape, k, rng)
            fn()
            times[n] = min(timeit.repeat(fn, number=1, repeat=args.repeat)) * 1e3
        row = f"{label:<34}" + "".join(f"{times[n]:>10.2f}ms" for n in names)
        if "cython" in times:
            row += f"{times['numpy'] / times['cython']:>12.2f}x"
        print(row)


if __name__ == "__main__":
    main()
