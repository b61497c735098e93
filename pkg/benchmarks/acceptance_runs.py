"""Train and prune the MNIST acceptance experiments.

Usage::

    python benchmarks/acceptance_runs.py soft hard lenet [--seeds 0 1 2] [--root acceptance]

Each run writes ``<root>/<config>-s<seed>/`` with ``checkpoint.mars``,
``metrics.log``, ``pruned.mars`` and ``pruned.mars.report``.  The
acceptance tests re-score these checkpoints on the MNIST test split.
"""

import argparse
import time
from pathlib import Path

from marsrank import cli

CONFIGS = {"soft": "mnist-2fc-soft", "hard": "mnist-2fc-hard", "lenet": "lenet5-tucker"}
DEFAULT_SEEDS = {"soft": (0, 1, 2), "hard": (0, 1, 2), "lenet": (0,)}


def run_dir(root, which, seed) -> Path:
    return Path(root) / f"{CONFIGS[which]}-s{seed}"


def run(which, seed, root="acceptance", quiet=False) -> Path:
    out = run_dir(root, which, seed)
    flags = ["--quiet"] if quiet else []
    code = cli.main([*flags, "train", "--config", CONFIGS[which], "--seed", str(seed), "--out-dir", str(out),
                     "--resume"])
    if code:
        raise SystemExit(f"training {which} seed {seed} failed with exit code {code}")
    code = cli.main([*flags, "prune", str(out / "checkpoint.mars"), "--out", str(out / "pruned.mars"), "--eval"])
    if code:
        raise SystemExit(f"pruning {which} seed {seed} failed with exit code {code}")
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("experiments", nargs="+", choices=sorted(CONFIGS))
    ap.add_argument("--seeds", type=int, nargs="*", default=None)
    ap.add_argument("--root", default="acceptance")
    args = ap.parse_args()
    for which in args.experiments:
        for seed in args.seeds if args.seeds is not None else DEFAULT_SEEDS[which]:
            t0 = time.perf_counter()
            out = run(which, seed, args.root)
            print(f"{which} seed {seed}: {out} in {time.perf_counter() - t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
