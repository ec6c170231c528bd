"""Compare the compiled and pure-Python kernels on identical workloads.

The kernel binds once at import, so each backend is timed in a fresh
subprocess with SUPERWEIL_BACKEND set; both run the same seeded inputs.
Workloads: raw element products, 5x5 graded matrix products, and full
Berezinians of invertible (4|1) matrices over Lambda(0, 6).
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _workloads(seed: int, reps: int):
    from .algebra import Parity, Signature
    from . import sampling

    sig = Signature(0, 6)
    rng = random.Random(seed)

    def dense(parity):
        x = sig.zero()
        for _ in range(10):
            x = x + sampling.soul_element(sig, rng, parity, 1)
        return x + sig.scalar(sampling.coeff(rng))

    pairs = [(dense(Parity.EVEN), dense(Parity.EVEN)) for _ in range(8)]
    mats = [sampling.random_group_matrix(sig, (4, 1), rng) for _ in range(4)]

    def element_mul():
        for x, y in pairs:
            x * y

    def matmul():
        mats[0] @ mats[1]
        mats[2] @ mats[3]

    def ber():
        from .matrix import berezinian

        berezinian(mats[0])

    return [("element_mul", element_mul, reps),
            ("matmul_4_1", matmul, reps),
            ("berezinian_4_1", ber, max(1, reps // 4))]


def run_worker(seed: int, reps: int) -> dict:
    from ._backend import BACKEND

    timings = {}
    for name, fn, n in _workloads(seed, reps):
        fn()  # warm caches
        t0 = time.perf_counter()
        for _ in range(n):
            fn()
        timings[name] = (time.perf_counter() - t0) / n
    return {"backend": BACKEND, "timings": timings}


def run_comparison(seed: int, reps: int) -> int:
    rows = {}
    for backend in ("compiled", "pure"):
        env = dict(os.environ, SUPERWEIL_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, "-m", "superweil.bench", "--worker",
             "--seed", str(seed), "--reps", str(reps)],
            capture_output=True, text=True, env=env,
        )
        if proc.returncode != 0:
            print(f"{backend}: unavailable")
            continue
        rows[backend] = json.loads(proc.stdout)["timings"]
    if not rows:
        print("no backend could run")
        return 2
    names = list(next(iter(rows.values())))
    print(f"{'workload':<16} " + " ".join(f"{b:>12}" for b in rows)
          + ("      speedup" if len(rows) == 2 else ""))
    for name in names:
        line = f"{name:<16} " + " ".join(
            f"{rows[b][name] * 1000:>10.3f}ms" for b in rows
        )
        if len(rows) == 2:
            compiled, pure = rows["compiled"][name], rows["pure"][name]
            line += f"      {pure / compiled:>6.2f}x"
        print(line)
    return 0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="superweil-bench")
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--reps", type=int, default=40)
    args = ap.parse_args(argv)
    if args.worker:
        print(json.dumps(run_worker(args.seed, args.reps)))
        return 0
    return run_comparison(args.seed, args.reps)


if __name__ == "__main__":
    sys.exit(main())
