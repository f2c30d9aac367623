"""Time the compiled propagation engine against the pure Python fallback.

Both engines expose the same two calls, so the comparison is direct: a
fixed_point sweep over every singleton and every pair seed set, and
repeated layer reconstruction from the standard 2-seed witness. Graphs
are counterexample family members of growing size, crossing the 64-bit
word boundary at delta 8 so the multiword path gets timed too.

    python3 benchmarks/bench_kernels.py --deltas 9 13 17
"""

import argparse
import itertools
import time

from powerdom import _pycore, families

try:
    from powerdom import _core
except ImportError:
    _core = None


def adjacency_masks(g):
    return [sum(1 << u for u in g.neighbors(v)) for v in range(g.n)]


def pair_sweep(core, n):
    fp = core.fixed_point
    for v in range(n):
        fp(1 << v)
    for u, v in itertools.combinations(range(n), 2):
        fp((1 << u) | (1 << v))


def layer_sweep(core, witness_mask, rounds):
    lm = core.layer_masks
    for _ in range(rounds):
        lm(witness_mask)


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--deltas", nargs="+", type=int, default=[9, 13, 17])
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--layer-rounds", type=int, default=500)
    args = ap.parse_args()

    if _core is None:
        print("compiled engine not built; timing the pure engine only")

    header = f"{'delta':>5} {'n':>5}  {'workload':<12} {'pure':>10}"
    if _core is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)

    for delta in args.deltas:
        g, spec = families.gen_h_delta(delta)
        masks = adjacency_masks(g)
        witness = (1 << 0) | (1 << (delta + 1))
        pure = _pycore.PropagationCore(masks, g.n)
        comp = _core.PropagationCore(masks, g.n) if _core is not None else None

        workloads = [
            ("pair sweep", lambda c: pair_sweep(c, g.n)),
            ("layers x%d" % args.layer_rounds,
             lambda c: layer_sweep(c, witness, args.layer_rounds)),
        ]
        for name, work in workloads:
            t_pure = best_of(lambda: work(pure), args.repeats)
            line = f"{delta:>5} {g.n:>5}  {name:<12} {t_pure:>9.4f}s"
            if comp is not None:
                t_comp = best_of(lambda: work(comp), args.repeats)
                line += f" {t_comp:>9.4f}s {t_pure / t_comp:>7.1f}x"
            print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
