"""Compare the numba kernels with the plain Python fallback.

Each backend runs in its own interpreter, since the choice is made at import
time by ``DEGPOW_DISABLE_NUMBA``.  Run from the repository root:

    python benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _best(fn, repeat):
    times = []
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def child(repeat: int) -> dict:
    import numpy as np

    from degpow import _accel
    from degpow.constructions import clique, cycle, friendship, turan
    from degpow.counting import Pattern
    from degpow.kernels import embed_count, host_arrays, sweep_free_masks
    from degpow.search import ForbiddenFamily, Objective, _Packed, search_max

    res = {"backend": _accel.backend()}

    # warm up so compile time is not measured
    search_max(4, [cycle(4)], Objective.edges(), engine="naive")

    pat = Pattern.of(cycle(5))
    host = host_arrays(turan(12, 3).rows)
    res["embed_C5_in_T(12,3)"] = _best(
        lambda: int(embed_count(pat.order, pat.parent, pat.adj, pat.deg, *host, -1, False)), repeat
    )

    n = 6
    packed = _Packed(ForbiddenFamily.of([cycle(4), clique(3)]))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    pu = np.array([p[0] for p in pairs], dtype=np.int64)
    pv = np.array([p[1] for p in pairs], dtype=np.int64)
    res["sweep_n6_{C3,C4}"] = _best(
        lambda: int(sweep_free_masks(n, pu, pv, packed.order, packed.parent, packed.adj,
                                     packed.deg, packed.k, packed.edges).sum()),
        repeat,
    )
    res["search_n8_C4_dp2"] = _best(
        lambda: search_max(8, [cycle(4)], Objective.degree_power(2)).optimum, repeat
    )
    res["contains_C4_F40"] = _best(
        lambda: Pattern.of(cycle(4)).embeddings(friendship(40), stop_first=True), repeat
    )
    return res


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(child(args.repeat)))
        return

    runs = {}
    for flag in ("0", "1"):
        env = dict(os.environ, DEGPOW_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(args.repeat)],
                              env=env, capture_output=True, text=True, check=True)
        r = json.loads(proc.stdout)
        runs[r.pop("backend")] = r

    if "numba" not in runs:
        print("numba is not installed; only the python path ran")
    py = runs["python"]
    fast = runs.get("numba", {})
    print(f"{'kernel':<24} {'python s':>10} {'numba s':>10} {'speedup':>8}  result")
    for name, (t_py, out_py) in py.items():
        if name in fast:
            t_nb, out_nb = fast[name]
            assert out_nb == out_py, f"{name}: backends disagree ({out_nb} vs {out_py})"
            print(f"{name:<24} {t_py:>10.4f} {t_nb:>10.4f} {t_py / t_nb:>7.1f}x  {out_py}")
        else:
            print(f"{name:<24} {t_py:>10.4f} {'-':>10} {'-':>8}  {out_py}")


if __name__ == "__main__":
    main()
