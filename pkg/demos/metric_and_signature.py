"""Metric matrices of the four planes: origin values, signatures, pullbacks.

Run with:  python demos/metric_and_signature.py
"""

import numpy as np

from octoplane import ALL_PLANES, OP2, ChartPoint, origin, to_chart
from octoplane.metric import metric_matrix, origin_metric, signature, pullback_deviation
from octoplane.sampling import make_rng, sample_chart1_point


def origin_values():
    print("metric at the chart-1 origin (diagonal entries only):")
    for kind in ALL_PLANES:
        m = metric_matrix(kind, origin(kind))
        print(f"  {kind.name:5s} diag = {np.diag(m).astype(int)}  signature {signature(m)}")


def a_point_with_round_numbers():
    p = ChartPoint(OP2, 1, OP2.algebra.unit(), OP2.algebra.zero())
    m = metric_matrix(OP2, p)
    print("\nprojective plane at (u, v) = (1, 0):")
    print("  diag =", np.diag(m))


def signatures_are_constant(samples=25):
    print("\nsignature at random interior points:")
    for kind in ALL_PLANES:
        rng = make_rng(1)
        sigs = set()
        for _ in range(samples):
            p = sample_chart1_point(rng, kind)
            sigs.add(signature(metric_matrix(kind, p)))
        print(f"  {kind.name:5s} -> {sorted(sigs)}")


def transitions_preserve_the_metric():
    print("\nworst chart-transition pullback deviation:")
    for kind in ALL_PLANES:
        rng = make_rng(2)
        worst = 0.0
        while True:
            p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.2)
            cs = {c: to_chart(kind, p.triple(), c) for c in kind.charts}
            live = [c for c in kind.charts if cs[c] is not None]
            if len(live) < 2:
                continue
            for i in live:
                q = ChartPoint(kind, i, *cs[i])
                for j in live:
                    if i != j:
                        worst = max(worst, pullback_deviation(kind, i, j, q))
            break
        print(f"  {kind.name:5s} {worst:.2e}")


if __name__ == "__main__":
    origin_values()
    a_point_with_round_numbers()
    signatures_are_constant()
    transitions_preserve_the_metric()
