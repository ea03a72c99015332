"""Move the origin to arbitrary points with explicit isometry steps.

Run with:  python demos/homogeneity_tour.py
"""

import numpy as np

from octoplane import ALL_PLANES, IsometryComposition, apply_composition, isometry_to, origin, points_equal
from octoplane.isometry import verify_isometry
from octoplane.sampling import make_rng, sample_chart1_point


def tour(kind, n=5, seed=3):
    rng = make_rng(seed)
    print(f"--- {kind.name} ---")
    for i in range(n):
        target = sample_chart1_point(rng, kind, scale=0.7, margin=0.3)
        comp = isometry_to(kind, target)
        image = apply_composition(kind, comp, origin(kind))
        ok = points_equal(kind, image, target, tol=1e-8)
        names = "+".join(type(s).__name__.replace("Reflection", "") for s in comp.steps)
        print(f"  target {i}: {len(comp.steps)} steps ({names})  hit={ok}")
    # spot-check that a construction is a genuine isometry, not just a map
    target = sample_chart1_point(rng, kind, scale=0.6, margin=0.3,
                                 pivot_u=True, pivot_v=True, pivot_margin=0.1)
    comp = isometry_to(kind, target)
    pts = [sample_chart1_point(rng, kind, margin=0.5) for _ in range(2)]
    rep = verify_isometry(kind, comp, pts)
    print(f"  metric pullback deviation of one construction: {rep['max_deviation']:.2e}")


if __name__ == "__main__":
    for kind in ALL_PLANES:
        tour(kind)
