"""Seeded random sampling of algebra elements and chart points."""

from __future__ import annotations

import numpy as np

from .plane import OP2, PARA_OP2, OP11, OH2, ChartPoint

__all__ = [
    "make_rng",
    "sample_element",
    "sample_chart1_point",
    "sample_unit_element",
]


def make_rng(seed):
    return np.random.default_rng(seed)


def sample_element(rng, alg, scale=0.6):
    return alg.element(rng.uniform(-scale, scale, 8))


def sample_unit_element(rng, alg, min_norm=0.2):
    """Element scaled to squared norm +1 (rejects near-null draws)."""
    while True:
        h = sample_element(rng, alg, 1.0)
        n = h.norm_sq()
        if n > min_norm:
            return h / np.sqrt(n)


def _domain_margin_ok(kind, u, v, margin):
    su, sv = u.norm_sq(), v.norm_sq()
    if kind is OP2:
        return True
    if kind is PARA_OP2:
        return 1.0 + su + sv > margin
    if kind is OP11:
        return 1.0 + su - sv > margin
    return su + sv < 1.0 - margin


def sample_chart1_point(rng, kind, scale=0.5, margin=0.3,
                        pivot_u=False, pivot_v=False, pivot_margin=0.05):
    """Random chart-1 point with a safety margin from the domain boundary.

    With pivot_u/pivot_v set, the coordinate additionally has a squared
    norm bounded away from zero (positively, for the split algebra) so
    that the point lies well inside the corresponding chart overlap.
    """
    while True:
        u = sample_element(rng, kind.algebra, scale)
        v = sample_element(rng, kind.algebra, scale)
        if not _domain_margin_ok(kind, u, v, margin):
            continue
        if pivot_u:
            n = u.norm_sq()
            ok = n > pivot_margin if not kind.algebra.is_definite else abs(n) > pivot_margin
            if not ok:
                continue
        if pivot_v:
            n = v.norm_sq()
            ok = n > pivot_margin if not kind.algebra.is_definite else abs(n) > pivot_margin
            if not ok:
                continue
        return ChartPoint(kind, 1, u, v)
