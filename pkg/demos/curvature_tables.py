"""Curvature tensors: finite differences against closed forms.

Run with:  python demos/curvature_tables.py
"""

import numpy as np

from octoplane import ALL_PLANES
from octoplane.curvature import (
    TangentVector,
    closed_form_tensor,
    riemann_closed_form,
    riemann_origin_numeric,
)


def compare_routes():
    print("max |finite-difference - closed form| over all 16^4 components:")
    for kind in ALL_PLANES:
        num = riemann_origin_numeric(kind)
        closed = closed_form_tensor(kind)
        print(f"  {kind.name:5s} {np.max(np.abs(num - closed)):.2e}")


def sample_components(kind):
    alg = kind.algebra
    e = lambda i: TangentVector(alg.basis(i), alg.zero())
    f = lambda i: TangentVector(alg.zero(), alg.basis(i))
    print(f"--- {kind.name}: a few closed-form components ---")
    print("  R(e1,e2,e1,e2) =", riemann_closed_form(kind, e(1), e(2), e(1), e(2)))
    print("  R(e1,f1,e1,f1) =", riemann_closed_form(kind, e(1), f(1), e(1), f(1)))
    print("  R(e1,f2,e1,f2) =", riemann_closed_form(kind, e(1), f(2), e(1), f(2)))
    print("  R(e1,e2,f1,f2) =", riemann_closed_form(kind, e(1), e(2), f(1), f(2)))


def symmetry_report():
    print("\ncurvature symmetries (worst residuals):")
    for kind in ALL_PLANES:
        r = closed_form_tensor(kind)
        skew = np.max(np.abs(r + np.einsum("bacd->abcd", r)))
        pair = np.max(np.abs(r - np.einsum("cdab->abcd", r)))
        bianchi = np.max(np.abs(r + np.einsum("bcad->abcd", r) + np.einsum("cabd->abcd", r)))
        print(f"  {kind.name:5s} skew {skew:.1e}  pair-swap {pair:.1e}  cyclic {bianchi:.1e}")


if __name__ == "__main__":
    compare_routes()
    print()
    for kind in ALL_PLANES:
        sample_components(kind)
    symmetry_report()
