"""Walk through the two doubled quaternion algebras and their identities.

Run with:  python demos/algebra_identities.py
"""

import numpy as np

from octoplane import OCTONION, PARA_OCTONION
from octoplane.algebra import structure_table


def show_basis_facts(alg):
    print(f"--- {alg.name} ---")
    x = alg.basis
    print("x2 * x3 =", (x(2) * x(3)).coeffs)
    print("x4 * x5 =", (x(4) * x(5)).coeffs)
    print("x2 * x7 =", (x(2) * x(7)).coeffs)
    print("x5 * x5 =", (x(5) * x(5)).coeffs, " (the sign that separates the two algebras)")
    print("basis squared norms:", [alg.basis(i + 1).norm_sq() for i in range(8)])


def show_identities(alg, n=2000, seed=0):
    rng = np.random.default_rng(seed)
    worst_comp = worst_alt = 0.0
    for _ in range(n):
        a = alg.element(rng.uniform(-1, 1, 8))
        b = alg.element(rng.uniform(-1, 1, 8))
        comp = (a * b).norm_sq() - a.norm_sq() * b.norm_sq()
        alt = a * (a * b) - (a * a) * b
        worst_comp = max(worst_comp, abs(comp))
        worst_alt = max(worst_alt, np.max(np.abs(alt.coeffs)))
    print(f"composition law |ab|^2 = |a|^2|b|^2: worst residual {worst_comp:.2e}")
    print(f"left alternativity a(ab) = (aa)b:    worst residual {worst_alt:.2e}")
    # associativity genuinely fails: show one non-zero associator
    x = alg.basis
    assoc = (x(2) * x(3)) * x(5) - x(2) * (x(3) * x(5))
    print("an associator that does not vanish:", assoc.coeffs)


def show_null_elements():
    alg = PARA_OCTONION
    h = alg.basis(1) + alg.basis(5)
    print("\nsplit algebra has null elements: |x1 + x5|^2 =", h.norm_sq())
    print("invertible?", h.is_invertible())


if __name__ == "__main__":
    for alg in (OCTONION, PARA_OCTONION):
        show_basis_facts(alg)
        show_identities(alg)
        print()
    show_null_elements()
    table = structure_table(PARA_OCTONION)
    print("\nstructure table shape:", table.shape, "entries in {-1, 0, 1}:",
          bool(np.all(np.isin(table, [-1.0, 0.0, 1.0]))))
