"""Eight-dimensional composition-type algebras built from quaternion pairs.

Two algebras are supported, both realised on R^8 = H x H with the same
basis x1..x8 = (1,0), (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k):

* the octonions, with a positive definite norm form, and
* the para-octonions, whose norm form has split signature (4, 4).

The two products differ only in the sign attached to the conjugated cross
term of the doubling product, so a single vectorised kernel covers both.
All array-level helpers broadcast over leading axes; the trailing axis of
length 8 holds coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AlgebraKind",
    "OCTONION",
    "PARA_OCTONION",
    "HyperNumber",
    "KindMismatchError",
    "NonInvertibleError",
    "quat_mul",
    "quat_conj",
    "mul_coeffs",
    "conj_coeffs",
    "inner_coeffs",
    "norm_sq_coeffs",
    "inv_coeffs",
    "structure_table",
]

NULL_TOLERANCE = 1e-9

_QUAT_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])
_CONJ_SIGNS = np.array([1.0] + [-1.0] * 7)


class KindMismatchError(ValueError):
    """Raised when elements of different algebras are combined."""


class NonInvertibleError(ZeroDivisionError):
    """Raised when inverting an element whose norm is (numerically) null."""


@dataclass(frozen=True)
class AlgebraKind:
    """Identifies one of the two supported algebras.

    ``doubling_sign`` is the sign of the conjugated cross term in the
    doubled product: -1 gives the octonions, +1 the para-octonions.
    """

    name: str
    doubling_sign: int

    @property
    def eps(self):
        """Signs of the diagonal norm form on the standard basis."""
        if self.doubling_sign < 0:
            return np.ones(8)
        return np.array([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])

    @property
    def is_definite(self):
        return self.doubling_sign < 0

    def basis(self, i):
        """Basis element x_i for i in 1..8."""
        c = np.zeros(8)
        c[i - 1] = 1.0
        return HyperNumber(self, c)

    def unit(self):
        return self.basis(1)

    def zero(self):
        return HyperNumber(self, np.zeros(8))

    def element(self, coeffs):
        return HyperNumber(self, np.asarray(coeffs, dtype=float))

    def __repr__(self):
        return f"AlgebraKind({self.name!r})"


OCTONION = AlgebraKind("octonion", -1)
PARA_OCTONION = AlgebraKind("para-octonion", +1)


def quat_mul(q, p):
    """Hamilton product, broadcasting over leading axes (trailing axis 4)."""
    a, b, c, d = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    e, f, g, h = p[..., 0], p[..., 1], p[..., 2], p[..., 3]
    return np.stack(
        [
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        ],
        axis=-1,
    )


def quat_conj(q):
    return q * _QUAT_CONJ_SIGNS


def mul_coeffs(kind, a, b):
    """Product of coefficient arrays (trailing axis 8), broadcasting.

    With a = (q1, q2) and b = (p1, p2) as quaternion pairs the product is
    (q1 p1 + s * conj(p2) q2, p2 q1 + q2 conj(p1)) where s is the kind's
    doubling sign.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    q1, q2 = a[..., :4], a[..., 4:]
    p1, p2 = b[..., :4], b[..., 4:]
    first = quat_mul(q1, p1) + kind.doubling_sign * quat_mul(quat_conj(p2), q2)
    second = quat_mul(p2, q1) + quat_mul(q2, quat_conj(p1))
    return np.concatenate([first, second], axis=-1)


def conj_coeffs(a):
    """Conjugation: negate every coefficient except the real part."""
    return np.asarray(a, dtype=float) * _CONJ_SIGNS


def inner_coeffs(kind, a, b):
    """Diagonal inner product sum_i eps_i a_i b_i over the trailing axis."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.einsum("...i,...i,i->...", a, b, kind.eps)


def norm_sq_coeffs(kind, a):
    return inner_coeffs(kind, a, a)


def inv_coeffs(kind, a, tol=NULL_TOLERANCE):
    """Inverse conj(a)/N(a); raises NonInvertibleError on null norms."""
    n = norm_sq_coeffs(kind, a)
    if np.any(np.abs(n) <= tol):
        raise NonInvertibleError("element has (numerically) null norm")
    return conj_coeffs(a) / n[..., None]


def structure_table(kind):
    """(8, 8, 8) array C with C[i, j] the coefficients of x_{i+1} x_{j+1}."""
    basis = np.eye(8)
    return mul_coeffs(kind, basis[:, None, :], basis[None, :, :])


class HyperNumber:
    """An element of one of the two algebras, with operator sugar.

    Thin immutable wrapper over an 8-vector of coefficients.  Arithmetic
    between elements requires matching kinds; floats act as scalars.
    """

    __slots__ = ("kind", "coeffs")

    def __init__(self, kind, coeffs):
        c = np.array(coeffs, dtype=float)
        if c.shape != (8,):
            raise ValueError("coefficients must be an 8-vector")
        c.setflags(write=False)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("HyperNumber is immutable")

    def _check(self, other):
        if self.kind is not other.kind:
            raise KindMismatchError(
                f"cannot combine {self.kind.name} with {other.kind.name}"
            )

    def __mul__(self, other):
        if isinstance(other, HyperNumber):
            self._check(other)
            return HyperNumber(self.kind, mul_coeffs(self.kind, self.coeffs, other.coeffs))
        return HyperNumber(self.kind, self.coeffs * float(other))

    def __rmul__(self, other):
        return HyperNumber(self.kind, self.coeffs * float(other))

    def __truediv__(self, other):
        return HyperNumber(self.kind, self.coeffs / float(other))

    def __add__(self, other):
        self._check(other)
        return HyperNumber(self.kind, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return HyperNumber(self.kind, self.coeffs - other.coeffs)

    def __neg__(self):
        return HyperNumber(self.kind, -self.coeffs)

    def conj(self):
        return HyperNumber(self.kind, conj_coeffs(self.coeffs))

    def re(self):
        return float(self.coeffs[0])

    def norm_sq(self):
        return float(norm_sq_coeffs(self.kind, self.coeffs))

    def inner(self, other):
        self._check(other)
        return float(inner_coeffs(self.kind, self.coeffs, other.coeffs))

    def inverse(self, tol=NULL_TOLERANCE):
        return HyperNumber(self.kind, inv_coeffs(self.kind, self.coeffs, tol=tol))

    def is_invertible(self, tol=NULL_TOLERANCE):
        return abs(self.norm_sq()) > tol

    def approx(self, other, tol=1e-12):
        self._check(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol)

    def __eq__(self, other):
        if not isinstance(other, HyperNumber):
            return NotImplemented
        return self.kind is other.kind and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.kind.name, self.coeffs.tobytes()))

    def __repr__(self):
        vals = ", ".join(f"{c:g}" for c in self.coeffs)
        return f"HyperNumber({self.kind.name}, [{vals}])"


def associator(x, y, z):
    """[x, y, z] = x(yz) - (xy)z."""
    return x * (y * z) - (x * y) * z


def re_triple(x, y, z):
    """Real part of x(yz); fully symmetric under cyclic permutation."""
    return (x * (y * z)).re()
