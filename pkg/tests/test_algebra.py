"""Algebra tests against an independently coded doubling construction."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from octoplane.algebra import (
    OCTONION,
    PARA_OCTONION,
    HyperNumber,
    KindMismatchError,
    NonInvertibleError,
    mul_coeffs,
    conj_coeffs,
    inner_coeffs,
    norm_sq_coeffs,
    structure_table,
    associator,
)

ALGEBRAS = [OCTONION, PARA_OCTONION]


# ---------------------------------------------------------------------------
# oracle: generic doubling over the reals, written without reference to the
# vectorized implementation.  (a, b)(c, d) = (ac + gamma * conj(d) b, da + b conj(c))


def _oracle_mul(x, y, gammas):
    if len(x) == 1:
        return [x[0] * y[0]]
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    g = gammas[-1]
    rest = gammas[:-1]
    top = [p + g * q for p, q in zip(_oracle_mul(a, c, rest), _oracle_mul(_oracle_conj(d), b, rest))]
    bot = [p + q for p, q in zip(_oracle_mul(d, a, rest), _oracle_mul(b, _oracle_conj(c), rest))]
    return top + bot


def _oracle_conj(x):
    return [x[0]] + [-c for c in x[1:]]


def _gammas(alg):
    # three doublings from the reals; only the last level changes sign
    return (-1.0, -1.0, -1.0) if alg is OCTONION else (-1.0, -1.0, 1.0)


coeff = st.floats(-2.0, 2.0, allow_nan=False)
coeffs8 = st.lists(coeff, min_size=8, max_size=8)


@pytest.mark.parametrize("alg", ALGEBRAS)
@settings(max_examples=60, deadline=None)
@given(x=coeffs8, y=coeffs8)
def test_product_matches_doubling_oracle(alg, x, y):
    got = mul_coeffs(alg, np.array(x), np.array(y))
    want = _oracle_mul(x, y, _gammas(alg))
    assert np.allclose(got, want, atol=1e-10)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_structure_table_matches_oracle(alg):
    table = structure_table(alg)
    for i in range(8):
        for j in range(8):
            ei = [0.0] * 8
            ej = [0.0] * 8
            ei[i] = 1.0
            ej[j] = 1.0
            assert np.allclose(table[i, j], _oracle_mul(ei, ej, _gammas(alg)))


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_basis_products(alg):
    x = lambda i: alg.basis(i)
    assert (x(2) * x(3)).approx(x(4))
    assert (x(4) * x(5)).approx(x(8))
    assert (x(2) * x(7)).approx(-1.0 * x(8))
    sq = x(5) * x(5)
    expect = alg.unit() if alg is PARA_OCTONION else -1.0 * alg.unit()
    assert sq.approx(expect)


def test_split_norm_signs():
    rng = np.random.default_rng(0)
    for _ in range(50):
        c = rng.uniform(-1, 1, 8)
        q = c.copy()
        q[4:] = 0
        w = c.copy()
        w[:4] = 0
        hq = PARA_OCTONION.element(q)
        hw = PARA_OCTONION.element(w)
        assert hq.norm_sq() == pytest.approx(np.sum(q[:4] ** 2))
        assert hw.norm_sq() == pytest.approx(-np.sum(w[4:] ** 2))


@pytest.mark.parametrize("alg", ALGEBRAS)
@settings(max_examples=60, deadline=None)
@given(x=coeffs8, y=coeffs8)
def test_composition_law(alg, x, y):
    a = alg.element(x)
    b = alg.element(y)
    assert (a * b).norm_sq() == pytest.approx(a.norm_sq() * b.norm_sq(), abs=1e-8)


@pytest.mark.parametrize("alg", ALGEBRAS)
@settings(max_examples=60, deadline=None)
@given(x=coeffs8, y=coeffs8)
def test_alternative_laws(alg, x, y):
    a = alg.element(x)
    b = alg.element(y)
    assert associator(a, a, b).approx(alg.zero(), tol=1e-9)
    assert associator(b, a, a).approx(alg.zero(), tol=1e-9)
    assert associator(a, b, a).approx(alg.zero(), tol=1e-9)


@pytest.mark.parametrize("alg", ALGEBRAS)
@settings(max_examples=40, deadline=None)
@given(x=coeffs8, y=coeffs8)
def test_conjugation_reverses_products(alg, x, y):
    a = alg.element(x)
    b = alg.element(y)
    assert (a * b).conj().approx(b.conj() * a.conj(), tol=1e-10)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_multiplication_adjoints(alg):
    rng = np.random.default_rng(3)
    for _ in range(40):
        a, x, y = (alg.element(rng.uniform(-1, 1, 8)) for _ in range(3))
        assert (a * x).inner(y) == pytest.approx(x.inner(a.conj() * y), abs=1e-10)
        assert (x * a).inner(y) == pytest.approx(x.inner(y * a.conj()), abs=1e-10)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_exchange_identity(alg):
    rng = np.random.default_rng(4)
    for _ in range(40):
        a, b, c, d = (alg.element(rng.uniform(-1, 1, 8)) for _ in range(4))
        lhs = (a * b.conj()).inner(c * d.conj()) + (a * d.conj()).inner(c * b.conj())
        assert lhs == pytest.approx(2.0 * a.inner(c) * b.inner(d), abs=1e-10)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_inverse(alg):
    rng = np.random.default_rng(5)
    n = 0
    while n < 30:
        a = alg.element(rng.uniform(-1, 1, 8))
        if not a.is_invertible():
            continue
        n += 1
        assert (a * a.inverse()).approx(alg.unit(), tol=1e-9)
        assert (a.inverse() * a).approx(alg.unit(), tol=1e-9)


def test_para_null_elements_not_invertible():
    h = PARA_OCTONION.basis(1) + PARA_OCTONION.basis(5)
    assert h.norm_sq() == pytest.approx(0.0)
    assert not h.is_invertible()
    with pytest.raises(NonInvertibleError):
        h.inverse()


def test_kind_mixing_rejected():
    a = OCTONION.unit()
    b = PARA_OCTONION.unit()
    with pytest.raises(KindMismatchError):
        a * b


def test_scalar_operations():
    a = OCTONION.element(np.arange(8, dtype=float))
    assert (2.0 * a).approx(a + a)
    assert (a / 2.0).approx(0.5 * a)
    assert (a - a).approx(OCTONION.zero())
    assert a.re() == pytest.approx(0.0)


@pytest.mark.parametrize("alg", ALGEBRAS)
def test_octonions_not_associative(alg):
    # both algebras are only alternative: some associator is non-zero
    x = lambda i: alg.basis(i)
    assert not associator(x(2), x(3), x(5)).approx(alg.zero())


def test_vectorized_batch_shapes():
    rng = np.random.default_rng(6)
    x = rng.uniform(-1, 1, (5, 7, 8))
    y = rng.uniform(-1, 1, (5, 7, 8))
    out = mul_coeffs(OCTONION, x, y)
    assert out.shape == (5, 7, 8)
    for i in range(5):
        for j in range(7):
            assert np.allclose(out[i, j], mul_coeffs(OCTONION, x[i, j], y[i, j]))
    assert norm_sq_coeffs(OCTONION, x).shape == (5, 7)
    assert inner_coeffs(OCTONION, x, y).shape == (5, 7)
    assert np.allclose(conj_coeffs(x)[..., 0], x[..., 0])
    assert np.allclose(conj_coeffs(x)[..., 1:], -x[..., 1:])
