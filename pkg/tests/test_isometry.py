"""Reflection, rotation and point-to-point isometry tests."""

import json
import math

import numpy as np
import pytest

from octoplane.plane import (
    OP2,
    PARA_OP2,
    OP11,
    OH2,
    ALL_PLANES,
    ChartPoint,
    points_equal,
    origin,
    to_chart,
)
from octoplane.isometry import (
    EuclideanReflection,
    IndefiniteReflection,
    Rotation,
    IsometryComposition,
    apply_step,
    apply_composition,
    invert_step,
    isometry_to,
    verify_isometry,
    steps_to_json,
    steps_from_json,
    ExtensionError,
)
from octoplane.sampling import make_rng, sample_chart1_point, sample_unit_element


def _euclidean(rng, alg, chart=1):
    t = rng.uniform(0.2, 1.3)
    return EuclideanReflection(chart, math.cos(t), math.sin(t) * sample_unit_element(rng, alg))


def _indefinite(rng, alg, chart):
    s = rng.uniform(0.1, 0.8)
    return IndefiniteReflection(chart, math.cosh(s), math.sinh(s) * sample_unit_element(rng, alg))


def _pool(kind, rng):
    """Steps that are isometries of the given plane."""
    alg = kind.algebra
    if kind in (OP2, PARA_OP2):
        return [
            _euclidean(rng, alg, 1),
            _euclidean(rng, alg, 2),
            _euclidean(rng, alg, 3),
            Rotation(rng.uniform(-1, 1), "u"),
            Rotation(rng.uniform(-1, 1), "v"),
        ]
    if kind is OP11:
        return [
            _indefinite(rng, alg, 1),
            _indefinite(rng, alg, 2),
            _euclidean(rng, alg, 3),
            Rotation(rng.uniform(-1, 1), "u"),
        ]
    return [_euclidean(rng, alg, 1), _indefinite(rng, alg, 2), _indefinite(rng, alg, 3)]


def test_constraint_validation():
    alg = OP2.algebra
    with pytest.raises(ValueError):
        EuclideanReflection(1, 0.9, alg.unit())
    with pytest.raises(ValueError):
        IndefiniteReflection(1, 1.0, alg.unit())
    with pytest.raises(ValueError):
        Rotation(0.3, axis="w")
    # exact constraints are accepted
    EuclideanReflection(1, 0.0, alg.unit())
    IndefiniteReflection(1, 1.0, alg.zero())


@pytest.mark.parametrize("kind", [OP2, PARA_OP2, OP11])
def test_rotation_moves_origin_along_tangent_line(kind):
    for t in np.linspace(-1.0, 1.0, 9):
        img = apply_step(kind, Rotation(float(t), "u"), origin(kind))
        assert img.chart == 1
        expect = -math.tan(t) * kind.algebra.unit()
        assert np.allclose(img.u.coeffs, expect.coeffs, atol=1e-12)
        assert np.allclose(img.v.coeffs, 0.0, atol=1e-12)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_rotation_group_law(kind):
    rng = make_rng(31)
    p = sample_chart1_point(rng, kind, scale=0.3, margin=0.5)
    a, b = 0.21, -0.4
    one_shot = apply_step(kind, Rotation(a + b), p)
    two_shot = apply_step(kind, Rotation(b), apply_step(kind, Rotation(a), p))
    assert points_equal(kind, one_shot, two_shot, tol=1e-10)


@pytest.mark.parametrize("kind", [OP2, PARA_OP2, OH2])
def test_unit_reflection_swaps_coordinates(kind):
    rng = make_rng(32)
    for _ in range(10):
        p = sample_chart1_point(rng, kind)
        img = apply_step(kind, EuclideanReflection(1, 0.0, kind.algebra.unit()), p)
        assert points_equal(kind, img, ChartPoint(kind, 1, p.v, p.u), tol=1e-12)


def test_trivial_indefinite_reflection_flips_first_coordinate():
    rng = make_rng(33)
    for _ in range(10):
        p = sample_chart1_point(rng, OP11)
        img = apply_step(OP11, IndefiniteReflection(1, 1.0, OP11.algebra.zero()), p)
        expect = ChartPoint(OP11, 1, -1.0 * p.u, p.v)
        assert points_equal(OP11, img, expect, tol=1e-12)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_reflections_are_involutions(kind):
    rng = make_rng(34)
    for _ in range(15):
        p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.1)
        for step in _pool(kind, rng):
            if isinstance(step, Rotation):
                continue
            q = apply_step(kind, step, apply_step(kind, step, p))
            assert points_equal(kind, q, p, tol=1e-9)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_invert_step_round_trips(kind):
    rng = make_rng(35)
    p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.1)
    for step in _pool(kind, rng):
        q = apply_step(kind, invert_step(step), apply_step(kind, step, p))
        assert points_equal(kind, q, p, tol=1e-9)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_steps_preserve_metric(kind):
    rng = make_rng(36)
    pts = [sample_chart1_point(rng, kind, margin=0.4) for _ in range(3)]
    for step in _pool(kind, rng):
        rep = verify_isometry(kind, IsometryComposition((step,)), pts)
        assert rep["max_deviation"] < 1e-7


def test_extension_agrees_with_local_formula_in_the_limit():
    """Images of [eps, 1, z] converge to the image of [0, 1, z]."""
    rng = make_rng(37)
    alg = OP2.algebra
    step = _euclidean(rng, alg, 1)
    z = 0.3 * sample_unit_element(rng, alg)
    at_infinity = ChartPoint(OP2, 2, alg.zero(), z)
    img0 = apply_step(OP2, step, at_infinity)
    eps = 1e-7
    near = ChartPoint(OP2, 2, eps * alg.unit(), z)
    img1 = apply_step(OP2, step, near)
    c0 = to_chart(OP2, img0.triple(), img1.chart)
    c1 = to_chart(OP2, img1.triple(), img1.chart)
    assert c0 is not None
    assert np.allclose(c0[0].coeffs, c1[0].coeffs, atol=1e-5)
    assert np.allclose(c0[1].coeffs, c1[1].coeffs, atol=1e-5)


def test_indefinite_extension_known_image():
    """The hyperbolic reflection sends the second chart origin to (0, conj(lam)/r)."""
    rng = make_rng(38)
    step = _indefinite(rng, OP11.algebra, 1)
    p = ChartPoint(OP11, 2, OP11.algebra.zero(), OP11.algebra.zero())
    img = apply_step(OP11, step, p)
    assert img.chart == 2
    assert np.allclose(img.u.coeffs, 0.0, atol=1e-12)
    assert np.allclose(img.v.coeffs, (step.lam.conj() / step.r).coeffs, atol=1e-12)


def test_indefinite_reflection_has_no_third_chart_extension():
    alg = OH2.algebra
    from octoplane.isometry import _reflect_chart1_triple

    tri = (alg.zero(), alg.zero(), alg.unit())
    with pytest.raises(ExtensionError):
        _reflect_chart1_triple(OH2, tri, math.cosh(0.3), math.sinh(0.3) * alg.unit(), True)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_isometry_to_reaches_sampled_targets(kind):
    rng = make_rng(39)
    for _ in range(25):
        target = sample_chart1_point(rng, kind, scale=0.8, margin=0.3)
        comp = isometry_to(kind, target)
        image = apply_composition(kind, comp, origin(kind))
        assert points_equal(kind, image, target, tol=1e-8)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_isometry_to_special_targets(kind):
    alg = kind.algebra
    specials = [
        (alg.zero(), alg.zero()),
        (0.3 * alg.unit(), alg.zero()),
        (alg.zero(), 0.3 * alg.basis(2)),
        (0.2 * alg.basis(3), 0.2 * alg.basis(7)),
    ]
    if not alg.is_definite:
        # null coordinates exercise the degenerate branches
        specials.append((0.3 * (alg.basis(1) + alg.basis(5)), alg.zero()))
        specials.append((alg.zero(), 0.25 * (alg.basis(2) + alg.basis(6))))
    for u, v in specials:
        target = ChartPoint(kind, 1, u, v)
        comp = isometry_to(kind, target)
        image = apply_composition(kind, comp, origin(kind))
        assert points_equal(kind, image, target, tol=1e-8)


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_constructed_isometries_preserve_metric(kind):
    rng = make_rng(40)
    pts = [sample_chart1_point(rng, kind, margin=0.4) for _ in range(2)]
    for _ in range(3):
        target = sample_chart1_point(
            rng, kind, scale=0.7, margin=0.3, pivot_u=True, pivot_v=True, pivot_margin=0.3
        )
        comp = isometry_to(kind, target)
        rep = verify_isometry(kind, comp, pts)
        assert rep["max_deviation"] < 1e-7


@pytest.mark.parametrize("kind", ALL_PLANES)
def test_step_serialization_round_trip(kind):
    rng = make_rng(41)
    steps = tuple(_pool(kind, rng))
    text = steps_to_json(steps)
    back = steps_from_json(kind, text)
    assert len(back) == len(steps)
    p = sample_chart1_point(rng, kind, pivot_u=True, pivot_v=True, pivot_margin=0.1)
    a = apply_composition(kind, IsometryComposition(steps), p)
    b = apply_composition(kind, IsometryComposition(back), p)
    assert points_equal(kind, a, b, tol=1e-12)


def test_steps_json_is_valid_json():
    steps = (Rotation(0.5, "v"), EuclideanReflection(1, 0.0, OP2.algebra.unit()))
    doc = json.loads(steps_to_json(steps))
    assert doc[0]["type"] == "rotation"
    assert doc[1]["type"] == "euclidean"
    assert len(doc[1]["lam"]) == 8
