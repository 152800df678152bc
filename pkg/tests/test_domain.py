import math

import numpy as np
import pytest
from scipy.optimize import brentq, minimize_scalar

from tensile_domain import (
    NotAvailable,
    UnboundedError,
    asymptote,
    boundary,
    contains,
    critical_activation,
    generic,
    mooney_rivlin,
    natural_width,
    neo_hookean,
    plane_stress,
    vertices,
)
from tensile_domain.domain import EPS_RES, diagonal_activation

from conftest import generic_twin

# 40-digit roots of 0.4 x^8 - x^6 + 1 (mpmath polyroots)
NH1_VERTICES_K02 = (1.1247231543392260632, 1.5141017196658783717)
# MR(1,1): x^3 - 3x - 4 = 0, x = lambda^2, solved with mpmath
MR11_K_CRIT = 1.3179447131137039325
MR11_LAMBDA_CRIT = 1.4818310785800273371


# -- natural width -------------------------------------------------------------

def test_width_zero_voltage_example(mr11):
    assert natural_width(mr11, 4.0, 0.0) == 0.5


def test_width_neo_hookean_example(nh1):
    assert natural_width(nh1, 1.0, 0.25) == pytest.approx(2 ** 0.25, rel=1e-15)


def test_width_at_asymptote(mr11):
    assert natural_width(mr11, 1.0, 2.0) is None


def test_width_zero_voltage_all_models(rng):
    lam = np.geomspace(0.2, 5, 200)
    for _ in range(5):
        m = mooney_rivlin(*rng.uniform(0.01, 5, 2))
        for x in lam:
            assert abs(natural_width(m, x, 0.0) - x ** -0.5) <= 1e-12


def test_width_zeroes_transverse_stress(rng):
    for _ in range(300):
        m = mooney_rivlin(*rng.uniform(0.05, 2, 2))
        l1, kv = rng.uniform(0.2, 4), rng.uniform(0, 2)
        w = natural_width(m, l1, kv)
        if w is None:
            continue
        assert abs(plane_stress(m, (l1, w), kv).t2) <= EPS_RES * max(2 * (m.c1 + m.c2), 1) * max(1, w * w)


def test_generic_width_matches_closed_form(rng, mr11):
    g = generic_twin(mr11)
    for l1, kv in zip(rng.uniform(0.3, 3, 100), rng.uniform(0, 1.5, 100)):
        a, b = natural_width(mr11, l1, kv), natural_width(g, l1, kv)
        if a is None:
            assert b is None or b > 1e3
        else:
            assert b == pytest.approx(a, rel=1e-12)


def test_generic_width_below_classical_seed():
    # beta1 = 2 l1^-2 mu: uniaxial width is l1^-1, below l1^-1/2 for l1 > 1
    g = generic(lambda a, b: 1.0 / (a * a * b * b) ** 0, lambda a, b: 0.0)
    w = natural_width(g, 4.0, 0.0)
    assert w == pytest.approx(0.5)
    stiff = generic(lambda a, b: 1.0, lambda a, b: -1.0 * a * a)  # non-constant, still finite
    w = natural_width(stiff, 3.0, 0.0)
    assert w is not None
    assert abs(plane_stress(stiff, (3.0, w), 0.0).t2) < 1e-10


# -- asymptote -----------------------------------------------------------------

def test_asymptote_examples(mr11, nh1):
    assert asymptote(mr11, 2.0) == 1.0
    assert asymptote(mr11, 0.5) is None
    assert asymptote(mr11, 1.0) is None
    assert asymptote(nh1, 0.125) == 2.0


@pytest.mark.parametrize("c1,c2,kv", [(1, 1, 2), (0.5, 0, 0.125), (2, 0.5, 0.9), (0.3, 1, 4)])
def test_asymptote_onset(c1, c2, kv):
    m = mooney_rivlin(c1, c2)
    ls = asymptote(m, kv)
    for f in (1.0, 1.0 + 1e-12, 1.5, 10.0):
        assert natural_width(m, ls * f, kv) is None
    for f in (1 - 1e-12 - 1e-15, 1 - 1e-9, 0.9, 0.1):
        assert natural_width(m, ls * f, kv) is not None


def test_generic_asymptote(nh1):
    g = generic_twin(nh1)
    assert asymptote(g, 0.125) == pytest.approx(2.0, rel=1e-12)
    with pytest.raises(NotAvailable):
        asymptote(generic_twin(mooney_rivlin(1, 1)), 0.5)


# -- vertices --------------------------------------------------------------------

def test_vertices_unloaded(rng):
    for _ in range(5):
        m = mooney_rivlin(*rng.uniform(0.05, 3, 2))
        assert vertices(m, 0.0) == [1.0]


def test_vertices_neo_hookean_example(nh1):
    lo, hi = vertices(nh1, 0.2)
    assert 1 < lo < 2 ** (1 / 3) < hi
    assert lo == pytest.approx(NH1_VERTICES_K02[0], rel=1e-14)
    assert hi == pytest.approx(NH1_VERTICES_K02[1], rel=1e-14)


def test_vertices_polynomial_signs():
    p = lambda x: 0.4 * x ** 8 - x ** 6 + 1
    assert p(1.0) == pytest.approx(0.4)
    assert p(2 ** (1 / 3)) == pytest.approx(-0.460, abs=5e-4)


def test_vertices_above_critical(nh1):
    assert vertices(nh1, 0.3) == []


def test_vertices_against_brentq(rng):
    """Independent oracle: scipy brentq on the explicit diagonal polynomial."""
    for _ in range(30):
        c1, c2 = rng.uniform(0.1, 2, 2)
        m = mooney_rivlin(c1, c2)
        kc = critical_activation(m).k_v_crit
        kv = rng.uniform(0, 0.999 * kc)
        # diagonal stress times lambda^4 / 2 as a polynomial in lambda
        f = lambda x: c1 * (x ** 6 - 1) + c2 * (x ** 8 - x ** 2) - kv * x ** 8
        grid = np.geomspace(0.5, 1e4, 20000)
        vals = f(grid)
        idx = np.nonzero(np.sign(vals[:-1]) != np.sign(vals[1:]))[0]
        expected = [brentq(f, grid[i], grid[i + 1], xtol=1e-15, rtol=1e-15) for i in idx]
        got = vertices(m, kv)
        assert len(got) == len(expected)
        for a, b in zip(got, expected):
            assert a == pytest.approx(b, rel=1e-10)


def test_vertex_fixed_point(rng):
    for _ in range(50):
        m = mooney_rivlin(*rng.uniform(0.1, 2, 2))
        kv = rng.uniform(0, critical_activation(m).k_v_crit)
        for v in vertices(m, kv):
            assert abs(natural_width(m, v, kv) - v) <= 10 * EPS_RES


@pytest.mark.parametrize("mu", [0.5, 1.0, 2.0, 7.0])
def test_vertex_count_transition(mu):
    m = neo_hookean(mu)
    kc = critical_activation(m).k_v_crit
    delta = 1e-6 * mu
    for k in np.linspace(1e-3 * kc, kc - delta, 25):
        v = vertices(m, k)
        assert len(v) == 2 and v[0] < v[1]
    assert len(vertices(m, kc - delta)) == 2
    for k in (kc + delta, 1.01 * kc, 2 * kc):
        assert vertices(m, k) == []


def test_vertices_below_c2_single(mr11):
    assert len(vertices(mr11, 0.5)) == 1
    tiny_c1 = mooney_rivlin(1e-4, 1.0)
    v = vertices(tiny_c1, 0.999)
    assert len(v) == 1
    assert abs(plane_stress(tiny_c1, (v[0], v[0]), 0.999).t1) < 1e-8


def test_generic_vertices(nh1):
    g = generic_twin(nh1)
    assert vertices(g, 0.2) == pytest.approx(list(NH1_VERTICES_K02), rel=1e-12)


# -- boundary ------------------------------------------------------------------

def test_boundary_zero_voltage(mr11):
    b = boundary(mr11, 0.0, (1.0, 4.0), 4)
    assert len(b.samples) == 4
    for (l1, l2), expected in zip(b.samples, [1.0, 4 ** (1 / 3), 4 ** (2 / 3), 4.0]):
        assert l1 == pytest.approx(expected, rel=1e-14)
        assert abs(l2 - l1 ** -0.5) <= 1e-15
    assert b.asymptote is None and b.vertices == [1.0] and not b.warnings


def test_boundary_residual_neo_hookean(nh1):
    b = boundary(nh1, 0.2, (0.5, 3.0), 300)
    assert b.samples
    assert all(abs(r) <= EPS_RES for r in b.residuals)
    assert all(l1 >= l2 for l1, l2 in b.samples)
    l1s = [s[0] for s in b.samples]
    assert all(a < c for a, c in zip(l1s, l1s[1:]))
    assert len(b.vertices) == 2


def test_boundary_truncated(mr11):
    b = boundary(mr11, 2.0, (0.5, 1.5), 50, lower_only=False)
    assert b.warnings and "asymptote" in b.warnings[0]
    assert b.asymptote == 1.0
    assert max(s[0] for s in b.samples) < 1.0
    assert boundary(mr11, 2.0, (0.5, 1.5), 50).samples == []


def test_boundary_beyond_asymptote(mr11):
    b = boundary(mr11, 2.0, (1.2, 1.5), 10)
    assert b.samples == [] and b.warnings


def test_boundary_mirror_is_t1_zero(nh1):
    b = boundary(nh1, 0.1, (1.0, 3.0), 20)
    for l1, l2 in b.mirrored():
        assert abs(plane_stress(nh1, (l1, l2), 0.1).t1) <= 1e-10


def test_boundary_rows(nh1):
    b = boundary(nh1, 0.2, (1.0, 2.0), 10)
    rows = b.rows()
    kinds = [r["kind"] for r in rows]
    assert kinds.count("vertex") == 2 and kinds[-1] == "asymptote"


def test_boundary_validates(mr11):
    with pytest.raises(ValueError):
        boundary(mr11, 0.0, (1.0, 2.0), 1)
    with pytest.raises(ValueError):
        boundary(mr11, 0.0, (2.0, 1.0), 10)


# -- membership ----------------------------------------------------------------

def test_contains_examples(mr11, nh1):
    assert contains(mr11, (1.5, 1.5), 0.0)
    assert not contains(nh1, (2.0, 0.5), 0.0)


def test_contains_empty_above_critical(nh1, rng):
    for l1, l2 in rng.uniform(0.3, 3, (500, 2)):
        assert not contains(nh1, (l1, l2), 0.3)


def test_contains_mirror_and_nesting(rng):
    for _ in range(1000):
        m = mooney_rivlin(*rng.uniform(0.05, 2, 2))
        l1, l2 = rng.uniform(0.3, 3, 2)
        k1, k2 = np.sort(rng.uniform(0, 2, 2))
        assert contains(m, (l1, l2), k1) == contains(m, (l2, l1), k1)
        if contains(m, (l1, l2), k2):
            assert contains(m, (l1, l2), k1)


def test_moduli_scaling_enlarges_domain(rng):
    for _ in range(1000):
        m = mooney_rivlin(*rng.uniform(0.05, 2, 2))
        s = rng.uniform(1.0, 4.0)
        l1, l2 = rng.uniform(0.3, 3, 2)
        kv = rng.uniform(0, 2)
        if contains(m, (l1, l2), kv):
            assert contains(m.scaled(s), (l1, l2), kv)


# -- critical activation ---------------------------------------------------------

@pytest.mark.parametrize("mu", [0.5, 1.0, 2.0])
def test_critical_neo_hookean(mu):
    closed = critical_activation(neo_hookean(mu))
    scan = critical_activation(neo_hookean(mu), method="generic")
    assert closed.method == "closed-form" and scan.method == "scan-golden"
    assert closed.k_v_crit == pytest.approx(3 * mu / 2 ** (11 / 3), rel=1e-15)
    assert closed.lambda_crit == pytest.approx(2 ** (1 / 3), rel=1e-15)
    assert scan.k_v_crit == pytest.approx(closed.k_v_crit, rel=1e-6)
    assert scan.lambda_crit == pytest.approx(closed.lambda_crit, rel=1e-6)


def test_critical_neo_hookean_values():
    cp = critical_activation(neo_hookean(1.0))
    assert cp.k_v_crit == pytest.approx(0.236235, abs=1e-6)
    assert cp.lambda_crit == pytest.approx(1.259921, abs=1e-6)
    cp2 = critical_activation(neo_hookean(2.0))
    assert cp2.k_v_crit == pytest.approx(2 * cp.k_v_crit, rel=1e-15)
    assert cp2.lambda_crit == cp.lambda_crit


def test_critical_mr11_regression(mr11):
    cp = critical_activation(mr11)
    assert cp.k_v_crit == pytest.approx(MR11_K_CRIT, rel=1e-12)
    assert cp.lambda_crit == pytest.approx(MR11_LAMBDA_CRIT, rel=1e-6)


def test_critical_against_cubic_and_scipy(rng):
    for _ in range(20):
        c1, c2 = rng.uniform(0.05, 3, 2)
        m = mooney_rivlin(c1, c2)
        cp = critical_activation(m)
        # stationary point of k(lambda): c1 x^3 - 3 c2 x - 4 c1 = 0, x = lambda^2
        roots = np.roots([c1, 0.0, -3 * c2, -4 * c1])
        x = max(r.real for r in roots if abs(r.imag) < 1e-12 and r.real > 0)
        k_cubic = c1 * (1 / x - 1 / x ** 4) + c2 * (1 - 1 / x ** 3)
        assert cp.k_v_crit == pytest.approx(k_cubic, rel=1e-10)
        assert cp.lambda_crit == pytest.approx(math.sqrt(x), rel=1e-6)
        res = minimize_scalar(lambda t: -diagonal_activation(m, t), bounds=(1, 20), method="bounded",
                              options={"xatol": 1e-10})
        assert cp.k_v_crit == pytest.approx(-res.fun, rel=1e-9)


def test_critical_vertices_coalesce(rng):
    for _ in range(10):
        m = mooney_rivlin(*rng.uniform(0.1, 2, 2))
        cp = critical_activation(m)
        lo, hi = vertices(m, cp.k_v_crit * (1 - 1e-8))
        assert hi - lo < 1e-2
        assert lo < cp.lambda_crit < hi


def test_critical_unbounded_without_c1():
    with pytest.raises(UnboundedError):
        critical_activation(mooney_rivlin(0.0, 1.0))


def test_critical_generic_model(nh1):
    cp = critical_activation(generic_twin(nh1))
    assert cp.k_v_crit == pytest.approx(3 / 2 ** (11 / 3), rel=1e-9)
    with pytest.raises(NotAvailable):
        critical_activation(mooney_rivlin(1, 1), method="closed-form")
