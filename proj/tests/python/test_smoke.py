import cmath
import math

import numpy as np
import pytest

import symspace as ss


def test_space_models():
    X = ss.hyperbolic(2)
    assert X.m1 == 1.0 and X.m2 == 0.0
    assert X.rho == pytest.approx(0.5)
    assert X.k_space == pytest.approx(1.0 / (2.0 * math.pi * X.c_delta))
    assert ss.build_space("hyperbolic(3)").rho == pytest.approx(1.0)


def test_c_function_normalization_and_formulas_agree():
    for X in (ss.hyperbolic(2), ss.hyperbolic(3), ss.jacobi(3, 2)):
        assert abs(ss.c_function(X, X.rho) - 1.0) < 1e-12
        lam = complex(0.7, 1.3)
        assert abs(ss.c_function(X, lam) - ss.c_gk(X, lam)) < 1e-10 * abs(ss.c_gk(X, lam))


def test_phi_h3_closed_form():
    X = ss.hyperbolic(3)
    for nu in (0.5, 2.0):
        for t in (0.3, 1.7):
            expect = math.sin(nu * t) / (nu * math.sinh(t))
            assert abs(ss.phi(X, 1j * nu, t) - expect) < 1e-10


def test_heat_kernel_positive_and_multiplier():
    X = ss.hyperbolic(2)
    assert ss.heat_kernel(X, 0.5, 1.0) > 0.0
    assert ss.heat_multiplier(X, 1.0, 0.5) == pytest.approx(math.exp(-0.5 * 1.25))


def test_transform_of_gaussian_decays():
    opt = ss.GridOptions()
    opt.t_max = 8.0
    opt.nu_max = 20.0
    ctx = ss.TransformContext(ss.hyperbolic(3), opt)
    nus, vals = ss.spherical_transform(ctx, lambda t: math.exp(-t * t))
    vals = np.abs(np.asarray(vals))
    assert len(nus) == len(vals)
    assert vals[0] > 1e3 * vals[-1]


def test_iwasawa_identity():
    X = ss.hyperbolic(2)
    r = ss.iwasawa_complex(X, np.eye(2, dtype=complex), 0.4)
    assert abs(r.a_exponent - 0.4j) < 1e-12
    assert r.k1.shape == (2, 2)


def test_convexity_sample_has_no_violations():
    st = ss.convexity_sample(ss.hyperbolic(2), 7, 500)
    assert st.samples == 500 and st.violations == 0


def test_errors_map_to_python():
    with pytest.raises(ss.DomainError):
        ss.iwasawa_complex(ss.hyperbolic(2), np.array([[1, 1j], [0, 1]]), 0.3)
    with pytest.raises(ss.SymspaceError):
        ss.run_experiment("no-such-experiment")


def test_run_experiment():
    names = ss.list_experiments()
    assert "convexity-sample" in names
    r = ss.run_experiment("convexity-sample", {"samples": "200"})
    assert r["pass"] is True
    assert r["experiment"] == "convexity-sample"
    assert len(r["rows"]) > 0 and len(r["header"]) == len(r["rows"][0])
