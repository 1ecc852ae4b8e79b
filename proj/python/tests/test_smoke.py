import math

import numpy as np
import pytest

import fnls


@pytest.fixture
def grid():
    return fnls.GridSpec(-math.pi, math.pi, 32)


def test_transform_round_trip(grid):
    rng = np.random.default_rng(1)
    u = rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n)
    c = fnls.forward_dft(grid, u)
    assert np.max(np.abs(fnls.inverse_dft(grid, c) - u)) < 1e-13


def test_forward_matches_numpy(grid):
    rng = np.random.default_rng(2)
    u = rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n)
    k = grid.wavenumbers()
    x = grid.nodes()
    direct = np.array([np.mean(u * np.exp(-1j * kk * grid.mu * x)) for kk in k])
    assert np.max(np.abs(fnls.forward_dft(grid, u) - direct)) < 1e-13


def test_fractional_laplacian_of_a_mode(grid):
    sym = fnls.FractionalSymbol(grid, 1.5)
    u = np.exp(3j * grid.nodes())
    du = fnls.apply_fractional_laplacian(sym, u)
    assert np.max(np.abs(du - 3**1.5 * u)) < 1e-12


def test_plane_wave_step_and_errors(grid):
    alpha, beta = 1.7, -2.0
    sym = fnls.FractionalSymbol(grid, alpha)
    params = fnls.SchemeParams(alpha, beta, 0.01, 10)
    u0 = fnls.plane_wave_exact(grid, 0.0, 1.0, 4, alpha, beta)
    result = fnls.run(sym, u0, params)
    assert len(result["records"]) == 11
    assert result["time"] == pytest.approx(0.1)
    assert max(r["rel_mass_drift"] for r in result["records"]) < 1e-12
    exact = fnls.plane_wave_exact(grid, result["time"], 1.0, 4, alpha, beta)
    linf, l2 = fnls.error_norms(grid, result["final"], exact)
    # plane-wave scheme error is 2|sin((n theta + omega t)/2)|, theta = -2 atan(omega tau / 2)
    omega = 4**alpha - beta
    theta = -2 * math.atan(omega * 0.01 / 2)
    assert linf == pytest.approx(2 * abs(math.sin((10 * theta + omega * 0.1) / 2)), rel=1e-6)
    assert l2 == pytest.approx(math.sqrt(2 * math.pi) * linf, rel=1e-6)


def test_linear_step_is_unitary(grid):
    rng = np.random.default_rng(3)
    u = rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n)
    sym = fnls.FractionalSymbol(grid, 1.3)
    nxt, iters = fnls.step(sym, u, fnls.SchemeParams(1.3, 0.0, 0.1, 1))
    assert iters == 1
    before = np.abs(fnls.forward_dft(grid, u))
    after = np.abs(fnls.forward_dft(grid, nxt))
    assert np.max(np.abs(after - before)) < 1e-14


def test_soliton_snapshots():
    grid = fnls.GridSpec(-20.0, 20.0, 64)
    sym = fnls.FractionalSymbol(grid, 2.0)
    params = fnls.SchemeParams(2.0, 1.0, 0.05, 20)
    result = fnls.run(sym, fnls.soliton_initial(grid), params, snapshot_stride=10)
    assert [s[0] for s in result["snapshots"]] == [0, 10, 20]
    assert max(r["rel_energy_drift"] for r in result["records"]) < 1e-10


def test_convergence_time_from_config():
    rows = fnls.convergence_time(
        "problem = plane_wave\nalpha = 1.4\nN = 256\nT = 1\n"
        "sweep_tau = 0.05, 0.025\nstep_count = inclusive\n"
    )
    assert rows[0]["linf_err"] == pytest.approx(0.1529, rel=0.02)
    assert rows[0]["order_linf"] is None
    assert rows[1]["order_linf"] == pytest.approx(2.0017, abs=0.05)


def test_compute_order():
    assert fnls.compute_order(0.4, 0.1, 0.2, 0.1) == pytest.approx(2.0)


def test_errors_are_python_exceptions(grid):
    with pytest.raises(fnls.ConfigError):
        fnls.convergence_time("problem = plane_wave\nN = 31\nT = 1\nsweep_tau = 0.1, 0.05\n")
    sym = fnls.FractionalSymbol(fnls.GridSpec(-20.0, 20.0, 64), 1.5)
    params = fnls.SchemeParams(1.5, 1.0, 0.1, 5, fp_max_iters=1)
    with pytest.raises(fnls.SolverError):
        fnls.run(sym, fnls.soliton_initial(sym.spec), params)
    with pytest.raises(ValueError):
        fnls.GridSpec(0.0, 1.0, 7)


def test_oracle_verify():
    passed, max_error = fnls.oracle_verify()
    assert passed
    assert max_error < 1e-12
