"""Windowed norm estimation and the Laurent lift consistency report."""

import pytest

from symtoep import (
    ComplexRational,
    Toeplitz,
    analytic_window,
    assemble,
    elementary,
    enumerate_window,
    lift_verify,
    norm_estimate,
    unit,
)


def toeplitz_matrix(d, phi, top):
    win = analytic_window(d, top)
    return assemble(Toeplitz(phi), win, win)


def test_identity_norm_is_one():
    m = toeplitz_matrix(2, unit(2), 4)
    assert norm_estimate(m) == pytest.approx(1.0, abs=1e-12)


def test_scaled_identity():
    phi = unit(2).scaled(ComplexRational(-3, 4))  # modulus 5
    m = toeplitz_matrix(2, phi, 3)
    assert norm_estimate(m) == pytest.approx(5.0, abs=1e-9)


def test_estimate_monotone_in_iterations():
    m = toeplitz_matrix(2, elementary(2, 1), 8)
    values = [norm_estimate(m, iterations=k) for k in (2, 5, 10, 40, 120)]
    for lo, hi in zip(values, values[1:]):
        assert lo <= hi + 1e-12


def test_estimate_matches_dense_spectral_norm():
    import numpy as np

    phi = elementary(2, 1) + elementary(2, 2).conjugate().scaled(2)
    m = toeplitz_matrix(2, phi, 6)
    dense = np.linalg.norm(m.to_dense(), 2)
    estimate = norm_estimate(m, iterations=500)
    assert estimate <= dense + 1e-9          # always a lower bound
    assert estimate == pytest.approx(dense, rel=1e-3)


def test_windowed_norms_monotone_in_window():
    phi = elementary(2, 1)
    values = [
        norm_estimate(toeplitz_matrix(2, phi, top), iterations=200)
        for top in (3, 6, 9, 12)
    ]
    for lo, hi in zip(values, values[1:]):
        assert lo <= hi + 1e-9
    # bounded above by the true sup norm
    assert values[-1] <= 2.0 + 1e-9


def test_seed_determinism():
    m = toeplitz_matrix(2, elementary(2, 1), 5)
    assert norm_estimate(m, seed=7) == norm_estimate(m, seed=7)


@pytest.mark.parametrize("d", [2, 3])
def test_lift_verify_passes_for_symbols(d):
    phi = elementary(d, 1) + elementary(d, d).conjugate()
    windows = [enumerate_window(d, t, -t) for t in (d, d + 2, d + 4)]
    report = lift_verify(phi, windows)
    assert report.passed
    assert report.chain_ok and report.monotone_ok
    for row in report.rows:
        assert row.block_ok
        assert row.toeplitz_norm <= row.laurent_norm + 1e-9
    assert report.sampled_sup >= report.rows[-1].toeplitz_norm - 1e-6


def test_lift_report_serializes():
    phi = elementary(2, 1)
    report = lift_verify(phi, [enumerate_window(2, 3, -3)])
    data = report.to_json_dict()
    assert data["check"] == "laurent-lift"
    assert data["verdict"] in ("pass", "fail")
