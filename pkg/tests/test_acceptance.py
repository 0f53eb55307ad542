"""
Desk-scale convergence reproductions.

The 2D studies take minutes; run `pytest -m "not slow"` to skip them.
"""

from pathlib import Path

import pytest

from nls.config_loader import load_convergence_config
from nls.experiments import ConvergenceSpec, convergence_study, fit_window

DYADIC_TAUS = [2.0**-k for k in range(4, 11)]
H2_STUDY = Path(__file__).resolve().parents[1] / "configs" / "figure1_gamma2.env"


@pytest.fixture(scope="module")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("references")


def run(cache_dir, spec=None, **fields):
    spec = spec if spec is not None else ConvergenceSpec(**fields)
    return convergence_study(spec, workers=2, cache_dir=cache_dir, timing=False)


@pytest.fixture(scope="module")
def h2_result(cache_dir):
    return run(cache_dir, load_convergence_config(H2_STUDY))


def test_shipped_h2_study():
    spec = load_convergence_config(H2_STUDY)
    assert spec == ConvergenceSpec(
        d=2, N=128, gamma=2.0, s=4.0, methods=["lri2", "lri1"], taus=DYADIC_TAUS, lam=-1
    )
    assert spec.crossvalidate


@pytest.mark.slow
class TestTwoDimensionalRoughData:
    def test_no_blowups(self, h2_result):
        assert h2_result.blowups == []
        assert all(slope is not None for slope in h2_result.slopes.values())

    def test_h2_errors(self, h2_result):
        assert 1.8 <= h2_result.slopes["lri2"] <= 2.2
        assert 0.9 <= h2_result.slopes["lri1"] <= 1.1
        window = fit_window([r for r in h2_result.rows if r.method.value == "lri2"], drop=1)
        errors = [r.error for r in sorted(window, key=lambda r: -r.tau)]
        assert all(3.3 <= a / b <= 4.7 for a, b in zip(errors, errors[1:]))

    def test_reference_methods_agree(self, h2_result):
        coarsest = max(r.error for r in h2_result.rows)
        assert 0 < h2_result.reference_disagreement <= 0.01 * coarsest

    def test_h_three_halves_errors(self, cache_dir):
        result = run(cache_dir, d=2, N=128, gamma=1.5, s=3.5, lam=-1, taus=DYADIC_TAUS)
        assert 1.8 <= result.slopes["lri2"] <= 2.2

    def test_h1_errors(self, cache_dir):
        result = run(cache_dir, d=2, N=128, gamma=1.0, s=3.0, lam=-1, taus=DYADIC_TAUS)
        assert 1.5 <= result.slopes["lri2"] <= 2.1


@pytest.mark.slow
class TestOneDimensional:
    def test_fast_check(self, cache_dir):
        result = run(cache_dir, d=1, N=256, gamma=1.0, s=3.0, taus=DYADIC_TAUS)
        assert 1.8 <= result.slopes["lri2"] <= 2.2

    def test_strang_on_smooth_data(self, cache_dir):
        result = run(cache_dir, d=1, N=128, gamma=1.0, s=8.0, methods=["strang"], taus=DYADIC_TAUS)
        assert result.slopes["strang"] >= 1.8
