import mpmath
import numpy as np
import pytest

from nls.phi import SERIES_SWITCH, phi, phi_symbol, psi, psi_symbol
from nls.spectral import make_grid

mpmath.mp.dps = 50


def phi_reference(z: complex) -> complex:
    z = mpmath.mpc(z)
    return complex(mpmath.expm1(z) / z)


def psi_reference(z: complex) -> complex:
    z = mpmath.mpc(z)
    return complex((mpmath.expm1(z) - z * mpmath.exp(z)) / (z * z))


def relative_error(value: complex, reference: complex) -> float:
    return abs(value - reference) / abs(reference)


class TestPhiFunctions:
    def test_values_at_zero(self):
        assert phi(0.0) == 1.0
        assert psi(0.0) == -0.5
        out = psi(np.zeros(3))
        assert np.all(out == -0.5)

    @pytest.mark.parametrize("fn, reference", [(phi, phi_reference), (psi, psi_reference)])
    def test_imaginary_axis(self, fn, reference):
        ys = np.concatenate([np.linspace(-50, 50, 401), np.geomspace(1e-8, 50, 200)])
        values = fn(1j * ys)
        for y, value in zip(ys, values):
            if y == 0:
                continue
            assert relative_error(value, reference(1j * y)) <= 1e-13, y

    @pytest.mark.parametrize("fn, reference", [(phi, phi_reference), (psi, psi_reference)])
    def test_across_series_switch(self, fn, reference):
        angles = np.linspace(0, 2 * np.pi, 16, endpoint=False)
        for radius in SERIES_SWITCH * np.array([0.5, 0.999999, 1.0, 1.000001, 2.0]):
            for z in radius * np.exp(1j * angles):
                assert relative_error(fn(z), reference(complex(z))) <= 1e-13, z

    def test_real_arguments(self):
        assert phi(1.0) == pytest.approx(np.e - 1, rel=1e-15)
        assert psi(1.0) == pytest.approx(-1.0, rel=1e-15)

    def test_scalar_in_scalar_out(self):
        assert np.ndim(phi(0.3j)) == 0
        assert phi(np.array([0.3j, 3j])).shape == (2,)

    def test_known_closed_forms(self):
        # φ(iπ) = 2i/π and ψ(2πi) = i/(2π)
        assert phi(1j * np.pi) == pytest.approx(2j / np.pi, rel=1e-14)
        assert psi(2j * np.pi) == pytest.approx(0.5j / np.pi, rel=1e-14)


class TestPhiSymbols:
    def test_symbol_evaluates_at_twice_tau_frequency(self):
        grid = make_grid(2, 8)
        tau = 0.125
        k2 = grid.squared_frequencies()
        np.testing.assert_array_equal(phi_symbol(tau).table(grid), phi(2j * tau * k2))
        np.testing.assert_array_equal(psi_symbol(tau, -1).table(grid), psi(-2j * tau * k2))

    def test_symbol_at_zero_frequency(self):
        assert phi_symbol(0.5)((0, 0)) == 1.0
        assert psi_symbol(0.5)((0,)) == -0.5

    @pytest.mark.parametrize("factory", [phi_symbol, psi_symbol])
    def test_invalid_arguments(self, factory):
        with pytest.raises(ValueError):
            factory(0.0)
        with pytest.raises(ValueError):
            factory(0.1, sign=2)
