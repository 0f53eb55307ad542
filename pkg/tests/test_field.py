import math

import numpy as np
import pytest

from nls.phi import phi_symbol
from nls.spectral import (
    Field,
    MultiplierSymbol,
    Representation,
    SobolevWeight,
    apply_multiplier,
    frequency_squared_symbol,
    hgamma_norm,
    l2_norm,
    laplacian_symbol,
    make_grid,
    to_physical,
    to_spectral,
    transforms,
)


def plane_wave(grid, k):
    x = grid.nodes()
    phase = sum(kj * xj for kj, xj in zip(k, x))
    return Field.from_physical(grid, np.exp(1j * phase))


class TestField:
    def test_values_are_complex_and_reshaped(self, grid_2d):
        f = Field.from_physical(grid_2d, np.arange(grid_2d.total_points))
        assert f.values.dtype == np.complex128
        assert f.values.shape == grid_2d.shape
        assert f.flat[17] == 17

    def test_shape_mismatch_is_rejected(self, grid_2d):
        with pytest.raises(ValueError):
            Field.from_physical(grid_2d, np.zeros(5))

    def test_plane_wave_coefficient(self, grid_2d):
        f = plane_wave(grid_2d, (2, -3))
        assert f.coefficient((2, -3)) == pytest.approx(1.0, abs=1e-14)
        spectral = to_spectral(f).values.copy()
        spectral[grid_2d.index_of((2, -3))] = 0.0
        assert np.max(np.abs(spectral)) < 1e-14

    def test_constant_has_mean_coefficient(self, grid_1d):
        f = Field.from_physical(grid_1d, np.full(grid_1d.shape, 2.5 - 1j))
        assert f.coefficient(0) == pytest.approx(2.5 - 1j)

    def test_conversion_returns_to_samples(self, smooth_field):
        back = to_physical(to_spectral(smooth_field))
        np.testing.assert_allclose(back.values, smooth_field.values, rtol=0, atol=1e-13)

    def test_representation_switch_is_idempotent(self, smooth_field):
        assert smooth_field.to_physical() is smooth_field
        spectral = smooth_field.to(Representation.SPECTRAL)
        assert spectral.to("spectral") is spectral
        assert not spectral.is_physical

    def test_conj_is_pointwise(self, smooth_field):
        conj = smooth_field.to_spectral().conj()
        assert conj.is_physical
        np.testing.assert_allclose(conj.values, np.conj(smooth_field.values), atol=1e-14)

    def test_zeros_and_finiteness(self, grid_2d):
        z = Field.zeros(grid_2d, Representation.SPECTRAL)
        assert z.is_finite()
        assert not z.with_values(np.full(grid_2d.shape, np.nan)).is_finite()

    def test_fft_workers_setting(self, smooth_field):
        try:
            transforms.set_workers(2)
            assert transforms.get_workers() == 2
            back = smooth_field.to_spectral().to_physical()
            np.testing.assert_allclose(back.values, smooth_field.values, atol=1e-13)
        finally:
            transforms.set_workers(None)
        with pytest.raises(ValueError):
            transforms.set_workers(0)


class TestMultipliers:
    def test_propagator_on_plane_wave(self, grid_2d):
        f = plane_wave(grid_2d, (3, 1))
        out = apply_multiplier(laplacian_symbol(0.3), f)
        assert out.is_physical
        np.testing.assert_allclose(out.values, np.exp(-0.3j * 10) * f.values, atol=1e-13)

    def test_identity_and_constant_data(self, grid_1d, smooth_field):
        same = apply_multiplier(MultiplierSymbol.constant(1.0), smooth_field)
        np.testing.assert_allclose(same.values, smooth_field.values, atol=1e-14)
        c = Field.from_physical(grid_1d, np.full(grid_1d.shape, 0.3 + 2j))
        np.testing.assert_allclose(apply_multiplier(laplacian_symbol(0.5), c).values, 0.3 + 2j, atol=1e-14)

    def test_output_representation(self, smooth_field):
        out = apply_multiplier(MultiplierSymbol.constant(2.0), smooth_field, "spectral")
        assert out.representation is Representation.SPECTRAL
        np.testing.assert_allclose(out.values, 2 * smooth_field.to_spectral().values)

    def test_table_matches_pointwise_evaluation(self, grid_2d, rng):
        m = phi_symbol(0.37)
        table = m.table(grid_2d)
        for _ in range(20):
            xi = tuple(int(k) for k in rng.integers(-8, 8, size=2))
            assert m(xi) == pytest.approx(table[grid_2d.index_of(xi)], rel=1e-15)

    def test_table_is_cached_and_read_only(self, grid_2d):
        m = laplacian_symbol(0.1)
        assert m.table(grid_2d) is m.table(grid_2d)
        with pytest.raises(ValueError):
            m.table(grid_2d)[0, 0] = 1.0

    def test_constant_table_broadcasts(self, grid_2d):
        table = MultiplierSymbol.constant(1j).table(grid_2d)
        assert table.shape == grid_2d.shape
        assert np.all(table == 1j)

    def test_composition(self, grid_1d):
        a, b = laplacian_symbol(0.2), laplacian_symbol(0.5)
        np.testing.assert_allclose((a * b).table(grid_1d), laplacian_symbol(0.7).table(grid_1d))
        total = (a + MultiplierSymbol.constant(1.0)).table(grid_1d)
        np.testing.assert_allclose(total, a.table(grid_1d) + 1.0)

    def test_composition_of_applications(self, smooth_field):
        a, b = laplacian_symbol(0.25), laplacian_symbol(0.5)
        twice = apply_multiplier(a, apply_multiplier(b, smooth_field), "spectral")
        once = apply_multiplier(laplacian_symbol(0.75), smooth_field, "spectral")
        np.testing.assert_allclose(twice.values, once.values, rtol=1e-13, atol=0)
        product = apply_multiplier(a * b, smooth_field, "spectral")
        np.testing.assert_allclose(product.values, once.values, rtol=1e-13, atol=0)

    def test_frequency_squared(self, grid_2d):
        m = frequency_squared_symbol()
        assert m((3, -4)) == 25
        np.testing.assert_array_equal(m.table(grid_2d).real, grid_2d.squared_frequencies())


class TestNorms:
    def test_l2_of_constant(self):
        grid = make_grid(2, 8)
        f = Field.from_physical(grid, np.ones(grid.shape))
        assert l2_norm(f) == pytest.approx(2 * math.pi)

    def test_plancherel(self, smooth_field):
        assert hgamma_norm(smooth_field, 0.0) == pytest.approx(l2_norm(smooth_field), rel=1e-12)

    def test_weights_on_single_mode(self):
        grid = make_grid(1, 16)
        f = plane_wave(grid, (1,))
        root = math.sqrt(2 * math.pi)
        assert hgamma_norm(f, 2.0, SobolevWeight.LINEAR) == pytest.approx(4 * root)
        assert hgamma_norm(f, 2.0, "bessel") == pytest.approx(2 * root)

    @pytest.mark.parametrize("weight", ["linear", "bessel"])
    def test_norm_is_monotone_in_gamma(self, smooth_field, weight):
        norms = [hgamma_norm(smooth_field, g, weight) for g in (0.0, 0.5, 1.0, 2.0)]
        assert norms == sorted(norms)

    def test_negative_gamma(self, smooth_field):
        with pytest.raises(ValueError):
            hgamma_norm(smooth_field, -1.0)
