"""Reference-kernel accuracy and self-consistency.

mpmath (50 digits) is the independent oracle; both kernel backends are
checked when the compiled extension is available.
"""

import math
import random

import mpmath as mp
import pytest

from gamma_envelope import refcore
from gamma_envelope import _kernels

mp.mp.dps = 50

BACKENDS = [pytest.param(_kernels, id="python")]
try:
    from gamma_envelope import _ckernels

    BACKENDS.append(pytest.param(_ckernels, id="compiled"))
except ImportError:
    pass


@pytest.fixture(params=BACKENDS)
def kernels(request):
    return request.param


class TestLnGamma:
    def test_at_one(self, kernels):
        assert kernels.ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)

    def test_at_half(self, kernels):
        # Gamma(1/2) = sqrt(pi)
        assert kernels.ln_gamma(0.5) == pytest.approx(
            math.log(math.sqrt(math.pi)), rel=1e-14
        )

    def test_at_3_5_via_recurrence(self, kernels):
        # Gamma(3.5) = 2.5 * 1.5 * Gamma(1.5), Gamma(1.5) = sqrt(pi)/2
        expected = math.log(2.5 * 1.5 * math.sqrt(math.pi) / 2.0)
        assert kernels.ln_gamma(3.5) == pytest.approx(expected, rel=1e-13)

    def test_accuracy_sweep(self, kernels):
        rng = random.Random(20240811)
        xs = [10.0**e for e in range(-3, 7)]
        xs += [rng.uniform(1e-3, 100.0) for _ in range(400)]
        xs += [rng.uniform(100.0, 1e6) for _ in range(100)]
        for x in xs:
            ref = float(mp.loggamma(x))
            assert abs(kernels.ln_gamma(x) - ref) <= 1e-12 * (1.0 + abs(ref))

    def test_domain_errors(self, kernels):
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(ValueError):
                kernels.ln_gamma(bad)


class TestDigamma:
    def test_at_one_is_minus_gamma(self, kernels):
        assert kernels.digamma(1.0) == pytest.approx(
            -refcore.EULER_GAMMA, abs=1e-13
        )

    def test_at_two(self, kernels):
        assert kernels.digamma(2.0) == pytest.approx(
            1.0 - refcore.EULER_GAMMA, abs=1e-13
        )

    def test_at_half(self, kernels):
        assert kernels.digamma(0.5) == pytest.approx(
            -refcore.EULER_GAMMA - 2.0 * math.log(2.0), abs=1e-12
        )

    def test_accuracy_sweep(self, kernels):
        rng = random.Random(7)
        for _ in range(400):
            x = rng.uniform(1e-3, 1e4)
            ref = float(mp.digamma(x))
            assert abs(kernels.digamma(x) - ref) <= 1e-12 * (1.0 + abs(ref))

    def test_domain_error(self, kernels):
        with pytest.raises(ValueError):
            kernels.digamma(-2.0)


class TestPolygamma:
    def test_trigamma_at_one(self, kernels):
        assert kernels.polygamma(1, 1.0) == pytest.approx(
            math.pi**2 / 6.0, rel=1e-13
        )

    def test_trigamma_at_two(self, kernels):
        # recurrence: psi'(2) = psi'(1) - 1
        assert kernels.polygamma(1, 2.0) == pytest.approx(
            math.pi**2 / 6.0 - 1.0, rel=1e-12
        )

    def test_psi2_recurrence_at_two(self, kernels):
        assert kernels.polygamma(2, 2.0) == pytest.approx(
            kernels.polygamma(2, 1.0) + 2.0, rel=1e-12
        )

    def test_sign_pattern(self, kernels):
        for k in (1, 2, 3):
            v = kernels.polygamma(k, 3.7)
            assert (-1.0) ** (k + 1) * v > 0.0

    def test_accuracy_sweep(self, kernels):
        rng = random.Random(11)
        for _ in range(200):
            x = rng.uniform(1e-3, 1e4)
            for k in (1, 2, 3):
                ref = float(mp.polygamma(k, x))
                assert abs(kernels.polygamma(k, x) - ref) <= 1e-10 * abs(ref)

    def test_unsupported_order(self, kernels):
        with pytest.raises(ValueError):
            kernels.polygamma(4, 1.0)
        with pytest.raises(ValueError):
            kernels.polygamma(0, 1.0)


class TestConsistency:
    def test_lngamma_recurrence(self):
        rng = random.Random(123)
        for _ in range(1000):
            x = rng.uniform(0.5, 100.0)
            lhs = refcore.ln_gamma(x + 1.0)
            rhs = refcore.ln_gamma(x) + math.log(x)
            assert abs(lhs - rhs) <= 1e-11 * (1.0 + abs(lhs))

    def test_digamma_recurrence(self):
        rng = random.Random(123)
        for _ in range(1000):
            x = rng.uniform(0.5, 100.0)
            assert refcore.digamma(x + 1.0) - refcore.digamma(x) == (
                pytest.approx(1.0 / x, abs=1e-11)
            )

    def test_digamma_derivative_matches_trigamma(self):
        h = 1e-5
        for x in (0.7, 1.3, 2.9, 10.1, 42.0):
            fd = (refcore.digamma(x + h) - refcore.digamma(x - h)) / (2 * h)
            assert fd == pytest.approx(refcore.polygamma(1, x), abs=1e-6)

    def test_backends_agree(self):
        if len(BACKENDS) < 2:
            pytest.skip("compiled backend unavailable")
        rng = random.Random(5)
        for _ in range(300):
            x = rng.uniform(1e-3, 1e5)
            assert _kernels.ln_gamma(x) == pytest.approx(
                _ckernels.ln_gamma(x), rel=1e-15, abs=1e-15
            )
            assert _kernels.digamma(x) == pytest.approx(
                _ckernels.digamma(x), rel=1e-15, abs=1e-15
            )
            for k in (1, 2, 3):
                assert _kernels.polygamma(k, x) == pytest.approx(
                    _ckernels.polygamma(k, x), rel=1e-14
                )


class TestConstants:
    def test_euler_gamma_window(self):
        c = refcore.constants()
        assert 0.577215664 < c.euler_gamma < 0.577215665

    def test_exact_relations(self):
        c = refcore.constants()
        assert c.alpha_sharp == 2.0 * (1.0 - c.euler_gamma)
        assert c.beta_sharp == c.euler_gamma
        assert c.alzer_alpha == 1.0 - c.euler_gamma

    def test_five_decimal_anchors(self):
        c = refcore.constants()
        # the published decimals are truncated, not rounded, so the
        # window is one unit in the last printed place
        assert c.alzer_alpha == pytest.approx(0.42278, abs=1e-5)
        assert c.alzer_beta == pytest.approx(0.53385, abs=1e-5)
        assert c.alpha_sharp == pytest.approx(0.8455687, abs=5e-8)
        assert c.beta_sharp == pytest.approx(0.5772157, abs=5e-8)

    def test_literal_matches_kernel(self):
        assert abs(refcore.EULER_GAMMA + refcore.digamma(1.0)) <= 1e-12
