"""Root finder: correctness against residuals, determinism, structure guards."""

import cmath
import random

import pytest

from quartics.errors import DegreeError
from quartics.numroots import (biquadratic_roots, eval_poly, newton_polish,
                               roots, with_multiplicity)


class TestRoots:
    def test_quadratic(self):
        got = roots([-1, 0, 1])  # x^2 - 1
        assert got == sorted([1.0 + 0j, -1.0 + 0j], key=lambda z: (z.real, z.imag))

    def test_quartic_roots_of_minus_one(self):
        got = roots([1, 0, 0, 0, 1])  # x^4 + 1
        for z in got:
            assert abs(z ** 4 + 1) < 1e-12
        assert len(got) == 4
        assert len({(round(z.real, 6), round(z.imag, 6)) for z in got}) == 4

    def test_family_biquadratic_roots_certify(self):
        # the a=0 component of X4 at (1, 2, 3): (u^2-4) b^4 + (2ru-4s) b^2 + r^2-4
        coeffs = [1 - 4, 0, 2 * 3 - 4 * 2, 0, 9 - 4]
        got = roots([complex(c) for c in coeffs])
        assert len(got) == 4
        for z in got:
            assert abs(eval_poly(coeffs, z)) < 1e-10

    def test_residual_bound_random(self):
        rng = random.Random(41)
        for _ in range(30):
            deg = rng.randint(1, 8)
            coeffs = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(deg)]
            coeffs.append(complex(rng.uniform(1, 3), rng.uniform(-1, 1)))
            got = roots(coeffs)
            assert len(got) == deg
            top = max(abs(c) for c in coeffs)
            for z in got:
                assert abs(eval_poly(coeffs, z)) / (1 + top) < 1e-10

    def test_determinism(self):
        coeffs = [3 - 2j, 0.5, -1, 2j, 1]
        a = roots(coeffs)
        b = roots(coeffs)
        assert all(x == y for x, y in zip(a, b))

    def test_degree_guard(self):
        with pytest.raises(DegreeError):
            roots([5])

    def test_multiplicity_flags(self):
        got = roots([1, 2, 1])  # (x+1)^2
        flagged = with_multiplicity(got, 1e-5)
        assert len(flagged) == 1
        assert flagged[0][1] == 2


class TestBiquadratic:
    def test_integer_pairs(self):
        got = biquadratic_roots([4, 0, -5, 0, 1])  # b^4 - 5 b^2 + 4
        want = sorted([1, -1, 2, -2], key=lambda v: (round(v, 8),))
        assert len(got) == 4
        for z, w in zip(sorted(got, key=lambda z: (z.real, z.imag)),
                        sorted([complex(v) for v in want], key=lambda z: (z.real, z.imag))):
            assert abs(z - w) < 1e-12

    def test_unit_circle(self):
        got = biquadratic_roots([1, 0, 0, 0, 1])  # b^4 + 1
        assert len(got) == 4
        for z in got:
            assert abs(abs(z) - 1) < 1e-12

    def test_sign_pairing(self):
        rng = random.Random(42)
        coeffs = [complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(3)]
        full = [coeffs[0], 0, coeffs[1], 0, coeffs[2]]
        got = biquadratic_roots(full)
        assert len(got) == 4
        for z in got:
            assert any(abs(z + w) < 1e-9 for w in got)

    def test_odd_coefficient_rejected(self):
        with pytest.raises(DegreeError):
            biquadratic_roots([1, 2, 1])


class TestNewton:
    def test_polish_improves(self):
        coeffs = [-2, 0, 1]  # x^2 - 2
        rough = 1.4142
        polished = newton_polish(coeffs, rough)
        assert abs(polished - cmath.sqrt(2)) < abs(rough - cmath.sqrt(2))
