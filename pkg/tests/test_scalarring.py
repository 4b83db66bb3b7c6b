from fractions import Fraction

import pytest
from sympy import QQ

from ddca_verify.scalarring import BETA, LAM, RING, add, constant_value, mul, param_degree, render, \
    render_rational, specialize, terms, to_qq


class TestArithmetic:
    def test_add(self):
        """Assert that addition cancels and doubles exactly"""
        assert add(LAM, -LAM) == 0
        assert not terms(add(LAM, -LAM))
        assert add(BETA - LAM / 2, BETA - LAM / 2) == 2 * BETA - LAM
        assert add(LAM * BETA, LAM * BETA) == 2 * LAM * BETA

    def test_mul(self):
        """Assert that multiplication expands products of deformation parameters"""
        shifted = BETA - LAM / 2
        assert mul(shifted, shifted) == BETA ** 2 - LAM * BETA + LAM ** 2 / 4
        assert mul(4, mul(shifted, shifted)) - mul(4 * LAM, 4 * LAM) == 4 * BETA ** 2 - 4 * LAM * BETA - 15 * LAM ** 2
        assert mul(1, shifted) == shifted

    def test_ring_axioms(self, random_scalar):
        """Assert associativity, commutativity and distributivity on random triples"""
        for _ in range(50):
            a, b, c = random_scalar(), random_scalar(), random_scalar()
            assert add(add(a, b), c) == add(a, add(b, c))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert mul(a, b) == mul(b, a)
            assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


class TestSpecialize:
    def test_values(self):
        """Assert exact evaluation at rational points"""
        assert specialize(LAM * BETA, 0, 7) == 0
        assert specialize(BETA - LAM / 2, 2, 1) == 0
        assert specialize(BETA - LAM / 2, '1/3', Fraction(1, 2)) == QQ(1, 3)

    @pytest.mark.parametrize('n', [4, 5, 6])
    def test_centrality_factor(self, n):
        """Assert that 16(β-λ/2)² - n²λ² vanishes on the line nλ = 4(β - λ/2)"""
        criterion = 16 * (BETA - LAM / 2) ** 2 - n ** 2 * LAM ** 2
        lam0 = QQ(2)
        assert specialize(criterion, lam0, n * lam0 / 4 + lam0 / 2) == 0
        assert specialize(criterion, lam0, -n * lam0 / 4 + lam0 / 2) == 0

    def test_homomorphism(self, random_scalar, rng):
        """Assert that specialization respects products and sums"""
        for _ in range(50):
            a, b = random_scalar(), random_scalar()
            point = (QQ(rng.randint(-4, 4), rng.randint(1, 3)), QQ(rng.randint(-4, 4), rng.randint(1, 3)))
            assert specialize(mul(a, b), *point) == specialize(a, *point) * specialize(b, *point)
            assert specialize(add(a, b), *point) == specialize(a, *point) + specialize(b, *point)


class TestCoercion:
    def test_to_qq(self):
        """Assert that ints, fractions, strings and constants are read as rationals"""
        assert to_qq(3) == QQ(3)
        assert to_qq('-2/6') == QQ(-1, 3)
        assert to_qq(Fraction(5, 10)) == QQ(1, 2)
        assert to_qq(RING(7)) == QQ(7)

    def test_rejects(self):
        """Assert that booleans, malformed strings and non constant polynomials are rejected"""
        with pytest.raises(TypeError):
            to_qq(True)
        with pytest.raises(ValueError):
            to_qq('one half')
        with pytest.raises(ValueError):
            to_qq(LAM)

    def test_helpers(self):
        """Assert the constant term and total degree helpers"""
        assert constant_value(3 + LAM) == 3
        assert param_degree(LAM ** 2 * BETA + BETA) == 3
        assert param_degree(RING.zero) == 0


class TestRender:
    def test_render(self):
        """Assert the canonical rendering sorted by (deg λ, deg β)"""
        assert render(RING.zero) == '0'
        assert render(BETA - LAM / 2) == '1·β - 1/2·λ'
        assert render(-LAM ** 2 * BETA + 3) == '3 - 1·λ^2·β'
        assert render_rational(QQ(-3, 4)) == '-3/4'
