import pytest

from ddca_verify.ddca.higher import build_Z, contraction_constant, criterion_scalar, extract_multiple, higher_rhs, \
    specializations, w_symbol
from ddca_verify.ddca.seeds import kq_rhs, new_algebra
from ddca_verify.exceptions import ConfigurationError, DegreeCapError
from ddca_verify.scalarring import BETA, LAM, specialize
from ddca_verify.suites.higher_degree import define_Ps


class TestContraction:
    @pytest.mark.parametrize('frame, expected', [('sl4', 48), ('sl5', 60)])
    def test_constant(self, frame, expected, request):
        """Assert that the contraction collected in [K(H_34), Z(s)] is 12n·H_34"""
        assert contraction_constant(request.getfixturevalue(frame)) == expected

    def test_needs_sl(self, b3):
        with pytest.raises(ConfigurationError):
            contraction_constant(b3)


class TestCriterion:
    def test_closed_form(self):
        """Assert the criterion polynomial and its binomial factor"""
        shift = BETA - LAM / 2
        assert criterion_scalar(4, 2) == shift ** 2 * 16 - LAM ** 2 * 16
        assert criterion_scalar(5, 4) == (shift ** 2 * 16 - LAM ** 2 * 25) * 6

    @pytest.mark.parametrize('n', [4, 5, 6])
    @pytest.mark.parametrize('s', [2, 3, 4])
    def test_zeros(self, n, s):
        """Assert that the criterion vanishes exactly at nλ = ±4(β - λ/2)"""
        value = criterion_scalar(n, s)
        for lam0, beta0 in specializations(n):
            assert specialize(value, lam0, beta0) == 0
        assert specialize(value, 1, 1) != 0

    def test_generic_value(self):
        """Assert that at λ = β = 1 and n = 4 the criterion is -12·C(s, 2)"""
        assert specialize(criterion_scalar(4, 2), 1, 1) == -12
        assert specialize(criterion_scalar(4, 3), 1, 1) == -36

    @pytest.mark.parametrize('n, s', [(3, 2), (4, 1), (2, 0)])
    def test_range(self, n, s):
        with pytest.raises(ConfigurationError):
            criterion_scalar(n, s)


class TestHigherRhs:
    def test_degree_one(self, two_param, sl4):
        """Assert that the degree one relation is the defining [K, Q] relation"""
        rs = sl4.rs
        for x, y in [(rs.eps(1, 2), rs.eps(2, 3)), (rs.eps(1, 3), rs.eps(4, 2)), (rs.eps(1, 2), rs.eps(1, 2))]:
            assert higher_rhs(two_param, x, y, 1) == kq_rhs(two_param, x, y)

    def test_degree_zero(self, two_param, sl4):
        rs = sl4.rs
        x, y = rs.eps(1, 2), rs.eps(2, 3)
        assert higher_rhs(two_param, x, y, 0) == two_param.K(sl4.E(1, 3))
        with pytest.raises(ValueError):
            higher_rhs(two_param, x, y, -1)

    def test_w_symbols(self):
        """Assert that W_ab(s) carries its degree in its grade"""
        assert w_symbol(1, 2) != w_symbol(1, 2, 2)
        assert w_symbol(1, 2, 3).args[2] == (3, 1)


class TestExtractMultiple:
    def test_multiple(self, two_param, sl4):
        alg = two_param
        target = alg.cur('u', sl4.H_ab(3, 4), 2)
        assert extract_multiple(target * (LAM * 3), target) == LAM * 3
        assert extract_multiple(alg.zero(), target) == 0

    def test_not_a_multiple(self, two_param, sl4):
        alg = two_param
        target = alg.Q(sl4.H_ab(3, 4))
        assert extract_multiple(target + alg.Q(sl4.E(1, 2)), target) is None
        with pytest.raises(ValueError):
            extract_multiple(target, alg.zero())


class TestZ:
    @pytest.mark.parametrize('side, expected', [('u', (2, 1)), ('v', (1, 2))])
    def test_bigrade(self, two_param, side, expected):
        """Assert that Z(s) and its mirror are homogeneous of the expected bigrade"""
        assert build_Z(two_param, 2, side).grades() == {expected}

    def test_hold(self, two_param):
        """Assert that the held form of Z(s) releases to the evaluated one"""
        assert two_param.release(build_Z(two_param, 2)) == build_Z(two_param, 2, hold=False)

    def test_arguments(self, two_param):
        with pytest.raises(DegreeCapError):
            build_Z(two_param, two_param.smax + 1)
        with pytest.raises(ValueError):
            build_Z(two_param, 2, 'w')


@pytest.mark.slow
class TestDefinePs:
    def test_degree_two(self, sl4):
        """Assert that P_2 is defined and the degree two relation registered"""
        alg = new_algebra(sl4, 'two-parameter', smax=3)
        define_Ps(alg, 2)
        assert 2 in alg.kb.ps_degrees
        assert alg.kb.has('higher-relation-2')
        x, y = sl4.rs.eps(1, 2), sl4.rs.eps(2, 3)
        assert alg.bracket(alg.K(sl4.X(x)), alg.cur('u', sl4.X(y), 2)) == higher_rhs(alg, x, y, 2)
