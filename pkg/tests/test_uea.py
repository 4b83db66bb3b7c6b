import pytest
from sympy import QQ

from ddca_verify import uea
from ddca_verify.exceptions import ConfigurationError, DegreeCapError
from ddca_verify.liealg import dual_bases
from ddca_verify.scalarring import BETA, LAM
from ddca_verify.uea import UEAlgebra, casimir, check_casimir, check_m_identity, check_mpq, check_mu, \
    check_nu, check_omega0_weight, check_omega_forms, check_sxbxa, dual_star, enveloping, \
    nu_commutator_formula, omega0, sym2, sym3, sym_triple


class TestMultiply:
    def test_straightening(self, U4):
        """Assert that E₁₂·E₂₁ straightens to E₂₁E₁₂ + H₁₂"""
        e12, e21 = U4.E(1, 2), U4.E(2, 1)
        assert e12 * e21 == e21 * e12 + U4.H_ab(1, 2)
        assert len((e21 * e12).terms) == 1

    def test_unit(self, U4, random_word):
        """Assert that 1 is a two sided unit"""
        a = random_word(U4)
        assert U4.one() * a == a
        assert a * U4.one() == a

    def test_associativity(self, any_frame, random_word):
        """Assert (ab)c = a(bc) on random words"""
        U = enveloping(any_frame)
        for _ in range(15):
            a, b, c = random_word(U), random_word(U), random_word(U)
            assert (a * b) * c == a * (b * c)

    def test_current_associativity(self, sl4, random_word):
        """Assert associativity in the truncated current algebra"""
        U = enveloping(sl4, 'u', 6)
        for _ in range(15):
            a, b, c = (random_word(U, length=2, max_degree=1) for _ in range(3))
            assert (a * b) * c == a * (b * c)

    def test_commutator_identities(self, U4, random_word):
        """Assert antisymmetry and Jacobi for commutators"""
        for _ in range(10):
            a, b, c = random_word(U4, length=2), random_word(U4, length=2), random_word(U4, length=2)
            assert a.commutator(b) == -b.commutator(a)
            jacobi = a.commutator(b.commutator(c)) + b.commutator(c.commutator(a)) + c.commutator(a.commutator(b))
            assert not jacobi

    def test_ad_derivation(self, U4, random_word, random_lie, sl4):
        """Assert [x, ab] = [x, a]b + a[x, b] for Lie elements x"""
        for _ in range(10):
            x = U4.lie(random_lie(sl4))
            a, b = random_word(U4), random_word(U4)
            assert x.commutator(a * b) == x.commutator(a) * b + a * x.commutator(b)

    def test_parameters(self, U4):
        """Assert that coefficients in ℚ[λ, β] multiply through and specialize"""
        x = U4.E(1, 2) * (BETA - LAM / 2)
        y = U4.E(2, 1) * LAM
        product = x * y
        assert product.coefficient(next(iter((U4.E(2, 1) * U4.E(1, 2)).terms))) == LAM * BETA - LAM ** 2 / 2
        assert not product.specialize(2, 1)
        assert product.specialize(1, 1) == (U4.E(1, 2) * U4.E(2, 1)) * QQ(1, 2)

    def test_mixed_algebras(self, U4, sl4):
        """Assert that elements of different algebras cannot be combined"""
        other = enveloping(sl4, 'u', 2)
        with pytest.raises(ValueError):
            U4.E(1, 2) * other.E(1, 2)


class TestDegreeCap:
    def test_bracket_overflow(self, sl4):
        """Assert that a bracket above the cap raises instead of truncating"""
        U = UEAlgebra(sl4, 'u', 1)
        with pytest.raises(DegreeCapError):
            U.E(1, 2, 1) * U.E(2, 1, 1)
        assert U.E(2, 1, 1) * U.E(1, 2, 1)

    def test_letter_overflow(self, sl4):
        """Assert that letters above the cap are rejected"""
        U = UEAlgebra(sl4, 'v', 2)
        with pytest.raises(DegreeCapError):
            U.E(1, 2, 3)
        assert U.E(1, 2, 2).render() == '1·E12(v^2)'

    def test_bad_current(self, sl4):
        """Assert that only u, v or no current variable are accepted"""
        with pytest.raises(ConfigurationError):
            UEAlgebra(sl4, 'w')


class TestSymmetrizations:
    def test_sym2(self, U4, random_word):
        """Assert S(x, x) = 2x²"""
        x = random_word(U4, length=2)
        assert sym2(x, x) == x * x * 2

    def test_sym3_vs_triple(self, U4, random_lie, sl4):
        """Assert that (1/48) S(z₁, z₂, z₃) equals {z₁, z₂, z₃}"""
        for _ in range(5):
            z = [U4.lie(random_lie(sl4)) for _ in range(3)]
            assert sym_triple(*z) * QQ(1, 48) == sym3(*z)

    def test_nested(self, U4, random_word):
        """Assert S(S(A, B), C) - S(S(A, C), B) = [A, [B, C]]"""
        for _ in range(5):
            a, b, c = random_word(U4, length=2), random_word(U4, length=2), random_word(U4, length=2)
            assert sym2(sym2(a, b), c) - sym2(sym2(a, c), b) == a.commutator(b.commutator(c))


class TestNamedElements:
    def test_casimir(self, any_frame):
        """Assert that Ω commutes with every basis element"""
        assert check_casimir(any_frame)

    def test_casimir_nonzero(self, U4):
        """Assert that Ω contains the Cartan part from the dual bases"""
        lower, upper = dual_bases(U4.frame)
        assert casimir(U4).coefficient([U4.frame.cartan_index[0]] * 2) == upper[0].form(upper[0])

    def test_omega_forms(self, any_frame):
        """Assert that both expressions of ω_i^± agree"""
        assert check_omega_forms(any_frame)

    def test_nu(self, any_frame):
        """Assert that [ω_i⁺, X_i⁻] equals its closed form"""
        assert check_nu(any_frame)

    def test_omega0_weight(self, general_frame):
        """Assert [H_j, ω₀⁺] = -(α_j, θ) ω₀⁺"""
        assert check_omega0_weight(general_frame)
        assert omega0(general_frame)

    def test_omega0_type_a(self, sl4):
        """Assert that ω₀⁺ is not defined in type A"""
        with pytest.raises(ConfigurationError):
            omega0(sl4)

    def test_dual_star(self, U4):
        """Assert that H_k^* is the dual of H_k under the trace form"""
        _, upper = dual_bases(U4.frame)
        for k in range(1, 4):
            assert dual_star(U4, k) == U4.lie(upper[k - 1])


class TestMIdentity:
    def test_roots(self, sl4):
        """Assert the identity for β₁ = ε₁₂, β₂ = ε₂₃, γ = ε₃₄"""
        rs = sl4.rs
        assert check_m_identity(sl4, rs.eps(1, 2), rs.eps(2, 3), rs.eps(3, 4))

    def test_cartan_substitutions(self, sl4):
        """Assert the variants with a Cartan element in each slot"""
        rs = sl4.rs
        h = sl4.H(2)
        assert check_m_identity(sl4, h, rs.eps(2, 3), rs.eps(3, 4))
        assert check_m_identity(sl4, rs.eps(1, 3), h, rs.eps(2, 4))
        assert check_m_identity(sl4, rs.eps(1, 2), rs.eps(2, 1), h)

    def test_general_types(self, general_frame, rng):
        """Assert the identity on random root triples of B3, C3 and D4"""
        roots = general_frame.rs.roots
        for _ in range(3):
            assert check_m_identity(general_frame, rng.choice(roots), rng.choice(roots), rng.choice(roots))

    def test_mpq(self, sl4):
        """Assert the current algebra variant with split degrees"""
        rs = sl4.rs
        assert check_mpq(sl4, rs.eps(1, 2), rs.eps(3, 4), rs.eps(2, 3), 1, 1, smax=3)

    def test_mu(self, sl4):
        """Assert the shifted variant for s = 2 with cap 3"""
        rs = sl4.rs
        assert check_mu(sl4, rs.eps(1, 2), rs.eps(2, 3), rs.eps(3, 4), 2, smax=3)
        assert check_mu(sl4, rs.eps(1, 2), rs.eps(3, 4), sl4.H(1), 2, smax=3)

    def test_sxbxa(self, any_frame, rng):
        """Assert the Casimir tensor rewriting of Σ S([X₁, X_α], [X_{-α}, X₂])"""
        roots = any_frame.rs.roots
        for _ in range(3):
            assert check_sxbxa(any_frame, rng.choice(roots), rng.choice(roots))


class TestNuCommutator:
    @pytest.mark.parametrize('i,j', [(1, 3), (1, 2), (2, 1)])
    def test_sl4(self, sl4, i, j):
        """Assert both closed forms of [ν_i, ν_j] in U(sl_4)"""
        assert nu_commutator_formula(sl4, i, j)

    def test_sl5(self, sl5):
        """Assert both closed forms of [ν_2, ν_4] in U(sl_5)"""
        assert nu_commutator_formula(sl5, 2, 4)

    @pytest.mark.slow
    def test_all_pairs(self, sl5):
        """Assert both closed forms for every pair in U(sl_5)"""
        for i in range(1, 5):
            for j in range(1, 5):
                if i != j:
                    assert nu_commutator_formula(sl5, i, j)

    def test_dropped_summands_cancel(self, U4):
        """Assert that the two summands left out for j = i + 1 cancel"""
        for i in (1, 2):
            assert uea._nu_last_pair(U4, i, i + 1) == U4.zero()

    def test_dropped_summands_are_checked(self, sl4, monkeypatch):
        """Assert that the formula fails for j = i + 1 when the left out summands do not cancel"""
        monkeypatch.setattr(uea, '_nu_last_pair', lambda U, i, j: U.E(1, 2))
        assert not nu_commutator_formula(sl4, 1, 2)

    def test_type_check(self, b3):
        """Assert that the formula is rejected outside type A"""
        with pytest.raises(ConfigurationError):
            nu_commutator_formula(b3, 1, 2)
