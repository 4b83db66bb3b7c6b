import pytest
from sympy import QQ

from ddca_verify.liealg import LieElement, apply_word, bracket, dual_bases, frame_for, longest_word, weyl_op, word_to


def neg(root):
    return tuple(-a for a in root)


class TestRealize:
    def test_type_a(self, sl4):
        """Assert that sl_4 root vectors are matrix units with the trace form"""
        rs = sl4.rs
        e12, e21 = sl4.X(rs.eps(1, 2)), sl4.X(rs.eps(2, 1))
        assert e12.form(e21) == 1
        assert sl4.kappa == 1
        assert sl4.label(sl4.root_index[rs.eps(1, 2)]) == 'E12'

    def test_normalization(self, any_frame):
        """Assert (X_α⁺, X_α⁻) = 1 and [H_α, X_β] = (α, β) X_β for all positive α and all β"""
        rs = any_frame.rs
        for alpha in rs.positive_roots:
            assert any_frame.X(alpha).form(any_frame.X(neg(alpha))) == 1
            h = any_frame.H_root(alpha)
            for beta in rs.roots:
                assert h.bracket(any_frame.X(beta)) == any_frame.X(beta) * rs.pairing(alpha, beta)

    def test_theta_pair(self, general_frame):
        """Assert the rescaled pair around the highest root"""
        rs = general_frame.rs
        k = rs.special_node
        theta, alpha_k = rs.highest_root, rs.simple_roots[k - 1]
        rest = tuple(a - b for a, b in zip(theta, alpha_k))
        c = rs.pairing(theta, alpha_k)
        x = general_frame.X
        assert x(neg(theta)) == bracket(x(neg(alpha_k)), x(neg(rest)))
        assert bracket(x(neg(theta)), x(alpha_k)) == x(neg(rest)) * (-c)
        assert bracket(x(neg(theta)), x(rest)) == x(neg(alpha_k)) * c

    def test_membership(self, any_frame, random_lie):
        """Assert that every basis element and random combination lies in the algebra"""
        for x in any_frame.basis:
            assert x.in_algebra()
        assert random_lie(any_frame).in_algebra()

    def test_coordinates(self, any_frame, random_lie):
        """Assert that coordinates reproduce the element"""
        for _ in range(5):
            x = random_lie(any_frame)
            assert any_frame.element(x.coords()) == x


class TestBracket:
    def test_matrix_units(self, sl4):
        """Assert the basic commutators of matrix units"""
        assert bracket(sl4.E(1, 2), sl4.E(2, 3)) == sl4.E(1, 3)
        assert not bracket(sl4.E(1, 2), sl4.E(3, 4))
        assert bracket(sl4.H_ab(1, 2), sl4.E(1, 2)) == sl4.E(1, 2) * 2

    def test_realization_mismatch(self, sl4, b3):
        """Assert that elements of different realizations cannot be bracketed"""
        with pytest.raises(ValueError):
            bracket(sl4.E(1, 2), b3.basis[0])
        with pytest.raises(TypeError):
            bracket(sl4.E(1, 2), 1)

    def test_jacobi(self, any_frame, random_lie):
        """Assert the Jacobi identity on random triples"""
        for _ in range(10):
            x, y, z = random_lie(any_frame), random_lie(any_frame), random_lie(any_frame)
            total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
            assert not total

    def test_invariance(self, any_frame, random_lie):
        """Assert ([x, y], z) + (y, [x, z]) = 0 on random triples"""
        for _ in range(10):
            x, y, z = random_lie(any_frame), random_lie(any_frame), random_lie(any_frame)
            assert bracket(x, y).form(z) + y.form(bracket(x, z)) == 0

    def test_structure_constants(self, b3):
        """Assert that the cached structure constants are antisymmetric and match the matrices"""
        for i in range(0, b3.dim, 3):
            for j in range(b3.dim):
                assert dict(b3.bracket_coords(i, j)) == {k: -v for k, v in b3.bracket_coords(j, i)}
                assert b3.element(dict(b3.bracket_coords(i, j))) == bracket(b3.basis[i], b3.basis[j])


class TestWeyl:
    @pytest.mark.parametrize('rational', [False, True])
    def test_cartan(self, any_frame, rational):
        """Assert s_i(H_j) = H_j - (2(α_i, α_j)/(α_i, α_i)) H_i"""
        rs = any_frame.rs
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                expected = any_frame.H(j) - any_frame.H(i) * rs.cartan[i - 1][j - 1]
                assert weyl_op(i, any_frame.H(j), rational=rational) == expected

    def test_root_spaces(self, any_frame):
        """Assert that s_i maps g_α into g_{s_i(α)}"""
        rs = any_frame.rs
        for i in range(1, rs.rank + 1):
            for alpha in rs.positive_roots:
                image = weyl_op(i, any_frame.X(alpha))
                assert set(image.coords()) == {any_frame.root_index[rs.reflect(i, alpha)]}

    def test_sqrt_field(self, b3):
        """Assert that short roots of B3 need the quadratic extension and long ones do not"""
        alpha3 = b3.rs.simple_roots[2]
        image = weyl_op(3, b3.X(b3.rs.simple_roots[1]))
        assert image.matrix.domain != QQ
        assert weyl_op(3, b3.X(alpha3), rational=True).matrix.domain == QQ

    @pytest.mark.parametrize('label', ['sl4', 'b3', 'c3', 'd4'])
    def test_longest_word(self, label, request):
        """Assert that w₀ maps X_θ⁻ to a non zero multiple of X_θ⁺"""
        frame = request.getfixturevalue(label)
        rs = frame.rs
        word = longest_word(rs)
        assert len(word) == len(rs.positive_roots)
        image = apply_word(word, frame.X(neg(rs.highest_root)), rational=True)
        assert isinstance(image, LieElement)
        assert set(image.coords()) == {frame.root_index[rs.highest_root]}

    @pytest.mark.parametrize('label', ['sl4', 'b3'])
    def test_word_to(self, label, request):
        """Assert that word_to carries a root onto every root of the same length"""
        rs = request.getfixturevalue(label).rs
        source = rs.simple_roots[0]
        assert word_to(rs, source, source) == ()
        for target in rs.roots:
            word = word_to(rs, source, target)
            if rs.pairing(target, target) != rs.pairing(source, source):
                assert word is None
                continue
            image = source
            for i in reversed(word):
                image = rs.reflect(i, image)
            assert image == tuple(target)


class TestDualBases:
    def test_pairing_identity(self, any_frame):
        """Assert (h̃^i, h̃_j) = δ_ij"""
        lower, upper = dual_bases(any_frame)
        for i, up in enumerate(upper):
            for j, low in enumerate(lower):
                assert up.form(low) == int(i == j)

    def test_sl4_duals(self, sl4):
        """Assert that the sl_4 duals are the partial sums of traceless diagonal units"""
        _, upper = dual_bases(sl4)
        for k in range(1, 4):
            expected = sl4.zero()
            for i in range(1, k + 1):
                expected = expected + sl4.E(i, i)
            assert upper[k - 1] == expected

    def test_frame_for(self):
        """Assert that realizations are cached per root system"""
        assert frame_for('C', 3) is frame_for('C', 3)
