import json

import pytest

from ddca_verify.exceptions import ConfigurationError
from ddca_verify.rootsys import build


class TestBuild:
    def test_type_a(self):
        """Assert that A3 lives in the ε-model with θ = ε₁ - ε₄"""
        rs = build('A', 3)
        assert rs.highest_root == (1, 0, 0, -1)
        assert rs.special_node is None
        assert rs.n == 4

    @pytest.mark.parametrize('dynkin_type,theta,k', [
        ('B', (1, 2, 2), 2),
        ('C', (2, 2, 1), 1),
        ('D', (1, 2, 1, 1), 2),
    ])
    def test_highest_root(self, dynkin_type, theta, k):
        """Assert the highest root and the node attached to the affine node"""
        rs = build(dynkin_type, len(theta))
        assert rs.highest_root == theta
        assert rs.special_node == k
        assert [j for j, c in enumerate(rs.affine_row, start=1) if c] == [k]

    @pytest.mark.parametrize('dynkin_type,rank', [('A', 2), ('B', 2), ('E', 6), ('D', 3)])
    def test_rejected(self, dynkin_type, rank):
        """Assert that unsupported types and ranks raise a ConfigurationError"""
        with pytest.raises(ConfigurationError):
            build(dynkin_type, rank)

    @pytest.mark.parametrize('dynkin_type,rank,count', [
        ('A', 3, 12), ('A', 4, 20), ('B', 3, 18), ('C', 3, 18), ('B', 4, 32), ('D', 4, 24), ('D', 5, 40),
    ])
    def test_root_counts(self, dynkin_type, rank, count):
        """Assert the number of roots of each classical type"""
        assert len(build(dynkin_type, rank).roots) == count


class TestPairing:
    def test_type_a(self):
        """Assert the δ-rule in the ε-model"""
        rs = build('A', 3)
        assert rs.pairing(rs.eps(1, 2), rs.eps(2, 3)) == -1
        assert rs.pairing(rs.eps(1, 2), rs.eps(1, 2)) == 2
        assert rs.pairing(rs.epsilon(1), rs.epsilon(2)) == 0

    @pytest.mark.parametrize('dynkin_type,rank', [('B', 3), ('C', 3), ('D', 4)])
    def test_affine_node(self, dynkin_type, rank):
        """Assert that (θ, α_k) = -d₀ c₀ₖ and that θ is long"""
        rs = build(dynkin_type, rank)
        k = rs.special_node
        assert rs.pairing(rs.highest_root, rs.simple_roots[k - 1]) == -rs.d0 * rs.affine_row[k - 1]
        assert rs.pairing(rs.highest_root, rs.highest_root) == 2

    @pytest.mark.parametrize('dynkin_type,rank', [('A', 3), ('B', 3), ('C', 3), ('D', 4)])
    def test_symmetrized_cartan(self, dynkin_type, rank):
        """Assert that d_i c_ij is symmetric"""
        rs = build(dynkin_type, rank)
        for i in range(rank):
            for j in range(rank):
                assert rs.symmetrizers[i] * rs.cartan[i][j] == rs.symmetrizers[j] * rs.cartan[j][i]

    @pytest.mark.parametrize('dynkin_type,rank', [('A', 4), ('B', 3), ('C', 3), ('D', 4)])
    def test_weyl_invariance(self, dynkin_type, rank, rng):
        """Assert that simple reflections preserve the pairing"""
        rs = build(dynkin_type, rank)
        for _ in range(30):
            x, y = rng.choice(rs.roots), rng.choice(rs.roots)
            i = rng.randint(1, rank)
            assert rs.pairing(rs.reflect(i, x), rs.reflect(i, y)) == rs.pairing(x, y)
            assert rs.is_root(rs.reflect(i, x))


class TestRoots:
    @pytest.mark.parametrize('dynkin_type,rank', [('A', 3), ('B', 3), ('C', 3), ('D', 4)])
    def test_highest(self, dynkin_type, rank):
        """Assert that θ + α_i is never a root and θ - α is a non negative combination"""
        rs = build(dynkin_type, rank)
        for alpha in rs.simple_roots:
            assert not rs.is_root(tuple(a + b for a, b in zip(rs.highest_root, alpha)))
        theta = rs.simple_coords(rs.highest_root)
        for root in rs.positive_roots:
            assert all(t >= c for t, c in zip(theta, rs.simple_coords(root)))

    def test_strings(self):
        """Assert root string membership in A3 and the string length rule in B3"""
        rs = build('A', 3)
        assert rs.root_string_ops(rs.eps(1, 2), rs.eps(2, 3)).sum_is_root
        assert not rs.root_string_ops(rs.eps(1, 2), rs.eps(1, 2)).sum_is_root

        b3 = build('B', 3)
        alpha2, alpha3 = b3.simple_roots[1], b3.simple_roots[2]
        result = b3.root_string_ops(alpha3, alpha2)
        assert len(result.string) == -b3.cartan[2][1] + 1
        assert result.sum_is_root

    def test_positive_order(self):
        """Assert that positive roots are sorted by height"""
        rs = build('C', 3)
        heights = [rs.height(x) for x in rs.positive_roots]
        assert heights == sorted(heights)
        assert set(rs.positive_roots[:3]) == set(rs.simple_roots)

    def test_json(self):
        """Assert that the canonical JSON document is stable and complete"""
        rs = build('B', 3)
        doc = json.loads(rs.to_json())
        assert doc['type'] == 'B'
        assert doc['highest_root'] == [1, 2, 2]
        assert len(doc['positive_roots']) == 9
        assert rs.to_json() == build('B', 3).to_json()
