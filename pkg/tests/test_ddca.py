import pytest

from ddca_verify.ddca.element import DdcaElement
from ddca_verify.ddca.kb import Family, Identity, KnowledgeBase, Provenance
from ddca_verify.ddca.seeds import kq_rhs, new_algebra
from ddca_verify.ddca.symbols import K, P, Ps, Q, SymbolClass, atom, cur, grade, held, lie, opaque, weight
from ddca_verify.ddca.symmetries import apply_symmetry
from ddca_verify.exceptions import ConfigurationError, DegreeCapError, DependencyError, RegistrationError, \
    SymmetryDomainError
from ddca_verify.scalarring import BETA, LAM


class TestSymbols:
    def test_degree_zero_current(self):
        """Assert that a current of degree zero is the Lie letter itself"""
        assert cur('u', 5, 0) == lie(5)
        assert cur('v', 5, 0) == lie(5)

    def test_shorthands(self):
        """Assert that K, Q and P_1 name the expected letters"""
        assert K(2) == cur('v', 2, 1)
        assert Q(2) == cur('u', 2, 1)
        assert Ps(2, 1) == P(2)

    def test_bad_arguments(self):
        """Assert that negative degrees, unknown sides and unsorted pairs are rejected"""
        with pytest.raises(ValueError):
            cur('u', 0, -1)
        with pytest.raises(ValueError):
            cur('w', 0, 1)
        with pytest.raises(ValueError):
            atom(Q(0), K(0))
        with pytest.raises(ValueError):
            held(Q(0), K(0))

    def test_grades(self):
        """Assert the bigrades of letters and of bracket atoms"""
        assert grade(lie(0)) == (0, 0)
        assert grade(cur('u', 0, 3)) == (3, 0)
        assert grade(K(0)) == (0, 1)
        assert grade(P(0)) == (1, 1)
        assert grade(Ps(0, 3)) == (3, 1)
        assert grade(atom(K(0), Q(1))) == (1, 1)
        assert grade(opaque('W', (1, 2), (2, 1))) == (2, 1)

    def test_weights_decrease_on_atoms(self):
        """Assert that an atom weighs less than its two arguments together and a held bracket as much"""
        assert weight(atom(K(0), Q(1))) == weight(K(0)) + weight(Q(1)) - 1
        assert weight(held(K(0), Q(1))) == weight(K(0)) + weight(Q(1))


class TestElement:
    def test_linear_arithmetic(self, two_param, sl4):
        """Assert that sums, negation and scalar multiples behave linearly"""
        q = two_param.Q(sl4.E(1, 2))
        assert q + (-q) == 0
        assert q * 2 == q + q
        assert 3 * q - q == q * 2
        assert (q * LAM).coefficient(next(iter(q.terms))) == LAM

    def test_division(self, two_param, sl4):
        """Assert that elements divide by non zero rationals only"""
        q = two_param.Q(sl4.E(1, 2))
        assert (q * 4) / 2 == q * 2
        with pytest.raises(ZeroDivisionError):
            q / LAM
        with pytest.raises(ZeroDivisionError):
            q / 0

    def test_algebras_do_not_mix(self, sl4):
        """Assert that elements of two algebras cannot be added"""
        a, b = new_algebra(sl4, 'two-parameter'), new_algebra(sl4, 'two-parameter')
        with pytest.raises(ValueError):
            a.Q(sl4.E(1, 2)) + b.Q(sl4.E(1, 2))

    def test_specialize(self, two_param, sl4):
        """Assert that specializing evaluates λ and β in every coefficient"""
        q = two_param.Q(sl4.E(1, 2))
        e = q * (BETA - LAM / 2)
        assert e.specialize(2, 1) == 0
        assert e.specialize(0, 1) == q

    def test_render(self, two_param, sl4):
        """Assert that the zero element renders as 0 and other elements name their letters"""
        assert two_param.zero().render() == '0'
        assert 'Q(' in two_param.Q(sl4.E(1, 2)).render()


class TestRewriting:
    def test_lie_bracket(self, two_param, sl4):
        """Assert that Lie letters bracket through the structure constants of g"""
        alg = two_param
        assert alg.bracket(alg.lie(sl4.E(1, 2)), alg.lie(sl4.E(2, 1))) == alg.lie(sl4.H_ab(1, 2))

    def test_equivariance(self, two_param, sl4):
        """Assert that [x, Q(y)] = Q([x, y])"""
        alg = two_param
        assert alg.bracket(alg.lie(sl4.E(1, 2)), alg.Q(sl4.E(2, 3))) == alg.Q(sl4.E(1, 3))

    def test_current_bracket(self, two_param, sl4):
        """Assert that currents on one side add their degrees"""
        alg = two_param
        assert alg.bracket(alg.Q(sl4.E(1, 2)), alg.Q(sl4.E(2, 3))) == alg.cur('u', sl4.E(1, 3), 2)

    def test_degree_cap(self, two_param, sl4):
        """Assert that asking for a current above smax raises DegreeCapError"""
        with pytest.raises(DegreeCapError) as info:
            two_param.cur('u', sl4.E(1, 2), two_param.smax + 1)
        assert info.value.smax == two_param.smax

    def test_kq_family(self, two_param, sl4):
        """Assert that [K(X_β₁), Q(X_β₂)] rewrites by the seeded relation"""
        alg, rs = two_param, sl4.rs
        r1, r2 = rs.eps(1, 2), rs.eps(2, 3)
        assert alg.bracket(alg.K(sl4.X(r1)), alg.Q(sl4.X(r2))) == kq_rhs(alg, r1, r2)

    def test_cartan_operand(self, two_param, sl4):
        """Assert that [K(X_β), Q(h)] with a Cartan h resolves through Jacobi instead of becoming an atom"""
        alg, rs = two_param, sl4.rs
        root, h = rs.eps(1, 3), sl4.H_ab(1, 2)
        value = alg.bracket(alg.K(sl4.X(root)), alg.Q(h))
        assert alg.irreducible(value) is None
        assert value == kq_rhs(alg, root, h)

    def test_swap_orders_agree(self, two_param, sl4, index_of):
        """Assert that both swap orders give the same normal form"""
        alg = two_param
        letters = [Q(index_of(sl4.E(2, 1))), lie(index_of(sl4.E(1, 2))), K(index_of(sl4.E(1, 3))),
                   Q(index_of(sl4.E(3, 4)))]
        assert alg.product(letters, 'leftmost') == alg.product(letters, 'rightmost')

    def test_unknown_strategy(self, two_param):
        with pytest.raises(ConfigurationError):
            two_param.product([], 'middle')

    def test_held_bracket(self, two_param, sl4):
        """Assert that a held bracket releases to the evaluated commutator"""
        alg = two_param
        a, b = alg.lie(sl4.E(1, 2)), alg.Q(sl4.E(2, 3))
        kept = alg.held(a, b)
        assert any(len(word) == 1 and word[0].cls == SymbolClass.W for word in kept.terms)
        assert alg.release(kept) == alg.bracket(a, b)
        assert alg.held(a, a) == 0

    def test_irreducible(self, two_param, sl4):
        """Assert that a bracket no rule covers is reported as an atom"""
        alg = two_param
        h = sl4.H_ab(1, 2)
        report = alg.irreducible(alg.bracket(alg.K(h), alg.Q(h)))
        assert report is not None
        assert report.atoms
        assert alg.irreducible(alg.Q(h)) is None

    def test_smax(self, sl4):
        with pytest.raises(ConfigurationError):
            new_algebra(sl4, 'two-parameter', smax=0)


class TestKnowledgeBase:
    def test_seeded_identities(self, sl4, b3):
        """Assert that each presentation seeds its own defining relations"""
        assert new_algebra(sl4, 'two-parameter').kb.has('kq-two-parameter')
        assert new_algebra(b3, 'general').kb.has('kq-roots')
        assert not new_algebra(b3, 'kac-moody').kb.has('kq-roots')
        assert new_algebra(b3, 'general').kb.provenance('kq-roots') == Provenance.DEFINING

    def test_presentation_checks(self, sl4, b3):
        """Assert that presentations outside their range are configuration errors"""
        with pytest.raises(ConfigurationError):
            new_algebra(b3, 'two-parameter')
        with pytest.raises(ConfigurationError):
            new_algebra(sl4, 'kac-moody')
        with pytest.raises(ConfigurationError):
            new_algebra(sl4, 'nonsense')

    def test_require(self):
        """Assert that a missing identity raises DependencyError naming the order to run"""
        kb = KnowledgeBase()
        with pytest.raises(DependencyError) as info:
            kb.require('z-central', 'k-z-2', ('z-lie', 'z-central'))
        assert info.value.missing == 'z-central'
        assert 'z-lie, z-central' in str(info.value)

    def test_register_keeps_first(self):
        kb = KnowledgeBase()
        first = Identity('x', 'anchor', Provenance.DERIVED)
        kb.register(first)
        kb.register(Identity('x', 'other', Provenance.DEFINING))
        assert kb.identities['x'] is first
        assert len(kb.log) == 1

    def test_substitution_checks(self, two_param, sl4):
        """Assert that substitutions are rejected when repeated, self referring or of the wrong grade"""
        alg = two_param
        w = opaque('w', (), (1, 1))
        identity = Identity('w-rule', 'test', Provenance.DERIVED)
        with pytest.raises(RegistrationError):
            alg.kb.add_substitution(w, alg.Q(sl4.E(1, 2)), identity)
        with pytest.raises(RegistrationError):
            alg.kb.add_substitution(w, alg.symbol(w) * 2, identity)
        alg.kb.add_substitution(w, alg.P(sl4.E(1, 2)), identity)
        assert alg.symbol(w) == alg.P(sl4.E(1, 2))
        with pytest.raises(RegistrationError):
            alg.kb.add_substitution(w, alg.P(sl4.E(1, 3)), identity)

    def test_equal_families(self):
        """Assert that two equally specific rules for the same classes cannot both be registered"""
        kb = KnowledgeBase()
        key = (SymbolClass.CUR_V, 2, SymbolClass.CUR_U, 1)
        kb.add_family(Family('one', key, 5, lambda alg, x, y: None))
        kb.add_family(Family('two', key, 6, lambda alg, x, y: None))
        assert [f.name for f in kb.families] == ['two', 'one']
        with pytest.raises(RegistrationError):
            kb.add_family(Family('three', key, 5, lambda alg, x, y: None))

    def test_family_degrees(self):
        family = Family('any', (SymbolClass.CUR_V, None, SymbolClass.CUR_U, 1), 1, lambda alg, x, y: None)
        assert family.matches(cur('v', 0, 3), Q(1))
        assert not family.matches(cur('v', 0, 3), cur('u', 1, 2))

    def test_generation_invalidates(self, two_param, sl4):
        """Assert that a registration bumps the generation and refreshes stored elements"""
        alg = two_param
        w = opaque('w', (), (1, 1))
        e = alg.symbol(w)
        generation = alg.kb.generation
        alg.kb.add_substitution(w, alg.P(sl4.E(1, 2)), Identity('w-rule', 'test', Provenance.DERIVED))
        assert alg.kb.generation > generation
        assert e == alg.P(sl4.E(1, 2))

    def test_digest(self, sl4):
        """Assert that the digest depends on the registrations only"""
        a, b = new_algebra(sl4, 'two-parameter'), new_algebra(sl4, 'two-parameter')
        assert a.kb.digest() == b.kb.digest()
        a.kb.register(Identity('extra', 'test', Provenance.REGISTERED_UNVERIFIED))
        assert a.kb.digest() != b.kb.digest()
        assert a.kb.to_json()['identities'][-1]['provenance'] == 'registered-unverified'


class TestSymmetries:
    def test_auto_on_letters(self, two_param, sl4):
        """Assert that the automorphism swaps the two sides with a sign on odd v-degrees"""
        alg, x = two_param, sl4.E(1, 2)
        assert apply_symmetry(alg, alg.Q(x)) == alg.K(x)
        assert apply_symmetry(alg, alg.K(x)) == -alg.Q(x)
        assert apply_symmetry(alg, alg.lie(x)) == alg.lie(x)
        assert apply_symmetry(alg, alg.P(x)) == -alg.P(x)

    def test_auto_squared(self, two_param, sl4):
        alg, x = two_param, sl4.E(1, 2)
        twice = apply_symmetry(alg, apply_symmetry(alg, alg.cur('u', x, 2)))
        assert twice == alg.cur('u', x, 2)
        twice = apply_symmetry(alg, apply_symmetry(alg, alg.Q(x)))
        assert twice == -alg.Q(x)

    def test_anti_is_involution_on_currents(self, two_param, sl4):
        alg = two_param
        q = alg.Q(sl4.E(1, 2))
        assert apply_symmetry(alg, apply_symmetry(alg, q, 'anti'), 'anti') == q

    def test_auto_is_multiplicative(self, two_param, sl4):
        """Assert that the automorphism commutes with brackets of currents"""
        alg = two_param
        a, b = alg.lie(sl4.E(1, 2)), alg.Q(sl4.E(2, 3))
        assert apply_symmetry(alg, alg.bracket(a, b)) == alg.bracket(apply_symmetry(alg, a), apply_symmetry(alg, b))

    def test_anti_needs_sl(self, general, b3):
        """Assert that the transpose anti-automorphism is only defined for sl_n"""
        with pytest.raises(SymmetryDomainError):
            apply_symmetry(general, general.Q(b3.H(1)), 'anti')

    def test_unknown_symmetry(self, two_param, sl4):
        with pytest.raises(ValueError):
            apply_symmetry(two_param, two_param.Q(sl4.E(1, 2)), 'mirror')


class TestDegeneration:
    def test_kq_at_zero(self, general, b3):
        """Assert that at λ = β = 0 the relation reduces to [K(x), Q(y)] = P([x, y])"""
        alg, rs = general, b3.rs
        r1, r2 = rs.simple_roots[0], rs.simple_roots[1]
        x, y = b3.X(r1), b3.X(r2)
        bracket = alg.bracket(alg.K(x), alg.Q(y))
        assert isinstance(bracket, DdcaElement)
        assert bracket.specialize(0, 0) == alg.P(x.bracket(y))
