import pytest

from ddca_verify.ddca.kb import Family, Provenance, SymmetryExtension
from ddca_verify.ddca.scripts import Check, DerivationScript, FailureDiff, ScriptResult, ad, check_family, combine, \
    compare, expand, register, run_script, solve
from ddca_verify.ddca.seeds import kq_rhs, new_algebra
from ddca_verify.ddca.solver import echelon, rows_to_vectors, solve as solve_rows
from ddca_verify.ddca.symbols import SymbolClass, opaque
from ddca_verify.ddca.symmetries import apply_symmetry
from ddca_verify.exceptions import DependencyError, RegistrationError, SymmetryDomainError, VerificationFailed


@pytest.fixture
def unknowns():
    return opaque('w', (1,), (1, 1)), opaque('w', (2,), (1, 1))


class TestSolve:
    def test_single_unknown(self, two_param, sl4, unknowns):
        """Assert that a row with one unknown becomes a registered substitution"""
        alg = two_param
        w, _ = unknowns
        result = solve_rows(alg, [alg.symbol(w) - alg.P(sl4.E(1, 2)) * 2], source='demo')
        assert result.ok
        assert result.solved(w)
        assert alg.symbol(w) == alg.P(sl4.E(1, 2)) * 2
        assert alg.kb.has('demo')

    def test_contradiction(self, two_param, sl4):
        """Assert that a row without unknowns is reported as a contradiction"""
        alg = two_param
        result = solve_rows(alg, [alg.P(sl4.E(1, 2))], register=False)
        assert not result.ok
        assert result.contradictions[0] == alg.P(sl4.E(1, 2))

    def test_prefer_last(self, two_param, unknowns):
        """Assert that unknowns listed last stay on the right hand side"""
        alg = two_param
        w1, w2 = unknowns
        row = alg.symbol(w1) - alg.symbol(w2)
        assert solve_rows(alg, [row], prefer_last=[w2], register=False).solved(w1)
        assert solve_rows(alg, [row], prefer_last=[w1], register=False).solved(w2)

    def test_echelon_rank(self, two_param, sl4, unknowns):
        alg = two_param
        w1, w2 = unknowns
        a, b = alg.symbol(w1), alg.symbol(w2) + alg.P(sl4.E(1, 2))
        rows, pivots = echelon(rows_to_vectors([a, b, a * 2 - b]))
        assert len(rows) == len(pivots) == 2
        assert echelon([]) == ([], [])


class TestRunScript:
    def script(self, sl4, checks, requires=()):
        return DerivationScript('demo', 'demo anchor', (
            expand('e', lambda alg: [('x', alg.lie(sl4.E(1, 2)))]),
            compare(checks, target='checked'),
            register('demo-identity', statement='demo'),
        ), requires)

    def test_pass(self, two_param, sl4):
        """Assert that a passing script registers its identities and counts its checks"""
        alg = two_param
        checks = lambda alg, ws: [('lie', alg.bracket(alg.lie(sl4.E(1, 2)), alg.lie(sl4.E(2, 1))),
                                   alg.lie(sl4.H_ab(1, 2)))]
        result = run_script(self.script(sl4, checks), alg)
        assert isinstance(result, ScriptResult)
        assert result.passed
        assert result.checks == 1
        assert result.registered == ['demo-identity', 'demo']
        assert alg.kb.provenance('demo-identity') == Provenance.DERIVED

    def test_failure(self, two_param, sl4):
        """Assert that a failing comparison returns a diff with both normal forms"""
        alg = two_param
        checks = lambda alg, ws: [('wrong', alg.lie(sl4.E(1, 2)), alg.lie(sl4.E(2, 1)))]
        result = run_script(self.script(sl4, checks), alg)
        assert isinstance(result, FailureDiff)
        assert not result.passed
        assert result.step == 2
        assert result.kind == 'normalize-compare'
        assert result.first_word
        assert not alg.kb.has('demo-identity')
        assert 'wrong' in result.render()
        with pytest.raises(VerificationFailed):
            result.raise_()

    def test_requires(self, two_param, sl4):
        """Assert that a script refuses to start without its prerequisites"""
        with pytest.raises(DependencyError) as info:
            run_script(self.script(sl4, lambda alg, ws: [], requires=('z-central',)), two_param, ('z-central', 'demo'))
        assert info.value.script == 'demo'

    def test_confluence(self, two_param, sl4):
        """Assert that checks with operands are also recomputed along both swap orders"""
        alg = two_param
        a, b = alg.K(sl4.E(1, 2)), alg.Q(sl4.E(2, 3))
        checks = lambda alg, ws: [Check('kq', alg.bracket(a, b), alg.bracket(a, b), operands=(a, b))] * 2
        result = run_script(self.script(sl4, checks), alg, confluence=1)
        assert result.checks == 2
        assert result.confluence_checks == 1

    def test_non_algebra(self, sl4):
        with pytest.raises(ValueError):
            run_script(self.script(sl4, lambda alg, ws: []), object())

    def test_steps(self, two_param, sl4):
        """Assert that ad, combine and solve steps feed later comparisons"""
        w = opaque('w', (), (1, 1))
        script = DerivationScript('steps', 'anchor', (
            expand('q', lambda alg: [('q', alg.Q(sl4.E(2, 3)))]),
            ad('adq', 'q', lambda alg, label: [('e12', sl4.E(1, 2))], side='left'),
            expand('row', lambda alg: [('row', alg.symbol(w) - alg.P(sl4.E(1, 2)))]),
            solve('row'),
            combine('sum', ['adq'], coefficients={'q|e12': 2}),
            compare(lambda alg, ws: [('ad', ws['adq'][0][1], alg.Q(sl4.E(1, 3))),
                                     ('solved', alg.symbol(w), alg.P(sl4.E(1, 2)))]),
        ))
        result = run_script(script, two_param)
        assert result.passed, result.render() if not result.passed else ''

    def test_step_arguments(self):
        with pytest.raises(ValueError):
            ad('t', 's', lambda alg, label: [], side='middle')
        with pytest.raises(ValueError):
            combine('t', ['s'])


def kq_copy(alg, x, y):
    r1, r2 = alg.frame.basis_weights[x.index], alg.frame.basis_weights[y.index]
    if r1 is None or r2 is None or tuple(r1) == tuple(-a for a in r2):
        return None
    return kq_rhs(alg, r1, r2)


class TestRegistration:
    KEY = (SymbolClass.CUR_V, 1, SymbolClass.CUR_U, 1)

    def test_family_agrees(self, sl4):
        """Assert that a family restating the defining relation agrees on every pair of root vectors"""
        alg = new_algebra(sl4, 'two-parameter', smax=2)
        assert check_family(alg, Family('kq-copy', self.KEY, 20, kq_copy)) == 12 * 12 - 12

    def test_family_contradiction(self, sl4):
        """Assert that a family contradicting determined brackets is refused and not registered"""
        alg = new_algebra(sl4, 'two-parameter', smax=2)
        script = DerivationScript('bad-family', 'anchor', (
            register('kq-zero', family=lambda a: Family('kq-zero', self.KEY, 20, lambda a, x, y: a.zero())),
        ))
        with pytest.raises(RegistrationError) as info:
            run_script(script, alg)
        assert 'kq-zero' in str(info.value)
        assert not alg.kb.has('kq-zero')
        assert all(family.name != 'kq-zero' for family in alg.kb.families)

    def test_symmetry_extension(self, sl4):
        """Assert that a registered extension lets the automorphism act on an opaque symbol"""
        alg = new_algebra(sl4, 'two-parameter', smax=2)
        t = opaque('T', (), (1, 1))
        with pytest.raises(SymmetryDomainError):
            apply_symmetry(alg, alg.symbol(t))

        def image(a, sym):
            return -a.symbol(sym) if sym.args[0] == 'T' else None

        script = DerivationScript('t-auto', 'anchor', (
            register('t-auto', extension=lambda a: SymmetryExtension('t-auto', 'auto', SymbolClass.W, image)),
            compare(lambda a, ws: [('auto(2T)', apply_symmetry(a, a.symbol(t) * 2), a.symbol(t) * -2)]),
        ))
        result = run_script(script, alg)
        assert result.passed, result.render() if not result.passed else ''
        assert alg.kb.has('t-auto')
        assert alg.kb.to_json()['symmetry_extensions'] == ['t-auto']
        with pytest.raises(SymmetryDomainError):
            apply_symmetry(alg, alg.symbol(opaque('U', (), (1, 1))))
