import pytest

from core_eval.effectiveness import stuck_axioms
from core_eval.nbe import normalize
from core_kernel.builder import Type, app, arrow, c, lam, pis
from core_kernel.env import Declaration, Origin
from core_kernel.errors import (
    DuplicateRelation, IllTyped, MissingPrefix, UnresolvedConstant, UptransError,
)
from core_kernel.terms import Const, alpha_eq, spine
from core_kernel.typechecker import check, wf_global_context
from core_registry.registry import Registry, resolve_witness
from core_registry.transport import (
    Transportable, prove_by_computation, replace_goal, transport_along, transport_black_box,
    transport_white_box,
)
from core_stdlib.literals import mk_N, mk_nat, read_N, read_nat
from core_stdlib.loader import load_prelude
from core_stdlib.prelude.common import eq, refl
from core_stdlib.relations import arith_registry

nat, N, bool_ = c('nat'), c('N'), c('bool')


@pytest.fixture(scope='module')
def arith():
    return arith_registry()


@pytest.fixture
def opaque():
    return Registry(load_prelude()).declare(
        Declaration.mono('Opaque', Type(0), origin=Origin.AXIOM),
        Declaration.mono('twist', arrow(c('Opaque'), c('Opaque')), origin=Origin.AXIOM),
    )


# registration

def test_registration_returns_a_new_snapshot():
    base = Registry(load_prelude())
    related = base.register_type_relation(
        'nat', 'N', c('equiv_nat_N'), c('R_nat_N'), c('coh_nat_N'))
    assert len(base.delta) == 0
    assert [t.left for t in related.delta] == ['nat', 'N']
    assert 'univrel_nat_N' in related.env and 'univrel_N_nat' in related.env
    assert related.witness_for('N').right == nat


def test_duplicate_relations_are_rejected(arith):
    with pytest.raises(DuplicateRelation):
        arith.register_type_relation('nat', 'N', c('equiv_nat_N'), c('R_nat_N'), c('coh_nat_N'))
    with pytest.raises(DuplicateRelation):
        arith.register_term_relation('plus', 'plus_N', c('plus_R'))


def test_ill_typed_proofs_are_rejected(arith):
    base = arith.delta.without('plus')
    registry = Registry(arith.env, base, arith.hints, arith.witnesses)
    with pytest.raises(IllTyped) as exc:
        registry.register_term_relation('plus', 'mult_N', c('plus_R'))
    assert exc.value.component == 'proof'


def test_components_of_a_type_relation_are_checked():
    with pytest.raises(IllTyped):
        Registry(load_prelude()).register_type_relation(
            'nat', 'N', c('equiv_nat_N'), c('R_int16_ZwB'), c('coh_nat_N'))


def test_unknown_constants_cannot_be_related(arith):
    with pytest.raises(IllTyped):
        arith.register_term_relation('nope', 'plus_N', c('plus_R'))


def test_relation_type_needs_the_prefix(opaque):
    with pytest.raises(MissingPrefix):
        opaque.relation_type('twist', 'twist')


def test_assumed_relation_declares_a_trusted_proof():
    base = Registry(load_prelude())
    registry = base.assume_term_relation('pred', 'pred', 'pred_R_assumed')
    entry = registry.env.lookup('pred_R_assumed')
    assert entry.origin == Origin.TRUSTED
    assert registry.delta.find('pred').witness == c('pred_R_assumed')
    assert 'pred_R_assumed' not in base.env
    with pytest.raises(IllTyped):
        base.assume_term_relation('pred', 'pred', 'plus_R')


def test_assumed_relation_records_its_axioms(arith):
    base = Registry(load_prelude())
    registry = base.assume_term_relation('pred', 'pred', 'pred_R_ext', relies_on=('funext',))
    assert registry.env.lookup('pred_R_ext').relies_on == ('funext',)
    assert stuck_axioms(registry.env, c('pred_R_ext')) == ('funext',)
    with pytest.raises(IllTyped) as exc:
        base.assume_term_relation('pred', 'pred', 'pred_R_bad', relies_on=('plus',))
    assert exc.value.component == 'relies_on'
    assert arith.env.lookup('nat_rect_R0').relies_on == ()
    assert stuck_axioms(arith.env, c('nat_rect_R1')) == ()


def test_registered_telescope_is_well_formed(arith):
    assert wf_global_context(arith.env, arith.delta)


# resolution

def test_resolution_is_deterministic_and_replayable(arith):
    statement = pis([('n', nat)], lambda n: eq(0, nat, app(c('plus'), n, c('O')), n))
    first, second = arith.resolve(statement), arith.resolve(statement)
    assert alpha_eq(first.target, second.target)
    assert alpha_eq(first.witness, second.witness)
    assert alpha_eq(first.trace.assemble(), first.witness)
    target, witness, trace = resolve_witness(arith, statement)
    assert alpha_eq(witness, first.witness)
    assert first.level == 0


def test_unresolvable_types(opaque):
    with pytest.raises(UnresolvedConstant) as exc:
        opaque.resolve(arrow(c('Opaque'), c('Opaque')))
    assert exc.value.name == 'Opaque'


def test_resolution_carries_canonical_equalities(arith):
    ur = arith.resolve(nat).ur
    assert ur.can_left.can_eq == c('can_eq_nat')
    assert ur.can_right.can_eq == c('can_eq_N')


# transport

def test_black_box_transport_of_a_statement(arith):
    moved = transport_black_box(arith, c('plus_comm'), arith.env.lookup('plus_comm').type)
    expected = pis([('n', N), ('m', N)], lambda n, m: eq(
        0, N, app(c('plus_N'), n, m), app(c('plus_N'), m, n)))
    assert alpha_eq(moved.type, expected)
    assert moved.mode == 'blackbox'


def test_black_box_transport_of_pow_prop(arith):
    moved = transport_black_box(arith, c('pow_prop'), arith.env.lookup('pow_prop').type)
    check(arith.env, (), moved.term, moved.type)


def test_black_box_transport_computes_on_data(arith):
    moved = transport_black_box(arith, c('O'), nat)
    assert moved.type == N
    assert normalize(arith.env, moved.term).normal_form == c('N0')
    seven = transport_black_box(arith, mk_nat(7), nat)
    assert normalize(arith.env, seven.term).normal_form == mk_N(7)


def test_white_box_transport_rewrites_the_body(arith):
    moved = transport_white_box(arith, c('square'))
    assert alpha_eq(moved.term, lam('x', N, lambda x: app(c('mult_N'), x, x)))
    assert moved.type == arrow(N, N)


def test_white_box_transport_of_diff_fails(arith):
    with pytest.raises(UptransError):
        transport_white_box(arith, c('diff'))


def test_goal_replacement_makes_poly_computable(arith):
    statement = eq(0, bool_, app(c('leb_nat'), mk_nat(1000), app(c('poly'), mk_nat(50))), c('true'))
    assert prove_by_computation(arith.env, statement, budget=100_000).budget_hit
    goal = replace_goal(arith, statement)
    computed = prove_by_computation(arith.env, goal.target)
    assert computed.proof is not None
    check(arith.env, (), goal.proof_of_source(computed.proof), statement)


def test_false_goal_does_not_compute_to_reflexivity(arith):
    statement = eq(0, bool_, app(c('leb_nat'), mk_nat(9), mk_nat(3)), c('true'))
    goal = replace_goal(arith, statement)
    computed = prove_by_computation(arith.env, goal.target)
    assert computed.proof is None
    assert not computed.budget_hit


# transport along equalities

def test_constant_predicates_transport_for_free():
    predicate = lam('_', nat, lambda _: bool_)
    assert Transportable.instance(nat, predicate).constant
    assert transport_along(nat, predicate, c('O'), c('O'), c('whatever'), c('true')) == c('true')


def test_canonical_equality_unblocks_transport(arith):
    three = mk_nat(3)
    predicate = lam('n', nat, lambda n: eq(0, nat, n, n))
    opaque_proof = app(c('sect_nat_N'), three)
    moved = transport_along(nat, predicate, three, three, opaque_proof, refl(0, nat, three))
    assert spine(moved)[0] == Const('eq_rect', (0, 0))
    assert normalize(arith.env, moved).normal_form == refl(0, nat, three)


# computation agreement on binary literals

HOST = {'plus': lambda n, m: n + m, 'mult': lambda n, m: n * m}


@pytest.fixture(scope='module')
def moved_operations(arith):
    return {name: transport_black_box(arith, c(name), arith.env.lookup(name).type).term
            for name in HOST}


@pytest.mark.parametrize('n', range(64))
@pytest.mark.parametrize('op', sorted(HOST))
def test_black_box_operations_agree_with_unary(arith, moved_operations, op, n):
    for m in range(64):
        unary = normalize(arith.env, app(c(op), mk_nat(n), mk_nat(m)))
        binary = normalize(arith.env, app(moved_operations[op], mk_N(n), mk_N(m)))
        assert read_nat(unary.normal_form) == HOST[op](n, m)
        assert read_N(binary.normal_form) == HOST[op](n, m), (op, n, m)


# replaced goals

def at_least_1000(value):
    return eq(0, bool_, app(c('leb_nat'), mk_nat(1000), value), c('true'))


def compared_value(statement):
    """``v`` in ``eq bool (leb _ v) true``."""
    _, (_, lhs, _) = spine(statement)
    return spine(lhs)[1][-1]


GOALS = [
    ('poly', app(c('poly'), mk_nat(50)), 6_250_600),
    ("poly'", app(c('evalPoly'), c("poly'"), mk_nat(50), c('O')), 631_250_600),
    ('sequence', app(c('sequence'), mk_nat(2), mk_nat(5)), 1_679_616),
]


@pytest.mark.parametrize('value, expected', [g[1:] for g in GOALS], ids=[g[0] for g in GOALS])
def test_replaced_goal_computes_in_binary(arith, value, expected):
    goal = replace_goal(arith, at_least_1000(value))
    binary = normalize(arith.env, compared_value(goal.target), budget=10 ** 6)
    assert not binary.budget_hit
    assert read_N(binary.normal_form) == expected
    computed = prove_by_computation(arith.env, goal.target, budget=10 ** 6)
    assert computed.proof is not None
    assert computed.steps <= 10 ** 6
    check(arith.env, (), goal.proof_of_source(computed.proof), goal.source)


@pytest.mark.parametrize('value', [g[1] for g in GOALS], ids=[g[0] for g in GOALS])
def test_unary_values_exceed_the_budget(arith, value):
    assert normalize(arith.env, value, budget=10 ** 7).budget_hit


def test_direct_poly_goal_exceeds_the_budget(arith):
    assert prove_by_computation(arith.env, at_least_1000(GOALS[0][1]), budget=10 ** 7).budget_hit
