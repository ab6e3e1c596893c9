import random

import pytest

from core_eval.nbe import normalize
from core_kernel.builder import Type, app, arrow, arrows, c, lam, lams, pi
from core_kernel.env import Declaration, GlobalContext, Origin
from core_kernel.errors import UnrelatedConstant
from core_kernel.terms import App, Const, Lam, Pi, PrimInt16, Sort, Var, alpha_eq, apply, shift
from core_kernel.typechecker import infer
from core_stdlib.literals import mk_nat
from core_stdlib.loader import load_prelude
from core_stdlib.prelude.common import eq
from core_stdlib.prelude.corpus import nat_lit_list
from core_stdlib.prelude.logic import e_fun, ur_equiv, ur_rel
from core_stdlib.relations import arith_registry, int_registry
from core_translate.abstraction import abstraction_check
from core_translate.api import (
    param_translate, prime_translate, translate_local_ctx, uparam_rel, uparam_translate,
)
from core_translate.trace import Rule, replay_trace
from core_translate.translator import PARAM, Translator

nat, N = c('nat'), c('N')


@pytest.fixture(scope='module')
def arith():
    return arith_registry()


@pytest.fixture(scope='module')
def prelude():
    return load_prelude()


# parametricity (no univalence)

def test_param_translation_of_a_universe_is_a_relation_space(prelude):
    expected = lams([('A', Type(0)), ('A_', Type(0))], lambda A, A_: arrows(A, A_, Type(0)))
    assert alpha_eq(param_translate(GlobalContext(), Type(0), env=prelude), expected)


def test_param_translation_of_base_types_reads_their_relation(prelude):
    assert param_translate(GlobalContext(), nat, env=prelude) == ur_rel(0, nat, nat, c('FP_nat'))


def test_param_mode_on_products_builds_the_pointwise_relation(prelude):
    translator = Translator(prelude, mode=PARAM)
    relation = translator.translate(arrow(nat, nat))
    assert isinstance(relation, Lam)
    assert alpha_eq(relation, translator.relation(arrow(nat, nat)))


# univalent parametricity

def test_universe_translates_to_its_univalent_relation(prelude):
    assert uparam_translate(GlobalContext(), Type(0), env=prelude) == Const('FP_Type', (0,))
    assert uparam_rel(GlobalContext(), Type(1), env=prelude) == Const('URType', (1,))


def test_variables_are_spread_over_three_binders(arith):
    assert uparam_translate(arith.delta, Var(0), env=arith.env, ctx=(nat,)) == Var(0)
    assert uparam_translate(arith.delta, Var(1), env=arith.env, ctx=(nat, nat)) == Var(3)


def test_translated_context_has_three_entries_per_binder(arith):
    ctx = translate_local_ctx(arith.delta, (nat,), env=arith.env)
    assert len(ctx) == 3
    assert ctx[0] == nat
    assert ctx[1] == N


def test_prime_replaces_related_constants(arith):
    square = lam('x', nat, lambda x: app(c('mult'), x, x))
    expected = lam('x', N, lambda x: app(c('mult_N'), x, x))
    assert alpha_eq(prime_translate(arith.delta, square, env=arith.env), expected)


def test_white_box_prime_unfolds_definitions(arith):
    moved = prime_translate(arith.delta, c('square'), env=arith.env, unfold=True)
    assert alpha_eq(moved, lam('x', N, lambda x: app(c('mult_N'), x, x)))


def test_prime_of_a_literal_renames_its_constructors(arith):
    moved = prime_translate(arith.delta, mk_nat(3), env=arith.env)
    assert moved == app(c('succ_N'), app(c('succ_N'), app(c('succ_N'), c('N0'))))


def test_prime_of_a_machine_integer_goes_through_the_equivalence():
    registry = int_registry()
    moved = prime_translate(registry.delta, PrimInt16(5), env=registry.env)
    witness = registry.delta.find('int16').witness
    zwb, int16 = c('ZwB16'), c('int16')
    assert moved == app(e_fun(0, int16, zwb, ur_equiv(0, int16, zwb, witness)), PrimInt16(5))


def test_unrelated_constant_is_reported(arith):
    with pytest.raises(UnrelatedConstant) as exc:
        prime_translate(arith.delta.without('plus'), c('plus'), env=arith.env)
    assert exc.value.name == 'plus'


def test_trace_records_rules_and_replays(arith):
    t = lam('x', nat, lambda x: app(c('plus'), x, x))
    translator = Translator(arith.env, arith.delta)
    trace = translator.trace(t)
    assert trace.rule == Rule.LAMBDA
    assert Rule.DELTA in trace.rules()
    assert alpha_eq(replay_trace(trace), translator.translate(t))
    assert trace.summary()['rule'] == 'lambda'


def test_products_resolve_through_the_forall_family(arith):
    statement = pi('n', nat, lambda n: app(c('eq', 0), nat, n, n))
    trace = Translator(arith.env, arith.delta).trace(statement)
    assert trace.rule == Rule.FP_FORALL
    assert Rule.FP_EQ in trace.rules()


# abstraction checks

def test_abstraction_check_identity(arith):
    idn = lam('x', nat, lambda x: x)
    report = abstraction_check(arith.env, arith.delta, 'idn', idn, arrow(nat, nat))
    assert report.ok
    assert alpha_eq(report.derived_prime, lam('x', N, lambda x: x))


def test_abstraction_check_through_related_operations(arith):
    double = lam('n', nat, lambda n: app(c('plus'), n, n))
    report = abstraction_check(arith.env, arith.delta, 'double', double, arrow(nat, nat))
    assert report.ok, report.error


def test_abstraction_check_polymorphic_identity(arith):
    id_poly = lam('A', Type(0), lambda A: lam('x', A, lambda x: x))
    ty = pi('A', Type(0), lambda A: arrow(A, A))
    assert abstraction_check(arith.env, arith.delta, 'id_poly', id_poly, ty).ok


def test_abstraction_check_reports_unrelated_axioms(arith):
    env = arith.env.extend(Declaration.mono('opaque_nat', nat, origin=Origin.AXIOM))
    report = abstraction_check(env, arith.delta, 'opaque', c('opaque_nat'), nat)
    assert not report.ok
    assert isinstance(report.error, UnrelatedConstant)
    assert report.left_check


# plain parametricity against a direct reference

def _spread(t, fn, depth=0):
    """Send loose index ``k`` to ``fn(k)``."""
    match t:
        case Var(index=i):
            return Var(depth + fn(i - depth)) if i >= depth else t
        case App(fn=f, arg=a):
            return App(_spread(f, fn, depth), _spread(a, fn, depth))
        case Lam(domain=d, body=b):
            return Lam(_spread(d, fn, depth), _spread(b, fn, depth + 1))
        case Pi(domain=d, codomain=b):
            return Pi(_spread(d, fn, depth), _spread(b, fn, depth + 1))
    return t


def _bar(t):
    return _spread(t, lambda k: 3 * k + 2)


def _tick(t):
    return _spread(t, lambda k: 3 * k + 1)


def _param_reference(t):
    """Binary parametricity, with ``x, x', x_R`` laid out as ``Var(3k+2), Var(3k+1), Var(3k)``."""
    match t:
        case Var(index=k):
            return Var(3 * k)
        case Sort(level=i):
            return Lam(Sort(i), Lam(Sort(i), Pi(Var(1), Pi(Var(1), Sort(i)))))
        case App(fn=f, arg=a):
            return apply(_param_reference(f), _bar(a), _tick(a), _param_reference(a))
        case Lam(domain=A, body=b):
            return Lam(_bar(A), Lam(shift(_tick(A), 1), Lam(
                apply(shift(_param_reference(A), 2), Var(1), Var(0)), _param_reference(b))))
        case Pi(domain=A, codomain=B):
            # binders f, f', x, x', x_R from outermost to innermost
            related = apply(shift(_param_reference(B), 2, 3),
                            App(Var(4), Var(2)), App(Var(3), Var(1)))
            x_related = apply(shift(_param_reference(A), 4), Var(1), Var(0))
            pointwise = Pi(shift(_bar(A), 2), Pi(shift(_tick(A), 3), Pi(x_related, related)))
            return Lam(_bar(t), Lam(shift(_tick(t), 1), pointwise))
    raise TypeError(f"unexpected term {t!r}")


def random_closed_term(rng, size, scope=0):
    if size <= 1:
        if scope and rng.random() < 0.7:
            return Var(rng.randrange(scope))
        return Sort(rng.randrange(3))
    split = rng.randrange(1, size)
    left = random_closed_term(rng, split, scope)
    match rng.randrange(3):
        case 0:
            return App(left, random_closed_term(rng, size - split, scope))
        case 1:
            return Lam(left, random_closed_term(rng, size - split, scope + 1))
    return Pi(left, random_closed_term(rng, size - split, scope + 1))


@pytest.mark.parametrize('seed', range(10))
def test_param_translation_matches_the_reference(prelude, seed):
    rng = random.Random(seed)
    for _ in range(100):
        t = random_closed_term(rng, rng.randrange(1, 16))
        assert t.fv == 0
        assert alpha_eq(param_translate(GlobalContext(), t, env=prelude), _param_reference(t)), t


def random_type(rng, binders=(), depth=3):
    """A closed constant-free type; ``binders`` flags which enclosing binders are types."""
    type_vars = [k for k, is_type in enumerate(binders) if is_type]
    pick = rng.randrange(4) if depth else rng.randrange(2)
    if pick == 0 or (pick == 1 and not type_vars):
        return Sort(0)
    if pick == 1:
        return Var(rng.choice(type_vars))
    if pick == 2:
        return Pi(Sort(0), random_type(rng, (True, *binders), depth - 1))
    if not type_vars:
        return Pi(Sort(0), random_type(rng, (True, *binders), depth - 1))
    return Pi(Var(rng.choice(type_vars)), random_type(rng, (False, *binders), depth - 1))


def test_univalent_relation_is_well_typed_on_the_diagonal(prelude):
    rng = random.Random(2024)
    for _ in range(200):
        ty = random_type(rng)
        infer(prelude, (), ty)
        rel = uparam_rel(GlobalContext(), ty, env=prelude)
        on_diagonal = Lam(ty, apply(shift(rel, 1), Var(0), Var(0)))
        assert isinstance(infer(prelude, (), on_diagonal), Pi), ty


def test_list_relation_through_the_translation(prelude):
    rel = uparam_rel(GlobalContext(), app(c('list', 0), nat), env=prelude)
    eq_nat = lams([('a', nat), ('b', nat)], lambda a, b: eq(0, nat, a, b))
    for xs, ys in [([], []), ([1], [1]), ([1, 2], [1, 3]), ([0], []), ([2, 0, 1], [2, 0, 1])]:
        left, right = nat_lit_list(xs), nat_lit_list(ys)
        via = normalize(prelude, app(rel, left, right)).normal_form
        direct = normalize(prelude, app(c('UR_list'), nat, nat, eq_nat, left, right)).normal_form
        assert alpha_eq(via, direct), (xs, ys)


def test_list_witness_is_the_monomorphic_family(prelude):
    witness = uparam_translate(GlobalContext(), app(c('list', 0), nat), env=prelude)
    assert witness == app(c('FP_list'), nat, nat, c('FP_nat'))
    infer(prelude, (), witness)
