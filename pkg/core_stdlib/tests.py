import itertools
import random

import pytest

from core_eval.effectiveness import effectiveness, stuck_axioms
from core_eval.nbe import normalize
from core_eval.primitives import lsl
from core_kernel.builder import app, arrow, c, lam, lams
from core_kernel.env import Origin
from core_kernel.errors import LiteralOutOfRange, NotALiteral
from core_kernel.terms import App, Const, PrimInt16, alpha_eq, spine
from core_kernel.typechecker import check, check_declaration
from core_stdlib.canonical import DecEqInstance, build_canonical_eq, canonical_for
from core_stdlib.corpus_config import get_corpus_files
from core_stdlib.export import export_prelude
from core_stdlib.literals import (
    literal_kind, mk_bool, mk_int16, mk_N, mk_nat, mk_positive, read_bool, read_N, read_nat,
    read_positive,
)
from core_stdlib.loader import build_prelude, load_prelude
from core_stdlib.prelude.common import eq, refl
from core_stdlib.prelude.corpus import nat_lit_list
from core_stdlib.prelude.logic import ap
from core_stdlib.relations import ARITH_TERMS, arith_registry, int_registry

nat, N = c('nat'), c('N')


@pytest.fixture(scope='module')
def env():
    return load_prelude()


# literals

def test_binary_literals_are_least_significant_digit_first():
    assert mk_positive(6) == App(c('xO'), App(c('xI'), c('xH')))
    assert mk_N(6) == App(c('Npos'), App(c('xO'), App(c('xI'), c('xH'))))
    assert mk_N(0) == c('N0')
    assert mk_nat(2) == App(c('S'), App(c('S'), c('O')))


@pytest.mark.parametrize('n', [0, 1, 2, 7, 64, 1000, 65535])
def test_literals_read_back(n):
    assert read_nat(mk_nat(n)) == n
    assert read_N(mk_N(n)) == n
    if n:
        assert read_positive(mk_positive(n)) == n


def test_literal_bounds():
    with pytest.raises(LiteralOutOfRange):
        mk_nat(-1)
    with pytest.raises(LiteralOutOfRange):
        mk_positive(0)
    with pytest.raises(LiteralOutOfRange):
        mk_int16(65536)
    with pytest.raises(NotALiteral):
        read_nat(c('N0'))


def test_literal_kind_only_for_compound_literals():
    assert literal_kind(mk_nat(3)) == 'nat'
    assert literal_kind(mk_N(3)) == 'N'
    assert literal_kind(mk_positive(6)) == 'positive'
    assert literal_kind(PrimInt16(4)) == 'int16'
    assert literal_kind(c('O')) is None
    assert literal_kind(app(c('S'), c('x'))) is None


def test_bool_literals():
    assert read_bool(mk_bool(True)) is True
    assert read_bool(mk_bool(False)) is False


# prelude

def test_prelude_is_loaded_once():
    assert load_prelude() is load_prelude()


def test_unverified_prelude_has_every_module():
    env = build_prelude(verify=False)
    for name in ('nat', 'plus_N', 'Equiv', 'FP_forall', 'dec_N', 'ZwB16', 'poly', 'lib_nat'):
        assert name in env, name


def test_univalent_families_check(env):
    for name in ('UR_list', 'FP_list', 'FP_nat', 'equiv_nat_N', 'equiv_int16_ZwB'):
        assert check_declaration(env, name), name


def test_unary_binary_section_and_retraction(env):
    for n in range(1024):
        round_trip = normalize(env, app(c('to_N'), app(c('of_N'), mk_N(n))))
        assert round_trip.normal_form == mk_N(n), n
        round_trip = normalize(env, app(c('of_N'), app(c('to_N'), mk_nat(n))))
        assert round_trip.normal_form == mk_nat(n), n


def test_binary_operations_agree_with_host(env):
    rng = random.Random(7)
    for _ in range(20):
        x, y = rng.randrange(200), rng.randrange(200)
        assert normalize(env, app(c('plus_N'), mk_N(x), mk_N(y))).normal_form == mk_N(x + y)
        monus = normalize(env, app(c('minus_N'), mk_N(x), mk_N(y))).normal_form
        assert monus == mk_N(max(x - y, 0))
        leb = normalize(env, app(c('leb_N'), mk_N(x), mk_N(y))).normal_form
        assert leb == mk_bool(x <= y)


def test_lsl_matches_shift_arithmetic():
    rng = random.Random(2024)
    for _ in range(10_000):
        x, p = rng.randrange(2 ** 16), rng.randrange(20)
        assert lsl(x, p) == (x * 2 ** p) % 2 ** 16


def test_lsl_model_agrees_with_primitive(env):
    rng = random.Random(11)
    for _ in range(25):
        x, p = rng.randrange(2 ** 16), rng.randrange(18)
        model = app(c('of_ZwB'), app(c('ZwB_lsl'), app(c('to_ZwB'), PrimInt16(x)),
                                     app(c('to_ZwB'), PrimInt16(p))))
        assert normalize(env, model).normal_form == PrimInt16(lsl(x, p))


def test_decision_procedure_answers(env):
    same = normalize(env, app(c('dec_nat'), mk_nat(3), mk_nat(3))).normal_form
    different = normalize(env, app(c('dec_N'), mk_N(3), mk_N(4))).normal_form
    assert spine(same)[0] == Const('inl', (0, 0))
    assert spine(different)[0] == Const('inr', (0, 0))


def test_canonical_equality_discards_opaque_proofs(env):
    five = mk_N(5)
    can = canonical_for(N)
    assert can.refl_law(env, five, refl(0, N, five))
    # the retraction is trusted, so the proof itself never reduces
    assert can.refl_law(env, five, app(c('retr_nat_N'), five))


def funext_refl(A, x):
    """``x = x`` through ``ap (fun h => h x)`` of a function extensionality proof."""
    ident = lam('a', A, lambda a: a)
    ext = app(c('funext', 0, 0), A, lam('_', A, lambda _: A), ident, ident,
              lam('a', A, lambda a: refl(0, A, a)))
    return ap(0, 0, arrow(A, A), A, lam('h', arrow(A, A), lambda h: app(h, x)), ident, ident, ext)


def equality_proofs(A, x):
    same = refl(0, A, x)
    via_funext = funext_refl(A, x)
    proofs = [
        same,
        via_funext,
        app(c('eq_sym', 0), A, x, x, same),
        app(c('eq_sym', 0), A, x, x, via_funext),
        app(c('eq_trans', 0), A, x, x, x, same, same),
        app(c('eq_trans', 0), A, x, x, x, via_funext, same),
        app(c('eq_trans', 0), A, x, x, x, same, via_funext),
    ]
    if A == nat:
        proofs.append(app(c('sect_nat_N'), x))
    if A == N:
        proofs.append(app(c('retr_nat_N'), x))
    return proofs


CARRIER_SAMPLES = {
    'nat': lambda rng: mk_nat(rng.randrange(40)),
    'bool': lambda rng: mk_bool(rng.random() < 0.5),
    'N': lambda rng: mk_N(rng.randrange(5000)),
}


@pytest.mark.parametrize('carrier', sorted(CARRIER_SAMPLES))
def test_canonical_equality_on_sampled_proofs(env, carrier):
    A = c(carrier)
    can = canonical_for(A)
    rng = random.Random(carrier)
    for _ in range(100):
        x = CARRIER_SAMPLES[carrier](rng)
        proof = rng.choice(equality_proofs(A, x))
        assert check(env, (), proof, eq(0, A, x, x))
        assert can.refl_law(env, x, proof), (x, proof)


def test_funext_proofs_are_stuck_on_the_axiom(env):
    report = effectiveness(env, funext_refl(nat, mk_nat(2)))
    assert report.stuck_axioms == ('funext',)
    assert effectiveness(env, canonical_for(nat).apply(mk_nat(2), mk_nat(2),
                                                       funext_refl(nat, mk_nat(2)))).effective


def test_canonical_equality_from_decision_procedure(env):
    can = build_canonical_eq(DecEqInstance.for_carrier('bool'))
    assert can.refl_law(env, c('true'), refl(0, c('bool'), c('true')))
    assert canonical_for(c('list', 0)) is None
    with pytest.raises(KeyError):
        DecEqInstance.for_carrier('list')


def test_peano_recursion_on_binary_naturals(env):
    motive = lam('_', N, lambda _: N)
    step = lams([('n', N), ('r', N)], lambda n, r: app(c('succ_N'), r))
    t = app(c('N_peano_rect', 0), motive, c('N0'), step, mk_N(5))
    assert normalize(env, t).normal_form == mk_N(5)


# ready-made contexts

def test_arith_registry_relates_operations_in_order():
    registry = arith_registry()
    lefts = [t.left for t in registry.delta]
    assert lefts[:2] == ['nat', 'N']
    assert [left for left, _, _ in ARITH_TERMS] == lefts[2:2 + len(ARITH_TERMS)]
    assert registry.delta.find('nat_rect', (0,)).right == 'N_peano_rect'
    assert registry.delta.find('nat_rect', (1,)) is not None


def test_arith_registry_subset():
    registry = arith_registry(only=['plus'])
    assert registry.delta.find('plus') is not None
    assert registry.delta.find('mult') is None
    # recursors need both constructors
    assert registry.delta.find('nat_rect', (0,)) is None


def test_int_registry_relates_both_directions():
    registry = int_registry()
    assert registry.delta.find('lsl').right == 'ZwB_lsl'
    assert registry.delta.find('ZwB_lsl').right == 'lsl'
    assert registry.witness_for('int16') is not None


# export and corpus

def test_export_prelude(env):
    text = export_prelude(env)
    assert 'def plus : nat -> nat -> nat := ' in text
    assert 'trusted plus_comm : forall n : nat, forall m : nat, ' in text
    assert '# inductive\naxiom nat : Type\n' in text
    assert text.endswith('\n')


def test_corpus_files_in_replay_order():
    names = [path.name for path in get_corpus_files()]
    assert names == sorted(names)
    assert names[0] == '00_arith_relations.upt'
    assert '40_integers.upt' in names


def test_literal_equations_hold_by_computation(env):
    lhs = normalize(env, app(c('int16_to_N'), app(c('lsl'), PrimInt16(1), PrimInt16(3))))
    assert alpha_eq(lhs.normal_form, mk_N(8))


# list relation

EQ_NAT = lams([('a', nat), ('b', nat)], lambda a, b: eq(0, nat, a, b))


def list_relation(env, xs, ys):
    rel = app(c('UR_list'), nat, nat, EQ_NAT, nat_lit_list(xs), nat_lit_list(ys))
    return normalize(env, rel).normal_form


def inhabited(ty):
    """Decide the closed relation types ``UR_list`` unfolds to over ``eq``."""
    if ty == c('unit'):
        return True
    if ty == c('Empty'):
        return False
    head, args = spine(ty)
    if head == Const('sigT', (0, 0)):
        first, rest = args
        assert rest.body.fv == 0
        return inhabited(first) and inhabited(rest.body)
    if head == Const('eq', (0,)):
        return alpha_eq(args[1], args[2])
    raise AssertionError(f"unexpected relation type {ty!r}")


def short_lists(max_len, elements):
    for length in range(max_len + 1):
        yield from map(list, itertools.product(range(elements), repeat=length))


def test_list_relation_shape_on_all_short_lists(env):
    lists = list(short_lists(3, 2))
    for xs in lists:
        for ys in lists:
            rel = list_relation(env, xs, ys)
            if not xs and not ys:
                assert rel == c('unit')
            elif not xs or not ys:
                assert rel == c('Empty')
            else:
                head, (first, _) = spine(rel)
                assert head == Const('sigT', (0, 0))
                assert alpha_eq(first, eq(0, nat, mk_nat(xs[0]), mk_nat(ys[0])))
            assert inhabited(rel) == (xs == ys), (xs, ys)


def test_list_relation_rejects_mutated_lists(env):
    rng = random.Random(5)
    lists = list(short_lists(4, 8))
    for xs in rng.sample(lists, 150):
        assert inhabited(list_relation(env, xs, xs)), xs
        mutated = [
            xs + [rng.randrange(8)],
            [rng.randrange(8)] + xs,
        ]
        if xs:
            mutated.append(xs[:-1])
            k = rng.randrange(len(xs))
            mutated.append(xs[:k] + [(xs[k] + 1 + rng.randrange(7)) % 8] + xs[k + 1:])
        for ys in mutated:
            assert not inhabited(list_relation(env, xs, ys)), (xs, ys)
            assert not inhabited(list_relation(env, ys, xs)), (ys, xs)


# trusted laws

def test_trusted_laws_name_only_axioms(env):
    for name in env.names():
        decl = env.declaration(name)
        if decl.origin == Origin.TRUSTED:
            assert all(env.declaration(a).origin == Origin.AXIOM for a in decl.relies_on), name


@pytest.mark.parametrize('name, axioms', [
    ('Pi_sect', ('funext',)),
    ('univ_Pi', ('funext',)),
    ('Sigma_sect', ()),
    ('Sigma_adj', ()),
    ('coh_Sigma', ()),
])
def test_family_laws_declare_their_axioms(env, name, axioms):
    assert env.declaration(name).relies_on == axioms
    assert stuck_axioms(env, c(name, 0, 0)) == axioms


@pytest.mark.parametrize('name', ['Equiv_eq', 'coh_eq', 'list_sect', 'list_retr', 'list_adj',
                                  'coh_list'])
def test_identity_and_list_laws_are_axiom_free(env, name):
    levels = (0,) * env.declaration(name).univ_params
    assert env.declaration(name).relies_on == ()
    assert stuck_axioms(env, c(name, *levels)) == ()
