import random

import pytest

from core_kernel.builder import app, arrow, c, lam, pi
from core_kernel.conversion import conv
from core_kernel.env import Declaration, GlobalContext, GlobalEnv, Origin, Triple
from core_kernel.errors import (
    ConversionFailure, IllFormedTelescope, LevelMismatch, TypeMismatch, UnboundVariable,
    UnknownConstant,
)
from core_kernel.terms import App, Const, Lam, Pi, Sort, Var, alpha_eq, shift, size, spine, subst
from core_kernel.typechecker import (
    check, check_declaration, infer, infer_sort, try_check, wf_global_context,
)
from core_stdlib.literals import mk_nat
from core_stdlib.loader import load_prelude

A, a = c('A'), c('a')


@pytest.fixture
def small_env():
    return GlobalEnv([
        Declaration.mono('A', Sort(0), origin=Origin.AXIOM),
        Declaration.mono('a', A, origin=Origin.AXIOM),
        Declaration.mono('id_A', arrow(A, A), lam('x', A, lambda x: x)),
    ])


@pytest.fixture(scope='module')
def prelude():
    return load_prelude()


# de Bruijn operations

def test_shift_lifts_only_loose_indices():
    t = Lam(Sort(0), App(Var(0), Var(1)))
    assert shift(t, 2) == Lam(Sort(0), App(Var(0), Var(3)))
    assert shift(t, 2, cutoff=1) == t
    assert shift(Const('a'), 5) == Const('a')


def test_subst_replaces_and_closes_gap():
    t = App(App(Var(0), Var(1)), Var(2))
    assert subst(t, 0, a) == App(App(a, Var(0)), Var(1))
    # under a binder the substituted term is lifted
    assert subst(Lam(A, Var(1)), 0, Var(0)) == Lam(A, Var(1))


def random_open_term(rng, size, scope=3):
    if size <= 1:
        pick = rng.randrange(4)
        if pick < 2:
            return Var(rng.randrange(scope))
        return Sort(rng.randrange(2)) if pick == 2 else a
    split = rng.randrange(1, size)
    left = random_open_term(rng, split, scope)
    match rng.randrange(3):
        case 0:
            return App(left, random_open_term(rng, size - split, scope))
        case 1:
            return Lam(left, random_open_term(rng, size - split, scope + 1))
    return Pi(left, random_open_term(rng, size - split, scope + 1))


@pytest.mark.parametrize('seed', range(10))
def test_subst_cancels_shift_on_generated_terms(seed):
    rng = random.Random(seed)
    for _ in range(50):
        t = random_open_term(rng, rng.randrange(1, 12))
        u = random_open_term(rng, rng.randrange(1, 5))
        for depth in range(4):
            assert subst(shift(t, 1, depth), depth, u) == t
        assert shift(shift(t, 2, 1), 3, 1) == shift(t, 5, 1)


def test_builder_closes_placeholders():
    assert lam('x', A, lambda x: x) == Lam(A, Var(0))
    assert pi('x', Sort(0), lambda x: arrow(x, x)) == Pi(Sort(0), Pi(Var(0), Var(1)))


def test_alpha_eq_ignores_binder_names():
    assert alpha_eq(Lam(A, Var(0), 'x'), Lam(A, Var(0), 'y'))
    assert not alpha_eq(Lam(A, Var(0)), Lam(A, a))


def test_spine_and_size():
    head, args = spine(app(c('f'), a, A))
    assert head == c('f') and args == [a, A]
    assert size(app(c('f'), a, A)) == 5


def test_cached_free_variable_bound():
    assert Lam(A, Var(3)).fv == 3
    assert App(Var(0), Var(4)).fv == 5
    assert Pi(Sort(0), Var(0)).fv == 0


# typing

def test_infer_universes_and_products(small_env):
    assert infer(small_env, (), Sort(0)) == Sort(1)
    assert infer(small_env, (), Pi(Sort(0), Var(0))) == Sort(1)
    assert infer_sort(small_env, (), A) == 0


def test_infer_lambda(small_env):
    assert infer(small_env, (), Lam(A, Var(0))) == Pi(A, A)


def test_variable_types_are_lifted(small_env):
    ctx = (Sort(0), Var(0))
    assert infer(small_env, ctx, Var(0)) == Var(1)
    with pytest.raises(UnboundVariable):
        infer(small_env, ctx, Var(2))


def test_check_rejects_wrong_type(small_env):
    with pytest.raises(ConversionFailure):
        check(small_env, (), a, Sort(0))
    result = try_check(small_env, (), a, Sort(0))
    assert not result
    assert isinstance(result.error, ConversionFailure)


def test_argument_must_match_domain(small_env):
    with pytest.raises(TypeMismatch):
        infer(small_env, (), App(c('id_A'), Sort(0)))


def test_unknown_constant(small_env):
    with pytest.raises(UnknownConstant):
        infer(small_env, (), c('missing'))


def test_conversion_unfolds_definitions(small_env):
    assert conv(small_env, App(c('id_A'), a), a)
    assert conv(small_env, App(Lam(A, Var(0)), a), App(c('id_A'), a))
    assert not conv(small_env, a, A)


def test_conversion_computes_on_prelude(prelude):
    assert conv(prelude, app(c('plus'), App(c('S'), c('O')), App(c('S'), c('O'))),
                App(c('S'), App(c('S'), c('O'))))


HOST_OPS = {
    'plus': lambda n, m: n + m,
    'mult': lambda n, m: n * m,
    'minus': lambda n, m: max(n - m, 0),
    'pow': lambda n, m: n ** m,
}


def random_arith(rng, depth=2):
    """A closed unary expression and its value on the host."""
    if depth == 0 or rng.random() < 0.3:
        n = rng.randrange(4)
        return mk_nat(n), n
    op = rng.choice(sorted(HOST_OPS))
    below = 0 if op == 'pow' else depth - 1
    (x, vx), (y, vy) = random_arith(rng, below), random_arith(rng, below)
    return app(c(op), x, y), HOST_OPS[op](vx, vy)


def test_conversion_is_symmetric(prelude):
    rng = random.Random(7)
    pool = [random_arith(rng) for _ in range(24)]
    for t, vt in pool:
        for u, vu in pool:
            forward, backward = conv(prelude, t, u), conv(prelude, u, t)
            assert forward == backward
            assert forward == (vt == vu)


def test_universe_levels_must_match_arity(prelude):
    with pytest.raises(LevelMismatch):
        prelude.lookup('eq', ())


def test_prelude_declarations_check(prelude):
    for name in ('plus', 'mult_N', 'equiv_nat_N', 'dec_nat', 'ZwB_lsl'):
        assert check_declaration(prelude, name), name


def test_ill_formed_telescope_reports_position(prelude):
    delta = GlobalContext((Triple('O', 'N0', c('tt')),))
    with pytest.raises(IllFormedTelescope) as exc:
        wf_global_context(prelude, delta)
    assert exc.value.position == 0


def test_global_context_lookup():
    delta = GlobalContext((
        Triple('O', 'N0', c('O_R')),
        Triple('nat_rect', 'N_peano_rect', c('r'), (0,), (0,)),
    ))
    assert delta.find('O').right == 'N0'
    assert delta.find('nat_rect') is None
    assert delta.find('nat_rect', (0,)).right_const == Const('N_peano_rect', (0,))
    assert len(delta.prefix(1)) == 1
    assert delta.without('O').left_names() == {'nat_rect'}
