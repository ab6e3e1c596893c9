import importlib
import inspect
import pkgutil
import random

import pytest

import core_eval
from core_eval.binary import N_spine, read_N
from core_eval.effectiveness import effectiveness
from core_eval.nbe import normalize
from core_eval.primitives import add16, fold, lsl, mul16, prim_eval
from core_eval.reduction import whnf
from core_kernel.builder import app, c, lam
from core_kernel.errors import BudgetExceeded
from core_kernel.terms import Lam, PrimInt16, Var, alpha_eq
from core_stdlib.literals import mk_N, mk_nat
from core_stdlib.loader import load_prelude

nat, bool_, int16 = c('nat'), c('bool'), c('int16')


@pytest.fixture(scope='module')
def env():
    return load_prelude()


def test_primitives_wrap_at_sixteen_bits():
    assert prim_eval('lsl', 1, 3) == 8
    assert add16(65535, 1) == 0
    assert mul16(256, 256) == 0
    assert lsl(1, 16) == 0
    assert lsl(3, 15) == 32768


def test_unknown_primitive():
    with pytest.raises(ValueError):
        prim_eval('div16', 4, 2)


def test_whnf_folds_primitives(env):
    assert whnf(env, app(c('lsl'), PrimInt16(1), PrimInt16(3))) == PrimInt16(8)
    assert whnf(env, app(c('add16'), PrimInt16(65535), PrimInt16(1))) == PrimInt16(0)
    assert whnf(env, app(c('int16_to_N'), PrimInt16(6))) == mk_N(6)


def test_primitive_on_open_argument_stays_inert(env):
    t = Lam(int16, app(c('lsl'), Var(0), PrimInt16(1)))
    assert alpha_eq(normalize(env, t).normal_form, t)


def test_whnf_fires_iota(env):
    motive = lam('_', bool_, lambda _: bool_)
    t = app(c('bool_rect', 0), motive, c('false'), c('true'), c('true'))
    assert whnf(env, t) == c('false')


def test_whnf_respects_budget(env):
    with pytest.raises(BudgetExceeded):
        whnf(env, app(c('plus'), mk_nat(3), mk_nat(3)), budget=1)


def test_normalize_unary_and_binary_arithmetic(env):
    assert normalize(env, app(c('plus'), mk_nat(2), mk_nat(3))).normal_form == mk_nat(5)
    assert normalize(env, app(c('mult_N'), mk_N(6), mk_N(7))).normal_form == mk_N(42)
    assert normalize(env, app(c('int16_of_N'), mk_N(65536))).normal_form == PrimInt16(0)


def test_normalize_reports_budget_hit(env):
    result = normalize(env, app(c('pow'), mk_nat(2), mk_nat(10)), budget=100)
    assert result.budget_hit
    assert result.steps > 100


def test_normalize_counts_steps(env):
    result = normalize(env, app(c('plus'), mk_nat(1), mk_nat(1)))
    assert not result.budget_hit
    assert result.steps > 0


def test_effectiveness_of_closed_values(env):
    report = effectiveness(env, app(c('succ_N'), mk_N(6)))
    assert report.effective
    assert report.stuck_axioms == ()
    assert report.normal_form == mk_N(7)


def test_effectiveness_names_the_axioms(env):
    report = effectiveness(env, c('univ_Type', 0))
    assert not report.effective
    assert report.stuck_axioms == ('univalence',)


def test_effectiveness_inconclusive_on_budget(env):
    report = effectiveness(env, app(c('pow'), mk_nat(2), mk_nat(10)), budget=50)
    assert report.inconclusive
    assert not report.effective


def test_int16_conversions_fold_to_binary_spines():
    assert fold('int16_to_N', [PrimInt16(6)]) == N_spine(6) == mk_N(6)
    assert fold('int16_of_N', [N_spine(65537)]) == PrimInt16(1)
    assert fold('int16_of_N', [c('N0')]) == PrimInt16(0)
    assert fold('int16_to_N', [Var(0)]) is None
    for n in range(300):
        assert read_N(N_spine(n)) == n


def test_eval_layer_does_not_import_the_standard_library():
    for info in pkgutil.iter_modules(core_eval.__path__):
        if info.name == 'tests':
            continue
        module = importlib.import_module(f'core_eval.{info.name}')
        assert 'core_stdlib' not in inspect.getsource(module), info.name


def random_program(rng, depth=2):
    """Closed arithmetic over both encodings, with the odd lambda left unapplied."""
    pick = rng.randrange(6)
    if depth == 0 or pick == 0:
        return rng.choice([mk_nat(rng.randrange(5)), mk_N(rng.randrange(40))])
    if pick == 1:
        k = rng.randrange(4)
        return lam('n', nat, lambda n: app(c('plus'), n, mk_nat(k)))
    if pick == 2:
        return lam('n', c('N'), lambda n: app(c('mult_N'), n, mk_N(3)))
    unary = rng.random() < 0.5
    ops = ('plus', 'mult', 'minus') if unary else ('plus_N', 'mult_N', 'succ_N')
    op = rng.choice(ops)
    lit = (lambda: mk_nat(rng.randrange(6))) if unary else (lambda: mk_N(rng.randrange(300)))
    if op == 'succ_N':
        return app(c(op), lit())
    return app(c(op), lit(), lit())


@pytest.mark.parametrize('seed', range(5))
def test_normal_forms_are_fixed_points(env, seed):
    rng = random.Random(seed)
    for _ in range(20):
        first = normalize(env, random_program(rng))
        assert not first.budget_hit
        again = normalize(env, first.normal_form)
        assert again.steps == 0
        assert alpha_eq(again.normal_form, first.normal_form)
