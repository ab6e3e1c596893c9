"""Worked examples: programs, statements and proofs that get transported."""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, lam, lams, pi, pis

from ..literals import mk_nat
from .common import Empty, O, S, T, bool_, define, eq, nat, refl, trusted, true, tt, unit

LIST_NAT = app(c('list', 0), nat)


def _n(k: int):
    return mk_nat(k)


def nat_lit_list(values):
    t = app(c('nil', 0), nat)
    for v in reversed(values):
        t = app(c('cons', 0), nat, _n(v), t)
    return t


def at_least(bound: int, value):
    """``bound <= value`` as a boolean equation."""
    return eq(0, bool_, app(c('leb_nat'), _n(bound), value), true)


def _arith():
    plus, mult, pow_, minus = c('plus'), c('mult'), c('pow'), c('minus')
    square = lam('x', nat, lambda x: app(mult, x, x))
    plus_comm = pis([('n', nat), ('m', nat)],
                    lambda n, m: eq(0, nat, app(plus, n, m), app(plus, m, n)))
    pow_prop = pis([('n', nat)], lambda n: eq(
        0, nat, app(pow_, _n(3), app(plus, n, _n(1))), app(mult, _n(3), app(pow_, _n(3), n))))
    poly = lam('n', nat, lambda n: app(
        minus, app(plus, app(mult, _n(12), n), app(mult, _n(51), app(pow_, n, _n(4)))),
        app(pow_, n, _n(5))))
    return [
        define('square', arrow(nat, nat), square),
        trusted('plus_comm', plus_comm),
        trusted('pow_prop', pow_prop),
        define('poly', arrow(nat, nat), poly),
    ]


def _diff():
    code = lam('m', nat, lambda m: app(
        c('nat_rect', 1), lam('_', nat, lambda _: T(0)), unit,
        lams([('_', nat), ('_', T(0))], lambda *_: Empty), m))
    type_ = pis([('n', nat), ('e', lambda n: eq(0, nat, O, app(S, n)))], lambda n, e: Empty)
    body = lams([('n', nat), ('e', lambda n: eq(0, nat, O, app(S, n)))],
                lambda n, e: app(c('eq_rect', 0, 0), nat, O, code, tt, app(S, n), e))
    return define('diff', type_, body)


def _eval_poly():
    """Coefficient list evaluation: ``evalPoly p n d`` is the sum of ``coef * n ^ degree``."""

    def body(p, n, d):
        def on_cons(coef, t, rec, d_):
            return app(c('plus'), app(c('mult'), coef, app(c('pow'), n, d_)), app(rec, app(S, d_)))

        step = lams([('coef', nat), ('t', LIST_NAT), ('rec', arrow(nat, nat)), ('d', nat)], on_cons)
        return app(c('list_rect', 0, 0), nat, lam('_', LIST_NAT, lambda _: arrow(nat, nat)),
                   lam('d', nat, lambda d_: O), step, p, d)

    binders = [('p', LIST_NAT), ('n', nat), ('d', nat)]
    return [
        define('polyType', T(0), LIST_NAT),
        define('evalPoly', arrows(c('polyType'), nat, nat, nat), lams(binders, body)),
        define("poly'", c('polyType'), nat_lit_list([0, 12, 0, 0, 51, 1])),
    ]


def _sequence():
    nn = lam('_', nat, lambda _: nat)

    def body(acc, n):
        def later(k, r):
            def from_two(k1, _):
                return app(c('nat_rect', 0), nn, app(c('mult'), _n(3), acc),
                           lams([('_', nat), ('_', nat)], lambda *_: app(c('pow'), r, acc)), k1)
            return app(c('nat_rect', 0), nn, app(c('mult'), _n(2), acc),
                       lams([('k1', nat), ('_', nat)], from_two), k)
        return app(c('nat_rect', 0), nn, acc, lams([('k', nat), ('r', nat)], later), n)

    return define('sequence', arrows(nat, nat, nat), lams([('acc', nat), ('n', nat)], body))


def _higher_order():
    def fam(f):
        return lam('y', nat, lambda y: eq(0, nat, y, app(f, O)))

    fn = arrow(nat, nat)
    type_ = pi('f', fn, lambda f: app(c('sigT', 0, 0), nat, fam(f)))
    body = lam('f', fn, lambda f: app(c('existT', 0, 0), nat, fam(f), app(f, O), refl(0, nat, app(f, O))))
    return define('g', type_, body)


def _lib():
    op = arrows(nat, nat, nat)

    def laws(add):
        return lam('zero', nat, lambda zero: pi('n', nat, lambda n: eq(0, nat, app(add, zero, n), n)))

    lib = app(c('sigT', 0, 0), op, lam('add', op, lambda add: app(c('sigT', 0, 0), nat, laws(add))))
    inner = app(c('existT', 0, 0), nat, laws(c('plus')), O, lam('n', nat, lambda n: refl(0, nat, n)))
    instance = app(c('existT', 0, 0), op, lam('add', op, lambda add: app(c('sigT', 0, 0), nat, laws(add))),
                   c('plus'), inner)
    return [define('Lib', T(0), lib), define('lib_nat', c('Lib'), instance)]


def declarations():
    return _arith() + [_diff()] + _eval_poly() + [_sequence(), _higher_order()] + _lib()
