"""
Machine integers at width 16 and their model ``ZwB16``: binary naturals
below 2^16, packaged with a proof that they are their own remainder.
"""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, lam, lams, pis

from ..literals import mk_N, mk_nat
from .common import N, N0, T, bool_, define, eq, int16, nat, positive, trusted
from .logic import adj_ty, coh_ty, mk_equiv

WIDTH = 16

ZWB = c('ZwB16')
TO_ZWB, OF_ZWB = c('to_ZwB'), c('of_ZwB')


def _bounded(z):
    return eq(0, N, app(c('mod_wB'), z), z)


def _family():
    return lam('z', N, _bounded)


def value(z):
    """Underlying binary natural of a ``ZwB16`` term."""
    return app(c('projT1', 0, 0), N, _family(), z)


def canonical_bound(z, proof):
    """Replace a bound proof by the one the decision procedure computes."""
    return app(c('can_eq_N'), app(c('mod_wB'), z), z, proof)


def _modulo():
    nn = lam('_', nat, lambda _: N)

    def digit(fn_name):
        return lams([('p', positive), ('r', arrow(nat, N)), ('k', nat)], lambda p, r, k: app(
            c('nat_rect', 0), nn, N0,
            lams([('k_', nat), ('_', N)], lambda k_, _: app(c(fn_name), app(r, k_))), k))

    on_H = lam('k', nat, lambda k: app(  # noqa: N806
        c('nat_rect', 0), nn, N0, lams([('k_', nat), ('_', N)], lambda k_, _: mk_N(1)), k))
    mod_pos = lams([('p', positive), ('k', nat)], lambda p, k: app(
        c('positive_rect', 0), lam('_', positive, lambda _: arrow(nat, N)),
        digit('succ_double_N'), digit('double_N'), on_H, p, k))
    mod_wB = lam('n', N, lambda n: app(  # noqa: N806
        c('N_rect', 0), lam('_', N, lambda _: N), N0,
        lam('p', positive, lambda p: app(c('mod_pos'), p, mk_nat(WIDTH))), n))
    return [
        define('mod_pos', arrows(positive, nat, N), mod_pos),
        define('mod_wB', arrow(N, N), mod_wB),
        trusted('mod_wB_idem', pis([('n', N)], lambda n: _bounded(app(c('mod_wB'), n)))),
        define('ZwB16', T(0), app(c('sigT', 0, 0), N, _family())),
    ]


def _of_N():  # noqa: N802
    def body(n):
        z = app(c('mod_wB'), n)
        return app(c('existT', 0, 0), N, _family(), z,
                   canonical_bound(z, app(c('mod_wB_idem'), n)))

    return define('ZwB_of_N', arrow(N, ZWB), lam('n', N, body))


def _operations():
    def lifted(op):
        return lams([('x', ZWB), ('y', ZWB)],
                    lambda x, y: app(c('ZwB_of_N'), app(c(op), value(x), value(y))))

    def shift(x, p):
        big_shift = app(c('leb_N'), mk_N(WIDTH), value(p))
        shifted = app(c('mult_N'), value(x), app(c('pow_N'), mk_N(2), value(p)))
        return app(c('ZwB_of_N'), app(c('bool_rect', 0), lam('_', bool_, lambda _: N), N0, shifted,
                                      big_shift))

    op = arrows(ZWB, ZWB, ZWB)
    return [
        define('ZwB_add', op, lifted('plus_N')),
        define('ZwB_mul', op, lifted('mult_N')),
        define('ZwB_lsl', op, lams([('x', ZWB), ('p', ZWB)], shift)),
    ]


def _equivalence():
    def to_zwb(x):
        n = app(c('int16_to_N'), x)
        return app(c('existT', 0, 0), N, _family(), n,
                   canonical_bound(n, app(c('int16_to_N_bounded'), x)))

    sect = pis([('x', int16)], lambda x: eq(0, int16, app(OF_ZWB, app(TO_ZWB, x)), x))
    retr = pis([('z', ZWB)], lambda z: eq(0, ZWB, app(TO_ZWB, app(OF_ZWB, z)), z))
    related = lambda x, z: eq(0, int16, x, app(OF_ZWB, z))  # noqa: E731
    return [
        trusted('int16_to_N_bounded', pis([('x', int16)], lambda x: _bounded(app(c('int16_to_N'), x)))),
        define('to_ZwB', arrow(int16, ZWB), lam('x', int16, to_zwb)),
        define('of_ZwB', arrow(ZWB, int16), lam('z', ZWB, lambda z: app(c('int16_of_N'), value(z)))),
        trusted('sect_int16_ZwB', sect),
        trusted('retr_int16_ZwB', retr),
        trusted('adj_int16_ZwB', adj_ty(0, int16, ZWB, TO_ZWB, OF_ZWB, c('sect_int16_ZwB'),
                                        c('retr_int16_ZwB'))),
        define('equiv_int16_ZwB', app(c('Equiv', 0), int16, ZWB), mk_equiv(
            0, int16, ZWB, TO_ZWB, OF_ZWB, c('sect_int16_ZwB'), c('retr_int16_ZwB'),
            c('adj_int16_ZwB'))),
        define('R_int16_ZwB', arrows(int16, ZWB, T(0)), lams([('x', int16), ('z', ZWB)], related)),
        trusted('coh_int16_ZwB', coh_ty(0, int16, ZWB, c('R_int16_ZwB'), c('equiv_int16_ZwB'))),
    ]


def _related(x, z):
    return eq(0, int16, x, app(OF_ZWB, z))


def _forward_lemma(name, prim, model):
    def type_(x, z, r, y, w, s):
        return _related(app(c(prim), x, y), app(c(model), z, w))

    binders = [('x', int16), ('z', ZWB), ('r', lambda x, z: _related(x, z)),
               ('y', int16), ('w', ZWB), ('s', lambda x, z, r, y, w: _related(y, w))]
    return trusted(name, pis(binders, type_))


def _backward_lemma(name, forward, prim, model):
    """Same statement with the model on the left: arguments flipped."""
    binders = [('z', ZWB), ('x', int16), ('r', lambda z, x: _related(x, z)),
               ('w', ZWB), ('y', int16), ('s', lambda z, x, r, w, y: _related(y, w))]
    type_ = pis(binders, lambda z, x, r, w, y, s: _related(app(c(prim), x, y), app(c(model), z, w)))
    body = lams(binders, lambda z, x, r, w, y, s: app(c(forward), x, z, r, y, w, s))
    return define(name, type_, body)


def _lemmas():
    decls = []
    for prim, model in (('lsl', 'ZwB_lsl'), ('add16', 'ZwB_add'), ('mul16', 'ZwB_mul')):
        decls.append(_forward_lemma(f'{prim}_R', prim, model))
        decls.append(_backward_lemma(f'{model}_R', f'{prim}_R', prim, model))

    def distr(x, y, n):
        lhs = app(c('ZwB_lsl'), app(c('ZwB_add'), x, y), n)
        rhs = app(c('ZwB_add'), app(c('ZwB_lsl'), x, n), app(c('ZwB_lsl'), y, n))
        return eq(0, ZWB, lhs, rhs)

    decls.append(trusted('lsl_add_distr_ZwB', pis([('x', ZWB), ('y', ZWB), ('n', ZWB)], distr)))
    return decls


def declarations():
    return _modulo() + [_of_N()] + _operations() + _equivalence() + _lemmas()
