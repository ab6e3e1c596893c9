"""
Built-in inductive types, their constructors and eliminators, and the 16-bit
integer primitives. Computation rules live in ``core_eval.iota``.
"""
from __future__ import annotations

from core_kernel.builder import app, arrow, arrows, c, pi, pis
from core_kernel.env import Declaration, Origin

from .common import (
    Empty, N, N0, Npos, O, S, T, bool_, false, inductive, int16, nat, poly_opaque, positive,
    true, tt, unit, xH, xI, xO,
)


def _poly(name, params, build):
    return poly_opaque(name, params, build, origin=Origin.INDUCTIVE)


def _nat_rect(k):
    return pis(
        [('P', arrow(nat, T(k))),
         ('p0', lambda P: app(P, O)),
         ('pS', lambda P, p0: pi('n', nat, lambda n: arrow(app(P, n), app(P, app(S, n)))))],
        lambda P, p0, pS: pi('n', nat, lambda n: app(P, n)),
    )


def _bool_rect(k):
    return pis(
        [('P', arrow(bool_, T(k))), ('t', lambda P: app(P, true)), ('f', lambda P, t: app(P, false))],
        lambda P, t, f: pi('b', bool_, lambda b: app(P, b)),
    )


def _positive_rect(k):
    def step(ctor):
        return lambda P, *_: pi('p', positive, lambda p: arrow(app(P, p), app(P, app(ctor, p))))

    return pis(
        [('P', arrow(positive, T(k))), ('fI', step(xI)), ('fO', step(xO)),
         ('fH', lambda P, fI, fO: app(P, xH))],
        lambda P, fI, fO, fH: pi('p', positive, lambda p: app(P, p)),
    )


def _N_rect(k):  # noqa: N802
    return pis(
        [('P', arrow(N, T(k))), ('f0', lambda P: app(P, N0)),
         ('fpos', lambda P, f0: pi('p', positive, lambda p: app(P, app(Npos, p))))],
        lambda P, f0, fpos: pi('n', N, lambda n: app(P, n)),
    )


def _list(i):
    return arrow(T(i), T(i))


def _nil(i):
    return pi('A', T(i), lambda A: app(c('list', i), A))


def _cons(i):
    return pi('A', T(i), lambda A: arrows(A, app(c('list', i), A), app(c('list', i), A)))


def _list_rect(i, k):
    lst = c('list', i)
    return pis(
        [('A', T(i)),
         ('P', lambda A: arrow(app(lst, A), T(k))),
         ('pn', lambda A, P: app(P, app(c('nil', i), A))),
         ('pc', lambda A, P, pn: pis(
             [('h', A), ('t', app(lst, A))],
             lambda h, t: arrow(app(P, t), app(P, app(c('cons', i), A, h, t)))))],
        lambda A, P, pn, pc: pi('l', app(lst, A), lambda l: app(P, l)),
    )


def _sigT(i, j):  # noqa: N802
    return pi('A', T(i), lambda A: arrow(arrow(A, T(j)), T(max(i, j))))


def _existT(i, j):  # noqa: N802
    return pis(
        [('A', T(i)), ('B', lambda A: arrow(A, T(j))), ('a', lambda A, B: A),
         ('b', lambda A, B, a: app(B, a))],
        lambda A, B, a, b: app(c('sigT', i, j), A, B),
    )


def _sigT_rect(i, j, k):  # noqa: N802
    sig = c('sigT', i, j)
    return pis(
        [('A', T(i)), ('B', lambda A: arrow(A, T(j))),
         ('P', lambda A, B: arrow(app(sig, A, B), T(k))),
         ('f', lambda A, B, P: pis(
             [('a', A), ('b', lambda a: app(B, a))],
             lambda a, b: app(P, app(c('existT', i, j), A, B, a, b))))],
        lambda A, B, P, f: pi('s', app(sig, A, B), lambda s: app(P, s)),
    )


def _eq(i):
    return pi('A', T(i), lambda A: arrows(A, A, T(i)))


def _eq_refl(i):
    return pis([('A', T(i)), ('x', lambda A: A)], lambda A, x: app(c('eq', i), A, x, x))


def _eq_rect(i, k):
    return pis(
        [('A', T(i)), ('x', lambda A: A), ('P', lambda A, x: arrow(A, T(k))),
         ('px', lambda A, x, P: app(P, x)), ('y', lambda A, x, P, px: A)],
        lambda A, x, P, px, y: arrow(app(c('eq', i), A, x, y), app(P, y)),
    )


def _sum(i, j):
    return arrows(T(i), T(j), T(max(i, j)))


def _inj(i, j, left):
    return pis(
        [('A', T(i)), ('B', lambda A: T(j))],
        lambda A, B: arrow(A if left else B, app(c('sum', i, j), A, B)),
    )


def _sum_rect(i, j, k):
    sm = c('sum', i, j)
    return pis(
        [('A', T(i)), ('B', lambda A: T(j)), ('P', lambda A, B: arrow(app(sm, A, B), T(k))),
         ('fl', lambda A, B, P: pi('a', A, lambda a: app(P, app(c('inl', i, j), A, B, a)))),
         ('fr', lambda A, B, P, fl: pi('b', B, lambda b: app(P, app(c('inr', i, j), A, B, b))))],
        lambda A, B, P, fl, fr: pi('s', app(sm, A, B), lambda s: app(P, s)),
    )


def _unit_rect(k):
    return pis(
        [('P', arrow(unit, T(k))), ('u', lambda P: app(P, tt))],
        lambda P, u: pi('x', unit, lambda x: app(P, x)),
    )


def _Empty_rect(k):  # noqa: N802
    return pi('P', arrow(Empty, T(k)), lambda P: pi('e', Empty, lambda e: app(P, e)))


def _prim(name, type_):
    return Declaration.mono(name, type_, None, origin=Origin.PRIMITIVE)


def declarations() -> list[Declaration]:
    return [
        inductive('nat', T(0)),
        inductive('O', nat),
        inductive('S', arrow(nat, nat)),
        _poly('nat_rect', 1, _nat_rect),
        inductive('bool', T(0)),
        inductive('true', bool_),
        inductive('false', bool_),
        _poly('bool_rect', 1, _bool_rect),
        inductive('positive', T(0)),
        inductive('xI', arrow(positive, positive)),
        inductive('xO', arrow(positive, positive)),
        inductive('xH', positive),
        _poly('positive_rect', 1, _positive_rect),
        inductive('N', T(0)),
        inductive('N0', N),
        inductive('Npos', arrow(positive, N)),
        _poly('N_rect', 1, _N_rect),
        inductive('unit', T(0)),
        inductive('tt', unit),
        _poly('unit_rect', 1, _unit_rect),
        inductive('Empty', T(0)),
        _poly('Empty_rect', 1, _Empty_rect),
        _poly('list', 1, _list),
        _poly('nil', 1, _nil),
        _poly('cons', 1, _cons),
        _poly('list_rect', 2, _list_rect),
        _poly('sigT', 2, _sigT),
        _poly('existT', 2, _existT),
        _poly('sigT_rect', 3, _sigT_rect),
        _poly('eq', 1, _eq),
        _poly('eq_refl', 1, _eq_refl),
        _poly('eq_rect', 2, _eq_rect),
        _poly('sum', 2, _sum),
        _poly('inl', 2, lambda i, j: _inj(i, j, True)),
        _poly('inr', 2, lambda i, j: _inj(i, j, False)),
        _poly('sum_rect', 3, _sum_rect),
        inductive('int16', T(0)),
        _prim('lsl', arrows(int16, int16, int16)),
        _prim('add16', arrows(int16, int16, int16)),
        _prim('mul16', arrows(int16, int16, int16)),
        _prim('int16_to_N', arrow(int16, N)),
        _prim('int16_of_N', arrow(N, int16)),
    ]
