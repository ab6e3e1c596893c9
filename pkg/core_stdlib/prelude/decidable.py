"""
Decidable equality for the first-order inductives and the canonical equality
built from it, plus Peano-style recursion on binary naturals.

The decision procedures are generated from a constructor table: an outer
eliminator on ``x`` and an inner one on ``y`` per constructor. Distinct
constructors are told apart by transporting ``tt`` along the equation into a
code family that is ``unit`` on one side and ``Empty`` on the other.
Injectivity uses ``ap`` of a projection that undoes the constructor.
"""
from __future__ import annotations

from dataclasses import dataclass

from core_kernel.builder import app, arrow, c, lam, lams, pi, pis
from core_kernel.terms import Term

from .common import (
    Empty, N, N0, T, define, eq, nat, neg, poly_define, positive, refl, tt, unit, xH,
)
from .logic import ap


@dataclass(frozen=True)
class Ctor:
    name: str
    arg: Term | None = None
    recursive: bool = False
    unwrap: Term | None = None

    @property
    def term(self) -> Term:
        return c(self.name)


def _pos_unwrap():
    return lam('p', positive, lambda p: app(
        c('positive_rect', 0), lam('_', positive, lambda _: positive),
        lams([('q', positive), ('_', positive)], lambda q, _: q),
        lams([('q', positive), ('_', positive)], lambda q, _: q), xH, p))


def _N_unwrap():  # noqa: N802
    return lam('n', N, lambda n: app(
        c('N_rect', 0), lam('_', N, lambda _: positive), xH, lam('p', positive, lambda p: p), n))


CARRIERS: dict[str, tuple[str, list[Ctor]]] = {
    'nat': ('nat_rect', [Ctor('O'), Ctor('S', nat, True, c('pred'))]),
    'bool': ('bool_rect', [Ctor('true'), Ctor('false')]),
    'positive': ('positive_rect', [Ctor('xI', positive, True, _pos_unwrap()),
                                   Ctor('xO', positive, True, _pos_unwrap()), Ctor('xH')]),
    'N': ('N_rect', [Ctor('N0'), Ctor('Npos', positive, False, _N_unwrap())]),
}

# decision procedure used for the argument of a non-recursive constructor
ARG_DECIDERS = {'Npos': 'dec_positive'}


def dec(A: Term, x: Term, y: Term) -> Term:
    return app(c('Dec'), A, x, y)


def _branch(ctor: Ctor, rec_ty, body):
    """Eliminator branch: binds the constructor argument and, when recursive, its result."""
    if ctor.arg is None:
        return body(None, None)
    if not ctor.recursive:
        return lam('a', ctor.arg, lambda a: body(a, None))
    return lams([('a', ctor.arg), ('r', lambda a: rec_ty(a))], body)


def _built(ctor: Ctor, a):
    return ctor.term if a is None else app(ctor.term, a)


def _code(carrier, elim, ctors, hit):
    """``λ z. unit`` on constructor ``hit`` and ``Empty`` elsewhere."""
    motive = lam('_', carrier, lambda _: T(0))

    branches = [_branch(ct, lambda a: T(0), lambda a, r, ct=ct: unit if ct.name == hit else Empty)
                for ct in ctors]
    return lam('z', carrier, lambda z: app(c(elim, 1), motive, *branches, z))


def _disjoint(carrier, elim, ctors, left: Ctor, a, right: Ctor, b):
    """Proof that ``left a`` and ``right b`` differ."""
    lhs, rhs = _built(left, a), _built(right, b)
    return lam('e', eq(0, carrier, lhs, rhs), lambda e: app(
        c('eq_rect', 0, 0), carrier, lhs, _code(carrier, elim, ctors, left.name), tt, rhs, e))


def _decide_args(carrier, ctor: Ctor, a, b, sub):
    lhs, rhs = app(ctor.term, a), app(ctor.term, b)
    goal = dec(carrier, lhs, rhs)
    same = lam('e', eq(0, ctor.arg, a, b),
               lambda e: app(c('inl', 0, 0), eq(0, carrier, lhs, rhs), neg(eq(0, carrier, lhs, rhs)),
                             ap(0, 0, ctor.arg, carrier, ctor.term, a, b, e)))
    differ = lam('ne', neg(eq(0, ctor.arg, a, b)), lambda ne: app(
        c('inr', 0, 0), eq(0, carrier, lhs, rhs), neg(eq(0, carrier, lhs, rhs)),
        lam('e', eq(0, carrier, lhs, rhs),
            lambda e: app(ne, ap(0, 0, carrier, ctor.arg, ctor.unwrap, lhs, rhs, e)))))
    return app(c('sum_rect', 0, 0, 0), eq(0, ctor.arg, a, b), neg(eq(0, ctor.arg, a, b)),
               lam('_', app(c('sum', 0, 0), eq(0, ctor.arg, a, b), neg(eq(0, ctor.arg, a, b))),
                   lambda _: goal),
               same, differ, sub)


def _decision(name: str) -> Term:
    elim, ctors = CARRIERS[name]
    carrier = c(name)

    def inl_refl(x):
        return app(c('inl', 0, 0), eq(0, carrier, x, x), neg(eq(0, carrier, x, x)), refl(0, carrier, x))

    def inr_apart(lhs, rhs, proof):
        return app(c('inr', 0, 0), eq(0, carrier, lhs, rhs), neg(eq(0, carrier, lhs, rhs)), proof)

    def outer(ci: Ctor):
        def body(a, rec):
            lhs = _built(ci, a)

            def inner(cj: Ctor):
                def on(b, _):
                    rhs = _built(cj, b)
                    if ci.name != cj.name:
                        return inr_apart(lhs, rhs, _disjoint(carrier, elim, ctors, ci, a, cj, b))
                    if a is None:
                        return inl_refl(lhs)
                    sub = app(rec, b) if ci.recursive else app(c(ARG_DECIDERS[ci.name]), a, b)
                    return _decide_args(carrier, ci, a, b, sub)
                return _branch(cj, lambda b: dec(carrier, lhs, b), on)

            motive = lam('y', carrier, lambda y: dec(carrier, lhs, y))
            return lam('y', carrier, lambda y: app(c(elim, 0), motive, *map(inner, ctors), y))

        return _branch(ci, lambda a: pi('y', carrier, lambda y: dec(carrier, a, y)), body)

    motive = lam('x', carrier, lambda x: pi('y', carrier, lambda y: dec(carrier, x, y)))
    return lam('x', carrier, lambda x: app(c(elim, 0), motive, *map(outer, ctors), x))


def _can_eq_dec():
    binders = [('A', T(0)), ('d', lambda A: app(c('DecEq'), A)), ('x', lambda A, d: A),
               ('y', lambda A, d, x: A), ('e', lambda A, d, x, y: eq(0, A, x, y))]

    def body(A, d, x, y, e):
        goal = eq(0, A, x, y)
        return app(c('sum_rect', 0, 0, 0), goal, neg(goal), lam('_', app(c('sum', 0, 0), goal, neg(goal)),
                                                             lambda _: goal),
                   lam('e0', goal, lambda e0: e0),
                   lam('ne', neg(goal), lambda ne: app(c('Empty_rect', 0), lam('_', Empty, lambda _: goal),
                                                       app(ne, e))),
                   app(d, x, y))

    type_ = pis(binders, lambda A, d, x, y, e: eq(0, A, x, y))
    return type_, lams(binders, body)


def can_eq_type(carrier: Term) -> Term:
    return pis([('x', carrier), ('y', carrier), ('e', lambda x, y: eq(0, carrier, x, y))],
               lambda x, y, e: eq(0, carrier, x, y))


def _N_peano_rect(k):  # noqa: N802
    to_N, of_N = c('to_N'), c('of_N')  # noqa: N806
    binders = [
        ('P', arrow(N, T(k))),
        ('f0', lambda P: app(P, N0)),
        ('fS', lambda P, f0: pi('n', N, lambda n: arrow(app(P, n), app(P, app(c('succ_N'), n))))),
    ]
    type_ = pis(binders, lambda P, f0, fS: pi('n', N, lambda n: app(P, n)))

    def body(P, f0, fS):
        def at(n):
            round_trip = app(to_N, app(of_N, n))
            unary = app(c('nat_rect', k), lam('m', nat, lambda m: app(P, app(to_N, m))), f0,
                        lams([('m', nat), ('r', lambda m: app(P, app(to_N, m)))],
                             lambda m, r: app(fS, app(to_N, m), r)),
                        app(of_N, n))
            proof = app(c('can_eq_N'), round_trip, n, app(c('retr_nat_N'), n))
            return app(c('eq_rect', 0, k), N, round_trip, P, unary, n, proof)
        return lam('n', N, at)

    return type_, lams(binders, body)


def declarations():
    decls = [
        define('Dec', pis([('A', T(0)), ('x', lambda A: A), ('y', lambda A, x: A)], lambda A, x, y: T(0)),
               lams([('A', T(0)), ('x', lambda A: A), ('y', lambda A, x: A)],
                    lambda A, x, y: app(c('sum', 0, 0), eq(0, A, x, y), neg(eq(0, A, x, y))))),
        define('DecEq', arrow(T(0), T(0)), lam('A', T(0), lambda A: pis(
            [('x', A), ('y', A)], lambda x, y: dec(A, x, y)))),
        define('can_eq_dec', *_can_eq_dec()),
    ]
    for name in CARRIERS:
        carrier = c(name)
        decls.append(define(f'dec_{name}', app(c('DecEq'), carrier), _decision(name)))
        decls.append(define(f'can_eq_{name}', can_eq_type(carrier),
                            app(c('can_eq_dec'), carrier, c(f'dec_{name}'))))
    decls.append(poly_define('N_peano_rect', 1, _N_peano_rect))
    return decls


