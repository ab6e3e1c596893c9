"""Shorthands shared by the prelude modules."""
from __future__ import annotations

from typing import Callable

from core_kernel.builder import Type, app, arrow, c
from core_kernel.env import Declaration, Origin
from core_kernel.terms import Term

nat, O, S = c('nat'), c('O'), c('S')
bool_, true, false = c('bool'), c('true'), c('false')
positive, xI, xO, xH = c('positive'), c('xI'), c('xO'), c('xH')
N, N0, Npos = c('N'), c('N0'), c('Npos')
unit, tt = c('unit'), c('tt')
Empty = c('Empty')
int16 = c('int16')

T = Type


def define(name: str, type_: Term, body: Term, *, reducible: bool = True, anchor: str = '') -> Declaration:
    return Declaration.mono(name, type_, body, reducible=reducible, anchor=anchor)


def trusted(name: str, type_: Term, *, relies_on: tuple[str, ...] = (), anchor: str = '') -> Declaration:
    return Declaration.mono(name, type_, None, origin=Origin.TRUSTED, relies_on=relies_on, anchor=anchor)


def axiom(name: str, type_: Term, *, anchor: str = '') -> Declaration:
    return Declaration.mono(name, type_, None, origin=Origin.AXIOM, anchor=anchor)


def inductive(name: str, type_: Term) -> Declaration:
    return Declaration.mono(name, type_, None, origin=Origin.INDUCTIVE)


def poly_define(name: str, params: int, build: Callable[..., tuple[Term, Term]], *,
                anchor: str = '') -> Declaration:
    return Declaration.poly(name, params, lambda env, levels: build(*levels), anchor=anchor)


def poly_opaque(name: str, params: int, build: Callable[..., Term], *, origin: Origin,
                relies_on: tuple[str, ...] = (), anchor: str = '') -> Declaration:
    return Declaration.poly(name, params, lambda env, levels: (build(*levels), None),
                            origin=origin, reducible=False, relies_on=relies_on, anchor=anchor)


def eq(level: int, ty: Term, x: Term, y: Term) -> Term:
    return app(c('eq', level), ty, x, y)


def refl(level: int, ty: Term, x: Term) -> Term:
    return app(c('eq_refl', level), ty, x)


def neg(ty: Term) -> Term:
    return arrow(ty, Empty)
