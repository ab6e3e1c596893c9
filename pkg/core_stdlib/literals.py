"""
Encoding and decoding of numeric literals.

``nat`` literals are unary ``S``-towers, ``positive`` literals are binary digit
spines with the least significant digit outermost (``6 = xO (xI xH)``), ``N``
wraps a positive in ``Npos`` and ``int16`` literals are primitive values.
"""
from __future__ import annotations

from django.conf import settings

from core_eval.binary import NPOS, WORD, XI, XO, N_spine, positive_spine, read_N, read_positive
from core_kernel.errors import LiteralOutOfRange, NotALiteral
from core_kernel.terms import App, Const, PrimInt16, Term

O = Const('O')
S = Const('S')
TRUE = Const('true')
FALSE = Const('false')


def literal_bound() -> int:
    return getattr(settings, 'UPTRANS_LITERAL_BOUND', WORD)


def _bounded(n: int) -> int:
    if n < 0 or n > literal_bound():
        raise LiteralOutOfRange(f"literal {n} is outside [0, {literal_bound()}]")
    return n


def mk_nat(n: int) -> Term:
    t: Term = O
    for _ in range(_bounded(n)):
        t = App(S, t)
    return t


def mk_positive(n: int) -> Term:
    if n < 1:
        raise LiteralOutOfRange(f"positive literal must be >= 1, got {n}")
    return positive_spine(_bounded(n))


def mk_N(n: int) -> Term:  # noqa: N802
    return N_spine(_bounded(n))


def mk_int16(n: int) -> PrimInt16:
    if not 0 <= n < WORD:
        raise LiteralOutOfRange(f"int16 literal out of range: {n}")
    return PrimInt16(n)


def mk_bool(b: bool) -> Const:
    return TRUE if b else FALSE


def read_nat(t: Term) -> int:
    n = 0
    while isinstance(t, App) and t.fn == S:
        n += 1
        t = t.arg
    if t != O:
        raise NotALiteral("not a nat literal", term=t)
    return n


def read_int16(t: Term) -> int:
    if isinstance(t, PrimInt16):
        return t.value
    raise NotALiteral("not an int16 literal", term=t)


def read_bool(t: Term) -> bool:
    if t == TRUE:
        return True
    if t == FALSE:
        return False
    raise NotALiteral("not a bool literal", term=t)


def literal_kind(t: Term) -> str | None:
    """Base type of a compound closed literal (``None`` for anything else).

    Bare nullary constructors are not compound literals.
    """
    if isinstance(t, PrimInt16):
        return 'int16'
    if not isinstance(t, App) or t.fv:
        return None
    try:
        if t.fn == S:
            read_nat(t)
            return 'nat'
        if t.fn == NPOS:
            read_N(t)
            return 'N'
        if t.fn in (XI, XO):
            read_positive(t)
            return 'positive'
    except NotALiteral:
        return None
    return None
