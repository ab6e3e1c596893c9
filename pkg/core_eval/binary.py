"""
Binary ``positive`` and ``N`` spines, as folded by the int16 conversions.

The least significant digit is outermost: ``6 = xO (xI xH)``.
"""
from __future__ import annotations

from core_kernel.errors import NotALiteral
from core_kernel.terms import App, Const, Term

N0 = Const('N0')
NPOS = Const('Npos')
XI = Const('xI')
XO = Const('xO')
XH = Const('xH')

WORD = 2 ** 16


def positive_spine(n: int) -> Term:
    if n < 1:
        raise ValueError(f"positive spine needs n >= 1, got {n}")
    t: Term = XH
    for digit in bin(n)[3:]:
        t = App(XI if digit == '1' else XO, t)
    return t


def N_spine(n: int) -> Term:  # noqa: N802
    if n < 0:
        raise ValueError(f"N spine needs n >= 0, got {n}")
    return N0 if n == 0 else App(NPOS, positive_spine(n))


def read_positive(t: Term) -> int:
    digits = []
    while isinstance(t, App) and t.fn in (XI, XO):
        digits.append(1 if t.fn == XI else 0)
        t = t.arg
    if t != XH:
        raise NotALiteral("not a positive literal", term=t)
    value = 1
    for digit in reversed(digits):
        value = 2 * value + digit
    return value


def read_N(t: Term) -> int:  # noqa: N802
    if t == N0:
        return 0
    if isinstance(t, App) and t.fn == NPOS:
        return read_positive(t.arg)
    raise NotALiteral("not an N literal", term=t)
