"""
16-bit machine integer primitives.

Primitives fold only when every argument is a literal of the expected kind; a
primitive applied to anything else stays an inert head.
"""
from __future__ import annotations

from typing import Callable

from core_kernel.errors import NotALiteral
from core_kernel.terms import PrimInt16, Term
from .binary import WORD, N_spine, read_N

MASK = WORD - 1


def lsl(x: int, p: int) -> int:
    return 0 if p >= 16 else (x << p) & MASK


def add16(x: int, y: int) -> int:
    return (x + y) & MASK


def mul16(x: int, y: int) -> int:
    return (x * y) & MASK


PRIM_OPS: dict[str, Callable[..., int]] = {
    'lsl': lsl,
    'add16': add16,
    'mul16': mul16,
}

PRIM_ARITY: dict[str, int] = {
    'lsl': 2,
    'add16': 2,
    'mul16': 2,
    'int16_to_N': 1,
    'int16_of_N': 1,
}


def prim_eval(op: str, *args: int) -> int:
    """Host-arithmetic semantics of a primitive on literal values, modulo 2^16."""
    try:
        fn = PRIM_OPS[op]
    except KeyError:
        raise ValueError(f"unknown primitive {op}") from None
    return fn(*args)


def fold(op: str, args: list[Term]) -> Term | None:
    """Fold a saturated primitive application whose arguments are in normal form."""
    if op == 'int16_to_N':
        (x,) = args
        return N_spine(x.value) if isinstance(x, PrimInt16) else None
    if op == 'int16_of_N':
        (n,) = args
        try:
            return PrimInt16(read_N(n) & MASK)
        except NotALiteral:
            return None
    if all(isinstance(a, PrimInt16) for a in args):
        return PrimInt16(prim_eval(op, *(a.value for a in args)))
    return None
