"""
Surface syntax tree.

Source positions are kept for error messages but never compared, so a module
printed and parsed back equals the original.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

BLACKBOX = 'blackbox'
WHITEBOX = 'whitebox'


@dataclass(frozen=True)
class Ref:
    name: str
    levels: tuple[int, ...] | None = None
    line: int | None = field(default=None, compare=False)
    column: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Universe:
    level: int = 0


@dataclass(frozen=True)
class Num:
    value: int
    line: int | None = field(default=None, compare=False)
    column: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class Annot:
    term: Expr
    type: Expr


@dataclass(frozen=True)
class Apply:
    fn: Expr
    arg: Expr


@dataclass(frozen=True)
class Fun:
    name: str
    domain: Expr
    body: Expr


@dataclass(frozen=True)
class Forall:
    name: str
    domain: Expr
    body: Expr


@dataclass(frozen=True)
class Arrow:
    domain: Expr
    codomain: Expr


Expr = Union[Ref, Universe, Num, Annot, Apply, Fun, Forall, Arrow]


@dataclass(frozen=True)
class Def:
    name: str
    type: Expr
    body: Expr


@dataclass(frozen=True)
class Axiom:
    name: str
    type: Expr


@dataclass(frozen=True)
class Trusted:
    name: str
    type: Expr


@dataclass(frozen=True)
class RelateType:
    left: str
    right: str
    equiv: Expr
    rel: Expr
    coh: Expr


@dataclass(frozen=True)
class RelateTerm:
    """``by trusted p`` declares ``p`` at the computed relation type first."""

    left: Ref
    right: Ref
    proof: Ref | Expr
    assumed: bool = False


@dataclass(frozen=True)
class Transport:
    name: str
    source: str
    mode: str = BLACKBOX


@dataclass(frozen=True)
class Goal:
    name: str
    type: Expr


Decl = Union[Def, Axiom, Trusted, RelateType, RelateTerm, Transport, Goal]


def decl_name(decl: Decl) -> str:
    match decl:
        case RelateType(left=a, right=b):
            return f'{a} ⋈ {b}'
        case RelateTerm(left=a, right=b):
            return f'{a.name} ≈ {b.name}'
    return decl.name
