"""
Term syntax of the calculus and de Bruijn index operations.

Terms are immutable. Every node caches ``fv``: one more than the largest loose
de Bruijn index it contains (0 for closed terms), so lifting and substitution
skip closed subterms without walking them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union


def _freeze(node, fv: int) -> None:
    object.__setattr__(node, 'fv', fv)


@dataclass(frozen=True, slots=True)
class Sort:
    """The universe ``Type_level``."""

    level: int
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.level < 0:
            raise ValueError(f"universe level must be >= 0, got {self.level}")


@dataclass(frozen=True, slots=True)
class Var:
    index: int
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        _freeze(self, self.index + 1)


@dataclass(frozen=True, slots=True)
class Const:
    """A global constant, instantiated at concrete universe levels."""

    name: str
    levels: tuple[int, ...] = ()
    fv: int = field(default=0, init=False, repr=False, compare=False)


@dataclass(frozen=True, slots=True)
class Lam:
    domain: Term
    body: Term
    name: str = field(default='x', compare=False)
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        _freeze(self, max(self.domain.fv, self.body.fv - 1))


@dataclass(frozen=True, slots=True)
class Pi:
    domain: Term
    codomain: Term
    name: str = field(default='x', compare=False)
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        _freeze(self, max(self.domain.fv, self.codomain.fv - 1))


@dataclass(frozen=True, slots=True)
class App:
    fn: Term
    arg: Term
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        _freeze(self, max(self.fn.fv, self.arg.fv))


@dataclass(frozen=True, slots=True)
class PrimInt16:
    """A 16-bit machine integer literal."""

    value: int
    fv: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        if not 0 <= self.value < 2 ** 16:
            raise ValueError(f"int16 literal out of range: {self.value}")


@dataclass(frozen=True, slots=True)
class Free:
    """Named placeholder used while building terms; never reaches the kernel."""

    name: str
    uid: int
    fv: int = field(default=0, init=False, repr=False, compare=False)


Term = Union[Sort, Var, Const, Lam, Pi, App, PrimInt16, Free]


def shift(t: Term, amount: int, cutoff: int = 0) -> Term:
    """Add ``amount`` to every index >= ``cutoff``."""
    if amount == 0 or t.fv <= cutoff:
        return t
    match t:
        case Var(index=i):
            return Var(i + amount) if i >= cutoff else t
        case App(fn=f, arg=a):
            return App(shift(f, amount, cutoff), shift(a, amount, cutoff))
        case Lam(domain=d, body=b, name=n):
            return Lam(shift(d, amount, cutoff), shift(b, amount, cutoff + 1), n)
        case Pi(domain=d, codomain=b, name=n):
            return Pi(shift(d, amount, cutoff), shift(b, amount, cutoff + 1), n)
    return t


def subst(t: Term, depth: int, u: Term) -> Term:
    """Replace index ``depth`` by ``u`` and close the gap above it.

    ``u`` lives outside every binder of ``t``; it is lifted as binders are crossed.
    """
    if t.fv <= depth:
        return t
    match t:
        case Var(index=i):
            if i == depth:
                return shift(u, depth, 0)
            return Var(i - 1) if i > depth else t
        case App(fn=f, arg=a):
            return App(subst(f, depth, u), subst(a, depth, u))
        case Lam(domain=d, body=b, name=n):
            return Lam(subst(d, depth, u), subst(b, depth + 1, u), n)
        case Pi(domain=d, codomain=b, name=n):
            return Pi(subst(d, depth, u), subst(b, depth + 1, u), n)
    return t


def instantiate(body: Term, arg: Term) -> Term:
    return subst(body, 0, arg)


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Split an application into its head and argument list."""
    args = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fn
    args.reverse()
    return t, args


def apply(head: Term, *args: Term) -> Term:
    for a in args:
        head = App(head, a)
    return head


def constants(t: Term) -> set[tuple[str, tuple[int, ...]]]:
    """All (name, levels) pairs occurring in ``t``."""
    found = set()
    stack = [t]
    while stack:
        node = stack.pop()
        match node:
            case Const(name=n, levels=ls):
                found.add((n, ls))
            case App(fn=f, arg=a):
                stack.extend((f, a))
            case Lam(domain=d, body=b) | Pi(domain=d, codomain=b):
                stack.extend((d, b))
    return found


def size(t: Term) -> int:
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        count += 1
        match node:
            case App(fn=f, arg=a):
                stack.extend((f, a))
            case Lam(domain=d, body=b) | Pi(domain=d, codomain=b):
                stack.extend((d, b))
    return count


def alpha_eq(t: Term, u: Term) -> bool:
    """Structural equality (binder names ignored) without deep recursion."""
    stack = [(t, u)]
    while stack:
        a, b = stack.pop()
        if a is b:
            continue
        if type(a) is not type(b) or a.fv != b.fv:
            return False
        match a:
            case App():
                stack.append((a.arg, b.arg))
                stack.append((a.fn, b.fn))
            case Lam():
                stack.append((a.body, b.body))
                stack.append((a.domain, b.domain))
            case Pi():
                stack.append((a.codomain, b.codomain))
                stack.append((a.domain, b.domain))
            case Var():
                if a.index != b.index:
                    return False
            case Sort():
                if a.level != b.level:
                    return False
            case Const():
                if a.name != b.name or a.levels != b.levels:
                    return False
            case PrimInt16():
                if a.value != b.value:
                    return False
            case Free():
                if a.uid != b.uid:
                    return False
    return True


def remap(t: Term, fn, depth: int = 0) -> Term:
    """Rename every loose index ``k`` (relative to ``depth``) to ``depth + fn(k)``."""
    if t.fv <= depth:
        return t
    match t:
        case Var(index=i):
            return Var(depth + fn(i - depth)) if i >= depth else t
        case App(fn=f, arg=a):
            return App(remap(f, fn, depth), remap(a, fn, depth))
        case Lam(domain=d, body=b, name=n):
            return Lam(remap(d, fn, depth), remap(b, fn, depth + 1), n)
        case Pi(domain=d, codomain=b, name=n):
            return Pi(remap(d, fn, depth), remap(b, fn, depth + 1), n)
    return t
