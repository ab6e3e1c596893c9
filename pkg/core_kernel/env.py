"""
Global environment, local contexts and the global context of related constants.

Declarations may be universe-polymorphic: they carry a builder that produces the
type and body for a concrete vector of levels. Instances are built on first use,
memoized, and (when ``verify_instances`` is on) kernel-checked exactly once.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable

from .errors import LevelMismatch, PreludeIllTyped, UnknownConstant, UptransError
from .terms import Const, Term

logger = logging.getLogger(__name__)

LocalCtx = tuple[Term, ...]


class Origin(str, Enum):
    DEFINED = 'defined'
    AXIOM = 'axiom'
    TRUSTED = 'trusted'
    PRIMITIVE = 'primitive'
    INDUCTIVE = 'inductive'


Builder = Callable[['GlobalEnv', tuple[int, ...]], tuple[Term, Term | None]]


@dataclass(frozen=True)
class Declaration:
    name: str
    origin: Origin
    build: Builder
    univ_params: int = 0
    reducible: bool = False
    relies_on: tuple[str, ...] = ()
    anchor: str = ''

    @classmethod
    def mono(cls, name: str, type: Term, body: Term | None = None, *,
             origin: Origin = Origin.DEFINED, reducible: bool | None = None,
             relies_on: tuple[str, ...] = (), anchor: str = '') -> Declaration:
        if reducible is None:
            reducible = origin == Origin.DEFINED and body is not None
        return cls(name, origin, lambda env, levels: (type, body), 0, reducible, relies_on, anchor)

    @classmethod
    def poly(cls, name: str, univ_params: int, build: Builder, *,
             origin: Origin = Origin.DEFINED, reducible: bool | None = None,
             relies_on: tuple[str, ...] = (), anchor: str = '') -> Declaration:
        if reducible is None:
            reducible = origin == Origin.DEFINED
        return cls(name, origin, build, univ_params, reducible, relies_on, anchor)


@dataclass(frozen=True)
class Entry:
    """A declaration instantiated at concrete levels."""

    name: str
    levels: tuple[int, ...]
    type: Term
    body: Term | None
    origin: Origin
    reducible: bool
    relies_on: tuple[str, ...] = ()
    anchor: str = ''

    @property
    def opaque(self) -> bool:
        return self.body is None or not self.reducible


class GlobalEnv:
    """Name -> declaration map with memoized universe instances."""

    def __init__(self, declarations: Iterable[Declaration] = (), *, verify_instances: bool = True):
        self._decls: dict[str, Declaration] = {}
        for decl in declarations:
            self._decls[decl.name] = decl
        self._instances: dict[tuple[str, tuple[int, ...]], Entry] = {}
        self._verified: set[tuple[str, tuple[int, ...]]] = set()
        self.verify_instances = verify_instances
        # derived per-declaration data (definitional heights, self-translations)
        self.memo: dict = {}

    def __contains__(self, name: str) -> bool:
        return name in self._decls

    def __len__(self) -> int:
        return len(self._decls)

    def names(self) -> list[str]:
        return list(self._decls)

    def declaration(self, name: str) -> Declaration:
        try:
            return self._decls[name]
        except KeyError:
            raise UnknownConstant(name) from None

    def lookup(self, name: str, levels: tuple[int, ...] = ()) -> Entry:
        key = (name, levels)
        entry = self._instances.get(key)
        if entry is None:
            decl = self.declaration(name)
            if len(levels) != decl.univ_params:
                raise LevelMismatch(
                    f"{name} expects {decl.univ_params} universe levels, got {len(levels)}",
                    term=Const(name, levels),
                )
            type_, body = decl.build(self, levels)
            entry = Entry(name, levels, type_, body, decl.origin, decl.reducible,
                          decl.relies_on, decl.anchor)
            self._instances[key] = entry
        if self.verify_instances and key not in self._verified:
            self._verified.add(key)
            self._verify(entry)
        return entry

    def _verify(self, entry: Entry) -> None:
        from .typechecker import check_entry

        try:
            check_entry(self, entry)
        except UptransError as exc:
            self._verified.discard((entry.name, entry.levels))
            raise PreludeIllTyped(f"{entry.name}.{{{','.join(map(str, entry.levels))}}}"
                                  if entry.levels else entry.name, exc) from exc
        logger.debug(f"checked {entry.name} at levels {entry.levels}")

    def extend(self, *decls: Declaration) -> GlobalEnv:
        """Persistent extension; the receiver is left untouched."""
        new = GlobalEnv(verify_instances=self.verify_instances)
        new._decls = dict(self._decls)
        new._instances = dict(self._instances)
        new._verified = set(self._verified)
        new.memo = dict(self.memo)
        for decl in decls:
            new._decls[decl.name] = decl
        return new

    def is_reducible(self, name: str) -> bool:
        decl = self._decls.get(name)
        return decl is not None and decl.reducible


@dataclass(frozen=True)
class Triple:
    """``left : A ; right : A' ; witness : relation of A applied to left and right``."""

    left: str
    right: str
    witness: Term
    left_levels: tuple[int, ...] = ()
    right_levels: tuple[int, ...] = ()

    @property
    def left_const(self) -> Const:
        return Const(self.left, self.left_levels)

    @property
    def right_const(self) -> Const:
        return Const(self.right, self.right_levels)


@dataclass(frozen=True)
class GlobalContext:
    """Ordered telescope of related constants (Δ). Append-only."""

    triples: tuple[Triple, ...] = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for position, triple in enumerate(self.triples):
            self._index[(triple.left, triple.left_levels)] = position

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def find(self, name: str, levels: tuple[int, ...] = ()) -> Triple | None:
        position = self._index.get((name, levels))
        return None if position is None else self.triples[position]

    def left_names(self) -> set[str]:
        return {t.left for t in self.triples}

    def prefix(self, n: int) -> GlobalContext:
        return GlobalContext(self.triples[:n])

    def append(self, *triples: Triple) -> GlobalContext:
        return GlobalContext(self.triples + triples)

    def without(self, name: str) -> GlobalContext:
        return GlobalContext(tuple(t for t in self.triples if t.left != name))
