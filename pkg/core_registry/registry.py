"""
The global context registry.

A ``Registry`` is an immutable snapshot of the environment, the telescope of
related constants and the hints installed so far. Registration returns a new
snapshot; readers keep using the one they were handed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from core_kernel.builder import app, arrows, c
from core_kernel.env import Declaration, GlobalContext, GlobalEnv, Origin, Triple
from core_kernel.errors import (
    DuplicateRelation, IllTyped, MissingPrefix, UnknownConstant, UnrelatedConstant,
    UnresolvedConstant, UptransError,
)
from core_kernel.terms import Const, Sort, Term, apply
from core_kernel.typechecker import infer_sort, try_check
from core_stdlib.canonical import CanonicalEq, canonical_for
from core_stdlib.prelude.logic import coh_ty, equiv, ur_equiv, ur_pack, ur_rel, urtype
from core_translate.trace import ResolutionTrace
from core_translate.translator import Translator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class URWitness:
    """A term of ``URType A B`` plus canonical-equality attachments."""

    left: Term
    right: Term
    level: int
    term: Term
    can_left: CanonicalEq | None = None
    can_right: CanonicalEq | None = None

    @property
    def rel(self) -> Term:
        return ur_rel(self.level, self.left, self.right, self.term)

    @property
    def equiv(self) -> Term:
        return ur_equiv(self.level, self.left, self.right, self.term)

    @property
    def coh(self) -> Term:
        return app(c('ur_coh', self.level), self.left, self.right, self.term)


@dataclass(frozen=True)
class Hint:
    head: str
    target: str
    witness: Term
    levels: tuple[int, ...] = ()


@dataclass(frozen=True)
class Resolution:
    source: Term
    target: Term
    witness: Term
    trace: ResolutionTrace
    level: int

    def __iter__(self):
        return iter((self.target, self.witness, self.trace))

    @property
    def ur(self) -> URWitness:
        return URWitness(self.source, self.target, self.level, self.witness,
                         canonical_for(self.source), canonical_for(self.target))


@dataclass(frozen=True)
class Registry:
    env: GlobalEnv
    delta: GlobalContext = field(default_factory=GlobalContext)
    hints: tuple[Hint, ...] = ()
    witnesses: tuple[URWitness, ...] = ()

    def translator(self, *, unfold: bool = False, budget: int | None = None) -> Translator:
        return Translator(self.env, self.delta, unfold=unfold, budget=budget)

    def hint_for(self, head: str) -> Hint | None:
        for hint in self.hints:
            if hint.head == head:
                return hint
        return None

    def witness_for(self, left: str) -> URWitness | None:
        for witness in self.witnesses:
            if isinstance(witness.left, Const) and witness.left.name == left:
                return witness
        return None

    def declare(self, *decls: Declaration) -> Registry:
        return Registry(self.env.extend(*decls), self.delta, self.hints, self.witnesses)

    def _reject_duplicate(self, name: str, levels: tuple[int, ...] = ()) -> None:
        triple = self.delta.find(name, levels)
        if triple is not None:
            logger.warning(f"⚠️ {name} is already related to {triple.right}")
            raise DuplicateRelation(name, triple.right)

    def _checked(self, component: str, term: Term, ty: Term) -> None:
        result = try_check(self.env, (), term, ty)
        if not result:
            logger.warning(f"❌ {component} rejected: {result.message}")
            raise IllTyped(component, result.error)

    def register_type_relation(self, left: str, right: str, equivalence: Term, rel: Term, coh: Term, *,
                               can_left: CanonicalEq | None = None,
                               can_right: CanonicalEq | None = None) -> Registry:
        """Relate two types; the symmetric entry is derived by inverting the equivalence."""
        self._reject_duplicate(left)
        self._reject_duplicate(right)
        A, B = c(left), c(right)
        try:
            i = infer_sort(self.env, (), A)
            if infer_sort(self.env, (), B) != i:
                raise IllTyped('right type', UptransError(f"{left} and {right} live in different universes"))
        except UnknownConstant as exc:
            raise IllTyped('type', exc) from exc
        self._checked('rel', rel, arrows(A, B, Sort(i)))
        self._checked('equiv', equivalence, equiv(i, A, B))
        self._checked('coh', coh, coh_ty(i, A, B, rel, equivalence))

        name, sym_name = f'univrel_{left}_{right}', f'univrel_{right}_{left}'
        env = self.env.extend(
            Declaration.mono(name, urtype(i, A, B), ur_pack(i, A, B, rel, equivalence, coh)),
            Declaration.mono(sym_name, urtype(i, B, A), app(c('ur_sym', i), A, B, c(name))),
        )
        delta = self.delta.append(Triple(left, right, c(name)), Triple(right, left, c(sym_name)))
        witnesses = self.witnesses + (
            URWitness(A, B, i, c(name), can_left or canonical_for(A), can_right or canonical_for(B)),
            URWitness(B, A, i, c(sym_name), can_right or canonical_for(B), can_left or canonical_for(A)),
        )
        logger.info(f"🔧 related types {left} ⋈ {right} (and back)")
        return Registry(env, delta, self.hints, witnesses)

    def relation_type(self, left: str, right: str, levels: tuple[int, ...] = (),
                      right_levels: tuple[int, ...] = ()) -> Term:
        """Type a proof relating ``left`` and ``right`` must have under this snapshot."""
        ty = self.env.lookup(left, levels).type
        try:
            relation = self.translator().relation(ty)
        except UnrelatedConstant as exc:
            raise MissingPrefix(f"the type of {left} mentions {exc.name}, which is not related yet",
                                term=ty) from exc
        return apply(relation, Const(left, levels), Const(right, right_levels))

    def register_term_relation(self, left: str, right: str, proof: Term, *, levels: tuple[int, ...] = (),
                               right_levels: tuple[int, ...] = ()) -> Registry:
        self._reject_duplicate(left, levels)
        try:
            expected = self.relation_type(left, right, levels, right_levels)
        except UnknownConstant as exc:
            raise IllTyped('constant', exc) from exc
        self._checked('proof', proof, expected)
        delta = self.delta.append(Triple(left, right, proof, levels, right_levels))
        hints = self.hints + (Hint(left, right, proof, levels),)
        logger.info(f"🔧 related terms {left} ≈ {right}")
        return Registry(self.env, delta, hints, self.witnesses)

    def assume_term_relation(self, left: str, right: str, name: str, *, levels: tuple[int, ...] = (),
                             right_levels: tuple[int, ...] = (),
                             relies_on: tuple[str, ...] = ()) -> Registry:
        """Relate two constants through a trusted ``name`` declared at the computed relation type.

        ``relies_on`` names the axioms the omitted proof would use.
        """
        if name in self.env:
            raise IllTyped('proof name', UptransError(f"{name} is already declared"))
        try:
            expected = self.relation_type(left, right, levels, right_levels)
        except UnknownConstant as exc:
            raise IllTyped('constant', exc) from exc
        for axiom_name in relies_on:
            if axiom_name not in self.env or self.env.declaration(axiom_name).origin != Origin.AXIOM:
                raise IllTyped('relies_on', UptransError(f"{axiom_name} is not an axiom"))
        registry = self.declare(Declaration.mono(name, expected, None, origin=Origin.TRUSTED,
                                                   relies_on=relies_on))
        return registry.register_term_relation(left, right, c(name), levels=levels,
                                               right_levels=right_levels)

    def resolve(self, ty: Term, *, unfold: bool = True, budget: int | None = None) -> Resolution:
        """Witness for a closed type, by structural recursion on its syntax."""
        translator = self.translator(unfold=unfold, budget=budget)
        try:
            target = translator.prime(ty)
            trace = translator.trace(ty)
        except UnrelatedConstant as exc:
            raise UnresolvedConstant(exc.name) from exc
        level = infer_sort(self.env, (), ty, budget)
        logger.debug(f"resolved witness via {trace.rule.value}")
        return Resolution(ty, target, trace.assemble(), trace, level)


def resolve_witness(registry: Registry, ty: Term) -> tuple[Term, Term, ResolutionTrace]:
    target, witness, trace = registry.resolve(ty)
    return target, witness, trace
