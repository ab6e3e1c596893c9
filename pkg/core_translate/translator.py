"""
Parametricity, prime and univalent parametricity translations.

A source context ``x_0 : A_0, ..., x_n : A_n`` is translated into three binders
per variable: the left copy, the right (primed) copy and the relation witness.
With the relation innermost, source ``Var(k)`` becomes ``Var(3k + 2)`` (left),
``Var(3k + 1)`` (right) and ``Var(3k)`` (witness) in the translated context.

``prime`` works in the source context; ``left``, ``prime_star``, ``translate``
and ``relation`` produce terms in the translated one.
"""
from __future__ import annotations

import logging

from core_kernel.builder import app, arrows, c, lams
from core_kernel.env import GlobalContext, GlobalEnv, LocalCtx, Origin
from core_kernel.errors import UnrelatedConstant
from core_kernel.terms import (
    App, Const, Lam, Pi, PrimInt16, Sort, Term, Var, apply, constants, remap, shift, spine,
)
from core_kernel.typechecker import infer_sort
from core_stdlib.literals import literal_kind
from core_stdlib.prelude.common import eq, refl
from core_stdlib.prelude.logic import ap, e_fun, ur_equiv, ur_refl_rel, ur_rel
from core_stdlib.prelude.univalent import BASE_TYPES

from .trace import ResolutionTrace, Rule

logger = logging.getLogger(__name__)

PARAM = 'param'
UPARAM = 'uparam'

NULLARY = {'O': 'nat', 'true': 'bool', 'false': 'bool', 'xH': 'positive', 'N0': 'N', 'tt': 'unit'}
UNARY = {'S': ('nat', 'nat'), 'xI': ('positive', 'positive'), 'xO': ('positive', 'positive'),
         'Npos': ('positive', 'N')}
# type formers with a computing univalent witness, by accepted universe levels
FORMERS = {
    'list': ('FP_list', Rule.FP_LIST, lambda levels: levels == (0,)),
    'sigT': ('FP_Sigma', Rule.FP_SIGMA, lambda levels: True),
    'eq': ('FP_eq', Rule.FP_EQ, lambda levels: True),
}
SUFFIX = {UPARAM: '_ur', PARAM: '_pr'}


def reach(env: GlobalEnv, name: str, levels: tuple[int, ...]) -> frozenset[str]:
    """Names of every constant ``name`` depends on, through types and bodies."""
    key = ('reach', name, levels)
    if key in env.memo:
        return env.memo[key]
    env.memo[key] = frozenset()
    entry = env.lookup(name, levels)
    found: set[str] = set()
    for part in (entry.type, entry.body):
        if part is None:
            continue
        for sub, sub_levels in constants(part):
            if (sub, sub_levels) != (name, levels):
                found.add(sub)
                found |= reach(env, sub, sub_levels)
    env.memo[key] = frozenset(found)
    return env.memo[key]


def _left_index(k: int) -> int:
    return 3 * k + 2


def _right_index(k: int) -> int:
    return 3 * k + 1


class Translator:
    def __init__(self, env: GlobalEnv, delta: GlobalContext | None = None, *, mode: str = UPARAM,
                 unfold: bool = False, ctx: LocalCtx = (), budget: int | None = None):
        if mode not in SUFFIX:
            raise ValueError(f"unknown translation mode {mode!r}")
        self.env = env
        self.delta = delta if delta is not None else GlobalContext()
        self.mode = mode
        self.unfold = unfold
        self.ctx = ctx
        self.budget = budget
        self._related_names = self.delta.left_names()

    def under(self, domain: Term) -> Translator:
        return Translator(self.env, self.delta, mode=self.mode, unfold=self.unfold,
                          ctx=self.ctx + (domain,), budget=self.budget)

    def _root(self) -> Translator:
        if not self.ctx:
            return self
        return Translator(self.env, self.delta, mode=self.mode, unfold=self.unfold,
                          budget=self.budget)

    # projections into the translated context

    def left(self, t: Term) -> Term:
        return remap(t, _left_index)

    def prime_star(self, t: Term) -> Term:
        return remap(self.prime(t), _right_index)

    def binder_types(self, domain: Term) -> tuple[Term, Term, Term]:
        """Types of the three binders ``x : A, x' : A', x_R : [A] x x'``."""
        return (self.left(domain), shift(self.prime_star(domain), 1),
                App(App(shift(self.relation(domain), 2), Var(1)), Var(0)))

    def _level(self, ty: Term) -> int:
        return infer_sort(self.env, self.ctx, ty, self.budget)

    # constants

    def clean(self, name: str, levels: tuple[int, ...] = ()) -> bool:
        """Mentions no related constant, directly or through definitions."""
        if name in self._related_names:
            return False
        return not (reach(self.env, name, levels) & self._related_names)

    def self_related(self, name: str, levels: tuple[int, ...] = ()) -> bool:
        if name in BASE_TYPES or name in NULLARY or name in UNARY:
            return True
        former = FORMERS.get(name)
        if self.mode == UPARAM and former is not None and former[2](levels):
            return True
        if f'{name}{SUFFIX[self.mode]}' in self.env:
            return True
        entry = self.env.lookup(name, levels)
        return entry.origin == Origin.DEFINED and entry.reducible and entry.body is not None

    def _self_witness(self, head: Const) -> Term:
        name, levels = head.name, head.levels
        if name in BASE_TYPES:
            base = c(f'FP_{name}')
            return base if self.mode == UPARAM else ur_rel(0, head, head, base)
        if name in NULLARY:
            return refl(0, c(NULLARY[name]), head)
        if name in UNARY:
            B, C = (c(n) for n in UNARY[name])
            return lams([('a', B), ('a_', B), ('r', lambda a, a_: eq(0, B, a, a_))],
                        lambda a, a_, r: ap(0, 0, B, C, head, a, a_, r))
        former = FORMERS.get(name)
        if self.mode == UPARAM and former is not None and former[2](levels):
            params = self.env.declaration(former[0]).univ_params
            return Const(former[0], levels if params else ())
        own = f'{name}{SUFFIX[self.mode]}'
        if own in self.env:
            return Const(own, levels)
        key = ('self', self.mode, name, levels)
        if key not in self.env.memo:
            body = self.env.lookup(name, levels).body
            self.env.memo[key] = Translator(self.env, mode=self.mode, budget=self.budget).translate(body)
            logger.debug(f"self-translated {name}")
        return self.env.memo[key]

    def _unfoldable(self, head: Const):
        if not self.unfold:
            return None
        entry = self.env.lookup(head.name, head.levels)
        if entry.reducible and entry.body is not None:
            return entry.body
        return None

    def _const(self, head: Const) -> ResolutionTrace:
        triple = self.delta.find(head.name, head.levels)
        if triple is not None:
            return ResolutionTrace(Rule.DELTA, head, triple.witness)
        if self.clean(head.name, head.levels) and self.self_related(head.name, head.levels):
            return ResolutionTrace(Rule.SELF, head, self._self_witness(head))
        body = self._unfoldable(head)
        if body is not None:
            return ResolutionTrace(Rule.UNFOLD, head, None, (self._root().trace(body),))
        raise UnrelatedConstant(head.name)

    def _prime_const(self, head: Const) -> Term:
        triple = self.delta.find(head.name, head.levels)
        if triple is not None:
            return triple.right_const
        if self.clean(head.name, head.levels) and self.self_related(head.name, head.levels):
            return head
        body = self._unfoldable(head)
        if body is not None:
            return self.prime(body)
        raise UnrelatedConstant(head.name)

    # literals

    def _literal_partners(self, t: Term) -> dict[str, Term] | None:
        names = {name for name, _ in constants(t)}
        partners = {}
        for name in names:
            triple = self.delta.find(name)
            if triple is None:
                return None
            partners[name] = triple.right_const
        return partners or None

    def _prime_literal(self, t: Term, kind: str) -> Term:
        partners = self._literal_partners(t)
        if partners is not None:
            return _rename(t, partners)
        triple = self.delta.find(kind)
        if triple is None:
            return t
        B = c(kind)
        return app(e_fun(0, B, triple.right_const, ur_equiv(0, B, triple.right_const, triple.witness)), t)

    def _literal(self, t: Term, kind: str) -> ResolutionTrace:
        B = c(kind)
        if self.mode == PARAM:
            if isinstance(t, PrimInt16):
                return ResolutionTrace(Rule.LITERAL, t, refl(0, B, t))
            return self._apply(t)
        triple = self.delta.find(kind)
        if triple is None:
            witness = ur_refl_rel(0, B, B, c(f'FP_{kind}'), t)
        else:
            witness = ur_refl_rel(0, B, triple.right_const, triple.witness, t)
        return ResolutionTrace(Rule.LITERAL, t, witness)

    # the translations

    def prime(self, t: Term) -> Term:
        """Structural copy of ``t`` with every related constant replaced by its partner."""
        match t:
            case Var() | Sort():
                return t
            case PrimInt16():
                return self._prime_literal(t, 'int16')
            case Const():
                return self._prime_const(t)
            case Lam(domain=d, body=b, name=n):
                return Lam(self.prime(d), self.prime(b), n)
            case Pi(domain=d, codomain=b, name=n):
                return Pi(self.prime(d), self.prime(b), n)
            case App(fn=f, arg=a):
                kind = literal_kind(t)
                if kind is not None:
                    return self._prime_literal(t, kind)
                return App(self.prime(f), self.prime(a))
        raise TypeError(f"not a term: {t!r}")

    def translate(self, t: Term) -> Term:
        return self.trace(t).assemble()

    def trace(self, t: Term) -> ResolutionTrace:
        match t:
            case Var(index=k):
                return ResolutionTrace(Rule.VAR, t, Var(3 * k))
            case Sort(level=i):
                if self.mode == PARAM:
                    relation = lams([('A', Sort(i)), ('A_', Sort(i))], lambda A, A_: arrows(A, A_, Sort(i)))
                    return ResolutionTrace(Rule.RELATION, t, relation)
                return ResolutionTrace(Rule.FP_TYPE, t, Const('FP_Type', (i,)))
            case PrimInt16():
                return self._literal(t, 'int16')
            case Const():
                return self._const(t)
            case Lam(domain=d, body=b, name=n):
                return self._lambda(t, d, b, n)
            case Pi():
                return self._product(t)
            case App():
                kind = literal_kind(t)
                if kind is not None:
                    return self._literal(t, kind)
                return self._apply(t)
        raise TypeError(f"not a term: {t!r}")

    def _lambda(self, goal: Term, domain: Term, body: Term, name: str) -> ResolutionTrace:
        parts = self.binder_types(domain) + (self.under(domain).trace(body),)
        return ResolutionTrace(Rule.LAMBDA, goal, None, parts, names=(name, f"{name}'", f'{name}_R'))

    def _apply(self, t: Term) -> ResolutionTrace:
        head, args = spine(t)
        head_trace = self.trace(head)
        parts = []
        for a in args:
            parts += [self.left(a), self.prime_star(a), self.trace(a)]
        rule = Rule.APPLY
        if head_trace.rule == Rule.SELF and isinstance(head, Const) and head.name in FORMERS \
                and self.mode == UPARAM:
            rule = FORMERS[head.name][1]
        return ResolutionTrace(rule, t, head_trace, tuple(parts))

    def _product(self, t: Pi) -> ResolutionTrace:
        A, B = t.domain, t.codomain
        if self.mode == PARAM:
            return ResolutionTrace(Rule.RELATION, t, self._pi_relation(A, B, t.name))
        inner = self.under(A)
        i, j = self._level(A), inner._level(B)
        family_left = Lam(self.left(A), remap(B, lambda k: 0 if k == 0 else 3 * k), t.name)
        family_right = Lam(self.prime_star(A), remap(self.prime(B), lambda k: 0 if k == 0 else 3 * k - 1),
                           f"{t.name}'")
        family_rel = self._lambda(Lam(A, B, t.name), A, B, t.name)
        parts = (self.left(A), self.prime_star(A), self.trace(A), family_left, family_right, family_rel)
        return ResolutionTrace(Rule.FP_FORALL, t, Const('FP_forall', (i, j)), parts)

    def _pi_relation(self, A: Term, B: Term, name: str) -> Term:
        """``λ f f'. Π x x' (x_R : [A] x x'). [B] (f x) (f' x')``."""
        inner = self.under(A)
        product = Pi(A, B, name)
        rel_B = shift(inner.relation(B), 2, 3)
        body = apply(rel_B, App(Var(4), Var(2)), App(Var(3), Var(1)))
        x_rel = App(App(shift(self.relation(A), 4), Var(1)), Var(0))
        pis = Pi(shift(self.left(A), 2),
                 Pi(shift(self.prime_star(A), 3), Pi(x_rel, body, f'{name}_R'), f"{name}'"), name)
        return Lam(self.left(product), Lam(shift(self.prime_star(product), 1), pis, "f'"), 'f')

    def relation(self, ty: Term) -> Term:
        """``[A]``: a term of type ``A -> A' -> Type`` in the translated context."""
        if self.mode == PARAM:
            return self.translate(ty)
        match ty:
            case Sort(level=i):
                return Const('URType', (i,))
            case Pi(domain=A, codomain=B, name=n):
                return self._pi_relation(A, B, n)
        return ur_rel(self._level(ty), self.left(ty), self.prime_star(ty), self.translate(ty))


def _rename(t: Term, partners: dict[str, Term]) -> Term:
    match t:
        case Const(name=n):
            return partners.get(n, t)
        case App(fn=f, arg=a):
            return App(_rename(f, partners), _rename(a, partners))
    return t
