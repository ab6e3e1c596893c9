"""
Surface expressions to kernel terms.

Names resolve to the innermost binder first, then to the global environment.
A numeric literal takes its scope from an annotation or from the domain of
the function it is applied to; anything else is an ``UnknownScope`` error.
Universe-polymorphic constants written without levels are taken at level 0.
"""
from __future__ import annotations

from core_eval.reduction import whnf
from core_kernel.env import GlobalEnv, LocalCtx
from core_kernel.errors import UnknownScope, UnresolvedName
from core_kernel.terms import App, Const, Lam, Pi, Sort, Term, Var
from core_kernel.typechecker import infer
from core_stdlib.literals import mk_N, mk_int16, mk_nat, mk_positive

from . import syntax as s

LITERALS = {'nat': mk_nat, 'N': mk_N, 'positive': mk_positive, 'int16': mk_int16}


class Elaborator:
    def __init__(self, env: GlobalEnv, budget: int | None = None):
        self.env = env
        self.budget = budget

    def const(self, ref: s.Ref) -> Const:
        if ref.name not in self.env:
            raise UnresolvedName(ref.name, ref.line, ref.column)
        levels = ref.levels
        if levels is None:
            levels = (0,) * self.env.declaration(ref.name).univ_params
        return Const(ref.name, levels)

    def literal(self, num: s.Num, expected: Term | None, ctx: LocalCtx) -> Term:
        scope = expected
        if scope is not None and not (isinstance(scope, Const) and scope.name in LITERALS):
            scope = whnf(self.env, scope, self.budget)
        if isinstance(scope, Const) and scope.name in LITERALS:
            return LITERALS[scope.name](num.value)
        where = f" at {num.line}:{num.column}" if num.line is not None else ''
        raise UnknownScope(f"literal {num.value}{where} needs a nat, N, positive or int16 annotation")

    def term(self, e: s.Expr, names: tuple[str, ...] = (), ctx: LocalCtx = (),
             expected: Term | None = None) -> Term:
        """``names`` and ``ctx`` run in parallel, innermost last."""
        match e:
            case s.Ref(name=n, levels=None) if n in names:
                return Var(len(names) - 1 - _last_index(names, n))
            case s.Ref():
                return self.const(e)
            case s.Universe(level=lv):
                return Sort(lv)
            case s.Num():
                return self.literal(e, expected, ctx)
            case s.Annot(term=t, type=ty):
                return self.term(t, names, ctx, self.term(ty, names, ctx))
            case s.Apply():
                return self._apply(e, names, ctx)
            case s.Fun(name=x, domain=d, body=b):
                domain = self.term(d, names, ctx)
                body_expected = None
                if isinstance(expected, Pi):
                    body_expected = expected.codomain
                return Lam(domain, self.term(b, names + (x,), ctx + (domain,), body_expected), x)
            case s.Forall(name=x, domain=d, body=b):
                domain = self.term(d, names, ctx)
                return Pi(domain, self.term(b, names + (x,), ctx + (domain,)), x)
            case s.Arrow(domain=d, codomain=b):
                domain = self.term(d, names, ctx)
                return Pi(domain, self.term(b, names + ('_',), ctx + (domain,)), '_')
        raise TypeError(f"not an expression: {e!r}")

    def _apply(self, e: s.Apply, names, ctx) -> Term:
        args = []
        head = e
        while isinstance(head, s.Apply):
            args.append(head.arg)
            head = head.fn
        args.reverse()
        t = self.term(head, names, ctx)
        for arg in args:
            fn_type = whnf(self.env, infer(self.env, ctx, t, self.budget), self.budget)
            domain = fn_type.domain if isinstance(fn_type, Pi) else None
            t = App(t, self.term(arg, names, ctx, domain))
        return t


def _last_index(names: tuple[str, ...], name: str) -> int:
    return len(names) - 1 - names[::-1].index(name)


def elaborate(env: GlobalEnv, e: s.Expr, expected: Term | None = None) -> Term:
    return Elaborator(env).term(e, expected=expected)

