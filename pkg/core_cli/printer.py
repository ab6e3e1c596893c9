"""
Printing declarations back to the surface syntax, and reading kernel terms
back into surface expressions for reports and exports.
"""
from __future__ import annotations

from core_kernel.terms import App, Const, Free, Lam, Pi, PrimInt16, Sort, Term, Var

from . import syntax as s

TERM, APP, ATOM = 0, 1, 2
KEYWORDS = frozenset({
    'def', 'axiom', 'trusted', 'relate', 'type', 'term', 'via', 'rel', 'coh', 'by', 'transport',
    'from', 'whitebox', 'blackbox', 'goal', 'compute', 'fun', 'forall', 'Type',
})


def _wrap(text: str, needed: bool) -> str:
    return f'({text})' if needed else text


def _ref(ref: s.Ref) -> str:
    if not ref.levels:
        return ref.name
    return f"{ref.name}@{{{','.join(map(str, ref.levels))}}}"


def print_expr(e: s.Expr, prec: int = TERM) -> str:
    match e:
        case s.Ref():
            return _ref(e)
        case s.Universe(level=0):
            return 'Type'
        case s.Universe(level=lv):
            return f'Type@{{{lv}}}'
        case s.Num(value=v):
            return str(v)
        case s.Annot(term=t, type=ty):
            return f'({print_expr(t)} : {print_expr(ty)})'
        case s.Apply(fn=f, arg=a):
            return _wrap(f'{print_expr(f, APP)} {print_expr(a, ATOM)}', prec == ATOM)
        case s.Fun(name=x, domain=d, body=b):
            return _wrap(f'fun {x} : {print_expr(d)} => {print_expr(b)}', prec > TERM)
        case s.Forall(name=x, domain=d, body=b):
            return _wrap(f'forall {x} : {print_expr(d)}, {print_expr(b)}', prec > TERM)
        case s.Arrow(domain=d, codomain=b):
            return _wrap(f'{print_expr(d, APP)} -> {print_expr(b)}', prec > TERM)
    raise TypeError(f"not an expression: {e!r}")


def print_decl(decl: s.Decl) -> str:
    match decl:
        case s.Def(name=n, type=ty, body=b):
            return f'def {n} : {print_expr(ty)} := {print_expr(b)}'
        case s.Axiom(name=n, type=ty):
            return f'axiom {n} : {print_expr(ty)}'
        case s.Trusted(name=n, type=ty):
            return f'trusted {n} : {print_expr(ty)}'
        case s.RelateType(left=a, right=b, equiv=e, rel=r, coh=h):
            return f'relate type {a} {b} via {print_expr(e)} rel {print_expr(r)} coh {print_expr(h)}'
        case s.RelateTerm(left=a, right=b, proof=p, assumed=True):
            return f'relate term {_ref(a)} {_ref(b)} by trusted {_ref(p)}'
        case s.RelateTerm(left=a, right=b, proof=p):
            return f'relate term {_ref(a)} {_ref(b)} by {print_expr(p)}'
        case s.Transport(name=n, source=src, mode=m):
            return f'transport {n} from {src} {m}'
        case s.Goal(name=n, type=ty):
            return f'goal {n} : {print_expr(ty)} by compute'
    raise TypeError(f"not a declaration: {decl!r}")


def print_module(decls: list[s.Decl]) -> str:
    return ''.join(f'{print_decl(d)}\n' for d in decls)


# kernel terms -> surface

def _fresh(name: str, scope: tuple[str, ...]) -> str:
    base = name if name and (name[0].isalpha() or name[0] == '_') else 'x'
    if base in KEYWORDS:
        base = f'{base}_'
    candidate, n = base, 0
    while candidate in scope:
        n += 1
        candidate = f'{base}{n}'
    return candidate


def _mentions_innermost(t: Term, depth: int = 0) -> bool:
    if t.fv <= depth:
        return False
    match t:
        case Var(index=k):
            return k == depth
        case App(fn=f, arg=a):
            return _mentions_innermost(f, depth) or _mentions_innermost(a, depth)
        case Lam(domain=d, body=b) | Pi(domain=d, codomain=b):
            return _mentions_innermost(d, depth) or _mentions_innermost(b, depth + 1)
    return False


def delab(t: Term, scope: tuple[str, ...] = ()) -> s.Expr:
    """``scope`` lists binder names, innermost last."""
    match t:
        case Sort(level=lv):
            return s.Universe(lv)
        case Var(index=k):
            return s.Ref(scope[-1 - k]) if k < len(scope) else s.Ref(f'#{k}')
        case Const(name=n, levels=ls):
            return s.Ref(n, ls or None)
        case PrimInt16(value=v):
            return s.Annot(s.Num(v), s.Ref('int16'))
        case App(fn=f, arg=a):
            return s.Apply(delab(f, scope), delab(a, scope))
        case Lam(domain=d, body=b, name=x):
            x = _fresh(x, scope)
            return s.Fun(x, delab(d, scope), delab(b, scope + (x,)))
        case Pi(domain=d, codomain=b, name=x):
            if not _mentions_innermost(b):
                return s.Arrow(delab(d, scope), delab(b, scope + ('_',)))
            x = _fresh(x, scope)
            return s.Forall(x, delab(d, scope), delab(b, scope + (x,)))
        case Free(name=n):
            return s.Ref(n)
    raise TypeError(f"not a term: {t!r}")


def show(t: Term, scope: tuple[str, ...] = ()) -> str:
    return print_expr(delab(t, scope))
