"""Lark front end for declaration files."""
from __future__ import annotations

from functools import cache
from pathlib import Path

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from core_kernel.errors import ParseError

from . import syntax as s

GRAMMAR = Path(__file__).with_name('grammar.lark')


@v_args(inline=True)
class ToSyntax(Transformer):
    def start(self, *decls):
        return list(decls)

    def def_(self, name, type_, body):
        return s.Def(str(name), type_, body)

    def axiom(self, name, type_):
        return s.Axiom(str(name), type_)

    def trusted(self, name, type_):
        return s.Trusted(str(name), type_)

    def relate_type(self, left, right, equiv, rel, coh):
        return s.RelateType(str(left), str(right), equiv, rel, coh)

    def relate_term(self, left, right, proof):
        return s.RelateTerm(left, right, proof)

    def relate_assumed(self, left, right, proof):
        return s.RelateTerm(left, right, proof, assumed=True)

    def transport(self, name, source, mode=s.BLACKBOX):
        return s.Transport(str(name), str(source), mode)

    def whitebox(self):
        return s.WHITEBOX

    def blackbox(self):
        return s.BLACKBOX

    def goal(self, name, type_):
        return s.Goal(str(name), type_)

    def fun(self, name, domain, body):
        return s.Fun(str(name), domain, body)

    def forall(self, name, domain, body):
        return s.Forall(str(name), domain, body)

    def arrow(self, domain, codomain):
        return s.Arrow(domain, codomain)

    def apply(self, fn, arg):
        return s.Apply(fn, arg)

    def universe(self, level=None):
        return s.Universe(0 if level is None else int(level))

    def num(self, token):
        return s.Num(int(token), token.line, token.column)

    def annot(self, term, type_):
        return s.Annot(term, type_)

    def ref(self, name, *levels):
        return s.Ref(str(name), tuple(int(lv) for lv in levels) or None, name.line, name.column)


@cache
def _parser() -> Lark:
    return Lark(GRAMMAR.read_text(encoding='utf-8'), parser='lalr')


def parse_module(text: str) -> list[s.Decl]:
    """Raises ``ParseError`` with the position of the first offending token."""
    try:
        tree = _parser().parse(text)
    except UnexpectedEOF as exc:
        raise ParseError(f"unexpected end of input, expected one of {sorted(exc.expected)}") from None
    except UnexpectedToken as exc:
        raise ParseError(f"unexpected {exc.token!r}", exc.line, exc.column) from None
    except UnexpectedCharacters as exc:
        raise ParseError(f"unexpected character {text[exc.pos_in_stream]!r}", exc.line,
                         exc.column) from None
    except UnexpectedInput as exc:
        raise ParseError(str(exc), getattr(exc, 'line', None), getattr(exc, 'column', None)) from None
    return ToSyntax().transform(tree)


def parse_file(path: str | Path) -> list[s.Decl]:
    return parse_module(Path(path).read_text(encoding='utf-8'))
