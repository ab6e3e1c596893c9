"""
Resolution traces.

Every translated term is built through a trace node. A node records which
rule produced it, the left term it relates, the head it contributes and its
parts; ``assemble`` rebuilds the translated term from the node alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from core_kernel.terms import Lam, Term, apply


class Rule(str, Enum):
    FP_TYPE = 'FP_Type'
    FP_FORALL = 'FP_forall'
    FP_SIGMA = 'FP_Sigma'
    FP_LIST = 'FP_list'
    FP_EQ = 'FP_eq'
    SELF = 'self'
    DELTA = 'delta'
    UNFOLD = 'unfold'
    LITERAL = 'literal'
    VAR = 'var'
    LAMBDA = 'lambda'
    APPLY = 'apply'
    RELATION = 'relation'


# rules that resolve a type former (the rest relate terms)
TYPE_RULES = frozenset({Rule.FP_TYPE, Rule.FP_FORALL, Rule.FP_SIGMA, Rule.FP_LIST, Rule.FP_EQ})


@dataclass(frozen=True)
class ResolutionTrace:
    rule: Rule
    goal: Term
    head: Term | ResolutionTrace | None = None
    parts: tuple = ()
    # binder names of a LAMBDA node (left, right, relation)
    names: tuple[str, ...] = field(default=(), compare=False)

    def assemble(self) -> Term:
        return assemble(self)

    def children(self) -> list[ResolutionTrace]:
        nodes = (self.head,) + self.parts
        return [p for p in nodes if isinstance(p, ResolutionTrace)]

    def rules(self) -> list[Rule]:
        """Rules in pre-order."""
        found, stack = [], [self]
        while stack:
            node = stack.pop()
            found.append(node.rule)
            stack.extend(reversed(node.children()))
        return found

    def summary(self) -> dict:
        return {
            'rule': self.rule.value,
            'children': [child.summary() for child in self.children()
                         if child.rule not in (Rule.VAR, Rule.LITERAL)],
        }


def _part(p) -> Term:
    return assemble(p) if isinstance(p, ResolutionTrace) else p


def assemble(trace: ResolutionTrace) -> Term:
    match trace.rule:
        case Rule.UNFOLD:
            return _part(trace.parts[0])
        case Rule.LAMBDA:
            left, right, rel, body = trace.parts
            x, x_, xr = trace.names or ('x', "x'", 'x_R')
            return Lam(left, Lam(right, Lam(rel, _part(body), xr), x_), x)
        case _:
            return apply(_part(trace.head), *(_part(p) for p in trace.parts))


def replay_trace(trace: ResolutionTrace) -> Term:
    """Rebuild the witness a resolution produced."""
    return assemble(trace)
