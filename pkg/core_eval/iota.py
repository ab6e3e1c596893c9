"""
Computation rules of the built-in eliminators.

One row per eliminator. Arguments of an eliminator application are numbered
from 0; ``major`` is the position of the scrutinee. A constructor rule names the
branch argument to select and how to build the branch's arguments from the
constructor's own (non-parameter) arguments:

* ``('arg', k)``: the k-th constructor argument,
* ``('rec', k)``: the eliminator re-applied (same leading arguments) to the
  k-th constructor argument.
"""
from __future__ import annotations

from dataclasses import dataclass, field

ARG = 'arg'
REC = 'rec'


@dataclass(frozen=True)
class CtorRule:
    branch: int
    items: tuple[tuple[str, int], ...] = ()
    params: int = 0


@dataclass(frozen=True)
class IotaRule:
    eliminator: str
    major: int
    ctors: dict[str, CtorRule] = field(default_factory=dict)


IOTA_RULES: dict[str, IotaRule] = {
    rule.eliminator: rule
    for rule in (
        IotaRule('nat_rect', 3, {
            'O': CtorRule(1),
            'S': CtorRule(2, ((ARG, 0), (REC, 0))),
        }),
        IotaRule('bool_rect', 3, {
            'true': CtorRule(1),
            'false': CtorRule(2),
        }),
        IotaRule('positive_rect', 4, {
            'xI': CtorRule(1, ((ARG, 0), (REC, 0))),
            'xO': CtorRule(2, ((ARG, 0), (REC, 0))),
            'xH': CtorRule(3),
        }),
        IotaRule('N_rect', 3, {
            'N0': CtorRule(1),
            'Npos': CtorRule(2, ((ARG, 0),)),
        }),
        IotaRule('list_rect', 4, {
            'nil': CtorRule(2, params=1),
            'cons': CtorRule(3, ((ARG, 0), (ARG, 1), (REC, 1)), params=1),
        }),
        IotaRule('sigT_rect', 4, {
            'existT': CtorRule(3, ((ARG, 0), (ARG, 1)), params=2),
        }),
        IotaRule('eq_rect', 5, {
            'eq_refl': CtorRule(3, params=2),
        }),
        IotaRule('sum_rect', 5, {
            'inl': CtorRule(3, ((ARG, 0),), params=2),
            'inr': CtorRule(4, ((ARG, 0),), params=2),
        }),
        IotaRule('Empty_rect', 1),
        IotaRule('unit_rect', 2, {
            'tt': CtorRule(1),
        }),
    )
}

CONSTRUCTORS: frozenset[str] = frozenset(
    ctor for rule in IOTA_RULES.values() for ctor in rule.ctors
)


def ctor_arity(ctor: str) -> int:
    """Number of arguments (parameters included) a saturated constructor takes."""
    for rule in IOTA_RULES.values():
        found = rule.ctors.get(ctor)
        if found is not None:
            fields = {k for kind, k in found.items}
            return found.params + (max(fields) + 1 if fields else 0)
    raise KeyError(ctor)
