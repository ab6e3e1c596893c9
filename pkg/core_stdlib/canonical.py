"""
Canonical equality: a reflexivity-preserving endo-map on equality proofs.

For a carrier with decidable equality the map discards its input proof and
returns the one the decision procedure computes, so it reduces to ``eq_refl``
on closed values even when the input proof is built from axioms.
"""
from __future__ import annotations

from dataclasses import dataclass

from core_eval.nbe import normalize
from core_kernel.builder import app, c
from core_kernel.env import GlobalEnv
from core_kernel.terms import Const, Term, alpha_eq

from .prelude.decidable import CARRIERS, can_eq_type


@dataclass(frozen=True)
class DecEqInstance:
    carrier: Term
    decide: Term

    @classmethod
    def for_carrier(cls, name: str) -> DecEqInstance:
        if name not in CARRIERS:
            raise KeyError(f"no decision procedure for {name}")
        return cls(c(name), c(f'dec_{name}'))


@dataclass(frozen=True)
class CanonicalEq:
    carrier: Term
    can_eq: Term

    @property
    def type(self) -> Term:
        return can_eq_type(self.carrier)

    def apply(self, x: Term, y: Term, proof: Term) -> Term:
        return app(self.can_eq, x, y, proof)

    def refl_law(self, env: GlobalEnv, x: Term, proof: Term, budget: int | None = None) -> bool:
        """``can_eq x x proof`` normalizes to ``eq_refl x``."""
        result = normalize(env, self.apply(x, x, proof), budget)
        return not result.budget_hit and alpha_eq(
            result.normal_form, app(c('eq_refl', 0), self.carrier, x))


def build_canonical_eq(dec: DecEqInstance) -> CanonicalEq:
    return CanonicalEq(dec.carrier, app(c('can_eq_dec'), dec.carrier, dec.decide))


def canonical_for(carrier: Term) -> CanonicalEq | None:
    """The prelude's named canonical equality for a base carrier, if any."""
    if isinstance(carrier, Const) and not carrier.levels and carrier.name in CARRIERS:
        return CanonicalEq(carrier, c(f'can_eq_{carrier.name}'))
    return None
