"""
Abstraction check: a closed term, its prime and its univalent translation must
all typecheck, the last one at the relation of the term's type.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

from core_kernel.env import GlobalContext, GlobalEnv
from core_kernel.errors import BudgetExceeded, UptransError
from core_kernel.terms import Term, apply
from core_kernel.typechecker import CheckResult, try_check

from .translator import Translator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbstractionReport:
    name: str
    left_check: CheckResult
    right_check: CheckResult
    relation_check: CheckResult
    derived_prime: Term | None = None
    derived_witness: Term | None = None

    @property
    def ok(self) -> bool:
        return bool(self.left_check and self.right_check and self.relation_check)

    @property
    def error(self) -> UptransError | None:
        for result in (self.left_check, self.right_check, self.relation_check):
            if not result:
                return result.error
        return None

    def __bool__(self) -> bool:
        return self.ok


def _guarded(build):
    try:
        return build(), None
    except UptransError as exc:
        return None, CheckResult(False, exc)
    except RecursionError:
        return None, CheckResult(False, BudgetExceeded(0, None))


def abstraction_check(env: GlobalEnv, delta: GlobalContext, name: str, t: Term, ty: Term, *,
                      budget: int | None = None) -> AbstractionReport:
    """Never raises: translation failures are reported as failed checks."""
    translator = Translator(env, delta, budget=budget)
    left = try_check(env, (), t, ty, budget)

    primes, failed = _guarded(lambda: (translator.prime(t), translator.prime(ty)))
    if failed is not None:
        logger.warning(f"❌ {name}: prime translation failed: {failed.message}")
        return AbstractionReport(name, left, failed, failed)
    t_, ty_ = primes
    right = try_check(env, (), t_, ty_, budget)

    related, failed = _guarded(lambda: (translator.translate(t), apply(translator.relation(ty), t, t_)))
    if failed is not None:
        logger.warning(f"❌ {name}: relational translation failed: {failed.message}")
        return AbstractionReport(name, left, right, failed, derived_prime=t_)
    witness, expected = related
    relation = try_check(env, (), witness, expected, budget)

    report = AbstractionReport(name, left, right, relation, t_, witness)
    if report.ok:
        logger.debug(f"abstraction check passed for {name}")
    else:
        logger.warning(f"❌ {name}: abstraction check failed: {report.error}")
    return report
