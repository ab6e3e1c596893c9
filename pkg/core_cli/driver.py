"""
Command driver: runs declaration files through the kernel, the translations
and the registry, one report per item.
"""
from __future__ import annotations

import logging
import time
from pathlib import Path
from typing import Callable, Iterable

from core_eval.effectiveness import effectiveness
from core_eval.reduction import default_budget
from core_kernel.env import Declaration, Origin
from core_kernel.errors import BudgetExceeded, SurfaceError, UptransError
from core_kernel.terms import Term
from core_kernel.typechecker import check
from core_registry.registry import Registry
from core_registry.transport import (
    prove_by_computation, replace_goal, transport_black_box, transport_white_box,
)
from core_stdlib.loader import load_prelude
from core_translate.abstraction import abstraction_check

from . import syntax as s
from .elaborator import Elaborator
from .parser import parse_file
from .printer import show
from .reports import FAIL, INCONCLUSIVE, OK, Report

logger = logging.getLogger(__name__)

CHECK, TRANSLATE, TRANSPORT, REPLAY, BENCH = 'check', 'translate', 'transport', 'replay', 'bench'
COMMANDS = (CHECK, TRANSLATE, TRANSPORT, REPLAY, BENCH)

# which declaration kinds report on success under each command
REPORTED = {
    CHECK: (s.Def,),
    TRANSLATE: (s.Def,),
    TRANSPORT: (s.Transport,),
    BENCH: (s.Goal,),
    REPLAY: (s.Def, s.Axiom, s.Trusted, s.RelateType, s.RelateTerm, s.Transport, s.Goal),
}


class Session:
    """Declarations processed in order against one evolving registry."""

    def __init__(self, registry: Registry | None = None, *, budget: int | None = None):
        self.registry = registry or Registry(load_prelude())
        self.budget = budget or default_budget()

    @property
    def env(self):
        return self.registry.env

    def elaborate(self, e: s.Expr, expected: Term | None = None) -> Term:
        return Elaborator(self.env, self.budget).term(e, expected=expected)

    def _fresh(self, name: str) -> None:
        if name in self.env:
            raise SurfaceError(f"{name} is already declared")

    def _declare(self, decl: Declaration) -> None:
        self.registry = self.registry.declare(decl)

    # ---- items ----------------------------------------------------------

    def define(self, decl: s.Def, command: str) -> list[Report]:
        self._fresh(decl.name)
        ty = self.elaborate(decl.type)
        body = self.elaborate(decl.body, ty)
        check(self.env, (), body, ty, self.budget)
        self._declare(Declaration.mono(decl.name, ty, body))
        if command not in (CHECK, TRANSLATE, REPLAY):
            return []
        report = abstraction_check(self.env, self.registry.delta, decl.name, body, ty, budget=self.budget)
        derived = show(report.derived_prime) if command == TRANSLATE and report.derived_prime else ''
        if report.ok:
            return [Report(decl.name, OK, 'abstraction', derived=derived)]
        status = INCONCLUSIVE if isinstance(report.error, BudgetExceeded) else FAIL
        return [Report(decl.name, status, 'abstraction', derived=derived, message=str(report.error))]

    def assume(self, decl: s.Axiom | s.Trusted) -> list[Report]:
        self._fresh(decl.name)
        ty = self.elaborate(decl.type)
        origin = Origin.AXIOM if isinstance(decl, s.Axiom) else Origin.TRUSTED
        self._declare(Declaration.mono(decl.name, ty, None, origin=origin))
        return [Report(decl.name, OK, origin.value)]

    def relate_type(self, decl: s.RelateType) -> list[Report]:
        self.registry = self.registry.register_type_relation(
            decl.left, decl.right, self.elaborate(decl.equiv), self.elaborate(decl.rel),
            self.elaborate(decl.coh))
        return [Report(s.decl_name(decl), OK, 'relate')]

    def relate_term(self, decl: s.RelateTerm) -> list[Report]:
        elaborator = Elaborator(self.env, self.budget)
        left, right = elaborator.const(decl.left), elaborator.const(decl.right)
        if decl.assumed:
            self.registry = self.registry.assume_term_relation(
                left.name, right.name, decl.proof.name, levels=left.levels, right_levels=right.levels)
        else:
            expected = self.registry.relation_type(left.name, right.name, left.levels, right.levels)
            self.registry = self.registry.register_term_relation(
                left.name, right.name, self.elaborate(decl.proof, expected),
                levels=left.levels, right_levels=right.levels)
        return [Report(s.decl_name(decl), OK, 'relate')]

    def transport(self, decl: s.Transport) -> list[Report]:
        self._fresh(decl.name)
        source = Elaborator(self.env, self.budget).const(s.Ref(decl.source))
        ty = self.env.lookup(source.name, source.levels).type
        if decl.mode == s.WHITEBOX:
            moved = transport_white_box(self.registry, source, ty, budget=self.budget)
        else:
            moved = transport_black_box(self.registry, source, ty, budget=self.budget)
        self._declare(Declaration.mono(decl.name, moved.type, moved.term))
        report = effectiveness(self.env, moved.term, self.budget)
        status = INCONCLUSIVE if report.inconclusive else OK
        return [Report(decl.name, status, decl.mode, report.steps, report.stuck_axioms,
                       derived=f'{decl.name} : {show(moved.type)}')]

    def goal(self, decl: s.Goal, command: str) -> list[Report]:
        self._fresh(decl.name)
        statement = self.elaborate(decl.type)
        reports = []
        if command == BENCH:
            direct = prove_by_computation(self.env, statement, self.budget)
            status = INCONCLUSIVE if direct.budget_hit else OK if direct.proof is not None else FAIL
            reports.append(Report(f'{decl.name} [direct]', status, 'direct', direct.steps))

        replaced = replace_goal(self.registry, statement, budget=self.budget)
        computed = prove_by_computation(self.env, replaced.target, self.budget)
        mode = 'replaced' if command == BENCH else 'goal'
        name = f'{decl.name} [replaced]' if command == BENCH else decl.name
        derived = show(replaced.target)
        if computed.budget_hit:
            return reports + [Report(name, INCONCLUSIVE, mode, computed.steps, derived=derived,
                                     message='step budget exhausted')]
        if computed.proof is None:
            return reports + [Report(name, FAIL, mode, computed.steps, derived=derived,
                                     message='the replaced goal does not compute to reflexivity')]
        proof = replaced.proof_of_source(computed.proof)
        check(self.env, (), proof, statement, self.budget)
        self._declare(Declaration.mono(decl.name, statement, proof))
        return reports + [Report(name, OK, mode, computed.steps, derived=derived)]

    # ---- dispatch -------------------------------------------------------

    def process(self, decl: s.Decl, command: str) -> list[Report]:
        match decl:
            case s.Def():
                return self.define(decl, command)
            case s.Axiom() | s.Trusted():
                return self.assume(decl)
            case s.RelateType():
                return self.relate_type(decl)
            case s.RelateTerm():
                return self.relate_term(decl)
            case s.Transport():
                return self.transport(decl)
            case s.Goal():
                return self.goal(decl, command)
        raise TypeError(f"not a declaration: {decl!r}")

    def run_item(self, decl: s.Decl, command: str) -> list[Report]:
        name = s.decl_name(decl)
        started = time.monotonic()
        try:
            reports = self.process(decl, command)
        except BudgetExceeded as exc:
            logger.warning(f"⚠️ {name}: {exc}")
            reports = [Report(name, INCONCLUSIVE, message=str(exc))]
        except RecursionError:
            logger.warning(f"⚠️ {name}: interpreter recursion exhausted")
            reports = [Report(name, INCONCLUSIVE, message='interpreter recursion exhausted')]
        except UptransError as exc:
            logger.warning(f"❌ {name}: {exc}")
            reports = [Report(name, FAIL, message=str(exc))]
        except Exception as exc:
            logger.error(f"❌ {name}: unexpected error", exc_info=True)
            reports = [Report(name, FAIL, message=f'{type(exc).__name__}: {exc}')]
        elapsed = time.monotonic() - started
        wanted = REPORTED[command]
        return [_timed(r, elapsed) for r in reports if r.status != OK or isinstance(decl, wanted)]


def _timed(report: Report, elapsed: float) -> Report:
    return Report(report.name, report.status, report.mode, report.steps, report.axioms, report.derived,
                  report.message, elapsed)


def run_decls(decls: Iterable[s.Decl], command: str, *, session: Session | None = None,
              budget: int | None = None, on_report: Callable[[Report], None] | None = None) -> list[Report]:
    session = session or Session(budget=budget)
    reports: list[Report] = []
    for decl in decls:
        for report in session.run_item(decl, command):
            reports.append(report)
            if on_report is not None:
                on_report(report)
    return reports


def run(command: str, files: Iterable[str | Path], *, budget: int | None = None,
        on_report: Callable[[Report], None] | None = None) -> list[Report]:
    """Parse every file first (``ParseError`` escapes), then process them in order."""
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}")
    decls = [decl for path in files for decl in parse_file(path)]
    started = time.monotonic()
    reports = run_decls(decls, command, budget=budget, on_report=on_report)
    failed = sum(r.status == FAIL for r in reports)
    logger.info(f"✅ {command} finished: {len(reports)} items, {failed} failed "
                f"in {time.monotonic() - started:.2f}s")
    return reports
