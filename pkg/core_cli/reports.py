"""Per-item reports and their text and json-lines renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

OK = 'ok'
FAIL = 'fail'
INCONCLUSIVE = 'inconclusive'

TEXT = 'text'
JSON_LINES = 'json-lines'
FORMATS = (TEXT, JSON_LINES)

STATUS_EMOJI = {OK: '✅', FAIL: '❌', INCONCLUSIVE: '⚠️'}


@dataclass(frozen=True)
class Report:
    name: str
    status: str
    mode: str = ''
    steps: int = 0
    axioms: tuple[str, ...] = ()
    derived: str = ''
    message: str = ''
    elapsed: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return self.status == OK

    def record(self) -> dict:
        return {'name': self.name, 'status': self.status, 'steps': self.steps,
                'axioms': list(self.axioms), 'mode': self.mode}


def _text_line(report: Report) -> str:
    parts = [f"{STATUS_EMOJI[report.status]} {report.name}", report.status]
    if report.mode:
        parts.append(report.mode)
    parts.append(f"steps={report.steps}")
    if report.axioms:
        parts.append(f"axioms={','.join(report.axioms)}")
    line = '  '.join(parts)
    if report.derived:
        line += f"\n    ↳ {report.derived}"
    if report.message:
        line += f"\n    {report.message}"
    return line


def emit_report(reports: Iterable[Report], fmt: str = TEXT) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}")
    if fmt == JSON_LINES:
        return ''.join(json.dumps(r.record(), ensure_ascii=False) + '\n' for r in reports)
    reports = list(reports)
    lines = [_text_line(r) for r in reports]
    failed = sum(r.status == FAIL for r in reports)
    lines.append(f"{len(reports)} items, {failed} failed")
    return '\n'.join(lines) + '\n'


def exit_code(reports: Iterable[Report]) -> int:
    return 1 if any(r.status == FAIL for r in reports) else 0
