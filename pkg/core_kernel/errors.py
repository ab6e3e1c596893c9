"""
Error hierarchy shared by every engine app.

Errors carry the offending subterm and, when relevant, the expected and actual
types. ``str(error)`` is a one-line message; the driver turns errors into
item reports instead of letting them escape.
"""
from __future__ import annotations


class UptransError(Exception):
    """Base class for all engine errors."""

    code = 'error'

    def __init__(self, message: str, *, term=None, expected=None, actual=None):
        super().__init__(message)
        self.message = message
        self.term = term
        self.expected = expected
        self.actual = actual


# Kernel

class KernelError(UptransError):
    code = 'kernel'


class UnboundVariable(KernelError):
    code = 'UnboundVariable'


class UnknownConstant(KernelError):
    code = 'UnknownConstant'

    def __init__(self, name: str):
        super().__init__(f"unknown constant {name}")
        self.name = name


class NotAFunction(KernelError):
    code = 'NotAFunction'


class NotASort(KernelError):
    code = 'NotASort'


class TypeMismatch(KernelError):
    code = 'TypeMismatch'


class ConversionFailure(KernelError):
    code = 'ConversionFailure'


class BudgetExceeded(KernelError):
    code = 'BudgetExceeded'

    def __init__(self, steps: int, budget: int | None):
        super().__init__(f"step budget exhausted after {steps} steps (budget {budget})")
        self.steps = steps
        self.budget = budget


class LevelMismatch(KernelError):
    code = 'LevelMismatch'


class IllFormedTelescope(KernelError):
    code = 'IllFormedTelescope'

    def __init__(self, position: int, cause: UptransError):
        super().__init__(f"telescope entry {position} is ill-formed: {cause}")
        self.position = position
        self.cause = cause


# Translation

class TranslationError(UptransError):
    code = 'translation'


class UnrelatedConstant(TranslationError):
    code = 'UnrelatedConstant'

    def __init__(self, name: str):
        super().__init__(f"constant {name} has no related partner and is not self-related")
        self.name = name


# Registry

class RegistryError(UptransError):
    code = 'registry'


class IllTyped(RegistryError):
    code = 'IllTyped'

    def __init__(self, component: str, cause: UptransError):
        super().__init__(f"{component} is ill-typed: {cause}")
        self.component = component
        self.cause = cause


class DuplicateRelation(RegistryError):
    code = 'DuplicateRelation'

    def __init__(self, left: str, right: str):
        super().__init__(f"{left} is already related (to {right}); duplicates are rejected")
        self.left = left
        self.right = right


class MissingPrefix(RegistryError):
    code = 'MissingPrefix'


class UnresolvedConstant(RegistryError):
    code = 'UnresolvedConstant'

    def __init__(self, name: str):
        super().__init__(f"no witness can be resolved for constant {name}")
        self.name = name


# Standard library

class StdlibError(UptransError):
    code = 'stdlib'


class PreludeIllTyped(StdlibError):
    code = 'PreludeIllTyped'

    def __init__(self, name: str, cause: UptransError):
        super().__init__(f"prelude entry {name} does not typecheck: {cause}")
        self.name = name
        self.cause = cause


class NotALiteral(StdlibError):
    code = 'NotALiteral'


class LiteralOutOfRange(StdlibError):
    code = 'LiteralOutOfRange'


# Surface syntax

class SurfaceError(UptransError):
    code = 'surface'


class ParseError(SurfaceError):
    code = 'ParseError'

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f" at line {line}, column {column}" if line is not None else ''
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column


class UnresolvedName(SurfaceError):
    code = 'UnresolvedName'

    def __init__(self, name: str, line: int | None = None, column: int | None = None):
        where = f" at line {line}, column {column}" if line is not None else ''
        super().__init__(f"unresolved name {name}{where}")
        self.name = name
        self.line = line
        self.column = column


class UnknownScope(SurfaceError):
    code = 'UnknownScope'
