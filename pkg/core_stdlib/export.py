"""Prelude export in the surface syntax."""
from __future__ import annotations

from core_kernel.env import GlobalEnv, Origin

KEYWORD = {Origin.DEFINED: 'def', Origin.TRUSTED: 'trusted', Origin.AXIOM: 'axiom'}


def export_prelude(env: GlobalEnv) -> str:
    """One declaration per entry; universe-polymorphic entries at level 0.

    Built-in inductives and primitives have no surface form and are listed as
    axioms with a marker comment.
    """
    from core_cli.printer import show

    lines = []
    for name in env.names():
        decl = env.declaration(name)
        entry = env.lookup(name, (0,) * decl.univ_params)
        head = KEYWORD.get(entry.origin, 'axiom')
        if entry.anchor:
            lines.append(f'# {entry.anchor}')
        if entry.origin in (Origin.INDUCTIVE, Origin.PRIMITIVE):
            lines.append(f'# {entry.origin.value}')
        if head == 'def' and entry.body is not None:
            lines.append(f'def {name} : {show(entry.type)} := {show(entry.body)}')
        else:
            lines.append(f'{head} {name} : {show(entry.type)}')
    return '\n'.join(lines) + '\n'
