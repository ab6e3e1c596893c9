"""
Ready-made global contexts: unary/binary naturals and 16-bit integers with
their bounded-binary model.
"""
from __future__ import annotations

import logging
from typing import Iterable

from core_kernel.builder import c
from core_kernel.env import GlobalEnv
from core_registry.registry import Registry

from .loader import load_prelude

logger = logging.getLogger(__name__)

ARITH_TERMS = (
    ('O', 'N0', 'O_R'),
    ('S', 'succ_N', 'S_R'),
    ('plus', 'plus_N', 'plus_R'),
    ('mult', 'mult_N', 'mult_R'),
    ('pow', 'pow_N', 'pow_R'),
    ('minus', 'minus_N', 'minus_R'),
    ('leb_nat', 'leb_N', 'leb_R'),
)
RECURSOR_LEVELS = (0, 1)

INT_TERMS = (
    ('lsl', 'ZwB_lsl', 'lsl_R'),
    ('add16', 'ZwB_add', 'add16_R'),
    ('mul16', 'ZwB_mul', 'mul16_R'),
)


def arith_registry(env: GlobalEnv | None = None, *, only: Iterable[str] | None = None,
                   recursors: bool = True) -> Registry:
    """``nat ⋈ N`` plus the operations named in ``only`` (all of them by default).

    With ``recursors`` (and both constructors related) ``nat_rect`` is related to
    ``N_peano_rect`` at the levels programs use.
    """
    registry = Registry(env or load_prelude()).register_type_relation(
        'nat', 'N', c('equiv_nat_N'), c('R_nat_N'), c('coh_nat_N'))
    wanted = None if only is None else set(only)
    for left, right, proof in ARITH_TERMS:
        if wanted is None or left in wanted:
            registry = registry.register_term_relation(left, right, c(proof))
    if recursors and registry.delta.find('O') and registry.delta.find('S'):
        registry = _relate_recursor(registry)
    return registry


def _relate_recursor(registry: Registry) -> Registry:
    # proved by induction on N, no axioms
    for k in RECURSOR_LEVELS:
        registry = registry.assume_term_relation(
            'nat_rect', 'N_peano_rect', f'nat_rect_R{k}', levels=(k,), right_levels=(k,),
            relies_on=())
    return registry


def int_registry(env: GlobalEnv | None = None) -> Registry:
    """``int16 ⋈ ZwB16`` with the three operations related in both directions."""
    registry = Registry(env or load_prelude()).register_type_relation(
        'int16', 'ZwB16', c('equiv_int16_ZwB'), c('R_int16_ZwB'), c('coh_int16_ZwB'))
    for prim, model, proof in INT_TERMS:
        registry = registry.register_term_relation(prim, model, c(proof))
    for prim, model, _ in INT_TERMS:
        registry = registry.register_term_relation(model, prim, c(f'{model}_R'))
    logger.debug(f"integer context ready with {len(registry.hints)} hints")
    return registry
