"""
Prelude loading.

The prelude is assembled once per process and every declaration is
kernel-checked at its all-zero universe instance before the environment is
handed out. Other instances are checked on first use.
"""
from __future__ import annotations

import logging
import time
from functools import cache

from django.conf import settings

from core_kernel.env import GlobalEnv
from core_kernel.errors import PreludeIllTyped
from core_kernel.typechecker import check_declaration

from .prelude import all_declarations

logger = logging.getLogger(__name__)


def build_prelude(*, verify: bool = True) -> GlobalEnv:
    """Fresh prelude environment (uncached)."""
    started = time.monotonic()
    env = GlobalEnv(all_declarations(),
                    verify_instances=getattr(settings, 'UPTRANS_CHECK_INSTANCES', True))
    if verify:
        for name in env.names():
            levels = (0,) * env.declaration(name).univ_params
            if env.verify_instances:
                env.lookup(name, levels)
                continue
            result = check_declaration(env, name, levels)
            if not result:
                logger.error(f"❌ prelude entry {name} failed to check: {result.message}")
                raise PreludeIllTyped(name, result.error)
    logger.info(f"📦 prelude loaded: {len(env)} declarations in {time.monotonic() - started:.2f}s")
    return env


@cache
def load_prelude() -> GlobalEnv:
    return build_prelude()
