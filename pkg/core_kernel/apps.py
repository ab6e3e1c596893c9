import sys

from django.apps import AppConfig
from django.conf import settings


class CoreKernelConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_kernel'
    verbose_name = 'Core Kernel'

    def ready(self):
        # Evaluation of unary numerals recurses once per constructor.
        limit = getattr(settings, 'UPTRANS_RECURSION_LIMIT', 200_000)
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
