"""
Management command to dump the prelude in the surface syntax.
Run with: python manage.py export_prelude [--output PATH]
"""
from pathlib import Path

from django.core.management.base import BaseCommand

from core_stdlib.export import export_prelude
from core_stdlib.loader import load_prelude


class Command(BaseCommand):
    help = 'Print every prelude entry as a def/axiom/trusted declaration'

    def add_arguments(self, parser):
        parser.add_argument('--output', help='Write to this file instead of stdout')

    def handle(self, *args, **options):
        text = export_prelude(load_prelude())
        if options['output']:
            Path(options['output']).write_text(text, encoding='utf-8')
            self.stdout.write(self.style.SUCCESS(f"✓ Prelude written to {options['output']}"))
        else:
            self.stdout.write(text, ending='')
