"""
Management command driving the engine.
Run with: python manage.py uptrans <check|translate|transport|replay|bench> [files]
"""
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.db import transaction

from core_cli.corpus import CorpusRegistry
from core_cli.driver import COMMANDS, REPLAY, run
from core_cli.models import ItemReport, Run
from core_cli.reports import FAIL, FORMATS, emit_report, exit_code
from core_kernel.errors import ParseError


class Command(BaseCommand):
    help = 'Check, translate and transport declaration files, or replay the embedded corpus'

    def add_arguments(self, parser):
        parser.add_argument('command', choices=COMMANDS)
        parser.add_argument('files', nargs='*', help='Declaration files, processed in order')
        parser.add_argument('--budget', type=int, default=settings.UPTRANS_BUDGET,
                            help='Step budget for conversion and normalization')
        parser.add_argument('--format', dest='report_format', choices=FORMATS,
                            default=settings.UPTRANS_FORMAT, help='Report format')
        parser.add_argument('--save', action='store_true', help='Store the run in the database')

    def handle(self, *args, **options):
        command = options['command']
        files = list(options['files'])
        if command == REPLAY:
            files = CorpusRegistry().get_corpus_files() + files
        if not files:
            raise CommandError(f'{command} needs at least one declaration file', returncode=2)

        try:
            reports = run(command, files, budget=options['budget'])
        except ParseError as exc:
            raise CommandError(f'parse error: {exc}', returncode=2) from exc
        except OSError as exc:
            raise CommandError(f'cannot read input: {exc}', returncode=2) from exc

        self.stdout.write(emit_report(reports, options['report_format']), ending='')

        code = exit_code(reports)
        if options['save']:
            self._save(command, files, options, reports, code)
        if code:
            failed = sum(r.status == FAIL for r in reports)
            raise CommandError(f'{failed} of {len(reports)} items failed', returncode=code)

    @transaction.atomic
    def _save(self, command, files, options, reports, code):
        saved = Run.objects.create(
            command=command,
            files=[str(f) for f in files],
            budget=options['budget'],
            report_format=options['report_format'],
            status='fail' if code else 'ok',
            item_count=len(reports),
        )
        ItemReport.objects.bulk_create(ItemReport.from_report(saved, r) for r in reports)
        self.stderr.write(self.style.SUCCESS(f'✓ Saved run #{saved.pk}'))
