"""
Saved command runs.
"""
from django.db import models
from django.utils.translation import gettext_lazy as _


class Run(models.Model):
    """One invocation of the uptrans command."""

    COMMAND_CHOICES = [
        ('check', _('Check')),
        ('translate', _('Translate')),
        ('transport', _('Transport')),
        ('replay', _('Replay')),
        ('bench', _('Bench')),
    ]

    STATUS_CHOICES = [
        ('ok', _('Ok')),
        ('fail', _('Fail')),
    ]

    FORMAT_CHOICES = [
        ('text', _('Text')),
        ('json-lines', _('JSON lines')),
    ]

    command = models.CharField(max_length=20, choices=COMMAND_CHOICES)
    files = models.JSONField(default=list, blank=True)
    budget = models.BigIntegerField()
    report_format = models.CharField(max_length=20, choices=FORMAT_CHOICES, default='text')
    status = models.CharField(max_length=10, choices=STATUS_CHOICES)
    item_count = models.PositiveIntegerField(default=0)

    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        verbose_name = _('Run')
        verbose_name_plural = _('Runs')
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.command} ({self.status}, {self.item_count} items)"

    def failed_items(self):
        return self.items.filter(status='fail')


class ItemReport(models.Model):
    """Outcome of one declaration within a run."""

    STATUS_CHOICES = [
        ('ok', _('Ok')),
        ('fail', _('Fail')),
        ('inconclusive', _('Inconclusive')),
    ]

    run = models.ForeignKey(Run, on_delete=models.CASCADE, related_name='items')
    name = models.CharField(max_length=255)
    status = models.CharField(max_length=20, choices=STATUS_CHOICES)
    mode = models.CharField(max_length=20, blank=True)
    steps = models.BigIntegerField(default=0)
    axioms = models.JSONField(default=list, blank=True)
    derived = models.TextField(blank=True)
    message = models.TextField(blank=True)
    elapsed = models.FloatField(default=0.0)

    class Meta:
        verbose_name = _('Item report')
        verbose_name_plural = _('Item reports')
        ordering = ['run', 'id']

    def __str__(self):
        return f"{self.name}: {self.status}"

    @classmethod
    def from_report(cls, run, report):
        return cls(run=run, name=report.name, status=report.status, mode=report.mode,
                   steps=report.steps, axioms=list(report.axioms), derived=report.derived,
                   message=report.message, elapsed=report.elapsed)
