from django.contrib import admin

from .models import ItemReport, Run


class ItemReportInline(admin.TabularInline):
    model = ItemReport
    extra = 0
    fields = ['name', 'status', 'mode', 'steps', 'axioms', 'elapsed']
    readonly_fields = fields


@admin.register(Run)
class RunAdmin(admin.ModelAdmin):
    list_display = ['command', 'status', 'item_count', 'budget', 'report_format', 'created_at']
    list_filter = ['command', 'status', 'created_at']
    search_fields = ['files']
    date_hierarchy = 'created_at'
    inlines = [ItemReportInline]


@admin.register(ItemReport)
class ItemReportAdmin(admin.ModelAdmin):
    list_display = ['name', 'run', 'status', 'mode', 'steps', 'elapsed']
    list_filter = ['status', 'mode']
    search_fields = ['name', 'message', 'derived']
