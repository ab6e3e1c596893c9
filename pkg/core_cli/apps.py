from django.apps import AppConfig


class CoreCliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_cli'
    verbose_name = 'Core Command Line'
