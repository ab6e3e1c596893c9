from django.apps import AppConfig


class CoreEvalConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_eval'
    verbose_name = 'Core Evaluation'
