from django.apps import AppConfig


class CoreTranslateConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_translate'
    verbose_name = 'Core Translations'
