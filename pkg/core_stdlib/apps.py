from django.apps import AppConfig


class CoreStdlibConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_stdlib'
    verbose_name = 'Core Standard Library'
