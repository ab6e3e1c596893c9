from django.apps import AppConfig


class CoreRegistryConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'core_registry'
    verbose_name = 'Core Relation Registry'
