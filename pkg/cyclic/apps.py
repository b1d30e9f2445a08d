from django.apps import AppConfig


class CyclicConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'cyclic'
