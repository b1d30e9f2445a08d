from django.apps import AppConfig


class NctorusConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'nctorus'
