from django.apps import AppConfig


class PetriConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'petri'
    verbose_name = 'Petri nets'

    def ready(self):
        # registers the cmc instance
        from . import cmc  # noqa: F401
