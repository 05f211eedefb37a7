"""
Django settings for cospan_hub project.

The project hosts the structured-cospan library and its management-command CLI.
There are no views, URLs or models; Django provides settings, the app registry,
the cache framework and logging configuration.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

from pathlib import Path
from decouple import config
import os

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Nothing is served, so the key only satisfies Django's startup checks
SECRET_KEY = config('SECRET_KEY', default='cospan-hub-local-only')

DEBUG = config('DEBUG', default=True, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'petri',
    'circuits',
    'dynamics',
    'networks',
]

# No database is used; Django falls back to its dummy backend
DATABASES = {}

# Serializers only; no views, so no users or sessions
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Structured cospan configuration

# Version string written into every printed network document
COSPAN_FORMAT_VERSION = config('COSPAN_FORMAT_VERSION', default='1.0')

# Apex size above which isomorphism search logs a warning (desk scale only)
COSPAN_ISO_NODE_LIMIT = config('COSPAN_ISO_NODE_LIMIT', default=12, cast=int)

# Cap on markings visited by `petri reachable`
COSPAN_REACHABILITY_MAX_STATES = config('COSPAN_REACHABILITY_MAX_STATES', default=100000, cast=int)

# Cache lifetime of canonical iso-class representatives
COSPAN_CACHE_TIMEOUT = config('COSPAN_CACHE_TIMEOUT', default=300 if DEBUG else 3600, cast=int)

# Graphviz layout direction for `cospan export-dot`
COSPAN_DOT_RANKDIR = config('COSPAN_DOT_RANKDIR', default='LR')


# Caching Configuration
# Local memory unless a reachable Redis is configured
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
        'LOCATION': 'cospan-hub-cache',
        'OPTIONS': {
            'MAX_ENTRIES': 5000,
            'CULL_FREQUENCY': 3,
        }
    }
}

redis_url = config('REDIS_URL', default='')
if redis_url:
    try:
        import redis
        # Test Redis connection
        redis_client = redis.from_url(redis_url, socket_connect_timeout=1)
        redis_client.ping()
        CACHES = {
            'default': {
                'BACKEND': 'django_redis.cache.RedisCache',
                'LOCATION': redis_url,
                'OPTIONS': {
                    'CLIENT_CLASS': 'django_redis.client.DefaultClient',
                },
                'KEY_PREFIX': 'cospan_hub',
                'TIMEOUT': COSPAN_CACHE_TIMEOUT,
                'VERSION': 1,
            }
        }
    except (ImportError, Exception):
        # Keep the memory cache if Redis is not available
        pass


# Ensure logs directory exists
LOG_DIR = Path(config('COSPAN_LOG_DIR', default=str(BASE_DIR / 'logs')))
os.makedirs(LOG_DIR, exist_ok=True)

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'DEBUG' if DEBUG else 'INFO',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'level': 'INFO',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': LOG_DIR / 'cospan.log',
            'maxBytes': 1024*1024*5,  # 5MB
            'backupCount': 5,
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
    'loggers': {
        'core': {
            'handlers': ['file'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
        'core.validation': {
            'handlers': ['console', 'file'],
            'level': 'WARNING',
            'propagate': False,
        },
        'petri': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': False,
        },
        'circuits': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': False,
        },
        'dynamics': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': False,
        },
        'networks': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}
