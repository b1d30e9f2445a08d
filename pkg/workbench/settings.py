"""
Django settings for the workbench project.

The project has no HTTP surface; Django provides the settings layer, the
management-command CLI and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.0/ref/settings/
"""

from pathlib import Path
import os
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = config('SECRET_KEY', default='workbench-local-only-key')

DEBUG = config('DEBUG', cast=bool, default=False)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'common',
    'scalars',
    'nctorus',
    'bundles',
    'elliptic',
    'cyclic',
    'cli',
]

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': (
        'rest_framework.renderers.JSONRenderer',
    ),
    'UNAUTHENTICATED_USER': None,
}

# Nothing is persisted; the database entry only satisfies Django's checks.
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': config('WORKBENCH_DB_PATH', default=os.path.join(BASE_DIR, 'workbench.sqlite3')),
    }
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Workbench

# Largest allowed dimension of a single degree of a cyclic module.
WORKBENCH_TERM_BUDGET = config('WORKBENCH_TERM_BUDGET', cast=int, default=200000)
WORKBENCH_SEED = config('WORKBENCH_SEED', cast=int, default=20240601)
WORKBENCH_LOG_FILE = config('WORKBENCH_LOG_FILE', default='workbench_logs.txt')
WORKBENCH_LOG_LEVEL = config('WORKBENCH_LOG_LEVEL', default='INFO')
WORKBENCH_NUMERIC_TOLERANCE = config('WORKBENCH_NUMERIC_TOLERANCE', cast=float, default=1e-9)
WORKBENCH_FINITE_DIFFERENCE_TOLERANCE = config('WORKBENCH_FINITE_DIFFERENCE_TOLERANCE', cast=float, default=1e-6)
WORKBENCH_SELFTEST_SCALE = config('WORKBENCH_SELFTEST_SCALE', cast=float, default=1.0)
WORKBENCH_RECORDS_VERSION = 1
