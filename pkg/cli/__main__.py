import os
import sys

import django


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'workbench.settings')
    django.setup()

    from cli.runner import run

    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
