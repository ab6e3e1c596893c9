"""
Console entry point: ``uptrans check|translate|transport|replay|bench ...``.
"""
import os
import sys


def main():
    """Set up Django and hand the arguments to the ``uptrans`` management command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'Uptrans.settings')
    from django.core.management import execute_from_command_line

    execute_from_command_line([sys.argv[0], 'uptrans', *sys.argv[1:]])


if __name__ == '__main__':
    main()
