""" Imports. """

from app_assets import (
    CHANGELOG,
    README,
    SCHEMA
)

__all__ = [
    'CHANGELOG',
    'README',
    'SCHEMA'
]
