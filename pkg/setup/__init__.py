""" Default settings: one entry per key, with its type and value. """

from setup import settings_vars

__all__ = [
    'settings_vars'
]
