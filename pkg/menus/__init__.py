""" Command-line menus. """

from menus.mainmenu import (
    DERIVED,
    FORMATS,
    MATRICES,
    MainMenu,
    ShowFileAction
)

__all__ = [
    'DERIVED',
    'FORMATS',
    'MATRICES',
    'MainMenu',
    'ShowFileAction'
]
