""" Imports. """

from views.reportview import (
    ReportView,
    round_sig
)

__all__ = [
    'ReportView',
    'round_sig'
]
