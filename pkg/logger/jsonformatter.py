""" Formatter that writes each log record as one JSON object per line.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import datetime as dt
import json
import logging


#################
# JSONFormatter #
#################
class JSONFormatter(logging.Formatter):
    """ Render records as JSON Lines. """
    def __init__(self, *, fmt_keys=None):
        super().__init__()
        self.fmt_keys = fmt_keys if fmt_keys is not None else {}


    def format(self, record):
        return json.dumps(self._prepare_log_dict(record), default=str)


    def _prepare_log_dict(self, record):
        always_fields = {
            'timestamp': dt.datetime.fromtimestamp(
                record.created, tz=dt.timezone.utc).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno,
            'message': record.getMessage(),
        }
        if record.exc_info is not None:
            always_fields['exc_info'] = self.formatException(record.exc_info)

        message = {
            key: always_fields.pop(val, getattr(record, val, None))
            for key, val in self.fmt_keys.items()
        }
        message.update(always_fields)
        return message
