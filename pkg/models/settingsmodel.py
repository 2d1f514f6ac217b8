""" Settings model: typed defaults overlaid by a JSON settings file.

    The settings file lives in ~/<flat_name>/settings.json unless a path
    is given. Keys the fields dict does not declare are ignored.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import copy
import json
import logging
import re
from pathlib import Path

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Constants #
#############
VARTYPES = {
    'bool': lambda v: v if isinstance(v, bool) else str(v).lower() in (
        'true', 'yes', '1'),
    'str': str,
    'int': int,
    'float': float,
}


def flatten_text(text):
    """ 'Derived Graph Energy' -> 'derived_graph_energy'. """
    return re.sub(r'\W+', '_', text.strip()).strip('_').lower()


#################
# SettingsModel #
#################
class SettingsModel:
    """ Load, convert, update and save application settings. """
    def __init__(self, settings_vars, app_name, filepath=None):
        logger.debug("Initializing settings model")
        self.fields = copy.deepcopy(settings_vars)
        self.app_name = app_name
        self.flat_name = flatten_text(app_name)
        self.app_dir = Path.home() / self.flat_name
        self.filepath = (Path(filepath) if filepath
            else self.app_dir / 'settings.json')
        self.load()


    def _convert(self, key, value):
        vartype = VARTYPES.get(self.fields[key]['type'], str)
        try:
            return vartype(value)
        except (TypeError, ValueError):
            raise ValueError(
                f"Setting '{key}' expects {self.fields[key]['type']}, "
                f"got {value!r} in {self.filepath}") from None


    def load(self):
        """ Overlay values from the settings file, if it exists. """
        if not self.filepath.exists():
            logger.debug("No settings file at %s; using defaults",
                self.filepath)
            return
        logger.debug("Loading settings from %s", self.filepath)
        with open(self.filepath, 'r') as f:
            raw = json.load(f)
        for key, value in raw.items():
            if key not in self.fields:
                logger.warning("Ignoring unknown setting '%s'", key)
                continue
            self.fields[key]['value'] = self._convert(key, value)


    def set(self, key, value):
        """ Update one setting, converting to its declared type. """
        if key not in self.fields:
            raise KeyError(f"Unknown setting '{key}'")
        self.fields[key]['value'] = self._convert(key, value)


    def as_dict(self):
        return {key: data['value'] for key, data in self.fields.items()}


    def save(self):
        """ Write current values to the settings file. """
        logger.debug("Saving settings to %s", self.filepath)
        self.filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(self.filepath, 'w') as f:
            json.dump(self.as_dict(), f, indent=4, sort_keys=True)
