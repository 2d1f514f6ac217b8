""" Logging resources: JSON Lines formatter and dictConfig template. """

###########
# Imports #
###########
# Standard library
from pathlib import Path

# Custom
from logger.jsonformatter import JSONFormatter

#############
# Constants #
#############
LOGGER_DIRECTORY = Path(__file__).parent
LOGGER_CONFIG_JSON = LOGGER_DIRECTORY / 'logger_config.json'

__all__ = [
    'JSONFormatter',
    'LOGGER_CONFIG_JSON',
    'LOGGER_DIRECTORY'
]
