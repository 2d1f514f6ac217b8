""" Paths to report schema resources. """

###########
# Imports #
###########
# System imports
from pathlib import Path


#############
# Constants #
#############
SCHEMA_DIRECTORY = Path(__file__).parent


#################
# Report Schema #
#################
REPORT_SCHEMA_JSON = SCHEMA_DIRECTORY / 'report_schema.json'
