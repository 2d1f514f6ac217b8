""" Main menu (command-line parser) for Derived Graph Energy.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import argparse
import logging
import sys

# Custom
import app_assets

###########
# Logging #
###########
# Create new logger
logger = logging.getLogger(__name__)

#############
# Constants #
#############
FAMILY_HELP = """\
family specs:
  name[:params], params positional or keyed; any integer may be a range a..b
    complete:3..7              K3 .. K7
    cycle:n                    C_n (n >= 3)
    path:n                     P_n
    petersen
    complete_bipartite:a,b     K_a,b
    star:k                     K_1,k
    random_regular:n=12,r=3,seed=42
    random_biregular:n1=4,n2=6,r1=3,r2=2,seed=1
    standard                   the full verification suite
  several specs may be joined with ';' or given by repeating --family.

slack = bound - exact (upper), exact - bound (lower); < -tol is a violation.
exit status: 0 ok, 1 violations found, 2 usage or input error.
"""

DERIVED = ('base', 'line', 'rgraph', 'qgraph')
MATRICES = ('laplacian', 'signless_laplacian', 'incidence')
FORMATS = ('json', 'csv', 'table')


##################
# ShowFileAction #
##################
class ShowFileAction(argparse.Action):
    """ Print a bundled markdown file and exit, like --version. """
    def __init__(self, option_strings, dest, path, **kwargs):
        super().__init__(option_strings, dest, nargs=0,
            default=argparse.SUPPRESS, **kwargs)
        self.path = path


    def __call__(self, parser, namespace, values, option_string=None):
        logger.debug("Showing %s", self.path)
        with open(self.path, 'r', encoding='utf-8') as f:
            sys.stdout.write(f.read())
        parser.exit()


############
# MainMenu #
############
class MainMenu(argparse.ArgumentParser):
    """ Parser whose subcommands each name the event they trigger. """
    def __init__(self, app_info, **kwargs):
        super().__init__(
            prog=app_info['flat_name'],
            description=f"{app_info['name']}: LEL and IE of line, R- and "
                "Q-graphs, their closed-form spectra and bounds.",
            epilog=FAMILY_HELP,
            formatter_class=argparse.RawDescriptionHelpFormatter,
            **kwargs
        )
        self._app_info = app_info
        self.add_argument(
            '--version',
            action='version',
            version=f"{app_info['name']} {app_info['version']} "
                f"(last edited {app_info['last_edited']})"
        )
        self.add_argument(
            '--readme',
            action=ShowFileAction,
            path=app_assets.README.README_MD,
            help="print the README and exit"
        )
        self.add_argument(
            '--changelog',
            action=ShowFileAction,
            path=app_assets.CHANGELOG.CHANGELOG_MD,
            help="print the change log and exit"
        )
        self._create_commands()


    def _shared_options(self):
        """ Options every command accepts. """
        logger.debug("Creating shared options")
        shared = argparse.ArgumentParser(add_help=False)
        source = shared.add_mutually_exclusive_group()
        source.add_argument('--input', metavar='PATH',
            help="edge-list file: n on the first line, then 'u v' pairs")
        source.add_argument('--family', metavar='SPEC', action='append',
            help="family spec (see below); repeatable")
        shared.add_argument('--derived', choices=DERIVED, default='base',
            help="graph to analyse (default: base)")
        shared.add_argument('--tol', type=float,
            help="violation tolerance (default from settings: 1e-9)")
        shared.add_argument('--seed', type=int,
            help="default seed for random families (default 0)")
        shared.add_argument('--format', choices=FORMATS,
            help="report format (default json)")
        shared.add_argument('--output', metavar='PATH',
            help="write the report here instead of standard output")
        shared.add_argument('--settings', metavar='PATH',
            help="alternate settings file")
        shared.add_argument('--save-settings', action='store_true',
            help="write command-line overrides back to the settings file")
        shared.add_argument('-v', '--verbose', action='store_true',
            help="log debug messages to standard error")
        return shared


    def _create_commands(self):
        logger.debug("Creating subcommands")
        shared = self._shared_options()
        sub = self.add_subparsers(dest='command', metavar='command',
            parser_class=argparse.ArgumentParser)
        sub.required = True
        opts = {
            'parents': [shared],
            'epilog': FAMILY_HELP,
            'formatter_class': argparse.RawDescriptionHelpFormatter,
        }

        ############
        # Spectrum #
        ############
        spectrum = sub.add_parser('spectrum',
            help="eigenvalues (or singular values) of a graph", **opts)
        spectrum.add_argument('--matrix', choices=MATRICES,
            default='laplacian', help="matrix to decompose")
        spectrum.add_argument('--closed-form', action='store_true',
            help="map the base spectrum instead of decomposing the derived "
                "graph")
        spectrum.set_defaults(event='<<Spectrum>>')

        ##############
        # Invariants #
        ##############
        invariants = sub.add_parser('invariants',
            help="LEL and IE, directly and from closed forms", **opts)
        invariants.set_defaults(event='<<Invariants>>')

        ##########
        # Bounds #
        ##########
        bounds = sub.add_parser('bounds',
            help="every applicable bound against the exact invariants",
            **opts)
        bounds.set_defaults(event='<<Bounds>>')

        ##########
        # Verify #
        ##########
        verify = sub.add_parser('verify',
            help="sweep families and count bound violations", **opts)
        verify.add_argument('--workers', type=int,
            help="threads for the sweep (default 1)")
        verify.add_argument('--timing', action='store_true',
            help="include runtime in the summary")
        verify.add_argument('--improvement', action='store_true',
            help="also compare the n, r bounds with the prior bounds")
        verify.set_defaults(event='<<Verify>>')

        ############
        # Generate #
        ############
        generate = sub.add_parser('generate',
            help="write one family member as an edge list", **opts)
        generate.set_defaults(event='<<Generate>>')
