""" Derived Graph Energy.

    Command-line app for the Laplacian-energy-like invariant (LEL) and
    incidence energy (IE) of line graphs, R-graphs and Q-graphs: spectra
    from the eigensolver and from closed forms, bound evaluation and
    verification sweeps over graph families.

    Created: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import json
import logging.config
import logging.handlers
import sys
from pathlib import Path

# Custom
import logger as app_logger
import menus
import models
import setup
import views

##########
# Logger #
##########
logger = logging.getLogger(__name__)

def setup_logging(NAME, verbose=False):
    """ Create output log file path.
        Import and update logging config JSON file.
        Apply config to logger.
    """
    # Create logging output file path based on app name
    flat_name = models.flatten_text(NAME)
    _app_with_ext = flat_name + '.log.jsonl'
    log_dir = Path.home() / flat_name
    log_dir.mkdir(parents=True, exist_ok=True)
    filename = log_dir / _app_with_ext

    # Import and update logging config file
    with open(app_logger.LOGGER_CONFIG_JSON) as f_in:
        config = json.load(f_in)
        # Update output file location based on app name
        config['handlers']['file']['filename'] = str(filename)
        # Pass in custom JSONFormatter
        config['formatters']['json']['()'] = app_logger.JSONFormatter
        if verbose:
            config['handlers']['stderr']['level'] = 'DEBUG'

    # Apply logging config
    logging.config.dictConfig(config)


###############
# Application #
###############
class Application:
    """ Parse arguments, load settings and dispatch one command. """
    # Settings a command-line flag may override
    OVERRIDES = ('tol', 'seed', 'format', 'workers')

    def __init__(self, argv=None, stdout=None):
        #############
        # Constants #
        #############
        self.NAME = 'Derived Graph Energy'
        self.VERSION = '1.0.0'
        self.EDITED = 'October 17, 2026'

        self.stdout = stdout or sys.stdout

        ######################################
        # Initialize Models, Menus and Views #
        ######################################
        # Parse the command line
        self._app_info = {
            'name': self.NAME,
            'flat_name': models.flatten_text(self.NAME),
            'version': self.VERSION,
            'last_edited': self.EDITED
        }
        self.menu = menus.MainMenu(self._app_info)
        self.args = self.menu.parse_args(argv)

        # Set up custom logger before touching the settings file
        setup_logging(self.NAME, verbose=self.args.verbose)
        logger.debug("Started custom logger")
        logger.debug("Initializing application")

        # Create callback dictionary
        self.event_callbacks = {
            '<<Spectrum>>': self._on_spectrum,
            '<<Invariants>>': self._on_invariants,
            '<<Bounds>>': self._on_bounds,
            '<<Verify>>': self._on_verify,
            '<<Generate>>': self._on_generate,
        }


    #####################
    # General Functions #
    #####################
    def run(self):
        """ Run the selected command and return the exit status. """
        try:
            self._load_settings()
            self.config = models.VerifyConfig.from_settings(self.settings)
            self.view = views.ReportView(
                fmt=self.settings['format'],
                precision=self.settings['precision']
            )
            status = self.event_callbacks[self.args.event]()
        except models.GraphEnergyError as e:
            logger.exception("%s: %s", e.title, e)
            self._show_error(e.title, str(e), e.remedy)
            return 2
        except PermissionError as e:
            logger.exception(e)
            self._show_error("Access Denied", str(e),
                "Check permissions on the file or directory.")
            return 2
        except FileNotFoundError as e:
            logger.exception(e)
            self._show_error("File Not Found", str(e),
                "Check the path passed to --input or --settings.")
            return 2
        except (OSError, ValueError) as e:
            logger.exception(e)
            self._show_error("Invalid Input", str(e), "")
            return 2
        logger.info("Command '%s' finished with status %d",
            self.args.command, status)
        return status


    @staticmethod
    def _show_error(title, message, remedy):
        print(f"{title}: {message}", file=sys.stderr)
        if remedy:
            print(f"  {remedy}", file=sys.stderr)


    def _emit(self, text):
        """ Write report text to --output or standard output. """
        if self.args.output:
            logger.debug("Writing report to %s", self.args.output)
            with open(self.args.output, 'w', newline='\n') as f:
                f.write(text)
        else:
            self.stdout.write(text)


    ######################
    # Settings Functions #
    ######################
    def _load_settings(self):
        """ Load parameters into self.settings dict.

            Precedence: command-line flag, settings file, default.
        """
        self.settings_model = models.SettingsModel(
            settings_vars=setup.settings_vars.fields,
            app_name=self.NAME,
            filepath=self.args.settings
        )
        for key in self.OVERRIDES:
            value = getattr(self.args, key, None)
            if value is not None:
                self.settings_model.set(key, value)
        self.settings = self.settings_model.as_dict()
        logger.debug("Loaded settings: %s", self.settings)
        if getattr(self.args, 'save_settings', False):
            self._save_settings()


    def _save_settings(self):
        """ Write the merged settings back to the settings file. """
        self.settings_model.save()
        logger.info("Saved settings to %s", self.settings_model.filepath)


    ###################
    # Graph Functions #
    ###################
    def _load_graphs(self, default_family=None):
        """ Graphs named by --input or --family. """
        if self.args.input:
            return [models.read_edge_list(self.args.input)]
        families = self.args.family or default_family
        if not families:
            self.menu.error("one of --input or --family is required")
        specs = models.parse_families(families, self.settings['seed'])
        return [
            models.generate(spec, self.settings['max_resamples'])
            for spec in specs
        ]


    def _check_target(self, g, cls, target):
        """ Raise StandingAssumptionViolated if target's results do not
            apply to g.
        """
        if target == 'base':
            return
        if target == 'line':
            violated = models.line_assumptions(g, cls)
        else:
            violated = models.regular_assumptions(cls)
        if violated:
            raise models.StandingAssumptionViolated(
                f"{g.label or 'graph'} is {cls.describe()}; {target} results "
                f"assume {', '.join(violated)}")


    #####################
    # Command Functions #
    #####################
    def _on_spectrum(self):
        logger.debug("Spectrum command")
        target = self.args.derived
        matrix = self.args.matrix
        if self.args.closed_form and (target == 'base' or matrix == 'incidence'):
            self.menu.error("--closed-form needs --derived line, rgraph or "
                "qgraph and a laplacian-type --matrix")

        entries = []
        for g in self._load_graphs():
            cls = models.classify(g)
            self._check_target(g, cls, target)
            if matrix == 'incidence':
                derived = models.derive(g, target)
                values = models.singular_values(
                    models.incidence(derived),
                    tol=self.config.eig_tol,
                    max_sweeps=self.config.max_sweeps,
                    clamp_tol=self.config.clamp_tol
                )
                sp = None
                source = models.Source.DIRECT
            else:
                kind = models.SpectrumKind(matrix)
                if self.args.closed_form:
                    params = models.BaseParams.from_class(g, cls, target)
                    sp = models.SPECTRAL_MAPS[(target, kind)](
                        self.config.spectrum(g, kind), params,
                        clamp_tol=self.config.clamp_tol)
                    source = models.Source.CLOSED_FORM
                else:
                    sp = self.config.spectrum(models.derive(g, target), kind)
                    source = models.Source.DIRECT
                values = sp.values
            entries.append({
                'graph': g.label,
                'n': g.n,
                'm': g.m,
                'target': target,
                'matrix': matrix,
                'source': source.value,
                'values': list(values),
                'multiplicities': (
                    [list(pair) for pair in sp.multiplicities()] if sp
                    else None),
            })
        self._emit(self.view.render({'command': 'spectrum', 'graphs': entries}))
        return 0


    def _on_invariants(self):
        logger.debug("Invariants command")
        target = self.args.derived
        entries = []
        for g in self._load_graphs():
            cls = models.classify(g)
            self._check_target(g, cls, target)
            derived = models.derive(g, target)
            entry = {
                'graph': g.label,
                'target': target,
                'class': cls.as_dict(),
            }
            for name, (kind, func) in models.INVARIANTS.items():
                direct = func(self.config.spectrum(derived, kind),
                    clamp_tol=self.config.clamp_tol).value
                closed = None
                if target != 'base':
                    params = models.BaseParams.from_class(g, cls, target)
                    mapped = models.SPECTRAL_MAPS[(target, kind)](
                        self.config.spectrum(g, kind), params,
                        clamp_tol=self.config.clamp_tol)
                    closed = func(mapped, models.Source.CLOSED_FORM,
                        clamp_tol=self.config.clamp_tol).value
                entry[name] = {'direct': direct, 'closed_form': closed}
            entries.append(entry)
        self._emit(self.view.render(
            {'command': 'invariants', 'graphs': entries}))
        return 0


    def _on_bounds(self):
        logger.debug("Bounds command")
        target = self.args.derived
        reports = [
            models.bound_report(g, self.config) for g in self._load_graphs()
        ]
        graphs = []
        for report in reports:
            data = report.as_dict()
            if target != 'base':
                data['rows'] = [
                    row for row in data['rows'] if row['target'] == target
                ]
            graphs.append(data)
        self._emit(self.view.render({'command': 'bounds', 'graphs': graphs}))
        violations = sum(report.violations for report in reports)
        return 1 if violations else 0


    def _on_verify(self):
        logger.debug("Verify command")
        if self.args.input:
            g = models.read_edge_list(self.args.input)
            summary = models.SweepSummary(
                reports=[models.bound_report(g, self.config)])
        else:
            specs = models.parse_families(
                self.args.family or ['standard'], self.settings['seed'])
            summary = models.sweep(specs, self.config,
                workers=self.settings['workers'])

        report = {
            'command': 'verify',
            'graphs': [r.as_dict() for r in summary.reports],
            'summary': summary.as_dict(timing=self.args.timing),
        }
        failures = (summary.violations
            + summary.count(models.FindingKind.CONSISTENCY_FAILURE)
            + summary.count(models.FindingKind.OZEKI_FAILURE))
        if self.args.improvement:
            grid = models.improvement_grid(tol=self.config.tol)
            report['improvement'] = grid
            failures += sum(1 for row in grid if not row['ok'])
        self._emit(self.view.render(report))
        return 1 if failures else 0


    def _on_generate(self):
        logger.debug("Generate command")
        graphs = self._load_graphs()
        if len(graphs) != 1:
            self.menu.error("generate needs exactly one graph, "
                f"the family spec gave {len(graphs)}")
        g = graphs[0]
        target = self.args.derived
        if target != 'base':
            self._check_target(g, models.classify(g), target)
            g = models.derive(g, target)
        self._emit(models.format_edge_list(g))
        return 0


def main(argv=None):
    app = Application(argv)
    return app.run()


if __name__ == "__main__":
    sys.exit(main())
