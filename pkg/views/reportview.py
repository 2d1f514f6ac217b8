""" Report view: renders command results as JSON, CSV or a text table.

    Every float is rounded to `precision` significant digits; NaN and
    infinities become null (JSON) or empty cells (CSV).

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import json
import logging
import math

# Third party
import pandas as pd

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Constants #
#############
BOUND_COLUMNS = [
    'graph', 'target', 'invariant', 'exact_direct', 'exact_closed',
    'bound_id', 'side', 'value', 'slack', 'equality_expected',
    'equality_achieved',
]
SPECTRUM_COLUMNS = ['graph', 'target', 'matrix', 'source', 'index', 'value']
INVARIANT_COLUMNS = [
    'graph', 'target', 'invariant', 'exact_direct', 'exact_closed',
]
IMPROVEMENT_COLUMNS = [
    'n', 'r', 'cor32_upper', 'cor32_lower', 'cor34_upper', 'cor34_lower',
    'ok',
]


def round_sig(value, precision=12):
    """ Round a float to significant digits; non-finite -> None. """
    if isinstance(value, bool) or not isinstance(value, float):
        return value
    if not math.isfinite(value):
        return None
    return float(f"{value:.{precision}g}")


def rounded(obj, precision=12):
    """ Recursively round every float inside dicts and lists. """
    if isinstance(obj, dict):
        return {key: rounded(val, precision) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(val, precision) for val in obj]
    return round_sig(obj, precision)


##############
# ReportView #
##############
class ReportView:
    """ Turn a report dict into text in one of the output formats. """
    def __init__(self, fmt='json', precision=12):
        logger.debug("Initializing ReportView (%s)", fmt)
        self.fmt = fmt
        self.precision = precision


    def render(self, report):
        report = rounded(report, self.precision)
        if self.fmt == 'json':
            return json.dumps(report, indent=2) + "\n"
        frame = self.to_frame(report)
        if self.fmt == 'csv':
            return frame.to_csv(index=False, lineterminator='\n')
        text = frame.to_string(index=False, na_rep='-')
        if report.get('improvement'):
            grid = pd.DataFrame(report['improvement'],
                columns=IMPROVEMENT_COLUMNS)
            text += "\n\n" + grid.to_string(index=False)
        summary = report.get('summary')
        if summary:
            text += "\n\n" + self._summary_text(summary)
        return text + "\n"


    def to_frame(self, report):
        """ Flatten a report into the fixed-column frame of its command. """
        command = report['command']
        if command == 'spectrum':
            return pd.DataFrame(self._spectrum_rows(report),
                columns=SPECTRUM_COLUMNS)
        if command == 'invariants':
            return pd.DataFrame(self._invariant_rows(report),
                columns=INVARIANT_COLUMNS)
        return pd.DataFrame(self._bound_rows(report), columns=BOUND_COLUMNS)


    @staticmethod
    def _spectrum_rows(report):
        for entry in report['graphs']:
            for idx, value in enumerate(entry['values']):
                yield {
                    'graph': entry['graph'],
                    'target': entry['target'],
                    'matrix': entry['matrix'],
                    'source': entry['source'],
                    'index': idx + 1,
                    'value': value,
                }


    @staticmethod
    def _invariant_rows(report):
        for entry in report['graphs']:
            for name in ('LEL', 'IE'):
                yield {
                    'graph': entry['graph'],
                    'target': entry['target'],
                    'invariant': name,
                    'exact_direct': entry[name]['direct'],
                    'exact_closed': entry[name]['closed_form'],
                }


    @staticmethod
    def _bound_rows(report):
        for graph in report['graphs']:
            for row in graph['rows']:
                for check in row['bounds']:
                    yield {
                        'graph': graph['graph'],
                        'target': row['target'],
                        'invariant': row['invariant'],
                        'exact_direct': row['exact_direct'],
                        'exact_closed': row['exact_closed'],
                        'bound_id': check['bound_id'],
                        'side': check['side'],
                        'value': check['value'],
                        'slack': check['slack'],
                        'equality_expected': check['equality_expected'],
                        'equality_achieved': check['equality_achieved'],
                    }


    @staticmethod
    def _summary_text(summary):
        lines = [
            f"graphs: {summary['total']}",
            f"violations: {summary['violations']}",
            f"equality hits: {summary['equality_hits']}",
            f"equality misses: {summary['equality_misses']}",
            f"max closed-form deviation: "
            f"{summary['consistency_max_deviation']}",
        ]
        for error in summary.get('errors', []):
            lines.append(f"error: {error['spec']}: {error['message']}")
        if 'runtime_s' in summary:
            lines.append(f"runtime: {summary['runtime_s']} s")
        return "\n".join(lines)
