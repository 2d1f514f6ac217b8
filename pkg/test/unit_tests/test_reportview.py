""" Automated tests for the report view. """

###########
# Imports #
###########
# Standard library
import json
import pytest
import sys

# Custom
sys.path.append("..")
from views.reportview import BOUND_COLUMNS, ReportView, round_sig, rounded

############
# Fixtures #
############
@pytest.fixture
def bounds_report():
    return {
        'command': 'bounds',
        'graphs': [{
            'graph': 'complete:3',
            'rows': [{
                'target': 'rgraph',
                'invariant': 'LEL',
                'exact_direct': 9.211102550927979,
                'exact_closed': 9.211102550927978,
                'bounds': [{
                    'bound_id': 'THM31_LOWER',
                    'side': 'lower',
                    'value': 8.928203230275509,
                    'applicable': True,
                    'reason': '',
                    'slack': 0.2828993206524703,
                    'equality_expected': False,
                    'equality_achieved': False,
                }, {
                    'bound_id': 'THM33_LOWER',
                    'side': 'lower',
                    'value': float('nan'),
                    'applicable': False,
                    'reason': 'negative radicand',
                    'slack': float('nan'),
                    'equality_expected': False,
                    'equality_achieved': False,
                }],
            }],
        }],
        'summary': {
            'total': 1,
            'violations': 0,
            'equality_hits': 0,
            'equality_misses': 0,
            'consistency_max_deviation': 1.2e-15,
            'per_bound': {},
            'errors': [],
        },
    }


############
# Rounding #
############
class Test_Rounding:
    def test_round_sig(self):
        # Assert
        assert round_sig(1 / 3) == 0.333333333333
        assert round_sig(2 / 3, precision=4) == 0.6667
        assert round_sig(float('nan')) is None
        assert round_sig(float('inf')) is None
        assert round_sig(3) == 3
        assert round_sig(True) is True


    def test_rounded_recurses(self):
        # Assert
        assert rounded({'a': [1 / 3, {'b': float('nan')}]}, 3) == {
            'a': [0.333, {'b': None}]}


##########
# Render #
##########
class Test_ReportView:
    def test_json(self, bounds_report):
        # Act
        text = ReportView('json').render(bounds_report)
        data = json.loads(text)

        # Assert
        check = data['graphs'][0]['rows'][0]['bounds'][0]
        assert check['value'] == 8.92820323028
        assert data['graphs'][0]['rows'][0]['bounds'][1]['slack'] is None
        assert text.endswith("}\n")
        assert 'NaN' not in text


    def test_json_is_deterministic(self, bounds_report):
        # Assert
        view = ReportView('json')
        assert view.render(bounds_report) == view.render(bounds_report)


    def test_csv(self, bounds_report):
        # Act
        lines = ReportView('csv').render(bounds_report).splitlines()

        # Assert
        assert lines[0] == ','.join(BOUND_COLUMNS)
        assert lines[0] == ('graph,target,invariant,exact_direct,exact_closed,'
            'bound_id,side,value,slack,equality_expected,equality_achieved')
        assert len(lines) == 3
        assert lines[1].startswith('complete:3,rgraph,LEL,')
        assert ',THM33_LOWER,lower,,,' in lines[2]


    def test_table(self, bounds_report):
        # Act
        text = ReportView('table').render(bounds_report)

        # Assert
        assert 'THM31_LOWER' in text
        assert 'violations: 0' in text
        assert 'graphs: 1' in text


    def test_spectrum_frame(self):
        # Arrange
        report = {'command': 'spectrum', 'graphs': [{
            'graph': 'complete:3', 'target': 'base', 'matrix': 'laplacian',
            'source': 'DirectEigen', 'values': [3.0, 3.0, 0.0],
        }]}

        # Act
        frame = ReportView('csv').to_frame(report)

        # Assert
        assert list(frame['index']) == [1, 2, 3]
        assert list(frame['value']) == [3.0, 3.0, 0.0]


    def test_invariant_frame(self):
        # Arrange
        report = {'command': 'invariants', 'graphs': [{
            'graph': 'complete:3', 'target': 'base',
            'LEL': {'direct': 3.4641, 'closed_form': None},
            'IE': {'direct': 4.0, 'closed_form': None},
        }]}

        # Act
        frame = ReportView('csv').to_frame(report)

        # Assert
        assert list(frame['invariant']) == ['LEL', 'IE']
        assert list(frame['exact_direct']) == [3.4641, 4.0]
