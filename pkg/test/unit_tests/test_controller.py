""" Automated tests for the command-line application. """

###########
# Imports #
###########
# Standard library
import io
import json
import math
import pytest
import sys

# Third party
import jsonschema

# Custom
sys.path.append("..")
import app_assets
from controller import Application
from menus import DERIVED
from models.families import RandomRegular, generate
from models.graphmodel import read_edge_list
from views.reportview import BOUND_COLUMNS

############
# Fixtures #
############
@pytest.fixture
def home(mocker, tmp_path):
    mocker.patch('pathlib.Path.home', return_value=tmp_path)
    return tmp_path

@pytest.fixture
def schema():
    with open(app_assets.SCHEMA.REPORT_SCHEMA_JSON) as f:
        return json.load(f)


def run(argv):
    out = io.StringIO()
    status = Application(argv, stdout=out).run()
    return status, out.getvalue()


############
# Spectrum #
############
class Test_Spectrum:
    def test_petersen(self, home, schema):
        # Act
        status, text = run(['spectrum', '--family', 'petersen'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        assert status == 0
        entry = data['graphs'][0]
        assert entry['values'][:4] == pytest.approx([5.0] * 4)
        assert entry['multiplicities'][0][1] == 4
        assert entry['source'] == 'DirectEigen'


    def test_closed_form_line(self, home, schema):
        # Act
        status, text = run(['spectrum', '--family', 'complete_bipartite:2,3',
            '--derived', 'line', '--closed-form'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        assert status == 0
        assert data['graphs'][0]['values'] == pytest.approx(
            [5, 5, 3, 3, 2, 0], abs=1e-9)
        assert data['graphs'][0]['source'] == 'ClosedForm'


    def test_incidence_singular_values(self, home):
        # Act
        status, text = run(['spectrum', '--family', 'complete:3',
            '--matrix', 'incidence'])

        # Assert
        assert status == 0
        assert json.loads(text)['graphs'][0]['values'] == pytest.approx(
            [2.0, 1.0, 1.0])


    def test_closed_form_needs_derived(self, home):
        with pytest.raises(SystemExit) as e:
            run(['spectrum', '--family', 'complete:3', '--closed-form'])
        assert e.value.code == 2


##############
# Invariants #
##############
class Test_Invariants:
    def test_rgraph_of_triangle(self, home, schema):
        # Act
        status, text = run(['invariants', '--family', 'complete:3',
            '--derived', 'rgraph'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        lel = data['graphs'][0]['LEL']
        assert status == 0
        assert lel['direct'] == pytest.approx(2 + 2 * math.sqrt(13), abs=1e-10)
        assert lel['closed_form'] == pytest.approx(lel['direct'], abs=1e-10)


    @pytest.mark.parametrize("target", DERIVED)
    def test_every_target_of_c4(self, home, target):
        # Act
        status, text = run(['invariants', '--family', 'cycle:4',
            '--derived', target])
        entry = json.loads(text)['graphs'][0]

        # Assert
        assert status == 0
        for name in ('LEL', 'IE'):
            if target == 'base':
                assert entry[name]['closed_form'] is None
            else:
                assert entry[name]['closed_form'] == pytest.approx(
                    entry[name]['direct'], abs=1e-9)


    def test_line_of_triangle_is_rejected(self, home, capsys):
        # Act
        status, text = run(['invariants', '--family', 'complete:3',
            '--derived', 'line'])

        # Assert
        assert status == 2
        assert text == ""
        assert "Not Applicable" in capsys.readouterr().err


    def test_bad_edge_list(self, home, tmp_path, capsys):
        # Arrange
        filepath = tmp_path / 'bad.txt'
        filepath.write_text("3\n0 1\n1 1\n")

        # Act
        status, _ = run(['invariants', '--input', str(filepath)])

        # Assert
        assert status == 2
        assert "Line 3" in capsys.readouterr().err


    def test_missing_file(self, home, tmp_path, capsys):
        # Act
        status, _ = run(['invariants', '--input', str(tmp_path / 'none.txt')])

        # Assert
        assert status == 2
        assert "File Not Found" in capsys.readouterr().err


    def test_needs_a_source(self, home):
        with pytest.raises(SystemExit) as e:
            run(['invariants'])
        assert e.value.code == 2


##########
# Bounds #
##########
class Test_Bounds:
    def test_csv_header(self, home):
        # Act
        status, text = run(['bounds', '--family', 'complete:3',
            '--format', 'csv'])

        # Assert
        assert status == 0
        assert text.splitlines()[0] == ','.join(BOUND_COLUMNS)


    def test_derived_filters_rows(self, home):
        # Act
        _, text = run(['bounds', '--family', 'complete:4',
            '--derived', 'qgraph'])

        # Assert
        rows = json.loads(text)['graphs'][0]['rows']
        assert {row['target'] for row in rows} == {'qgraph'}


    def test_irregular_graph(self, home, schema):
        # Act
        status, text = run(['bounds', '--family', 'path:4'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        assert status == 0
        assert data['graphs'][0]['rows'] == []
        assert data['graphs'][0]['findings'][0]['kind'] == 'Inapplicable'


    def test_violation_exit_status(self, home):
        # A negative tolerance turns every tight bound into a violation
        status, _ = run(['bounds', '--family', 'complete:3', '--tol', '-1'])

        # Assert
        assert status == 1


##########
# Verify #
##########
class Test_Verify:
    def test_complete_graphs(self, home, schema):
        # Act
        status, text = run(['verify', '--family', 'complete:3..7'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        assert status == 0
        assert data['summary']['total'] == 5
        assert data['summary']['violations'] == 0
        assert data['summary']['equality_hits'] == 40
        assert 'runtime_s' not in data['summary']


    def test_output_is_reproducible(self, home):
        # Arrange
        argv = ['verify', '--family', 'cycle:3..6;petersen', '--workers', '2']

        # Assert
        assert run(argv)[1] == run(argv)[1]


    def test_improvement_and_timing(self, home, schema):
        # Act
        status, text = run(['verify', '--family', 'complete:3',
            '--improvement', '--timing'])
        data = json.loads(text)

        # Assert
        jsonschema.validate(data, schema)
        assert status == 0
        assert all(row['ok'] for row in data['improvement'])
        assert data['summary']['runtime_s'] >= 0


    def test_table_format(self, home):
        # Act
        status, text = run(['verify', '--family', 'complete:3',
            '--format', 'table', '--improvement'])

        # Assert
        assert status == 0
        assert 'violations: 0' in text
        assert 'cor32_upper' in text


    def test_settings_file_and_flag_precedence(self, home, tmp_path):
        # Arrange
        filepath = tmp_path / 'settings.json'
        filepath.write_text(json.dumps({'format': 'csv'}))

        # Act
        _, csv_text = run(['verify', '--family', 'complete:3',
            '--settings', str(filepath)])
        _, json_text = run(['verify', '--family', 'complete:3',
            '--settings', str(filepath), '--format', 'json'])

        # Assert
        assert csv_text.startswith(','.join(BOUND_COLUMNS))
        assert json.loads(json_text)['command'] == 'verify'


    def test_save_settings(self, home):
        # Act
        run(['verify', '--family', 'complete:3', '--format', 'csv',
            '--save-settings'])
        _, text = run(['verify', '--family', 'complete:3'])

        # Assert
        filepath = home / 'derived_graph_energy' / 'settings.json'
        assert json.loads(filepath.read_text())['format'] == 'csv'
        assert text.startswith(','.join(BOUND_COLUMNS))


    def test_overrides_are_not_saved_by_default(self, home):
        # Act
        run(['verify', '--family', 'complete:3', '--format', 'csv'])

        # Assert
        assert not (home / 'derived_graph_energy' / 'settings.json').exists()


    def test_writes_log_file(self, home):
        # Act
        run(['verify', '--family', 'complete:3'])

        # Assert
        log = home / 'derived_graph_energy' / 'derived_graph_energy.log.jsonl'
        first = json.loads(log.read_text().splitlines()[0])
        assert {'timestamp', 'level', 'logger', 'message'} <= first.keys()


############
# Generate #
############
class Test_Generate:
    def test_write_then_read(self, home, tmp_path):
        # Arrange
        filepath = tmp_path / 'rr.txt'

        # Act
        status, _ = run(['generate', '--family',
            'random_regular:n=12,r=3,seed=42', '--output', str(filepath)])

        # Assert
        assert status == 0
        assert read_edge_list(filepath) == generate(RandomRegular(12, 3, 42))


    def test_derived_graph(self, home):
        # Act
        status, text = run(['generate', '--family', 'complete:3',
            '--derived', 'rgraph'])

        # Assert
        lines = [line for line in text.splitlines() if not line.startswith('#')]
        assert status == 0
        assert lines[0] == '6'
        assert len(lines) == 1 + 9


    def test_needs_one_graph(self, home):
        with pytest.raises(SystemExit) as e:
            run(['generate', '--family', 'complete:3..4'])
        assert e.value.code == 2


###########
# Version #
###########
class Test_Version:
    def test_version(self, home, capsys):
        with pytest.raises(SystemExit) as e:
            Application(['--version'])
        assert e.value.code == 0
        assert '1.0.0' in capsys.readouterr().out


    @pytest.mark.parametrize("flag, text", [
        ('--readme', '<h1>Derived Graph Energy</h1>'),
        ('--changelog', '1.0.0'),
    ])
    def test_bundled_documents(self, home, capsys, flag, text):
        with pytest.raises(SystemExit) as e:
            Application([flag])
        assert e.value.code == 0
        assert text in capsys.readouterr().out
