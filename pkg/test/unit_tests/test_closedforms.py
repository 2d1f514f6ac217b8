""" Automated tests for the closed-form spectral maps. """

###########
# Imports #
###########
# Standard library
import math
import pytest
import sys

# Custom
sys.path.append("..")
from models import closedforms
from models import exceptions
from models.derivedgraphs import derive
from models.families import (Complete, CompleteBipartite, Cycle, Petersen,
    RandomBiregular, RandomRegular, Star, generate)
from models.graphmodel import classify
from models.invariants import ie, lel
from models.spectral import Spectrum, SpectrumKind, spectrum

LAP = SpectrumKind.LAPLACIAN
SIG = SpectrumKind.SIGNLESS

############
# Fixtures #
############
@pytest.fixture
def k3_params():
    return closedforms.BaseParams(n=3, m=3, r=2)

@pytest.fixture
def k3_lap():
    return Spectrum.from_values(LAP, [3, 3, 0])

@pytest.fixture
def k3_sig():
    return Spectrum.from_values(SIG, [4, 1, 1])

@pytest.fixture
def k23_params():
    return closedforms.BaseParams(n=5, m=6, r1=3, r2=2)

@pytest.fixture
def k23_lap():
    return Spectrum.from_values(LAP, [5, 3, 2, 2, 0])

@pytest.fixture
def k23_sig():
    return Spectrum.from_values(SIG, [5, 3, 2, 2, 0])


REGULAR = [Complete(3), Complete(5), Cycle(5), Cycle(6), Petersen(),
    RandomRegular(12, 3, 1), RandomRegular(10, 4, 2)]
SEMIREGULAR = [CompleteBipartite(2, 3), CompleteBipartite(3, 4), Cycle(8),
    RandomBiregular(4, 6, 3, 2, 1)]


##############
# BaseParams #
##############
class Test_BaseParams:
    def test_inconsistent_regular(self):
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.BaseParams(n=3, m=4, r=2)


    def test_inconsistent_semiregular(self):
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.BaseParams(n=5, m=7, r1=3, r2=2)


    def test_needs_degrees(self):
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.BaseParams(n=3, m=3)


    def test_from_class(self):
        # Arrange
        g = generate(Cycle(4))
        cls = classify(g)

        # Act
        regular = closedforms.BaseParams.from_class(g, cls, 'rgraph')
        line = closedforms.BaseParams.from_class(g, cls, 'line')

        # Assert
        assert regular == closedforms.BaseParams(n=4, m=4, r=2)
        assert line == closedforms.BaseParams(n=4, m=4, r1=2, r2=2)


    def test_regular_rejects_semiregular(self):
        # Arrange
        g = generate(CompleteBipartite(2, 3))

        # Assert
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.BaseParams.regular(g, classify(g))


################
# Known Values #
################
class Test_KnownSpectra:
    def test_rgraph_l(self, k3_lap, k3_params):
        # Act
        sp = closedforms.rgraph_l_spectrum(k3_lap, k3_params)

        # Assert
        root = math.sqrt(13)
        expected = [(7 + root) / 2] * 2 + [4.0] + [(7 - root) / 2] * 2 + [0.0]
        assert sp.values == pytest.approx(expected)
        assert sp.kind is LAP


    def test_rgraph_q(self, k3_sig, k3_params):
        # Act
        sp = closedforms.rgraph_q_spectrum(k3_sig, k3_params)

        # Assert
        expected = sorted([4 + 2 * math.sqrt(2), 4 - 2 * math.sqrt(2)]
            + [(5 + math.sqrt(5)) / 2] * 2 + [(5 - math.sqrt(5)) / 2] * 2,
            reverse=True)
        assert sp.values == pytest.approx(expected)


    def test_qgraph_q_on_triangle(self, k3_sig, k3_params):
        # R(K3) and Q(K3) share the same Q-spectrum
        assert closedforms.qgraph_q_spectrum(k3_sig, k3_params).values == (
            pytest.approx(closedforms.rgraph_q_spectrum(k3_sig, k3_params).values))


    def test_line_l(self, k23_lap, k23_params):
        # Act
        sp = closedforms.line_l_spectrum(k23_lap, k23_params)

        # Assert
        assert sp.values == (5.0, 5.0, 3.0, 3.0, 2.0, 0.0)


    def test_line_q(self, k23_sig, k23_params):
        # Act
        sp = closedforms.line_q_spectrum(k23_sig, k23_params)

        # Assert
        assert sp.values == (6.0, 4.0, 3.0, 3.0, 1.0, 1.0)


    def test_line_l_even_cycle(self):
        # Arrange
        sp = Spectrum.from_values(LAP, [4, 2, 2, 0])
        params = closedforms.BaseParams(n=4, m=4, r1=2, r2=2)

        # Assert
        assert closedforms.line_l_spectrum(sp, params).values == (
            4.0, 2.0, 2.0, 0.0)


################
# Direct Match #
################
class Test_MatchesEigensolver:
    @pytest.mark.parametrize("spec", REGULAR, ids=lambda spec: spec.label)
    @pytest.mark.parametrize("target", ['rgraph', 'qgraph'])
    @pytest.mark.parametrize("kind", [LAP, SIG])
    def test_regular_maps(self, spec, target, kind):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g), target)

        # Act
        mapped = closedforms.SPECTRAL_MAPS[(target, kind)](
            spectrum(g, kind), params)
        direct = spectrum(derive(g, target), kind)

        # Assert
        assert len(mapped) == g.n + g.m
        assert mapped.deviation(direct) < 1e-8


    @pytest.mark.parametrize("spec", SEMIREGULAR, ids=lambda spec: spec.label)
    @pytest.mark.parametrize("kind", [LAP, SIG])
    def test_line_maps(self, spec, kind):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g), 'line')

        # Act
        mapped = closedforms.SPECTRAL_MAPS[('line', kind)](
            spectrum(g, kind), params)
        direct = spectrum(derive(g, 'line'), kind)

        # Assert
        assert len(mapped) == g.m
        assert mapped.deviation(direct) < 1e-8


    @pytest.mark.parametrize("spec", REGULAR, ids=lambda spec: spec.label)
    def test_trace_identities(self, spec):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g))
        r = params.r
        line_edges = g.n * r * (r - 1) // 2

        # Act
        rl = closedforms.rgraph_l_spectrum(spectrum(g, LAP), params)
        ql = closedforms.qgraph_l_spectrum(spectrum(g, LAP), params)

        # Assert: eigenvalue sums are twice the edge counts
        assert rl.total == pytest.approx(6 * g.m)
        assert ql.total == pytest.approx(2 * (2 * g.m + line_edges))


class Test_RootPairs:
    @pytest.mark.parametrize("name", sorted(closedforms.QUADRATIC_MAPS))
    def test_vieta(self, name):
        # Arrange
        g = generate(Petersen())
        qmap = closedforms.QUADRATIC_MAPS[name]
        params = closedforms.BaseParams(n=10, m=15, r=3)
        sp = spectrum(g, qmap.kind)

        # Act
        pairs = closedforms.root_pairs(name, sp, params)

        # Assert
        for (plus, minus), x in zip(pairs, sp.values):
            assert plus >= minus
            assert plus + minus == pytest.approx(qmap.centre(3, x))
            assert plus * minus == pytest.approx(qmap.product(3, x), abs=1e-9)


##########
# Errors #
##########
class Test_MapErrors:
    def test_kind_mismatch(self, k3_sig, k3_params):
        with pytest.raises(exceptions.KindMismatch):
            closedforms.rgraph_l_spectrum(k3_sig, k3_params)


    def test_bad_length(self, k3_params):
        with pytest.raises(exceptions.BadLength):
            closedforms.rgraph_l_spectrum(
                Spectrum.from_values(LAP, [3, 0]), k3_params)


    def test_regular_map_needs_regular_params(self, k23_lap, k23_params):
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.rgraph_l_spectrum(k23_lap, k23_params)


    def test_line_map_rejects_star(self):
        # Arrange
        g = generate(Star(3))
        params = closedforms.BaseParams.from_class(g, classify(g), 'line')

        # Assert
        with pytest.raises(exceptions.InapplicableMap):
            closedforms.line_l_spectrum(spectrum(g, LAP), params)


    def test_sqrt_clamps_and_rejects(self):
        # Assert
        assert closedforms._sqrt(-1e-12) == 0.0
        with pytest.raises(exceptions.NegativeDiscriminant):
            closedforms._sqrt(-1.0)


##############################
# Characteristic Polynomials #
##############################
class Test_CharPoly:
    def test_known_values(self, k3_lap, k3_params):
        # Assert
        assert closedforms.char_poly_eval('L∘R', 1.0, k3_lap, k3_params) == (
            pytest.approx(-27.0))
        assert closedforms.char_poly_eval('L∘R', 0.0, k3_lap, k3_params) == 0.0


    @pytest.mark.parametrize("kind", list(closedforms.CharPolyKind))
    @pytest.mark.parametrize("spec", [Complete(3), Cycle(4), Petersen()],
        ids=lambda spec: spec.label)
    @pytest.mark.parametrize("x", [-1.0, 0.5, 1.0, 3.0, 10.0])
    def test_matches_spectrum_product(self, kind, spec, x):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g))
        sp = spectrum(g, closedforms.CHAR_POLY_INPUT[kind])
        target = 'rgraph' if kind.value.endswith('R') else 'qgraph'
        derived = closedforms.SPECTRAL_MAPS[(target, sp.kind)](sp, params)

        # Act
        value = closedforms.char_poly_eval(kind, x, sp, params)

        # Assert
        expected = closedforms.spectrum_product(x, derived)
        assert value == pytest.approx(expected, rel=1e-7, abs=1e-6)


    def test_root_at_constant_eigenvalue(self):
        # Arrange
        g = generate(Petersen())
        params = closedforms.BaseParams(n=10, m=15, r=3)

        # Assert
        assert closedforms.char_poly_eval(
            'Q∘R', 2.0, spectrum(g, SIG), params) == 0.0


    def test_kind_mismatch(self, k3_sig, k3_params):
        with pytest.raises(exceptions.KindMismatch):
            closedforms.char_poly_eval('L∘R', 1.0, k3_sig, k3_params)


########################
# Collapsed Invariants #
########################
class Test_CollapsedInvariant:
    def test_triangle_rgraph(self, k3_lap, k3_sig, k3_params):
        # Assert
        assert closedforms.collapsed_invariant(
            'rgraph', 'LEL', k3_lap, k3_params) == pytest.approx(
            2 + 2 * math.sqrt(13))
        assert closedforms.collapsed_invariant(
            'rgraph', 'IE', k3_sig, k3_params) == pytest.approx(
            math.sqrt(8 + 4 * math.sqrt(2)) + 2 * math.sqrt(5 + 2 * math.sqrt(5)))


    def test_k23_line(self, k23_lap, k23_sig, k23_params):
        # Assert
        assert closedforms.collapsed_invariant(
            'line', 'LEL', k23_lap, k23_params) == pytest.approx(
            2 * math.sqrt(5) + 2 * math.sqrt(3) + math.sqrt(2))
        assert closedforms.collapsed_invariant(
            'line', 'IE', k23_sig, k23_params) == pytest.approx(
            math.sqrt(6) + 2 * math.sqrt(3) + 4)


    @pytest.mark.parametrize("spec", REGULAR, ids=lambda spec: spec.label)
    @pytest.mark.parametrize("target", ['rgraph', 'qgraph'])
    def test_regular_matches_mapped(self, spec, target):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g), target)

        # Assert
        for name, func, kind in (('LEL', lel, LAP), ('IE', ie, SIG)):
            sp = spectrum(g, kind)
            mapped = closedforms.SPECTRAL_MAPS[(target, kind)](sp, params)
            assert closedforms.collapsed_invariant(
                target, name, sp, params) == pytest.approx(
                func(mapped).value, abs=1e-7)


    @pytest.mark.parametrize("spec", SEMIREGULAR, ids=lambda spec: spec.label)
    def test_line_matches_mapped(self, spec):
        # Arrange
        g = generate(spec)
        params = closedforms.BaseParams.from_class(g, classify(g), 'line')

        # Assert
        for name, func, kind in (('LEL', lel, LAP), ('IE', ie, SIG)):
            sp = spectrum(g, kind)
            mapped = closedforms.SPECTRAL_MAPS[('line', kind)](sp, params)
            assert closedforms.collapsed_invariant(
                'line', name, sp, params) == pytest.approx(
                func(mapped).value, abs=1e-7)
