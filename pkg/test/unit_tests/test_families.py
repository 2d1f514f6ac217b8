""" Automated tests for graph families, their grammar and SplitMix64. """

###########
# Imports #
###########
# Standard library
import pytest
import sys

# Third party
import networkx as nx

# Custom
sys.path.append("..")
from models import exceptions
from models import families
from models.graphmodel import classify, is_connected
from models.splitmix import SplitMix64

############
# SplitMix #
############
class Test_SplitMix64:
    def test_reference_output(self):
        # Seed 0 reference value of the SplitMix64 generator
        assert SplitMix64(0).next_u64() == 0xE220A8397B1DCDAF


    def test_same_seed_same_stream(self):
        # Arrange
        a = SplitMix64(42)
        b = SplitMix64(42)

        # Assert
        assert [a.next_u64() for _ in range(10)] == [
            b.next_u64() for _ in range(10)]


    def test_randbelow_range(self):
        # Arrange
        rng = SplitMix64(7)

        # Act
        draws = [rng.randbelow(5) for _ in range(500)]

        # Assert
        assert set(draws) == {0, 1, 2, 3, 4}


    def test_randbelow_rejects_zero(self):
        with pytest.raises(ValueError):
            SplitMix64(1).randbelow(0)


    def test_shuffle_is_permutation(self):
        # Arrange
        items = list(range(20))

        # Act
        SplitMix64(3).shuffle(items)

        # Assert
        assert sorted(items) == list(range(20))
        assert items != list(range(20))


###########
# Grammar #
###########
class Test_ParseFamily:
    def test_range(self):
        # Act
        specs = families.parse_family('complete:3..7')

        # Assert
        assert specs == [families.Complete(n) for n in range(3, 8)]
        assert specs[0].label == "complete:3"


    def test_keyed_params(self):
        # Act
        specs = families.parse_family('random_regular:n=12,r=3,seed=42')

        # Assert
        assert specs == [families.RandomRegular(12, 3, 42)]
        assert specs[0].label == "random_regular:n=12,r=3,seed=42"


    def test_default_seed(self):
        # Act
        specs = families.parse_family('random_regular:12,3', default_seed=9)

        # Assert
        assert specs == [families.RandomRegular(12, 3, 9)]


    def test_product_of_ranges(self):
        # Act
        specs = families.parse_family('complete_bipartite:2..3,3..4')

        # Assert
        assert len(specs) == 4


    def test_petersen_and_standard(self):
        # Assert
        assert families.parse_family('petersen') == [families.Petersen()]
        assert len(families.parse_family('standard')) == 30


    @pytest.mark.parametrize("text", [
        'dodecahedron',
        'complete:3,4',
        'complete:7..3',
        'complete:x',
        'cycle:k=4',
        'cycle',
        'complete_bipartite:2,a=3,3',
    ])
    def test_errors(self, text):
        with pytest.raises(exceptions.FamilySpecError):
            families.parse_family(text)


    def test_parse_families_splits_on_semicolon(self):
        # Act
        specs = families.parse_families(['complete:3; cycle:4', 'petersen'])

        # Assert
        assert [spec.label for spec in specs] == [
            'complete:3', 'cycle:4', 'petersen']


##############
# Generation #
##############
class Test_Generate:
    def test_petersen(self):
        # Act
        g = families.generate(families.Petersen())

        # Assert
        assert (g.n, g.m) == (10, 15)
        assert classify(g).r == 3
        h = nx.Graph(list(g.edges))
        assert nx.is_isomorphic(h, nx.petersen_graph())


    def test_random_regular(self):
        # Act
        g = families.generate(families.RandomRegular(12, 3, 1))

        # Assert
        assert g.label == "random_regular:n=12,r=3,seed=1"
        assert set(g.degrees) == {3}
        assert is_connected(g)


    def test_random_regular_is_deterministic(self):
        # Arrange
        spec = families.RandomRegular(10, 4, 5)

        # Assert
        assert families.generate(spec) == families.generate(spec)


    def test_random_biregular(self):
        # Act
        g = families.generate(families.RandomBiregular(4, 6, 3, 2, 1))

        # Assert
        cls = classify(g)
        assert cls.is_semiregular
        assert (cls.r1, cls.r2) == (3, 2)
        assert cls.connected


    @pytest.mark.parametrize("spec", [
        families.RandomRegular(5, 3, 0),
        families.RandomRegular(4, 4, 0),
        families.RandomRegular(6, 1, 0),
        families.RandomBiregular(4, 6, 3, 3, 0),
        families.Cycle(2),
        families.CompleteBipartite(0, 3),
    ])
    def test_infeasible(self, spec):
        with pytest.raises(exceptions.InfeasibleSpec):
            families.generate(spec)


    def test_exhausted(self):
        with pytest.raises(exceptions.GenerationExhausted):
            families.generate(families.RandomRegular(12, 3, 1),
                max_resamples=0)


    def test_standard_suite_builds(self):
        # Act
        graphs = [families.generate(spec) for spec in families.standard_suite()]

        # Assert
        assert len(graphs) == 30
        assert all(is_connected(g) for g in graphs)
