""" Graph families, the family-spec mini-grammar and graph generation.

    Grammar: name[:params]. Params are comma separated, positional
    (complete_bipartite:2,3) or keyed (random_regular:n=12,r=3,seed=42).
    Any integer may be an inclusive range a..b; ranges expand to the
    cartesian product in parameter order. The name 'standard' expands to
    the full verification suite.

    Random families use the configuration (stub-pairing) model driven by
    SplitMix64 and reject the whole sample on a self-loop, repeated edge
    or disconnected result.

    Last edited: October 17, 2026
"""

###########
# Imports #
###########
# Standard library
import logging
from dataclasses import dataclass
from itertools import combinations, product

# Custom
from models.exceptions import (
    FamilySpecError,
    GenerationExhausted,
    InfeasibleSpec
)
from models.graphmodel import from_edge_list, is_connected
from models.splitmix import SplitMix64

##########
# Logger #
##########
logger = logging.getLogger(__name__)

#############
# Constants #
#############
MAX_RESAMPLES = 1000

##################
# Family Classes #
##################
@dataclass(frozen=True)
class Complete:
    n: int

    @property
    def label(self):
        return f"complete:{self.n}"

    def validate(self):
        if self.n < 1:
            raise InfeasibleSpec(f"{self.label}: need n >= 1")

    def build(self, max_resamples):
        return from_edge_list(self.n, combinations(range(self.n), 2))


@dataclass(frozen=True)
class Cycle:
    n: int

    @property
    def label(self):
        return f"cycle:{self.n}"

    def validate(self):
        if self.n < 3:
            raise InfeasibleSpec(f"{self.label}: need n >= 3")

    def build(self, max_resamples):
        return from_edge_list(
            self.n, [(i, (i + 1) % self.n) for i in range(self.n)])


@dataclass(frozen=True)
class Path:
    n: int

    @property
    def label(self):
        return f"path:{self.n}"

    def validate(self):
        if self.n < 1:
            raise InfeasibleSpec(f"{self.label}: need n >= 1")

    def build(self, max_resamples):
        return from_edge_list(self.n, [(i, i + 1) for i in range(self.n - 1)])


@dataclass(frozen=True)
class Petersen:
    @property
    def label(self):
        return "petersen"

    def validate(self):
        pass

    def build(self, max_resamples):
        # Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint
        subsets = list(combinations(range(5), 2))
        pairs = [
            (i, j)
            for i, j in combinations(range(len(subsets)), 2)
            if not set(subsets[i]) & set(subsets[j])
        ]
        return from_edge_list(len(subsets), pairs)


@dataclass(frozen=True)
class CompleteBipartite:
    a: int
    b: int

    @property
    def label(self):
        return f"complete_bipartite:{self.a},{self.b}"

    def validate(self):
        if self.a < 1 or self.b < 1:
            raise InfeasibleSpec(f"{self.label}: need a, b >= 1")

    def build(self, max_resamples):
        return from_edge_list(
            self.a + self.b,
            [(i, self.a + j) for i in range(self.a) for j in range(self.b)]
        )


@dataclass(frozen=True)
class Star:
    k: int

    @property
    def label(self):
        return f"star:{self.k}"

    def validate(self):
        if self.k < 1:
            raise InfeasibleSpec(f"{self.label}: need k >= 1")

    def build(self, max_resamples):
        return CompleteBipartite(1, self.k).build(max_resamples)


@dataclass(frozen=True)
class RandomRegular:
    n: int
    r: int
    seed: int

    @property
    def label(self):
        return f"random_regular:n={self.n},r={self.r},seed={self.seed}"

    def validate(self):
        if (self.n * self.r) % 2 != 0:
            raise InfeasibleSpec(f"{self.label}: n*r must be even")
        if not 0 <= self.r < self.n:
            raise InfeasibleSpec(f"{self.label}: need 0 <= r < n")
        if (self.r == 0 and self.n > 1) or (self.r == 1 and self.n > 2):
            raise InfeasibleSpec(f"{self.label}: can never be connected")

    def build(self, max_resamples):
        rng = SplitMix64(self.seed)
        for attempt in range(1, max_resamples + 1):
            stubs = list(range(self.n)) * self.r
            rng.shuffle(stubs)
            g = _pair_stubs(self.n, stubs[0::2], stubs[1::2])
            if g is not None:
                logger.debug("%s accepted on draw %d", self.label, attempt)
                return g
        raise GenerationExhausted(self.label, max_resamples)


@dataclass(frozen=True)
class RandomBiregular:
    n1: int
    n2: int
    r1: int
    r2: int
    seed: int

    @property
    def label(self):
        return (f"random_biregular:n1={self.n1},n2={self.n2},"
            f"r1={self.r1},r2={self.r2},seed={self.seed}")

    def validate(self):
        if min(self.n1, self.n2, self.r1, self.r2) < 1:
            raise InfeasibleSpec(f"{self.label}: all parameters must be >= 1")
        if self.n1 * self.r1 != self.n2 * self.r2:
            raise InfeasibleSpec(f"{self.label}: need n1*r1 == n2*r2")
        if self.r1 > self.n2 or self.r2 > self.n1:
            raise InfeasibleSpec(f"{self.label}: need r1 <= n2 and r2 <= n1")

    def build(self, max_resamples):
        rng = SplitMix64(self.seed)
        side1 = list(range(self.n1)) * self.r1
        for attempt in range(1, max_resamples + 1):
            side2 = list(range(self.n1, self.n1 + self.n2)) * self.r2
            rng.shuffle(side2)
            g = _pair_stubs(self.n1 + self.n2, side1, side2)
            if g is not None:
                logger.debug("%s accepted on draw %d", self.label, attempt)
                return g
        raise GenerationExhausted(self.label, max_resamples)


def _pair_stubs(n, left, right):
    """ Pair stubs left[i] with right[i]; None on a loop, repeat or split. """
    edges = set()
    for u, v in zip(left, right):
        key = (min(u, v), max(u, v))
        if u == v or key in edges:
            return None
        edges.add(key)
    g = from_edge_list(n, edges)
    if not is_connected(g):
        return None
    return g


##############
# Generation #
##############
def generate(spec, max_resamples=MAX_RESAMPLES):
    """ Build the graph named by a family spec.

        Random families are deterministic functions of their seed.
        Raises InfeasibleSpec or GenerationExhausted.
    """
    logger.debug("Generating %s", spec.label)
    spec.validate()
    return spec.build(max_resamples).relabel(spec.label)


###########
# Grammar #
###########
# name -> (class, parameter names); 'seed' may be omitted
FAMILIES = {
    'complete': (Complete, ('n',)),
    'cycle': (Cycle, ('n',)),
    'path': (Path, ('n',)),
    'petersen': (Petersen, ()),
    'complete_bipartite': (CompleteBipartite, ('a', 'b')),
    'star': (Star, ('k',)),
    'random_regular': (RandomRegular, ('n', 'r', 'seed')),
    'random_biregular': (RandomBiregular, ('n1', 'n2', 'r1', 'r2', 'seed')),
}


def standard_suite(default_seed=0):
    """ The verification suite: complete, cycle, Petersen, random regular,
        complete bipartite and random biregular graphs.
    """
    s = default_seed
    specs = [Complete(n) for n in range(3, 8)]
    specs += [Cycle(n) for n in range(3, 11)]
    specs.append(Petersen())
    specs += [RandomRegular(12, 3, s + i) for i in range(1, 6)]
    specs += [RandomRegular(10, 4, s + i) for i in range(1, 6)]
    specs += [CompleteBipartite(2, 3), CompleteBipartite(2, 4),
              CompleteBipartite(3, 4)]
    specs += [RandomBiregular(4, 6, 3, 2, s + i) for i in range(1, 4)]
    return specs


def _parse_value(text, spec_text):
    """ Parse an integer or an inclusive range 'a..b' into a list. """
    try:
        if '..' in text:
            low, high = (int(part) for part in text.split('..', 1))
            if low > high:
                raise FamilySpecError(f"Empty range '{text}' in '{spec_text}'")
            return list(range(low, high + 1))
        return [int(text)]
    except ValueError:
        raise FamilySpecError(
            f"'{text}' is not an integer or range in '{spec_text}'") from None


def parse_family(text, default_seed=0):
    """ Parse one family spec string into a list of family objects. """
    text = text.strip()
    name, _, params = text.partition(':')
    name = name.strip().lower()

    if name == 'standard':
        return standard_suite(default_seed)
    if name not in FAMILIES:
        raise FamilySpecError(
            f"Unknown family '{name}'; choose from "
            f"{', '.join(sorted(FAMILIES))} or standard")

    cls, names = FAMILIES[name]
    values = {}
    positional = 0
    tokens = [tok.strip() for tok in params.split(',') if tok.strip()]
    for tok in tokens:
        if '=' in tok:
            key, _, raw = tok.partition('=')
            key = key.strip()
            if key not in names:
                raise FamilySpecError(
                    f"Unknown parameter '{key}' for {name}; "
                    f"expected {', '.join(names) or 'none'}")
        else:
            if positional >= len(names):
                raise FamilySpecError(f"Too many parameters in '{text}'")
            key, raw = names[positional], tok
            positional += 1
        if key in values:
            raise FamilySpecError(f"Parameter '{key}' given twice in '{text}'")
        values[key] = _parse_value(raw.strip(), text)

    if 'seed' in names and 'seed' not in values:
        values['seed'] = [default_seed]
    missing = [key for key in names if key not in values]
    if missing:
        raise FamilySpecError(
            f"Missing parameter(s) {', '.join(missing)} in '{text}'")

    return [
        cls(**dict(zip(names, combo)))
        for combo in product(*(values[key] for key in names))
    ]


def parse_families(texts, default_seed=0):
    """ Parse several spec strings (each may hold ';'-separated specs). """
    specs = []
    for text in texts:
        for part in text.split(';'):
            if part.strip():
                specs.extend(parse_family(part, default_seed))
    return specs
