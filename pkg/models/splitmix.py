""" Seeded 64-bit SplitMix generator for reproducible graph sampling.

    State update: state += 0x9E3779B97F4A7C15 (mod 2**64). Output mixes
    the new state with two xor-shift-multiply rounds and a final
    xor-shift:

        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
        z =  z ^ (z >> 31)

    All arithmetic is on Python integers masked to 64 bits, so a seed
    yields the same stream on every platform.

    Last edited: October 17, 2026
"""

#############
# Constants #
#############
MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


############
# SplitMix #
############
class SplitMix64:
    """ SplitMix64 stream with unbiased bounded draws and shuffling. """
    def __init__(self, seed=0):
        self.state = seed & MASK64


    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)


    def randbelow(self, k):
        """ Uniform integer in [0, k) by rejection of the biased tail. """
        if k <= 0:
            raise ValueError(f"randbelow needs k > 0, got {k}")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k


    def shuffle(self, items):
        """ In-place Fisher-Yates shuffle. """
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]
