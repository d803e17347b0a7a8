"""SplitMix64, a public-domain 64-bit generator (Steele, Lea and Flood).

State update: ``state += 0x9E3779B97F4A7C15 (mod 2^64)``; output is the
state passed through the finaliser

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

It is trivial to port, so walk traces reproduce bit-for-bit in any language.
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (MASK64 + 1) - (MASK64 + 1) % bound
        while True:
            r = self.next_u64()
            if r < limit:
                return r % bound


def child_seed(seed: int, index: int) -> int:
    """Seed for the ``index``-th independent stream: the first SplitMix64
    output seeded with ``seed XOR index``."""
    return SplitMix64((seed ^ index) & MASK64).next_u64()
