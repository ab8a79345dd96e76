"""
Seeded SplitMix64 stream.

The generator and the integer mapping are part of the output contract: a
rendering is reproducible from its seed on any platform, so neither may change.

    state  <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z      <- state
    z      <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z      <- (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output <- z ^ (z >> 31)

Bounded integers use rejection sampling on the raw 64-bit output so no value
of a range is favoured.
"""
import secrets

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_RANGE = 1 << 64
SEED_MIN = -(1 << 63)
SEED_MAX = MASK64


class RngStream:
    """
    Single-owner pseudo-random stream.

    Examples::

        >>> a, b = RngStream.from_seed(42), RngStream.from_seed(42)
        >>> [a.next_u64() for _ in range(3)] == [b.next_u64() for _ in range(3)]
        True
    """

    __slots__ = ('seed', 'state', 'draws')

    def __init__(self, seed: int):
        self.seed = check_seed(seed)
        self.state = self.seed & MASK64
        self.draws = 0

    @classmethod
    def from_seed(cls, seed: int) -> 'RngStream':
        return cls(seed)

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        self.draws += 1
        return z ^ (z >> 31)

    def next_int_inclusive(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        if lo > hi:
            raise ValueError(f'empty range: lo={lo} > hi={hi}')
        n = hi - lo + 1
        if n > _RANGE:
            raise ValueError(f'range of {n} values exceeds the 64-bit generator')
        limit = _RANGE - (_RANGE % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return lo + x % n

    def __repr__(self):
        return f'RngStream(seed={self.seed}, draws={self.draws})'


def check_seed(seed) -> int:
    """
    Accept any signed or unsigned 64-bit integer.

    Examples::

        >>> check_seed(-1), check_seed(2 ** 64 - 1)
        (-1, 18446744073709551615)
    """
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ValueError(f'seed must be an integer, got {seed!r}')
    seed = int(seed)
    if not SEED_MIN <= seed <= SEED_MAX:
        raise ValueError(f'seed must lie in [{SEED_MIN}, {SEED_MAX}], got {seed}')
    return seed


def from_seed(seed: int) -> RngStream:
    return RngStream.from_seed(seed)


def next_int_inclusive(g: RngStream, lo: int, hi: int) -> int:
    return g.next_int_inclusive(lo, hi)


def fresh_seed() -> int:
    """Seed drawn from OS entropy, for runs that did not ask for one."""
    return secrets.randbits(63)
