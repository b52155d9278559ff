"""Deterministic pseudo-random generator for replayable sweeps.

splitmix64 with the standard constants: state advances by the golden-ratio
increment 0x9E3779B97F4A7C15 and each output is finalized with the
xor-shift/multiply steps (0xBF58476D1CE4E5B9, 0x94D049BB133111EB).  The
sequence for a given seed is fixed by this file alone, independent of
Python's random module, so failure witnesses replay anywhere.
"""

from fractions import Fraction

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform in [0, n) by modulo; bias is irrelevant for sweeps."""
        return self.next_u64() % n

    def rational(self, span: int = 3, max_den: int = 3) -> Fraction:
        """Small exact rational: numerator in [-span, span], denominator
        in [1, max_den]."""
        num = self.below(2 * span + 1) - span
        den = self.below(max_den) + 1
        return Fraction(num, den)


def derive(seed: int, *branch: int) -> int:
    """Stable sub-seed for a branch of a sweep (case index, suite index)."""
    x = SplitMix64(seed).next_u64()
    for b in branch:
        x = SplitMix64(x ^ (b & _MASK)).next_u64()
    return x
