"""SplitMix64 in counter mode.

Output k for seed s is ``mix(s + (k + 1) * GAMMA mod 2^64)`` with the
standard SplitMix64 finaliser, so any element of the stream can be computed
without generating its predecessors.  That is what lets parallel workers
split a random search by counter range and still reproduce a serial run.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64(seed: int, counter: int) -> int:
    return mix64((seed & MASK64) + (counter + 1) * GAMMA)


def random_bits(seed: int, counter: int, bits: int) -> int:
    """Top ``bits`` bits (0 <= bits <= 64) of stream element ``counter``."""
    if bits == 0:
        return 0
    return splitmix64(seed, counter) >> (64 - bits)
