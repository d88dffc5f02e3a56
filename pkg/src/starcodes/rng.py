"""
Seeded randomness for the randomized suites.

The generator is SplitMix64, so a run is reproducible from its seed alone:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- state
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2^64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2^64)
    output z ^ (z >> 31)

``below(m)`` returns ``next() % m``.
"""

from __future__ import annotations

from .code import LinearCode, code_from_generator
from .errors import InvalidParams
from .gf import Field
from .matrix import GFMatrix

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        return self.next() % m

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def choice(self, seq):
        return seq[self.below(len(seq))]


def random_matrix(field: Field, rows: int, cols: int, rng: SplitMix64) -> GFMatrix:
    return GFMatrix(field, ([rng.below(field.q) for _ in range(cols)] for _ in range(rows)), cols,
                    check=False)


def random_code(field: Field, n: int, k: int, rng: SplitMix64, full_support: bool = False,
                max_tries: int = 10_000) -> LinearCode:
    """A random k-dimensional code of length n by rejection sampling of generators."""
    if not 0 <= k <= n:
        raise InvalidParams(f"need 0 <= k <= n, got n={n}, k={k}")
    if full_support and k == 0:
        raise InvalidParams("the zero code cannot have full support")
    for _ in range(max_tries):
        C = code_from_generator(field, random_matrix(field, k, n, rng))
        if C.k == k and (not full_support or C.has_full_support):
            return C
    raise RuntimeError(f"no [{n},{k}] code found in {max_tries} tries")
