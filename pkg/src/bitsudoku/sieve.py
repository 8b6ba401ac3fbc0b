"""Prime generation by striking composites in a packed bit array."""

from __future__ import annotations

from math import isqrt

from .smallset import WORD_WIDTH


class BitArray:
    """A flat sequence of bits packed into machine words.

    Bit t lives in bit (t mod w) of word t // w for word width w; bits at
    or beyond `length` do not exist.
    """

    __slots__ = ("words", "length")

    def __init__(self, length: int):
        if length < 0:
            raise ValueError("length must be >= 0")
        self.length = length
        self.words = [0] * ((length + WORD_WIDTH - 1) // WORD_WIDTH)

    def _check(self, t: int) -> None:
        if not 0 <= t < self.length:
            raise IndexError(f"bit {t} outside [0, {self.length})")

    def get(self, t: int) -> bool:
        self._check(t)
        return (self.words[t // WORD_WIDTH] >> (t % WORD_WIDTH)) & 1 == 1

    def set(self, t: int) -> None:
        self._check(t)
        self.words[t // WORD_WIDTH] |= 1 << (t % WORD_WIDTH)

    def clear(self, t: int) -> None:
        self._check(t)
        self.words[t // WORD_WIDTH] &= ~(1 << (t % WORD_WIDTH))

    def count(self) -> int:
        return sum(w.bit_count() for w in self.words)


def primes_up_to(n: int) -> list[int]:
    """All primes p <= n, ascending.  1 is not a prime and never appears."""
    if n < 2:
        return []
    composite = BitArray(n + 1)
    words = composite.words  # hot loops index the words directly
    w = WORD_WIDTH
    for p in range(2, isqrt(n) + 1):
        if not (words[p // w] >> (p % w)) & 1:
            for t in range(p * p, n + 1, p):
                words[t // w] |= 1 << (t % w)
    return [t for t in range(2, n + 1)
            if not (words[t // w] >> (t % w)) & 1]
