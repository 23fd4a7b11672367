"""Seedable, platform-independent random source.

Every random choice in the package is a pure function of ``(seed, stream,
index)`` hashed through SplitMix64.  This keeps base colorings lazy (the value
of one (k-1)-set does not depend on how many others were drawn before it) and
bit-exact across platforms and Python versions.
"""

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(x: int) -> int:
    """One SplitMix64 finalisation step on a 64-bit integer."""
    x = (x + _GOLDEN) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def hash64(seed: int, stream: int, index: int) -> int:
    """64-bit word for position ``index`` of substream ``stream`` under ``seed``."""
    h = splitmix64(seed & MASK64)
    h = splitmix64(h ^ (stream & MASK64))
    return splitmix64(h ^ (index & MASK64))


def uniform_int(seed: int, stream: int, index: int, modulus: int) -> int:
    """Value in ``range(modulus)``; modulo bias is below 2**-56 for modulus < 256."""
    return hash64(seed, stream, index) % modulus


def coin(seed: int, stream: int, index: int) -> bool:
    return bool(hash64(seed, stream, index) >> 63)


class Stream:
    """Sequential view of one substream, for consumers that draw in order."""

    def __init__(self, seed: int, stream: int = 0):
        self.seed = seed
        self.stream = stream
        self.index = 0

    def next64(self) -> int:
        v = hash64(self.seed, self.stream, self.index)
        self.index += 1
        return v

    def randbelow(self, modulus: int) -> int:
        return self.next64() % modulus

    def coin(self) -> bool:
        return bool(self.next64() >> 63)
