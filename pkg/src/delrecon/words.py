"""Binary words packed into integers, plus the scalar statistics on them.

Positions are 1-based throughout: position i of a word lives at bit i-1 of
the packed integer, so the VT syndrome and the structural decompositions read
exactly like their textbook definitions.
"""

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True, slots=True)
class Word:
    """Immutable fixed-length bit sequence."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative word length {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0b{self.bits:b} do not fit in length {self.n}")

    @classmethod
    def parse(cls, text: str, allow_empty: bool = False) -> "Word":
        if text == "" and not allow_empty:
            raise ValueError("empty word (pass allow_empty to accept it)")
        if set(text) - {"0", "1"}:
            raise ValueError(f"word may contain only 0 and 1: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(bits, len(text))

    @classmethod
    def from_bits(cls, seq) -> "Word":
        bits = 0
        n = 0
        for b in seq:
            if b not in (0, 1):
                raise ValueError(f"bit must be 0 or 1, got {b!r}")
            bits |= b << n
            n += 1
        return cls(bits, n)

    def bit(self, i: int) -> int:
        """Bit at 1-based position i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} out of range 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> Iterator[int]:
        return (((self.bits >> i) & 1) for i in range(self.n))

    def __str__(self) -> str:
        return "".join("01"[b] for b in self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __add__(self, other: "Word") -> "Word":
        return Word(self.bits | (other.bits << self.n), self.n + other.n)

    def __lt__(self, other: "Word") -> bool:
        if self.n != other.n:
            return self.n < other.n
        return str(self) < str(other)

    def prefix(self, k: int) -> "Word":
        if not 0 <= k <= self.n:
            raise IndexError(f"prefix length {k} out of range 0..{self.n}")
        return Word(self.bits & ((1 << k) - 1), k)

    def suffix_from(self, i: int) -> "Word":
        """Positions i..n as a word (i may be n+1, giving the empty word)."""
        if not 1 <= i <= self.n + 1:
            raise IndexError(f"position {i} out of range 1..{self.n + 1}")
        return Word(self.bits >> (i - 1), self.n - i + 1)

    def segment(self, i: int, j: int) -> "Word":
        """Positions i..j inclusive (empty when j < i)."""
        if j < i:
            return Word(0, 0)
        if not (1 <= i and j <= self.n):
            raise IndexError(f"segment {i}..{j} out of range 1..{self.n}")
        return Word((self.bits >> (i - 1)) & ((1 << (j - i + 1)) - 1), j - i + 1)


EMPTY = Word(0, 0)


def vt_syndrome(x: Word) -> int:
    """Sum of i * x_i over 1-based positions."""
    s = 0
    bits = x.bits
    while bits:
        low = bits & -bits
        s += low.bit_length()
        bits ^= low
    return s


def longest_two_periodic_run(x: Word) -> int:
    """Length of the longest contiguous substring with x_k = x_{k+2} throughout.

    For n <= 2 the condition is vacuous and the whole word qualifies.
    """
    n = x.n
    if n <= 2:
        return n
    best = run = 2
    for k in range(1, n - 1):  # 1-based k compares positions k and k+2
        if ((x.bits >> (k - 1)) & 1) == ((x.bits >> (k + 1)) & 1):
            run += 1
            if run > best:
                best = run
        else:
            run = 2
    return best


def is_alternating(x: Word) -> bool:
    """True iff adjacent positions always differ (vacuous for n <= 1)."""
    if x.n <= 1:
        return True
    mask = (1 << (x.n - 1)) - 1
    return (x.bits ^ (x.bits >> 1)) & mask == mask


def run_count(x: Word) -> int:
    """Number of maximal constant substrings; equals |D_1(x)| for n >= 1."""
    if x.n == 0:
        raise ValueError("run count undefined for the empty word")
    mask = (1 << (x.n - 1)) - 1
    return ((x.bits ^ (x.bits >> 1)) & mask).bit_count() + 1


def hamming_distance(x: Word, y: Word) -> int:
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    return (x.bits ^ y.bits).bit_count()


def complement(x: Word) -> Word:
    return Word(~x.bits & ((1 << x.n) - 1), x.n)
