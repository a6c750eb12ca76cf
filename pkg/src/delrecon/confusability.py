"""Structural classification of word pairs by single-deletion-ball overlap.

Two equal-length words can share 0, 1 or 2 single-deletion outputs, never
more.  Overlap 2 happens exactly when one word turns into the other by
complementing one alternating window (type A).  Overlap 1 forces either
Hamming distance one or the staggered type-B shape
x = u a a' v b w, y = u a' v b b' w (primes denoting complements).

`classify_pair` computes the overlap by brute force and then *demands* the
witness the characterization promises, so every call doubles as a check of
the characterization itself.
"""

from dataclasses import dataclass
from enum import Enum

from .balls import (ball_intersection, deletion_ball, full_space_coverage,
                    max_ball_size)
from .words import Word, complement, hamming_distance, is_alternating


class ConsistencyError(Exception):
    """A structural witness mandated by the characterization was not found.

    Raising this is the falsification signal: it means an exhaustively
    verified statement failed on a concrete pair.
    """


class Kind(Enum):
    DISJOINT = "disjoint"
    HAMMING1 = "hamming-1"
    TYPE_B = "type-b"
    TYPE_A = "type-a"


@dataclass(frozen=True)
class TypeAWitness:
    """x = u + a + v and y = u + complement(a) + v, a alternating, |a| >= 2."""

    u: Word
    a: Word
    v: Word

    def recompose(self) -> tuple[Word, Word]:
        return self.u + self.a + self.v, self.u + complement(self.a) + self.v


@dataclass(frozen=True)
class TypeBWitness:
    """The staggered shape.  With a' = 1-a, b' = 1-b, the pair is
    (u a a' v b w, u a' v b b' w); `orientation` records which input word
    holds the doubled-prefix role ("x-first" when it is x)."""

    u: Word
    a: int
    v: Word
    b: int
    w: Word
    orientation: str

    def recompose(self) -> tuple[Word, Word]:
        a, b = self.a, self.b
        first = self.u + Word.from_bits([a, 1 - a]) + self.v + Word.from_bits([b]) + self.w
        second = self.u + Word.from_bits([1 - a]) + self.v + Word.from_bits([b, 1 - b]) + self.w
        if self.orientation == "x-first":
            return first, second
        return second, first


@dataclass(frozen=True)
class Hamming1Witness:
    position: int  # 1-based differing position


@dataclass(frozen=True)
class PairClassification:
    size: int
    kind: Kind
    witness: TypeAWitness | TypeBWitness | Hamming1Witness | None
    intersection: frozenset[Word] | None  # None on the structural fast path


def _check_pair(x: Word, y: Word) -> None:
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    if x == y:
        raise ValueError("pair classification needs two distinct words")


def type_a_decompose(x: Word, y: Word) -> TypeAWitness | None:
    """Split x = u a v, y = u a' v with a alternating, |a| >= 2, if possible.

    The split is forced: u must end right before the first differing
    position, the window must be flipped throughout, and v must start right
    after the last one, so at most one decomposition exists.
    """
    _check_pair(x, y)
    d = x.bits ^ y.bits
    first = (d & -d).bit_length()   # 1-based
    last = d.bit_length()
    length = last - first + 1
    if length < 2:
        return None
    if d != ((1 << length) - 1) << (first - 1):
        return None  # differing positions not one contiguous fully-flipped block
    a = x.segment(first, last)
    if not is_alternating(a):
        return None
    return TypeAWitness(x.prefix(first - 1), a, x.suffix_from(last + 1))


def _type_b_oriented(x: Word, y: Word) -> tuple[Word, int, Word, int, Word] | None:
    """Match x = u a a' v b w against y = u a' v b b' w; forced split again:
    the first difference pins |u|, the last pins |u| + |v| + 3."""
    d = x.bits ^ y.bits
    p = (d & -d).bit_length() - 1   # |u|
    q = d.bit_length() - p - 3      # |v|
    if q < 0:
        return None
    if x.bit(p + 1) == x.bit(p + 2):
        return None  # positions p+1, p+2 must be a, a'
    if x.bit(p + q + 3) != y.bit(p + q + 2):
        return None  # the b symbol must line up across the stagger
    vx = (x.bits >> (p + 2)) & ((1 << q) - 1)
    vy = (y.bits >> (p + 1)) & ((1 << q) - 1)
    if vx != vy:
        return None  # middle section must be the same v shifted by one
    u = x.prefix(p)
    v = x.segment(p + 3, p + q + 2)
    w = x.suffix_from(p + q + 4)
    return u, x.bit(p + 1), v, x.bit(p + q + 3), w


def type_b_decompose(x: Word, y: Word) -> TypeBWitness | None:
    """Staggered decomposition, trying x in the doubled-prefix role first."""
    _check_pair(x, y)
    got = _type_b_oriented(x, y)
    if got is not None:
        u, a, v, b, w = got
        return TypeBWitness(u, a, v, b, w, "x-first")
    got = _type_b_oriented(y, x)
    if got is not None:
        u, a, v, b, w = got
        return TypeBWitness(u, a, v, b, w, "y-first")
    return None


def classify_pair(x: Word, y: Word) -> PairClassification:
    """Classify by exact ball intersection, then attach the mandated witness.

    The witness search is not a shortcut: the intersection size always comes
    from the set oracle, and a missing witness raises ConsistencyError.
    """
    _check_pair(x, y)
    inter = ball_intersection(x, y, 1)
    size = len(inter)
    if size == 0:
        return PairClassification(0, Kind.DISJOINT, None, inter)
    if size == 2:
        wit = type_a_decompose(x, y)
        if wit is None:
            raise ConsistencyError(
                f"|D1 cap D1| = 2 but no alternating-window witness: {x}, {y}")
        return PairClassification(2, Kind.TYPE_A, wit, inter)
    if size == 1:
        if hamming_distance(x, y) == 1:
            pos = (x.bits ^ y.bits).bit_length()
            return PairClassification(1, Kind.HAMMING1, Hamming1Witness(pos), inter)
        wit = type_b_decompose(x, y)
        if wit is None:
            raise ConsistencyError(
                f"|D1 cap D1| = 1, Hamming distance > 1, no staggered witness: {x}, {y}")
        return PairClassification(1, Kind.TYPE_B, wit, inter)
    raise ConsistencyError(
        f"|D1 cap D1| = {size} > 2 for {x}, {y}; whole-space coverage exceeded")


def classify_pair_structural(x: Word, y: Word) -> PairClassification:
    """Witness-search-only classification; no ball is materialized.

    Sound because of the exhaustively verified characterizations; use
    classify_pair when the run itself should re-check them.
    """
    _check_pair(x, y)
    wit_a = type_a_decompose(x, y)
    if wit_a is not None:
        return PairClassification(2, Kind.TYPE_A, wit_a, None)
    if hamming_distance(x, y) == 1:
        pos = (x.bits ^ y.bits).bit_length()
        return PairClassification(1, Kind.HAMMING1, Hamming1Witness(pos), None)
    wit_b = type_b_decompose(x, y)
    if wit_b is not None:
        return PairClassification(1, Kind.TYPE_B, wit_b, None)
    return PairClassification(0, Kind.DISJOINT, None, None)


def hamming1_intersection(x: Word, y: Word, t: int) -> frozenset[Word]:
    """For a Hamming-distance-one pair, D_t(x) cap D_t(y) = D_{t-1}(uv) where
    u, v surround the differing position."""
    if hamming_distance(x, y) != 1:
        raise ValueError("pair must differ in exactly one position")
    if not 1 <= t <= x.n:
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    pos = (x.bits ^ y.bits).bit_length()
    uv = x.prefix(pos - 1) + x.suffix_from(pos + 1)
    return deletion_ball(uv, t - 1)


def two_deletion_structure(x: Word, y: Word) -> tuple[Word, frozenset[Word]]:
    """For a type-B pair, split D_2(x) cap D_2(y) into D_1(z) plus at most two
    extra words, z being the unique single-deletion overlap (never
    alternating).  Violations raise ConsistencyError."""
    cls = classify_pair(x, y)
    if cls.kind is not Kind.TYPE_B:
        raise ValueError(f"pair is {cls.kind.value}, not type-b")
    (z,) = cls.intersection
    s2 = ball_intersection(x, y, 2)
    dz = deletion_ball(z, 1)
    if not dz <= s2:
        raise ConsistencyError(f"D_1(z) not inside D_2 overlap for {x}, {y}")
    extra = s2 - dz
    if len(extra) > 2:
        raise ConsistencyError(
            f"D_2 overlap exceeds D_1(z) by {len(extra)} > 2 words for {x}, {y}")
    if is_alternating(z):
        raise ConsistencyError(f"overlap word {z} of type-B pair {x}, {y} alternates")
    return z, extra


# ---------------------------------------------------------------------------
# read-count bounds

def disjoint_pair_bound(n: int, t: int) -> int:
    """Max t-deletion overlap of a pair with disjoint single-deletion balls
    (n >= 7, t >= 2)."""
    if n < 7:
        raise ValueError(f"bound needs n >= 7, got {n}")
    if t < 2:
        raise ValueError(f"bound needs t >= 2, got {t}")
    D = max_ball_size
    return (2 * D(n - 4, t - 2) + 2 * D(n - 5, t - 2) + 2 * D(n - 7, t - 2)
            + D(n - 6, t - 3) + D(n - 7, t - 3))


def single_overlap_bound(n: int, t: int) -> int:
    """Max t-deletion overlap of a pair whose single-deletion balls share
    exactly one word (n >= 6, t >= 2); strict for t < n/2."""
    if n < 6:
        raise ValueError(f"bound needs n >= 6, got {n}")
    if t < 2:
        raise ValueError(f"bound needs t >= 2, got {t}")
    return max_ball_size(n - 1, t - 1) + full_space_coverage(n - 3, t - 1)


def csvt_read_bound(n: int, P: int) -> int:
    """Reads sufficient for two-deletion reconstruction with run-constrained
    codes: max(n - ceil((n-1)/P) + 3, 7)."""
    if P <= 0 or P % 2:
        raise ValueError(f"P must be positive and even, got {P}")
    if P > n:
        raise ValueError(f"need P <= n, got P={P}, n={n}")
    ceil_runs = -(-(n - 1) // P)
    return max(n - ceil_runs + 3, 7)


@dataclass(frozen=True)
class ReconstructionBounds:
    disjoint_pair: int | None   # needs n >= 7
    single_overlap: int
    csvt: int | None            # only at t = 2 with P supplied


def reconstruction_bounds(n: int, t: int, P: int | None = None) -> ReconstructionBounds:
    if n < 6:
        raise ValueError(f"bounds need n >= 6, got {n}")
    if t < 2:
        raise ValueError(f"bounds need t >= 2, got {t}")
    n1 = disjoint_pair_bound(n, t) if n >= 7 else None
    n2 = single_overlap_bound(n, t)
    np_ = None
    if P is not None:
        if t != 2:
            raise ValueError("the run-constrained bound is defined only at t = 2")
        np_ = csvt_read_bound(n, P)
    return ReconstructionBounds(n1, n2, np_)


# ---------------------------------------------------------------------------
# constructive pair generators (used by the exhaustive sweeps)

def iter_type_a_pairs(n: int):
    """Every unordered type-A pair of length n, as packed (x, y) with x < y.

    Constructive: for each word, flip every window that alternates; windows
    are distinct masks, so each partner appears once per side.
    """
    for x in range(1 << n):
        for i in range(n - 1):
            j = i
            while j + 1 < n and ((x >> j) & 1) != ((x >> (j + 1)) & 1):
                j += 1
                y = x ^ (((1 << (j - i + 1)) - 1) << i)
                if x < y:
                    yield x, y
    return


def iter_type_b_pairs(n: int):
    """Every unordered type-B-shaped pair of length n as packed ints,
    deduplicated.  Derived from the shape: the partner of x at split (p, q)
    is x with position p+1 deleted and the complement of position p+q+3
    reinserted one step later."""
    from .balls import _delete, _insert  # raw helpers

    seen = set()
    for x in range(1 << n):
        for p in range(n - 2):
            if ((x >> p) & 1) == ((x >> (p + 1)) & 1):
                continue  # needs a, a' adjacent at p+1, p+2
            for q in range(n - 2 - p):
                b = (x >> (p + q + 2)) & 1
                y = _insert(_delete(x, p), p + q + 2, 1 - b)
                if x != y:
                    key = (x, y) if x < y else (y, x)
                    if key not in seen:
                        seen.add(key)
                        yield key
