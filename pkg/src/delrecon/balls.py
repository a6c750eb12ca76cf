"""Deletion and insertion balls as explicit sets, closed-form size formulas,
and exact pairwise intersections.

Everything counting-related is exact integer arithmetic; the set layer is the
brute-force oracle the structural results are checked against.
"""

import math
from typing import Iterable

import numpy as np

from .util import SET_OP_CAP, ExhaustiveCapError, check_cap
from .words import Word


# ---------------------------------------------------------------------------
# raw packed-integer helpers (hot paths work on ints, not Word objects)

def _delete(bits: int, i: int) -> int:
    """Drop 0-based position i."""
    return (bits & ((1 << i) - 1)) | ((bits >> (i + 1)) << i)


def _insert(bits: int, j: int, v: int) -> int:
    """Insert bit v at 0-based gap j (0 = front)."""
    low = bits & ((1 << j) - 1)
    return low | (v << j) | ((bits >> j) << (j + 1))


def _deletion_ball_raw(bits: int, n: int, t: int) -> set[int]:
    cur = {bits}
    for k in range(t):
        m = n - k
        cur = {_delete(b, i) for b in cur for i in range(m)}
    return cur


def _insertion_ball_raw(bits: int, n: int, t: int) -> set[int]:
    cur = {bits}
    for k in range(t):
        m = n + k
        cur = {_insert(b, j, v) for b in cur for j in range(m + 1) for v in (0, 1)}
    return cur


def _is_subsequence(sub: int, m: int, sup: int, n: int) -> bool:
    """Greedy left-to-right match of an m-bit word inside an n-bit word."""
    if m > n:
        return False
    j = 0
    for i in range(m):
        want = (sub >> i) & 1
        while j < n and ((sup >> j) & 1) != want:
            j += 1
        if j == n:
            return False
        j += 1
    return True


# ---------------------------------------------------------------------------
# set-valued operations

def deletion_ball(x: Word, t: int) -> frozenset[Word]:
    """All distinct words obtained from x by deleting exactly t symbols."""
    if not 0 <= t <= x.n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={x.n}")
    return frozenset(Word(b, x.n - t) for b in _deletion_ball_raw(x.bits, x.n, t))


def insertion_ball(y: Word, t: int) -> frozenset[Word]:
    """All words of length |y|+t containing y as a subsequence."""
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    return frozenset(Word(b, y.n + t) for b in _insertion_ball_raw(y.bits, y.n, t))


def deletion_ball_size(x: Word, t: int) -> int:
    """|D_t(x)| by the distinct-subsequence DP, without materializing the ball."""
    if not 0 <= t <= x.n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={x.n}")
    j_max = x.n - t
    f = [1] + [0] * j_max          # f[j] = distinct length-j subsequences so far
    h = [[0] * (j_max + 1), [0] * (j_max + 1)]  # snapshot before last occurrence of 0/1
    for i in range(x.n):
        v = (x.bits >> i) & 1
        prev = f.copy()
        for j in range(min(i + 1, j_max), 0, -1):
            f[j] += prev[j - 1] - h[v][j - 1]
        h[v] = prev
    return f[j_max]


def ball_intersection(x: Word, y: Word, t: int) -> frozenset[Word]:
    """D_t(x) intersected with D_t(y), set-exact.

    Enumerates the smaller ball and keeps the elements that embed in the
    other word, so only one ball is ever materialized.
    """
    if x.n != y.n:
        raise ValueError(f"length mismatch: {x.n} vs {y.n}")
    if not 0 <= t <= x.n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={x.n}")
    if deletion_ball_size(x, t) > deletion_ball_size(y, t):
        x, y = y, x
    m = x.n - t
    hits = (b for b in _deletion_ball_raw(x.bits, x.n, t)
            if _is_subsequence(b, m, y.bits, y.n))
    return frozenset(Word(b, m) for b in hits)


# ---------------------------------------------------------------------------
# closed-form counting

def max_ball_size(n: int, t: int) -> int:
    """Largest t-deletion ball size over length-n words:
    sum of C(n-t, i) for i = 0..t; zero outside 0 <= t <= n."""
    if t < 0 or t > n:
        return 0
    return sum(math.comb(n - t, i) for i in range(t + 1))


def full_space_coverage(n: int, t: int) -> int:
    """Largest |D_t(x) cap D_t(y)| over distinct equal-length pairs:
    2 * max_ball_size(n-2, t-1)."""
    return 2 * max_ball_size(n - 2, t - 1)


# ---------------------------------------------------------------------------
# exhaustive sweep engine

def _deletion_incidence(n: int, t: int, support: np.ndarray | None = None):
    """Deduplicated (index, output) incidence of t deletions.

    Returns (xi, z, m): parallel int64 arrays with z in D_t(word[xi]) and
    m = n - t the output length.  Indices refer to positions in `support`
    (the whole space when support is None).
    """
    if support is None:
        zs = np.arange(1 << n, dtype=np.int64)
        xi = np.arange(1 << n, dtype=np.int64)
    else:
        zs = np.asarray(support, dtype=np.int64)
        xi = np.arange(len(zs), dtype=np.int64)
    m = n
    for _ in range(t):
        outs_x = []
        outs_z = []
        for i in range(m):
            low = zs & ((1 << i) - 1)
            outs_z.append(low | ((zs >> (i + 1)) << i))
            outs_x.append(xi)
        xi = np.concatenate(outs_x)
        zs = np.concatenate(outs_z)
        m -= 1
        key = np.unique((xi << (m + 1)) | zs)
        xi = key >> (m + 1)
        zs = key & ((1 << (m + 1)) - 1)
    return xi, zs, m


def pairwise_intersection_counts(n: int, t: int,
                                 support: Iterable[int] | None = None) -> np.ndarray:
    """Dense matrix M with M[i, j] = |D_t(w_i) cap D_t(w_j)| for every pair of
    words in `support` (packed ints; the whole space when omitted).  The
    diagonal carries the ball sizes.

    Works by bucketing the deletion incidence by output word: every output
    reached by k inputs contributes one count to each of the k*k pairs.
    """
    sup = None if support is None else np.asarray(sorted(support), dtype=np.int64)
    if t == 0:
        size = (1 << n) if sup is None else len(sup)
        return np.eye(size, dtype=np.uint32)
    xi, zs, _ = _deletion_incidence(n, t, sup)
    size = (1 << n) if sup is None else len(sup)
    order = np.argsort(zs, kind="stable")
    zs = zs[order]
    xi = xi[order]
    M = np.zeros((size, size), dtype=np.uint32)
    cuts = np.flatnonzero(np.diff(zs)) + 1
    starts = np.concatenate(([0], cuts))
    ends = np.concatenate((cuts, [len(zs)]))
    for s, e in zip(starts, ends):
        bucket = xi[s:e]
        M[np.ix_(bucket, bucket)] += 1
    return M


def ball_size_profile(n: int, t: int) -> np.ndarray:
    """|D_t(x)| for every x in {0,1}^n at once, by the distinct-subsequence DP
    run vectorized across the whole space."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    j_max = n - t
    space = np.arange(1 << n, dtype=np.int64)
    f = [np.zeros(1 << n, dtype=np.int64) for _ in range(j_max + 1)]
    f[0][:] = 1
    h = [[np.zeros(1 << n, dtype=np.int64) for _ in range(j_max + 1)]
         for _ in range(2)]
    for i in range(n):
        v = ((space >> i) & 1).astype(bool)
        prev = [a.copy() for a in f]
        for j in range(min(i + 1, j_max), 0, -1):
            sub = np.where(v, h[1][j - 1], h[0][j - 1])
            f[j] += prev[j - 1] - sub
        for j in range(j_max + 1):
            h[1][j] = np.where(v, prev[j], h[1][j])
            h[0][j] = np.where(v, h[0][j], prev[j])
    return f[j_max]


def code_read_coverage(code, t: int) -> tuple[int, tuple[Word, Word]]:
    """Exact max of |D_t(x) cap D_t(y)| over distinct members of `code`,
    with one maximizing pair as witness.

    `code` is anything with .n and .members() yielding Words (a Codebook),
    or a plain iterable of equal-length Words.
    """
    if hasattr(code, "members"):
        words = list(code.members())
    else:
        words = list(code)
    if len(words) < 2:
        raise ValueError("read coverage undefined for fewer than two codewords")
    n = words[0].n
    if any(w.n != n for w in words):
        raise ValueError("codewords must share one length")
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    check_cap(n, SET_OP_CAP, "exhaustive read-coverage scan")
    if len(words) ** 2 * 4 > 2 << 30:
        raise ExhaustiveCapError(
            f"pairwise scan over {len(words)} codewords needs more than 2 GiB"
        )
    packed = sorted(w.bits for w in words)
    M = pairwise_intersection_counts(n, t, packed)
    np.fill_diagonal(M, 0)
    flat = int(np.argmax(M))
    i, j = divmod(flat, M.shape[0])
    if i > j:
        i, j = j, i
    if M[i, j] == 0:
        i, j = 0, 1  # disjoint throughout; any pair witnesses the zero
    witness = (Word(packed[i], n), Word(packed[j], n))
    return int(M[i, j]), witness
