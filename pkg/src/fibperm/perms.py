"""Permutations as plain tuples.

A permutation of length n is a ``tuple[int, ...]`` holding each of 1..n
exactly once; the empty tuple is the unique permutation of length 0.  This
module supplies validation, classical pattern containment, direct and skew
sums, inversion counting, and a brute-force avoidance filter used as the
ground-truth oracle by everything downstream.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    DuplicateValueError,
    OutOfRangeValueError,
    SizeLimitError,
    UnsupportedLengthError,
)

Perm = tuple[int, ...]
PatternSet = frozenset[Perm]

# Hard cap for the factorial-time filter; larger boards go through the
# structural generators instead.
BRUTE_FORCE_MAX_N = 10

__all__ = [
    "Perm",
    "PatternSet",
    "BRUTE_FORCE_MAX_N",
    "make_permutation",
    "make_pattern_set",
    "standardize",
    "contains_pattern",
    "avoids_all",
    "direct_sum",
    "skew_sum",
    "inversions",
    "brute_force_av",
    "format_permutation",
    "parse_permutation",
]


def make_permutation(values: Iterable[int]) -> Perm:
    """Validate that *values* is a permutation of 1..n and return it as a tuple.

    >>> make_permutation([2, 1, 3])
    (2, 1, 3)
    >>> make_permutation(())
    ()
    """
    perm = tuple(values)
    n = len(perm)
    seen = [False] * (n + 1)
    for v in perm:
        if not 1 <= v <= n:
            raise OutOfRangeValueError(f"value {v} outside 1..{n}")
        if seen[v]:
            raise DuplicateValueError(f"value {v} appears twice")
        seen[v] = True
    return perm


def make_pattern_set(patterns: Iterable[Sequence[int]]) -> PatternSet:
    """Validate a collection of patterns (permutations of length >= 3).

    >>> sorted(make_pattern_set([(2, 3, 1), (3, 1, 2)]))
    [(2, 3, 1), (3, 1, 2)]
    """
    out = frozenset(make_permutation(p) for p in patterns)
    if not out:
        raise UnsupportedLengthError("a pattern set must be nonempty")
    for p in out:
        if len(p) < 3:
            raise UnsupportedLengthError(f"pattern {p} shorter than 3")
    return out


def standardize(values: Sequence[int]) -> Perm:
    """Rank distinct integers into the order-isomorphic permutation.

    >>> standardize((4, 7, 5))
    (1, 3, 2)
    >>> standardize((9, 2))
    (2, 1)
    """
    ranks = {v: i + 1 for i, v in enumerate(sorted(values))}
    if len(ranks) != len(values):
        raise DuplicateValueError("values to standardize must be distinct")
    return tuple(ranks[v] for v in values)


@lru_cache(maxsize=None)
def _tightest_neighbours(pattern: Perm) -> tuple[tuple[int, int], ...]:
    # For each pattern index t: indices (< t) of the already-matched entries
    # giving the tightest value bounds below and above pattern[t]; -1 when
    # unbounded on that side.  Checking only these two bounds is equivalent
    # to checking order-isomorphism against all earlier entries.
    bounds = []
    for t, val in enumerate(pattern):
        lo_idx = hi_idx = -1
        lo_val, hi_val = 0, len(pattern) + 1
        for s in range(t):
            if lo_val < pattern[s] < val:
                lo_val, lo_idx = pattern[s], s
            elif val < pattern[s] < hi_val:
                hi_val, hi_idx = pattern[s], s
        bounds.append((lo_idx, hi_idx))
    return tuple(bounds)


def contains_pattern(perm: Sequence[int], pattern: Perm) -> bool:
    """Whether *perm* has a subsequence order-isomorphic to *pattern*.

    >>> contains_pattern((1, 5, 3, 2, 4), (1, 3, 2))
    True
    >>> contains_pattern((1, 4, 3, 2, 6, 5), (2, 3, 1))
    False
    """
    k = len(pattern)
    n = len(perm)
    if k > n:
        return False
    bounds = _tightest_neighbours(tuple(pattern))
    match = [0] * k
    last_start = n - k  # leave room for the remaining pattern entries

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo_idx, hi_idx = bounds[t]
        lo_val = match[lo_idx] if lo_idx >= 0 else 0
        hi_val = match[hi_idx] if hi_idx >= 0 else n + 1
        for i in range(start, last_start + t + 1):
            if lo_val < perm[i] < hi_val:
                match[t] = perm[i]
                if extend(t + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def avoids_all(perm: Sequence[int], patterns: Iterable[Perm]) -> bool:
    """Whether *perm* contains none of the given patterns.

    >>> avoids_all((3, 2, 1), [(2, 3, 1), (3, 1, 2)])
    True
    """
    ordered = sorted(patterns, key=lambda p: (len(p), p))
    return not any(contains_pattern(perm, p) for p in ordered)


def direct_sum(alpha: Sequence[int], beta: Sequence[int]) -> Perm:
    """Place *beta*, shifted up, after *alpha*.

    >>> direct_sum((1, 3, 2), (3, 1, 2))
    (1, 3, 2, 6, 4, 5)
    """
    m = len(alpha)
    return tuple(alpha) + tuple(b + m for b in beta)


def skew_sum(alpha: Sequence[int], beta: Sequence[int]) -> Perm:
    """Place *alpha*, shifted up, before *beta*.

    >>> skew_sum((1, 3, 2), (3, 1, 2))
    (4, 6, 5, 3, 1, 2)
    """
    n = len(beta)
    return tuple(a + n for a in alpha) + tuple(beta)


def inversions(perm: Sequence[int]) -> int:
    """Number of pairs i < j with perm[i] > perm[j].

    >>> inversions((1, 5, 3, 2, 4))
    4
    >>> inversions(())
    0
    """
    return sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )


@lru_cache(maxsize=None)
def _brute_force_av(n: int, patterns: tuple[Perm, ...]) -> tuple[Perm, ...]:
    return tuple(
        p
        for p in itertools.permutations(range(1, n + 1))
        if not any(contains_pattern(p, pat) for pat in patterns)
    )


def brute_force_av(n: int, patterns: Iterable[Sequence[int]]) -> list[Perm]:
    """All length-n permutations avoiding every pattern, in lexicographic order.

    Filters all n! permutations, so n is capped at ``BRUTE_FORCE_MAX_N``.

    >>> brute_force_av(3, [(2, 3, 1), (3, 1, 2), (3, 2, 1)])
    [(1, 2, 3), (1, 3, 2), (2, 1, 3)]
    >>> len(brute_force_av(4, [(2, 3, 1), (3, 1, 2)]))
    8
    """
    if n < 0:
        raise UnsupportedLengthError(f"length {n} is negative")
    if n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(
            f"brute force is capped at n = {BRUTE_FORCE_MAX_N}; got {n}"
        )
    pats = tuple(sorted(make_pattern_set(patterns), key=lambda p: (len(p), p)))
    return list(_brute_force_av(n, pats))


def format_permutation(perm: Sequence[int]) -> str:
    """Space-separated one-line notation.

    >>> format_permutation((2, 1, 3))
    '2 1 3'
    """
    return " ".join(str(v) for v in perm)


def parse_permutation(text: str) -> Perm:
    """Parse space-separated one-line notation; a single run of digits is
    accepted as the compact form (only unambiguous for n <= 9).

    >>> parse_permutation("2 1 3")
    (2, 1, 3)
    >>> parse_permutation("213")
    (2, 1, 3)
    """
    tokens = text.split()
    if len(tokens) == 1 and len(tokens[0]) > 1 and tokens[0].isdigit():
        values = [int(ch) for ch in tokens[0]]
    else:
        values = [int(tok) for tok in tokens]
    return make_permutation(values)
