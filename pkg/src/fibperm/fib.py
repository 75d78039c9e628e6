"""Fibonacci permutations and their tiling words.

A Fibonacci permutation reads left to right as a chain of blocks, each block
either a single value equal to its position (a monomino, ``m``) or a descent
pair of consecutive values (a domino, ``d``).  The length-n Fibonacci
permutations therefore biject with tilings of an n-cell strip by monominoes
and dominoes, written here as words over ``{m, d}``; there are F(n) of them
under the convention F(0) = F(1) = 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .errors import (
    MalformedTilingError,
    NotFibonacciError,
    SizeLimitError,
    UnsupportedLengthError,
)
from .perms import Perm

# The length-n Fibonacci permutations are exactly Av_n of these patterns.
FIBONACCI_PATTERNS = frozenset({(2, 3, 1), (3, 1, 2), (3, 2, 1)})

# Enumerating tilings/permutations of longer strips would hold hundreds of
# thousands of words in memory; callers needing counts use fib_number.
TILINGS_MAX_CELLS = 27

__all__ = [
    "FIBONACCI_PATTERNS",
    "TILINGS_MAX_CELLS",
    "fib_number",
    "is_fibonacci",
    "tilings",
    "fib_permutations",
    "parse_tiling",
    "tiling_cells",
    "tiling_to_perm",
    "perm_to_tiling",
    "fib_stat",
]


def fib_number(n: int) -> int:
    """F(n) with F(0) = F(1) = 1.

    >>> [fib_number(n) for n in range(8)]
    [1, 1, 2, 3, 5, 8, 13, 21]
    """
    if n < 0:
        raise UnsupportedLengthError(f"F({n}) is not defined here")
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def is_fibonacci(perm: Sequence[int]) -> bool:
    """Whether *perm* splits into blocks of 'value in place' singletons and
    descent pairs of consecutive values.

    >>> is_fibonacci((2, 1, 3, 5, 4, 6, 7))
    True
    >>> is_fibonacci((3, 2, 1))
    False
    """
    i, n, expect = 0, len(perm), 1
    while i < n:
        if perm[i] == expect:
            i, expect = i + 1, expect + 1
        elif i + 1 < n and perm[i] == expect + 1 and perm[i + 1] == expect:
            i, expect = i + 2, expect + 2
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _tilings(cells: int) -> tuple[str, ...]:
    if cells == 0:
        return ("",)
    if cells == 1:
        return ("m",)
    return tuple("m" + rest for rest in _tilings(cells - 1)) + tuple(
        "d" + rest for rest in _tilings(cells - 2)
    )


def _check_cells(cells: int) -> None:
    if cells < 0:
        raise UnsupportedLengthError(f"a strip cannot have {cells} cells")
    if cells > TILINGS_MAX_CELLS:
        raise SizeLimitError(
            f"tiling enumeration is capped at {TILINGS_MAX_CELLS} cells; got {cells}"
        )


def tilings(cells: int) -> list[str]:
    """All tilings of an n-cell strip, ordered so that the corresponding
    permutations come out lexicographically.

    >>> tilings(3)
    ['mmm', 'md', 'dm']
    >>> [len(tilings(c)) for c in range(7)]
    [1, 1, 2, 3, 5, 8, 13]
    """
    _check_cells(cells)
    return list(_tilings(cells))


@lru_cache(maxsize=None)
def _fib_permutations(n: int) -> tuple[Perm, ...]:
    return tuple(tiling_to_perm(word) for word in _tilings(n))


def fib_permutations(n: int) -> list[Perm]:
    """All Fibonacci permutations of length n, lexicographically.

    >>> fib_permutations(3)
    [(1, 2, 3), (1, 3, 2), (2, 1, 3)]
    """
    _check_cells(n)
    return list(_fib_permutations(n))


def parse_tiling(text: str) -> str:
    """Validate a tiling word.

    >>> parse_tiling("mdm")
    'mdm'
    """
    if not text:
        raise MalformedTilingError("a tiling word must be nonempty")
    for ch in text:
        if ch not in "md":
            raise MalformedTilingError(f"bad tile {ch!r}; expected 'm' or 'd'")
    return text


def tiling_cells(word: str) -> int:
    """Number of strip cells the word covers.

    >>> tiling_cells("mdm")
    4
    """
    return len(word) + word.count("d")


def tiling_to_perm(word: str) -> Perm:
    """The Fibonacci permutation whose block structure matches *word*.

    >>> tiling_to_perm("dmdmm")
    (2, 1, 3, 5, 4, 6, 7)
    """
    out: list[int] = []
    v = 1
    for ch in word:
        if ch == "m":
            out.append(v)
            v += 1
        elif ch == "d":
            out.extend((v + 1, v))
            v += 2
        else:
            raise MalformedTilingError(f"bad tile {ch!r}; expected 'm' or 'd'")
    return tuple(out)


def perm_to_tiling(perm: Sequence[int]) -> str:
    """Inverse of :func:`tiling_to_perm`.

    >>> perm_to_tiling((1, 3, 2, 4, 5, 7, 6))
    'mdmmd'
    """
    word: list[str] = []
    i, n, expect = 0, len(perm), 1
    while i < n:
        if perm[i] == expect:
            word.append("m")
            i, expect = i + 1, expect + 1
        elif i + 1 < n and perm[i] == expect + 1 and perm[i + 1] == expect:
            word.append("d")
            i, expect = i + 2, expect + 2
        else:
            raise NotFibonacciError(f"{perm} is not a Fibonacci permutation")
    return "".join(word)


def fib_stat(perm: Sequence[int]) -> int:
    """Length of the longest suffix that occupies the top values and, once
    shifted down, is itself a Fibonacci permutation (0 when none is).

    >>> fib_stat((2, 3, 4, 1, 6, 5, 7))
    3
    >>> fib_stat((1, 2, 5, 3, 4, 6, 7))
    2
    >>> fib_stat((3, 2, 1))
    0
    """
    n = len(perm)
    best = 0
    smallest = n + 1
    for k in range(1, n + 1):
        smallest = min(smallest, perm[n - k])
        if smallest == n - k + 1:
            # suffix holds exactly the k top values; shift them to 1..k
            window = tuple(x - (n - k) for x in perm[n - k :])
            if is_fibonacci(window):
                best = k
    return best
