"""Statistics over the classes: inversions, the Fibonacci-suffix statistic,
and their joint distribution, as enumerated oracles and as closed forms.

The closed forms use the convention that a binomial coefficient with its
lower index outside 0..upper is 0.  Where the literature's stated form and
the enumeration disagree, the formula carries a ``variant`` switch:
``"paper"`` evaluates the form as stated, ``"corrected"`` the repaired one
(they coincide except for the B2 joint distribution's binomial).
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Union

from .classes import check_class_id, generate
from .errors import UnsupportedLengthError
from .fib import fib_number, fib_stat
from .perms import inversions

STATS = ("inv", "fib", "joint")
VARIANTS = ("paper", "corrected")

__all__ = [
    "STATS",
    "VARIANTS",
    "binomial",
    "check_variant",
    "check_stat",
    "fib_inv_count",
    "inv_distribution_formula",
    "fib_distribution_formula",
    "fib_distribution_stated",
    "joint_distribution_formula",
    "distribution_oracle",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 whenever b is outside 0..a.

    >>> binomial(4, 2)
    6
    >>> binomial(2, 5)
    0
    >>> binomial(-1, 0)
    0
    """
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def check_variant(variant: str) -> str:
    """Return *variant* if known, else raise ValueError.

    >>> check_variant("corrected")
    'corrected'
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")
    return variant


def check_stat(stat: str) -> str:
    """Return *stat* if known, else raise ValueError.

    >>> check_stat("inv")
    'inv'
    """
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")
    return stat


def fib_inv_count(n: int, k: int) -> int:
    """Number of length-n Fibonacci permutations with k inversions: each of
    the k dominoes contributes one inversion, so this is C(n-k, k).

    >>> fib_inv_count(4, 1)
    3
    >>> fib_inv_count(5, 2)
    3
    """
    if n < 0:
        raise UnsupportedLengthError(f"length {n} is negative")
    return binomial(n - k, k)


def inv_distribution_formula(class_id: str, n: int, k: int) -> int:
    """Closed form for the number of length-n members with k inversions.

    >>> inv_distribution_formula("A1", 4, 3)
    2
    >>> inv_distribution_formula("A2", 5, 2)
    6
    >>> inv_distribution_formula("B2", 5, 3)
    2
    """
    check_class_id(class_id)
    if n < 1:
        raise UnsupportedLengthError(f"the closed forms need n >= 1; got {n}")
    if class_id == "A1":
        extra = binomial(n - k + 1, k - 2) if k >= 3 else 0
        return binomial(n - k, k) + extra
    if class_id == "A2":
        if k >= 2:
            return binomial(n - k + 1, k)
        return binomial(n - k, k)
    if class_id == "B1":
        total = 0
        for length in range(1, n + 1):
            dominoes = k - comb(length, 2)
            total += binomial(n - length - dominoes, dominoes)
        return total
    return sum(binomial(n - k - 1, k - length + 1) for length in range(1, n + 1))


def fib_distribution_formula(class_id: str, n: int, k: int) -> int:
    """Number of length-n members whose Fibonacci-suffix statistic is k:
    F(n) at k = n, F(k) for 0 <= k <= n-3, and 0 in the impossible band
    k in {n-2, n-1} (and outside 0..n).

    >>> fib_distribution_formula("A1", 7, 3)
    3
    >>> fib_distribution_formula("A1", 4, 2)
    0
    >>> fib_distribution_formula("B1", 5, 5)
    8
    """
    check_class_id(class_id)
    if n < 1:
        raise UnsupportedLengthError(f"the closed forms need n >= 1; got {n}")
    if k == n:
        return fib_number(n)
    if k < 0 or k > n or k >= n - 2:
        return 0
    return fib_number(k)


def fib_distribution_stated(n: int, k: int) -> int:
    """The Fibonacci-statistic distribution as originally stated: F(k) for
    every 0 <= k <= n, with no impossible band.  This is the 'paper' variant
    of :func:`fib_distribution_formula`.

    >>> fib_distribution_stated(1, 0)
    1
    >>> fib_distribution_formula("A1", 1, 0)
    0
    """
    if n < 1:
        raise UnsupportedLengthError(f"the closed forms need n >= 1; got {n}")
    if 0 <= k <= n:
        return fib_number(k)
    return 0


def joint_distribution_formula(
    class_id: str, n: int, k: int, j: int, variant: str = "corrected"
) -> int:
    """Number of length-n members with Fibonacci-suffix statistic k and j
    inversions.  Only the B2 binomial differs between variants.

    >>> joint_distribution_formula("A1", 6, 3, 3)
    1
    >>> joint_distribution_formula("A1", 4, 4, 1)
    3
    >>> joint_distribution_formula("B2", 5, 2, 3, variant="paper")
    3
    >>> joint_distribution_formula("B2", 5, 2, 3, variant="corrected")
    1
    """
    check_class_id(class_id)
    check_variant(variant)
    if n < 1:
        raise UnsupportedLengthError(f"the closed forms need n >= 1; got {n}")
    if k < 0 or j < 0 or k > n:
        return 0
    if k == n:
        return binomial(k - j, j)
    if k >= n - 2:
        return 0
    if class_id == "A1":
        return binomial(k - j + 3, j - 3)
    if class_id == "A2":
        return binomial(k - j + 2, j - 2)
    if class_id == "B1":
        pre_inversions = comb(n - k, 2)
        return binomial(k - j + pre_inversions, j - pre_inversions)
    if variant == "paper":
        return binomial(2 * k + j + 1 - n, j + k + 1 - n)
    return binomial(n - j - 1, j + k + 1 - n)


DistKey = Union[int, tuple[int, int]]


def distribution_oracle(class_id: str, n: int, stat: str) -> dict[DistKey, int]:
    """Enumerated distribution over the length-n members; joint keys are
    (fib, inv) pairs.  Keys come out sorted.

    >>> distribution_oracle("A1", 4, "inv")
    {0: 1, 1: 3, 2: 1, 3: 2}
    >>> distribution_oracle("A1", 1, "fib")
    {1: 1}
    >>> distribution_oracle("B2", 3, "inv")
    {0: 1, 1: 2, 2: 1}
    """
    check_stat(stat)
    members = generate(class_id, n)
    if stat == "inv":
        counter = Counter(inversions(p) for p in members)
    elif stat == "fib":
        counter = Counter(fib_stat(p) for p in members)
    else:
        counter = Counter((fib_stat(p), inversions(p)) for p in members)
    return dict(sorted(counter.items()))
