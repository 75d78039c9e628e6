"""The four Fibonacci-counted avoidance classes and their structure.

Each class is named by an id:

* ``A1`` avoids 231, 312, 4321, 21543
* ``A2`` avoids 231, 321, 4123, 21534
* ``B1`` avoids 231, 312, 1432
* ``B2`` avoids 312, 321, 1342

All four contain F(n+1) - 1 permutations of length n >= 1.  Members split
into a Fibonacci part plus one exceptional shape:

* A-type members are either Fibonacci permutations, or an increasing prefix,
  then a block on the next three consecutive values (descending for A1,
  top-bottom-middle for A2), then a Fibonacci tail on the top values;
* B-type members are either Fibonacci permutations, or a pre-part of length
  l >= 3 holding the values 1..l (descending for B1; 2 3 .. l then 1 for
  B2) followed by a Fibonacci permutation of the top values.

``decompose``/``compose`` convert between members and these shape records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    InvalidDecompositionError,
    NotInClassError,
    SizeLimitError,
    UnsupportedLengthError,
)
from .fib import fib_number, fib_permutations, is_fibonacci
from .perms import (
    Perm,
    PatternSet,
    avoids_all,
    make_pattern_set,
    make_permutation,
    standardize,
)

CLASS_IDS = ("A1", "A2", "B1", "B2")
A_CLASSES = ("A1", "A2")
B_CLASSES = ("B1", "B2")

# Structural generation is linear per member but the member lists themselves
# get large; past this the closed-form count is the supported interface.
GENERATE_MAX_N = 26

_PATTERNS: dict[str, PatternSet] = {
    "A1": make_pattern_set([(2, 3, 1), (3, 1, 2), (4, 3, 2, 1), (2, 1, 5, 4, 3)]),
    "A2": make_pattern_set([(2, 3, 1), (3, 2, 1), (4, 1, 2, 3), (2, 1, 5, 3, 4)]),
    "B1": make_pattern_set([(2, 3, 1), (3, 1, 2), (1, 4, 3, 2)]),
    "B2": make_pattern_set([(3, 1, 2), (3, 2, 1), (1, 3, 4, 2)]),
}

__all__ = [
    "CLASS_IDS",
    "A_CLASSES",
    "B_CLASSES",
    "GENERATE_MAX_N",
    "ADecomposition",
    "BDecomposition",
    "check_class_id",
    "patterns_of",
    "count",
    "generate",
    "decompose",
    "compose",
]


def check_class_id(class_id: str) -> str:
    """Return *class_id* if known, else raise ValueError.

    >>> check_class_id("B2")
    'B2'
    """
    if class_id not in _PATTERNS:
        raise ValueError(f"unknown class {class_id!r}; expected one of {CLASS_IDS}")
    return class_id


def patterns_of(class_id: str) -> PatternSet:
    """The avoided patterns defining the class.

    >>> sorted(patterns_of("B1"))
    [(1, 4, 3, 2), (2, 3, 1), (3, 1, 2)]
    """
    return _PATTERNS[check_class_id(class_id)]


def count(class_id: str, n: int) -> int:
    """Closed-form member count F(n+1) - 1, defined for n >= 1.

    >>> [count("A1", n) for n in range(1, 7)]
    [1, 2, 4, 7, 12, 20]
    >>> count("B2", 10)
    143
    """
    check_class_id(class_id)
    if n < 1:
        raise UnsupportedLengthError(f"the count formula needs n >= 1; got {n}")
    return fib_number(n + 1) - 1


@dataclass(frozen=True)
class ADecomposition:
    """Shape record for A-type members.

    Fibonacci members have ``core_present=False``, ``incr_len=0`` and are
    stored whole in ``tau``; the rest carry an increasing prefix of length
    ``incr_len``, the three-value core, and the standardized Fibonacci tail.
    """

    incr_len: int
    core_present: bool
    tau: Perm


@dataclass(frozen=True)
class BDecomposition:
    """Shape record for B-type members: pre-part length and the standardized
    Fibonacci permutation sitting on the top values."""

    pre_len: int
    sigma: Perm


def _a_core(class_id: str, low: int) -> Perm:
    # The three-value block on {low, low+1, low+2}.
    if class_id == "A1":
        return (low + 2, low + 1, low)
    return (low + 2, low, low + 1)


def _b_pre(class_id: str, length: int) -> Perm:
    # The pre-part on values 1..length (length >= 3 is the exceptional shape;
    # 1 and 2 coincide with Fibonacci blocks).
    if length == 1:
        return (1,)
    if length == 2:
        return (2, 1)
    if class_id == "B1":
        return tuple(range(length, 0, -1))
    return tuple(range(2, length + 1)) + (1,)


def generate(class_id: str, n: int) -> list[Perm]:
    """All members of length n, lexicographically.

    >>> [" ".join(map(str, p)) for p in generate("B2", 3)]
    ['1 2 3', '1 3 2', '2 1 3', '2 3 1']
    >>> len(generate("A1", 4))
    7
    """
    check_class_id(class_id)
    if n < 0:
        raise UnsupportedLengthError(f"length {n} is negative")
    if n > GENERATE_MAX_N:
        raise SizeLimitError(f"generation is capped at n = {GENERATE_MAX_N}; got {n}")
    members: list[Perm] = list(fib_permutations(n))
    if class_id in A_CLASSES:
        for tau_len in range(0, n - 2):
            incr_len = n - tau_len - 3
            prefix = tuple(range(1, incr_len + 1))
            core = _a_core(class_id, incr_len + 1)
            shift = incr_len + 3
            for tau in fib_permutations(tau_len):
                members.append(prefix + core + tuple(v + shift for v in tau))
    else:
        for pre_len in range(3, n + 1):
            pre = _b_pre(class_id, pre_len)
            for sigma in fib_permutations(n - pre_len):
                members.append(pre + tuple(v + pre_len for v in sigma))
    members.sort()
    return members


def decompose(class_id: str, perm: Sequence[int]):
    """Parse a member into its shape record (ADecomposition or
    BDecomposition); non-members raise NotInClassError.

    >>> decompose("A1", (1, 4, 3, 2, 6, 5))
    ADecomposition(incr_len=1, core_present=True, tau=(2, 1))
    >>> decompose("B1", (3, 2, 1, 5, 4, 6, 7))
    BDecomposition(pre_len=3, sigma=(2, 1, 3, 4))
    """
    check_class_id(class_id)
    p = make_permutation(perm)
    if not avoids_all(p, _PATTERNS[class_id]):
        raise NotInClassError(f"{p} contains a forbidden pattern of {class_id}")
    if class_id in A_CLASSES:
        if is_fibonacci(p):
            return ADecomposition(incr_len=0, core_present=False, tau=p)
        pos = _a_core_position(class_id, p)
        if pos is None:
            raise NotInClassError(f"{p} has no {class_id} core")
        prefix, tail = p[:pos], p[pos + 3 :]
        tau = standardize(tail)
        if prefix != tuple(range(1, pos + 1)) or not is_fibonacci(tau):
            raise NotInClassError(f"{p} does not fit the {class_id} shape")
        if tail and min(tail) != pos + 4:
            # the core must sit on the three values right above the prefix
            raise NotInClassError(f"{p} does not fit the {class_id} shape")
        return ADecomposition(incr_len=pos, core_present=True, tau=tau)
    if not p:
        raise UnsupportedLengthError("the empty permutation has no pre-part")
    pre_len = p.index(1) + 1
    pre, tail = p[:pre_len], p[pre_len:]
    sigma = standardize(tail)
    if pre != _b_pre(class_id, pre_len) or not is_fibonacci(sigma):
        raise NotInClassError(f"{p} does not fit the {class_id} shape")
    return BDecomposition(pre_len=pre_len, sigma=sigma)


def _a_core_position(class_id: str, p: Perm) -> int | None:
    for j in range(len(p) - 2):
        a, b, c = p[j : j + 3]
        if class_id == "A1":
            if a == b + 1 == c + 2:
                return j
        elif a == c + 1 == b + 2:
            return j
    return None


def compose(class_id: str, decomposition) -> Perm:
    """Rebuild the member a shape record describes.

    >>> compose("A2", ADecomposition(incr_len=1, core_present=True, tau=()))
    (1, 4, 2, 3)
    >>> compose("B1", BDecomposition(pre_len=3, sigma=(2, 1, 3, 4)))
    (3, 2, 1, 5, 4, 6, 7)
    """
    check_class_id(class_id)
    if class_id in A_CLASSES:
        if not isinstance(decomposition, ADecomposition):
            raise InvalidDecompositionError(
                f"{class_id} needs an ADecomposition, got {type(decomposition).__name__}"
            )
        tau = make_permutation(decomposition.tau)
        if not is_fibonacci(tau):
            raise InvalidDecompositionError(f"tau {tau} is not a Fibonacci permutation")
        if not decomposition.core_present:
            if decomposition.incr_len != 0:
                raise InvalidDecompositionError(
                    "a coreless record is all tau; incr_len must be 0"
                )
            return tau
        incr_len = decomposition.incr_len
        if incr_len < 0:
            raise InvalidDecompositionError(f"incr_len {incr_len} is negative")
        prefix = tuple(range(1, incr_len + 1))
        shift = incr_len + 3
        return prefix + _a_core(class_id, incr_len + 1) + tuple(
            v + shift for v in tau
        )
    if not isinstance(decomposition, BDecomposition):
        raise InvalidDecompositionError(
            f"{class_id} needs a BDecomposition, got {type(decomposition).__name__}"
        )
    sigma = make_permutation(decomposition.sigma)
    if not is_fibonacci(sigma):
        raise InvalidDecompositionError(f"sigma {sigma} is not a Fibonacci permutation")
    pre_len = decomposition.pre_len
    if pre_len < 1:
        raise InvalidDecompositionError(f"pre_len {pre_len} must be at least 1")
    return _b_pre(class_id, pre_len) + tuple(v + pre_len for v in sigma)
