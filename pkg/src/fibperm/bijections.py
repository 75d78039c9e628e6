"""Length-preserving bijections onto strip tilings, shifted up one cell.

The length-n members of each class biject with the tilings of an
(n+1)-cell strip minus a single excluded word:

* ``phi`` (A-type classes): Fibonacci members map to ``m`` + their own
  tiling word; members with a core map to ``d`` + the word of the member
  with its smallest core value deleted.  The excluded word is ``d`` followed
  by monominoes only.
* ``rho`` (B-type classes): a member with pre-part length l maps to
  ``m``^(l-1) + ``d`` + the tiling word of its top part.  The excluded word
  is the all-monomino tiling.

Both directions validate their input: permutations must belong to the class
and words must lie in the image.
"""

from __future__ import annotations

from typing import Sequence

from .classes import (
    A_CLASSES,
    B_CLASSES,
    _a_core,
    _b_pre,
    decompose,
)
from .errors import ExcludedTilingError
from .fib import parse_tiling, perm_to_tiling, tiling_to_perm
from .perms import Perm

__all__ = ["phi", "phi_inverse", "rho", "rho_inverse"]


def _check_a_class(class_id: str) -> None:
    if class_id not in A_CLASSES:
        raise ValueError(f"phi is defined on {A_CLASSES}; got {class_id!r}")


def _check_b_class(class_id: str) -> None:
    if class_id not in B_CLASSES:
        raise ValueError(f"rho is defined on {B_CLASSES}; got {class_id!r}")


def phi(class_id: str, perm: Sequence[int]) -> str:
    """Tiling word of an A-type member (one more cell than the member is long).

    >>> phi("A1", (2, 1, 4, 3, 5, 6))
    'mddmm'
    >>> phi("A1", (1, 4, 3, 2, 6, 5))
    'dmdd'
    """
    _check_a_class(class_id)
    dec = decompose(class_id, perm)
    if not dec.core_present:
        return "m" + perm_to_tiling(dec.tau)
    # deleting the smallest core value leaves an increasing run, a domino,
    # then the tail: m^incr_len d <tail word>
    return "d" + "m" * dec.incr_len + "d" + perm_to_tiling(dec.tau)


def phi_inverse(class_id: str, word: str) -> Perm:
    """Member an (n+1)-cell word encodes; the all-m-after-d word is excluded.

    >>> phi_inverse("A2", "dmdd")
    (1, 4, 2, 3, 6, 5)
    """
    _check_a_class(class_id)
    w = parse_tiling(word)
    head, rest = w[0], w[1:]
    if head == "m":
        return tiling_to_perm(rest)
    if "d" not in rest:
        raise ExcludedTilingError(
            f"{w!r} is the one word of its size outside the image of phi"
        )
    i = rest.index("d")  # monominoes before the first domino: the prefix
    tau = tiling_to_perm(rest[i + 1 :])
    shift = i + 3
    return (
        tuple(range(1, i + 1))
        + _a_core(class_id, i + 1)
        + tuple(v + shift for v in tau)
    )


def rho(class_id: str, perm: Sequence[int]) -> str:
    """Tiling word of a B-type member (one more cell than the member is long).

    >>> rho("B1", (3, 2, 1, 5, 4, 6, 7))
    'mmddmm'
    >>> rho("B2", (2, 3, 1))
    'mmd'
    """
    _check_b_class(class_id)
    dec = decompose(class_id, perm)
    return "m" * (dec.pre_len - 1) + "d" + perm_to_tiling(dec.sigma)


def rho_inverse(class_id: str, word: str) -> Perm:
    """Member an (n+1)-cell word encodes; the all-monomino word is excluded.

    >>> rho_inverse("B1", "mmd")
    (3, 2, 1)
    >>> rho_inverse("B1", "mmddmm")
    (3, 2, 1, 5, 4, 6, 7)
    """
    _check_b_class(class_id)
    w = parse_tiling(word)
    if "d" not in w:
        raise ExcludedTilingError(
            f"{w!r} is the one word of its size outside the image of rho"
        )
    k = w.index("d")
    pre_len = k + 1
    sigma = tiling_to_perm(w[k + 1 :])
    return _b_pre(class_id, pre_len) + tuple(v + pre_len for v in sigma)
