"""Two-variable generating polynomials G_n(v, q) = sum over length-n
members of v^(Fibonacci-suffix statistic) * q^(inversions).

``Poly`` is a sparse exact-integer polynomial in v and q.  G_n comes three
ways: ``genfun_oracle`` enumerates members, ``genfun_closed`` evaluates the
summation formula (paper or corrected variant), and ``genfun_recurrence``
iterates the two-step recurrence.  ``genfun_addition`` evaluates the
length-splitting formulas for G_{m+n} from data at m and n.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

from .classes import check_class_id, generate
from .errors import NotEvaluableError, UnsupportedLengthError
from .fib import fib_stat
from .perms import inversions
from .stats import binomial, check_variant

__all__ = [
    "Poly",
    "ZERO",
    "ONE",
    "V",
    "Q",
    "fib_poly",
    "genfun_oracle",
    "genfun_closed",
    "genfun_recurrence",
    "genfun_addition",
]

Exponents = tuple[int, int]
TermsInput = Union[Mapping[Exponents, int], Iterable[tuple[Exponents, int]], None]


class Poly:
    """Polynomial in v and q with exact integer coefficients.

    >>> p = Poly.monomial(2, 1, 0) + Poly.monomial(1, 0, 3)
    >>> str(p)
    '1*q^3 + 2*v'
    >>> p.evaluate(1, 1)
    3
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: TermsInput = None):
        data: dict[Exponents, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (v_exp, q_exp), coeff in items:
                if v_exp < 0 or q_exp < 0:
                    raise ValueError(f"negative exponent in v^{v_exp}*q^{q_exp}")
                data[(v_exp, q_exp)] = data.get((v_exp, q_exp), 0) + coeff
        self._terms = {e: c for e, c in data.items() if c}

    @classmethod
    def monomial(cls, coeff: int, v_exp: int, q_exp: int) -> "Poly":
        return cls({(v_exp, q_exp): coeff})

    def terms(self) -> tuple[tuple[Exponents, int], ...]:
        """Terms as ((v_exp, q_exp), coeff), sorted by exponents."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, v_exp: int, q_exp: int) -> int:
        return self._terms.get((v_exp, q_exp), 0)

    def evaluate(self, v: int, q: int) -> int:
        return sum(c * v**a * q**b for (a, b), c in self._terms.items())

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            data[e] = data.get(e, 0) + c
        return Poly(data)

    def __neg__(self) -> "Poly":
        return Poly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            return Poly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        data: dict[Exponents, int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                data[e] = data.get(e, 0) + c1 * c2
        return Poly(data)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self.terms())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(
            _term_str(v_exp, q_exp, coeff)
            for (v_exp, q_exp), coeff in self.terms()
        )

    def __repr__(self) -> str:
        return f"<Poly {self}>"


def _term_str(v_exp: int, q_exp: int, coeff: int) -> str:
    parts = [str(coeff)]
    if v_exp == 1:
        parts.append("v")
    elif v_exp > 1:
        parts.append(f"v^{v_exp}")
    if q_exp == 1:
        parts.append("q")
    elif q_exp > 1:
        parts.append(f"q^{q_exp}")
    return "*".join(parts)


ZERO = Poly()
ONE = Poly.monomial(1, 0, 0)
V = Poly.monomial(1, 1, 0)
Q = Poly.monomial(1, 0, 1)


def _vpow(exp: int) -> Poly:
    return Poly.monomial(1, exp, 0)


def _qpow(exp: int) -> Poly:
    return Poly.monomial(1, 0, exp)


@lru_cache(maxsize=None)
def fib_poly(n: int) -> Poly:
    """Inversion polynomial of the Fibonacci permutations,
    F_n(q) = sum_k C(n-k, k) q^k; satisfies F_n = F_{n-1} + q F_{n-2}.

    >>> str(fib_poly(3))
    '1 + 2*q'
    >>> fib_poly(6) == fib_poly(5) + Q * fib_poly(4)
    True
    """
    if n < 0:
        raise UnsupportedLengthError(f"F_{n}(q) is not defined here")
    return Poly({(0, k): binomial(n - k, k) for k in range(n // 2 + 1)})


@lru_cache(maxsize=None)
def genfun_oracle(class_id: str, n: int) -> Poly:
    """G_n by enumerating the members.

    >>> str(genfun_oracle("A1", 3))
    '1*q^3 + 1*v^3 + 2*v^3*q'
    >>> str(genfun_oracle("B2", 3))
    '1*q^2 + 1*v^3 + 2*v^3*q'
    """
    return Poly(
        ((fib_stat(p), inversions(p)), 1) for p in generate(class_id, n)
    )


def _tail_q_exponent(class_id: str, n: int) -> int:
    # Inversions of the one length-n member outside the image of the
    # two-step construction: the all-descending / rotated pre-part shapes.
    if class_id == "A1":
        return 3
    if class_id == "A2":
        return 2
    if class_id == "B1":
        return comb(n, 2)
    return n - 1


def genfun_closed(class_id: str, n: int, variant: str = "corrected") -> Poly:
    """G_n by the summation formula v^n F_n(q) + sum_{j=0}^{n-3} q^e(j) v^j
    F_j(q), defined for n >= 3.  The B1/B2 exponent e(j) differs between
    variants; a variant calling for a negative exponent raises
    NotEvaluableError.

    >>> genfun_closed("A1", 4) == genfun_oracle("A1", 4)
    True
    >>> str(genfun_closed("B2", 3))
    '1*q^2 + 1*v^3 + 2*v^3*q'
    """
    check_class_id(class_id)
    check_variant(variant)
    if n < 3:
        raise UnsupportedLengthError(f"the summation formula needs n >= 3; got {n}")
    total = _vpow(n) * fib_poly(n)
    for j in range(n - 2):
        if class_id == "A1":
            q_exp = 3
        elif class_id == "A2":
            q_exp = 2
        elif class_id == "B1":
            q_exp = comb(j, 2) if variant == "paper" else comb(n - j, 2)
        else:
            q_exp = j - 1 if variant == "paper" else n - j - 1
        if q_exp < 0:
            raise NotEvaluableError(
                f"{class_id} {variant} summation at n = {n}: "
                f"the j = {j} term calls for q^{q_exp}"
            )
        total = total + _qpow(q_exp) * _vpow(j) * fib_poly(j)
    return total


def genfun_recurrence(class_id: str, n: int) -> Poly:
    """G_n by iterating G_k = q^(tail exponent) + v G_{k-1} + q v^2 G_{k-2}
    from the bases G_1 = v and G_2 = v^2 + q v^2 (recurrence valid from
    n = 3 up).

    >>> genfun_recurrence("B1", 4) == genfun_oracle("B1", 4)
    True
    """
    check_class_id(class_id)
    if n < 1:
        raise UnsupportedLengthError(f"the recurrence starts at n = 1; got {n}")
    g_prev = V
    g_cur = V * V + Q * V * V
    if n == 1:
        return g_prev
    for k in range(3, n + 1):
        head = _qpow(_tail_q_exponent(class_id, k))
        g_prev, g_cur = g_cur, head + V * g_cur + Q * V * V * g_prev
    return g_cur


def genfun_addition(
    class_id: str, m: int, n: int, variant: str = "corrected"
) -> Poly:
    """G_{m+n} assembled from shorter data, per the length-splitting
    formulas (defined for m, n >= 2).  Building blocks G_m, G_{m-1}, G_n
    come from the enumeration oracle so that only the formula's shape is
    under test.

    >>> genfun_addition("A1", 2, 2) == genfun_oracle("A1", 4)
    True
    """
    check_class_id(class_id)
    check_variant(variant)
    if m < 2 or n < 2:
        raise UnsupportedLengthError(
            f"the addition formulas need m, n >= 2; got ({m}, {n})"
        )
    g_m = genfun_oracle(class_id, m)
    g_m1 = genfun_oracle(class_id, m - 1)
    g_n = genfun_oracle(class_id, n)
    f_n = fib_poly(n)
    f_n1 = fib_poly(n - 1)
    f_n2 = fib_poly(n - 2)
    main = _vpow(n) * g_m * f_n
    straddle_v = n + 2 if variant == "paper" else n + 1
    straddle = Q * _vpow(straddle_v) * g_m1 * f_n1
    if class_id in ("A1", "A2"):
        q_exp = 3 if class_id == "A1" else 2
        return (
            main
            + straddle
            + _qpow(q_exp) * _vpow(n - 1) * f_n1
            + _qpow(q_exp) * _vpow(n - 2) * f_n2
            + g_n
            - _vpow(n) * f_n
        )
    if class_id == "B1":
        if variant == "paper":
            tail = ZERO
            for i in range(n + 1):
                tail = tail + _vpow(i) * fib_poly(i) * _qpow(comb(i, 2) + i * m)
            return main + straddle + _vpow(comb(m, 2)) * tail
        tail = ZERO
        for i in range(n):
            tail = tail + _qpow(comb(m + n - i, 2)) * _vpow(i) * fib_poly(i)
        return main + straddle + tail
    low = _qpow(m) * _vpow(n - 1) * f_n1
    rest = _qpow(m) * (g_n - _vpow(n) * f_n)
    if variant == "paper":
        return main + straddle + low + rest
    return main + straddle + low + _qpow(m + 1) * _vpow(n - 2) * f_n2 + rest
