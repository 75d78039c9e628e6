"""Identity verification engine.

Thirteen identity families are registered, each checked over a parameter
range against independently computed ground truth (enumeration, brute-force
filtering, or a second derivation route).  Every identity evaluates under
one or both variants: ``paper`` is the identity exactly as originally
stated, ``corrected`` the repaired form where the stated one fails.  The
corrections registry records each repair with its reason and a concrete
counterexample.

A verification run is *resolved* when every (identity, class) unit passes
in at least one evaluated variant and every correction entry that was
exercised validated.  ``render_text``, ``render_markdown`` and
``to_json_doc`` serialize a run deterministically (no timestamps unless an
explicit stamp is passed).
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable, Optional

from .bijections import phi, phi_inverse, rho, rho_inverse
from .classes import (
    A_CLASSES,
    B_CLASSES,
    CLASS_IDS,
    GENERATE_MAX_N,
    check_class_id,
    compose,
    count,
    decompose,
    generate,
    patterns_of,
)
from .errors import (
    ExcludedTilingError,
    NotEvaluableError,
    NotInClassError,
    UnknownIdentityError,
)
from .fib import fib_number, fib_permutations, fib_stat, tilings
from .genfun import (
    ONE,
    Q,
    V,
    Poly,
    _tail_q_exponent,
    fib_poly,
    genfun_addition,
    genfun_closed,
    genfun_oracle,
    genfun_recurrence,
)
from .perms import BRUTE_FORCE_MAX_N, brute_force_av, inversions
from .stats import (
    VARIANTS,
    binomial,
    check_variant,
    distribution_oracle,
    fib_distribution_formula,
    fib_distribution_stated,
    fib_inv_count,
    inv_distribution_formula,
    joint_distribution_formula,
)

__all__ = [
    "IDENTITY_IDS",
    "IdentityReport",
    "Correction",
    "CORRECTIONS",
    "VerificationResult",
    "check_identity",
    "run_verification",
    "render_text",
    "render_markdown",
    "to_json_doc",
]

# Checkers above these bounds would enumerate beyond the module caps.
_BIJECTION_MAX_N = 12
_SCALAR_MIN_RANGE = 30
_FIB_ENUM_MAX_N = 16

CheckOutcome = tuple[str, str, Optional[dict], str]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity under one variant.

    ``status`` is ``"pass"``, ``"fail"``, or ``"not-evaluable"``;
    ``first_mismatch`` (when failing) holds the smallest offending
    parameters, the coefficient exponent where applicable, and the two
    sides: ``lhs`` is the recomputed/enumerated truth, ``rhs`` the formula
    as evaluated.
    """

    identity_id: str
    class_id: Optional[str]
    variant: str
    parameter_range: str
    status: str
    first_mismatch: Optional[dict]
    notes: str


@dataclass(frozen=True)
class Correction:
    """One registered repair: what changed relative to the stated form,
    why, and a concrete counterexample.  ``class_id`` None means the repair
    applies to every class the identity covers."""

    identity_id: str
    class_id: Optional[str]
    change: str
    reason: str
    counterexample: str


def _mismatch(parameters: dict, lhs: int, rhs: int, exponent=None) -> dict:
    out: dict = {"parameters": parameters}
    if exponent is not None:
        out["exponent"] = {"v": exponent[0], "q": exponent[1]}
    out["lhs"] = lhs
    out["rhs"] = rhs
    return out


def _poly_first_mismatch(truth: Poly, formula: Poly):
    """Smallest exponent (v, q) where the coefficients differ, or None."""
    exponents = sorted(
        {e for e, _ in truth.terms()} | {e for e, _ in formula.terms()}
    )
    for e in exponents:
        lhs, rhs = truth.coefficient(*e), formula.coefficient(*e)
        if lhs != rhs:
            return e, lhs, rhs
    return None


# ---------------------------------------------------------------------------
# per-class checkers


def _check_counts(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, GENERATE_MAX_N)
    brute_hi = min(n_hi, BRUTE_FORCE_MAX_N)
    rng = f"1 <= n <= {n_hi}"
    for n in range(1, n_hi + 1):
        members = generate(class_id, n)
        expected = count(class_id, n)
        if len(members) != expected:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, len(members), expected),
                "closed-form count disagrees with the structural generator",
            )
        if n <= brute_hi:
            filtered = brute_force_av(n, patterns_of(class_id))
            if filtered != members:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n}, len(filtered), len(members)),
                    "structural generator disagrees with the brute-force filter",
                )
    return (
        "pass",
        rng,
        None,
        f"count == |generate| throughout; brute-force cross-check to n = {brute_hi}",
    )


@lru_cache(maxsize=None)
def _first_undecomposable_nonmember(class_id: str, n: int):
    # Non-members must be rejected by decompose; full scan for small n,
    # strided (deterministic) sampling above 6.
    members = set(generate(class_id, n))
    stride = 1 if n <= 6 else 97
    for idx, p in enumerate(itertools.permutations(range(1, n + 1))):
        if idx % stride:
            continue
        if p in members:
            continue
        try:
            decompose(class_id, p)
        except NotInClassError:
            continue
        return p
    return None


def _check_structure(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, BRUTE_FORCE_MAX_N)
    rng = f"0 <= n <= {n_hi}"
    for n in range(0, n_hi + 1):
        members = generate(class_id, n)
        filtered = brute_force_av(n, patterns_of(class_id))
        if members != filtered:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, len(filtered), len(members)),
                "structural generator disagrees with the brute-force filter",
            )
        for p in members:
            if not p and class_id in B_CLASSES:
                continue  # the empty member has no pre-part to parse
            if compose(class_id, decompose(class_id, p)) != p:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n}, 1, 0),
                    f"decompose/compose round-trip failed on {p}",
                )
        bad = _first_undecomposable_nonmember(class_id, n)
        if bad is not None:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, 0, 1),
                f"non-member {bad} was not rejected by decompose",
            )
    return (
        "pass",
        rng,
        None,
        "membership by patterns == membership by shape; all members round-trip",
    )


def _check_bijection(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, _BIJECTION_MAX_N)
    rng = f"1 <= n <= {n_hi}"
    a_type = class_id in A_CLASSES
    forward = phi if a_type else rho
    inverse = phi_inverse if a_type else rho_inverse
    for n in range(1, n_hi + 1):
        members = generate(class_id, n)
        words = set(tilings(n + 1))
        excluded = ("d" + "m" * (n - 1)) if a_type else ("m" * (n + 1))
        image = set()
        for p in members:
            w = forward(class_id, p)
            if inverse(class_id, w) != p:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n}, 1, 0),
                    f"round-trip failed on {p} (word {w!r})",
                )
            image.add(w)
        if len(image) != len(members):
            return (
                "fail",
                rng,
                _mismatch({"n": n}, len(members), len(image)),
                "the map is not injective",
            )
        if image != words - {excluded}:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, len(words) - 1, len(image)),
                f"image differs from all words minus {excluded!r}",
            )
        try:
            inverse(class_id, excluded)
        except ExcludedTilingError:
            pass
        else:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, 0, 1),
                f"excluded word {excluded!r} unexpectedly decoded",
            )
    name = "phi" if a_type else "rho"
    return (
        "pass",
        rng,
        None,
        f"{name} bijects members with the (n+1)-cell words minus one excluded word",
    )


def _check_inv_dist(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, GENERATE_MAX_N)
    rng = f"1 <= n <= {n_hi}"
    for n in range(1, n_hi + 1):
        oracle = distribution_oracle(class_id, n, "inv")
        for k in range(0, comb(n, 2) + 3):
            lhs = oracle.get(k, 0)
            rhs = inv_distribution_formula(class_id, n, k)
            if lhs != rhs:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, lhs, rhs),
                    "closed form disagrees with enumeration",
                )
    return ("pass", rng, None, "closed form matches enumeration at every k")


def _check_fib_dist(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, GENERATE_MAX_N)
    rng = f"1 <= n <= {n_hi}, 0 <= k <= n"
    for n in range(1, n_hi + 1):
        oracle = distribution_oracle(class_id, n, "fib")
        for k in range(0, n + 1):
            lhs = oracle.get(k, 0)
            if variant == "paper":
                rhs = fib_distribution_stated(n, k)
            else:
                rhs = fib_distribution_formula(class_id, n, k)
            if lhs != rhs:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, lhs, rhs),
                    "no member can leave a Fibonacci suffix of length n-1 or n-2",
                )
    return (
        "pass",
        rng,
        None,
        "F(k) for k <= n-3, 0 on the impossible band {n-2, n-1}, F(n) at k = n",
    )


def _check_joint_dist(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(n_max, GENERATE_MAX_N)
    rng = f"1 <= n <= {n_hi}, 0 <= k <= n, 0 <= j <= C(n,2)+2"
    for n in range(1, n_hi + 1):
        oracle = distribution_oracle(class_id, n, "joint")
        for k in range(0, n + 1):
            for j in range(0, comb(n, 2) + 3):
                lhs = oracle.get((k, j), 0)
                rhs = joint_distribution_formula(class_id, n, k, j, variant)
                if lhs != rhs:
                    return (
                        "fail",
                        rng,
                        _mismatch({"n": n, "k": k, "j": j}, lhs, rhs),
                        "closed form disagrees with enumeration",
                    )
    return ("pass", rng, None, "closed form matches enumeration at every (k, j)")


def _check_gf_closed(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(max(n_max, 3), GENERATE_MAX_N)
    rng = f"3 <= n <= {n_hi}"
    for n in range(3, n_hi + 1):
        truth = genfun_oracle(class_id, n)
        try:
            formula = genfun_closed(class_id, n, variant)
        except NotEvaluableError as exc:
            return ("not-evaluable", rng, None, str(exc))
        found = _poly_first_mismatch(truth, formula)
        if found:
            e, lhs, rhs = found
            return (
                "fail",
                rng,
                _mismatch({"n": n}, lhs, rhs, exponent=e),
                "summation formula disagrees with enumeration",
            )
    return ("pass", rng, None, "summation formula matches enumeration")


def _check_gf_recurrence(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = min(max(n_max, 3), GENERATE_MAX_N)
    start = 2 if variant == "paper" else 3
    rng = f"bases n = 1, 2; instances {start} <= n <= {n_hi}"
    for n in (1, 2):
        found = _poly_first_mismatch(
            genfun_oracle(class_id, n), genfun_recurrence(class_id, n)
        )
        if found:
            e, lhs, rhs = found
            return (
                "fail",
                rng,
                _mismatch({"n": n}, lhs, rhs, exponent=e),
                "base case disagrees with enumeration",
            )
    for n in range(start, n_hi + 1):
        truth = genfun_oracle(class_id, n)
        if n == 2:
            # instantiate the recurrence itself at its claimed lower edge
            head = Poly.monomial(1, 0, _tail_q_exponent(class_id, 2))
            formula = (
                head
                + V * genfun_oracle(class_id, 1)
                + Q * V * V * genfun_oracle(class_id, 0)
            )
        else:
            formula = genfun_recurrence(class_id, n)
        found = _poly_first_mismatch(truth, formula)
        if found:
            e, lhs, rhs = found
            return (
                "fail",
                rng,
                _mismatch({"n": n}, lhs, rhs, exponent=e),
                "the n = 2 instance adds a spurious tail monomial"
                if n == 2
                else "recurrence disagrees with enumeration",
            )
    return ("pass", rng, None, "recurrence matches enumeration")


def _check_gf_addition(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = max(n_max, 2)
    m_hi = max(m_max if m_max is not None else n_hi, 2)
    rng = f"2 <= m <= {m_hi}, 2 <= n <= {n_hi}, m+n <= {GENERATE_MAX_N}"
    for m in range(2, m_hi + 1):
        for n in range(2, n_hi + 1):
            if m + n > GENERATE_MAX_N:
                continue
            truth = genfun_oracle(class_id, m + n)
            formula = genfun_addition(class_id, m, n, variant)
            found = _poly_first_mismatch(truth, formula)
            if found:
                e, lhs, rhs = found
                return (
                    "fail",
                    rng,
                    _mismatch({"m": m, "n": n}, lhs, rhs, exponent=e),
                    "length-splitting formula disagrees with enumeration",
                )
    return ("pass", rng, None, "length-splitting formula matches enumeration")


# ---------------------------------------------------------------------------
# global (class-independent) checkers


def _check_an_recurrence(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = max(_SCALAR_MIN_RANGE, n_max)
    rng = f"3 <= n <= {n_hi}"
    for n in range(3, n_hi + 1):
        lhs = fib_number(n + 1) - 1
        rhs = (fib_number(n) - 1) + (fib_number(n - 1) - 1) + 1
        if lhs != rhs:
            return ("fail", rng, _mismatch({"n": n}, lhs, rhs), "")
    return ("pass", rng, None, "a_n = a_{n-1} + a_{n-2} + 1 with a_n = F(n+1) - 1")


def _check_eq1(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = max(_SCALAR_MIN_RANGE, n_max)
    start = 1 if variant == "paper" else 0
    rng = f"{start} <= n <= {n_hi}, summing from k = {start}"
    for n in range(start, n_hi + 1):
        lhs = sum(fib_number(k) for k in range(start, n + 1))
        rhs = fib_number(n + 2) - 1
        if lhs != rhs:
            return (
                "fail",
                rng,
                _mismatch({"n": n}, lhs, rhs),
                "the sum must start at k = 0 to reach F(n+2) - 1",
            )
    return ("pass", rng, None, "telescoping sum of Fibonacci numbers")


def _check_hockey_stick(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = max(_SCALAR_MIN_RANGE, n_max)
    rng = f"0 <= r <= n <= {n_hi}"
    for n in range(0, n_hi + 1):
        for r in range(0, n + 1):
            lhs = sum(comb(i, r) for i in range(r, n + 1))
            rhs = comb(n + 1, r + 1)
            if lhs != rhs:
                return ("fail", rng, _mismatch({"n": n, "r": r}, lhs, rhs), "")
    # consistency: the A-type tail sums collapse to the closed forms used by
    # inv_distribution_formula
    for n in range(1, n_hi + 1):
        for k in range(0, n + 1):
            a1 = binomial(n - k, k)
            if k >= 3:
                a1 += sum(binomial(t - (k - 3), k - 3) for t in range(0, n - 2))
            if a1 != inv_distribution_formula("A1", n, k):
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, a1, inv_distribution_formula("A1", n, k)),
                    "A1 tail sum does not collapse to the closed form",
                )
            a2 = binomial(n - k, k)
            if k >= 2:
                a2 += sum(binomial(t - (k - 2), k - 2) for t in range(0, n - 2))
            if a2 != inv_distribution_formula("A2", n, k):
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, a2, inv_distribution_formula("A2", n, k)),
                    "A2 tail sum does not collapse to the closed form",
                )
    return (
        "pass",
        rng,
        None,
        "column sums collapse; A-type summation and closed forms agree",
    )


def _check_fib_inv(class_id, variant, n_max, m_max) -> CheckOutcome:
    n_hi = max(_SCALAR_MIN_RANGE, n_max)
    enum_hi = min(n_hi, _FIB_ENUM_MAX_N)
    rng = f"0 <= n <= {n_hi}; enumeration to n = {enum_hi}"
    polys = [ONE, ONE]
    for _ in range(2, n_hi + 1):
        polys.append(polys[-1] + Q * polys[-2])
    for n in range(0, n_hi + 1):
        for k in range(0, n // 2 + 2):
            lhs = polys[n].coefficient(0, k)
            rhs = fib_inv_count(n, k)
            if lhs != rhs:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, lhs, rhs),
                    "recurrence-built inversion polynomial disagrees",
                )
    for n in range(0, enum_hi + 1):
        counted = Counter(inversions(p) for p in fib_permutations(n))
        for k in range(0, n // 2 + 2):
            lhs = counted.get(k, 0)
            rhs = fib_inv_count(n, k)
            if lhs != rhs:
                return (
                    "fail",
                    rng,
                    _mismatch({"n": n, "k": k}, lhs, rhs),
                    "enumeration disagrees with C(n-k, k)",
                )
    return ("pass", rng, None, "C(n-k, k) matches both the recurrence and enumeration")


# ---------------------------------------------------------------------------
# registry of identity families


@dataclass(frozen=True)
class IdentityFamily:
    identity_id: str
    title: str
    per_class: bool
    checker: Callable[[Optional[str], str, int, Optional[int]], CheckOutcome]


FAMILIES: tuple[IdentityFamily, ...] = (
    IdentityFamily("counts", "member count F(n+1) - 1", True, _check_counts),
    IdentityFamily(
        "a_n-recurrence", "a_n = a_{n-1} + a_{n-2} + 1", False, _check_an_recurrence
    ),
    IdentityFamily("eq1", "sum of F(k) telescopes to F(n+2) - 1", False, _check_eq1),
    IdentityFamily("hockey-stick", "binomial column sums", False, _check_hockey_stick),
    IdentityFamily(
        "fib-inv",
        "inversions over Fibonacci permutations are C(n-k, k)",
        False,
        _check_fib_inv,
    ),
    IdentityFamily("inv-dist", "inversion distribution closed form", True, _check_inv_dist),
    IdentityFamily(
        "fib-dist", "Fibonacci-suffix statistic distribution", True, _check_fib_dist
    ),
    IdentityFamily("joint-dist", "joint (fib, inv) distribution", True, _check_joint_dist),
    IdentityFamily("gf-closed", "G_n summation formula", True, _check_gf_closed),
    IdentityFamily("gf-recurrence", "G_n two-step recurrence", True, _check_gf_recurrence),
    IdentityFamily(
        "gf-addition", "G_{m+n} length-splitting formula", True, _check_gf_addition
    ),
    IdentityFamily("bijection-image", "tiling bijection image", True, _check_bijection),
    IdentityFamily(
        "structure-oracle", "structural generator vs brute force", True, _check_structure
    ),
)

IDENTITY_IDS: tuple[str, ...] = tuple(f.identity_id for f in FAMILIES)
_FAMILY_BY_ID = {f.identity_id: f for f in FAMILIES}


CORRECTIONS: tuple[Correction, ...] = (
    Correction(
        identity_id="eq1",
        class_id=None,
        change="the sum starts at k = 0 instead of k = 1",
        reason="F(0) = 1 under this indexing, so dropping the k = 0 term "
        "leaves the total one short of F(n+2) - 1",
        counterexample="n = 1: the k >= 1 sum is 1, but F(3) - 1 = 2",
    ),
    Correction(
        identity_id="fib-dist",
        class_id=None,
        change="the count is F(k) only for 0 <= k <= n-3, with 0 at "
        "k in {n-2, n-1} and F(n) at k = n",
        reason="a Fibonacci suffix of length n-1 or n-2 forces the whole "
        "member to be Fibonacci, so those statistic values are impossible",
        counterexample="n = 1, k = 0: F(0) = 1 is claimed, but the only "
        "member (1) has statistic 1",
    ),
    Correction(
        identity_id="joint-dist",
        class_id="B2",
        change="the binomial is C(n-j-1, j+k+1-n) instead of "
        "C(2k+j+1-n, j+k+1-n)",
        reason="the upper index must count the free cells of the top part, "
        "which depends on n-j, not on k",
        counterexample="(n, k, j) = (5, 2, 3): the stated binomial gives "
        "C(3, 1) = 3; enumeration finds exactly 1 such member",
    ),
    Correction(
        identity_id="gf-closed",
        class_id="B1",
        change="the summand exponent is q^C(n-j, 2) instead of q^C(j, 2)",
        reason="the j-th summand's pre-part has length n-j, so its "
        "inversion count is C(n-j, 2)",
        counterexample="n = 3: the stated form has constant term 1 where "
        "the enumeration has 0 (member 321 contributes q^3)",
    ),
    Correction(
        identity_id="gf-closed",
        class_id="B2",
        change="the summand exponent is q^(n-j-1) instead of q^(j-1)",
        reason="the j-th summand's pre-part has length n-j and contributes "
        "n-j-1 inversions; the stated exponent is negative at j = 0",
        counterexample="n = 3, j = 0: the stated form calls for q^-1 and "
        "cannot be evaluated",
    ),
    Correction(
        identity_id="gf-recurrence",
        class_id=None,
        change="the recurrence applies from n >= 3 (not n >= 2), on the "
        "bases G_1 = v and G_2 = v^2 + q v^2",
        reason="at n = 2 the head monomial double-counts: both recursive "
        "terms already cover all four members",
        counterexample="n = 2 for B1: the instance gives q + v^2 + q v^2, "
        "but G_2 = v^2 + q v^2",
    ),
    Correction(
        identity_id="gf-addition",
        class_id="A1",
        change="the straddling term's v-power is n+1 instead of n+2",
        reason="a domino across the cut joins the left part's run to the "
        "n-1 remaining right cells, leaving statistic n+1",
        counterexample="(m, n) = (2, 2): the coefficient of v^4 q is 3 by "
        "enumeration but 2 as stated (the stray mass sits at v^5 q)",
    ),
    Correction(
        identity_id="gf-addition",
        class_id="A2",
        change="the straddling term's v-power is n+1 instead of n+2",
        reason="a domino across the cut joins the left part's run to the "
        "n-1 remaining right cells, leaving statistic n+1",
        counterexample="(m, n) = (2, 2): the coefficient of v^4 q is 3 by "
        "enumeration but 2 as stated (the stray mass sits at v^5 q)",
    ),
    Correction(
        identity_id="gf-addition",
        class_id="B1",
        change="the straddling term's v-power is n+1, and the pre-part term "
        "is sum_{i=0}^{n-1} q^C(m+n-i, 2) v^i F_i(q)",
        reason="members whose pre-part crosses the cut have pre-length "
        "m+n-i for a length-i top part, giving C(m+n-i, 2) inversions; the "
        "stated third term tracks the wrong pre-lengths",
        counterexample="(m, n) = (2, 2): the enumeration needs v q^3 + q^6 "
        "from crossing pre-parts; the stated form contributes "
        "v + v^2 q^2 + v^3 q^5 + v^3 q^6 instead",
    ),
    Correction(
        identity_id="gf-addition",
        class_id="B2",
        change="the straddling term's v-power is n+1, and the missing term "
        "q^(m+1) v^(n-2) F_{n-2}(q) is added",
        reason="a pre-part ending exactly one cell past the cut (length "
        "m+1, top part length n-2) is not covered by the stated terms",
        counterexample="(m, n) = (2, 2): the enumeration's q^3 term is "
        "absent as stated",
    ),
)


# ---------------------------------------------------------------------------
# running


def check_identity(
    identity_id: str,
    variant: str,
    *,
    n_max: int = 9,
    m_max: Optional[int] = None,
    class_id: Optional[str] = None,
) -> IdentityReport:
    """Evaluate one identity under one variant and return its report."""
    family = _FAMILY_BY_ID.get(identity_id)
    if family is None:
        raise UnknownIdentityError(
            f"unknown identity {identity_id!r}; expected one of {IDENTITY_IDS}"
        )
    check_variant(variant)
    if family.per_class:
        if class_id is None:
            raise ValueError(f"identity {identity_id!r} is per-class; pass class_id")
        check_class_id(class_id)
    elif class_id is not None:
        raise ValueError(f"identity {identity_id!r} is global; class_id must be None")
    status, rng, mismatch, notes = family.checker(class_id, variant, n_max, m_max)
    return IdentityReport(
        identity_id=identity_id,
        class_id=class_id,
        variant=variant,
        parameter_range=rng,
        status=status,
        first_mismatch=mismatch,
        notes=notes,
    )


def _run_unit(spec: tuple) -> IdentityReport:
    identity_id, class_id, variant, n_max, m_max = spec
    return check_identity(
        identity_id, variant, n_max=n_max, m_max=m_max, class_id=class_id
    )


@dataclass(frozen=True)
class VerificationResult:
    """All reports of one run plus the run's parameters."""

    n_max: int
    m_max: Optional[int]
    variants: tuple[str, ...]
    reports: tuple[IdentityReport, ...]

    def units(self) -> dict[tuple[str, Optional[str]], dict[str, IdentityReport]]:
        """Reports grouped as {(identity, class): {variant: report}}."""
        grouped: dict[tuple[str, Optional[str]], dict[str, IdentityReport]] = {}
        for report in self.reports:
            key = (report.identity_id, report.class_id)
            grouped.setdefault(key, {})[report.variant] = report
        return grouped

    def unresolved_units(self) -> list[tuple[str, Optional[str]]]:
        """Units with no passing variant among those evaluated."""
        return [
            key
            for key, by_variant in self.units().items()
            if not any(r.status == "pass" for r in by_variant.values())
        ]

    def registry_problems(self) -> list[str]:
        """Correction entries that failed to validate in this run."""
        problems: list[str] = []
        evaluated = self.units()
        for corr in CORRECTIONS:
            family = _FAMILY_BY_ID.get(corr.identity_id)
            if family is None:
                problems.append(f"correction names unknown identity {corr.identity_id!r}")
                continue
            if corr.class_id is not None and not family.per_class:
                problems.append(
                    f"correction {corr.identity_id!r} names a class on a global identity"
                )
                continue
            if "corrected" not in self.variants:
                continue
            if family.per_class:
                keys = [
                    (corr.identity_id, cid)
                    for cid in (CLASS_IDS if corr.class_id is None else [corr.class_id])
                ]
            else:
                keys = [(corr.identity_id, None)]
            for key in keys:
                report = evaluated.get(key, {}).get("corrected")
                if report is not None and report.status != "pass":
                    problems.append(
                        f"correction for {key[0]}"
                        + (f"/{key[1]}" if key[1] else "")
                        + f" did not validate: corrected variant {report.status}"
                    )
        return problems

    @property
    def resolved(self) -> bool:
        return not self.unresolved_units() and not self.registry_problems()


def run_verification(
    identity_ids=None,
    *,
    n_max: int = 9,
    m_max: Optional[int] = None,
    variants: tuple[str, ...] = VARIANTS,
    jobs: int = 1,
) -> VerificationResult:
    """Evaluate identities (all 13 by default) over both variants."""
    if identity_ids is None or identity_ids == "all" or identity_ids == ["all"]:
        ids = list(IDENTITY_IDS)
    else:
        ids = list(identity_ids)
        for identity_id in ids:
            if identity_id not in _FAMILY_BY_ID:
                raise UnknownIdentityError(
                    f"unknown identity {identity_id!r}; expected one of {IDENTITY_IDS}"
                )
    requested = set(variants)
    for variant in requested:
        check_variant(variant)
    ordered_variants = tuple(v for v in VARIANTS if v in requested)
    specs = []
    for identity_id in ids:
        family = _FAMILY_BY_ID[identity_id]
        class_ids = CLASS_IDS if family.per_class else (None,)
        for class_id in class_ids:
            for variant in ordered_variants:
                specs.append((identity_id, class_id, variant, n_max, m_max))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = tuple(pool.map(_run_unit, specs))
    else:
        reports = tuple(_run_unit(spec) for spec in specs)
    return VerificationResult(
        n_max=n_max, m_max=m_max, variants=ordered_variants, reports=reports
    )


# ---------------------------------------------------------------------------
# rendering


def _mismatch_text(mismatch: Optional[dict]) -> str:
    if not mismatch:
        return ""
    parts = ", ".join(f"{k}={v}" for k, v in mismatch["parameters"].items())
    if "exponent" in mismatch:
        e = mismatch["exponent"]
        parts += f" at v^{e['v']}*q^{e['q']}"
    return f"{parts}: lhs {mismatch['lhs']}, rhs {mismatch['rhs']}"


def render_text(result: VerificationResult) -> str:
    """Fixed-width per-report lines plus a summary block."""
    lines = []
    header = f"{'identity':<16} {'class':<5} {'variant':<9} {'status':<13} details"
    lines.append(header)
    lines.append("-" * len(header))
    for r in result.reports:
        detail = r.parameter_range
        if r.first_mismatch:
            detail += f"  [first mismatch {_mismatch_text(r.first_mismatch)}]"
        elif r.status == "not-evaluable":
            detail += f"  [{r.notes}]"
        lines.append(
            f"{r.identity_id:<16} {r.class_id or '-':<5} {r.variant:<9} "
            f"{r.status:<13} {detail}"
        )
    units = result.units()
    unresolved = result.unresolved_units()
    problems = result.registry_problems()
    lines.append("")
    lines.append(
        f"units: {len(units)}; resolved: {len(units) - len(unresolved)}; "
        f"unresolved: {len(unresolved)}"
    )
    if unresolved:
        for identity_id, class_id in unresolved:
            lines.append(f"  unresolved: {identity_id}" + (f"/{class_id}" if class_id else ""))
    lines.append(
        f"corrections registry: {len(CORRECTIONS)} entries"
        + ("; all exercised entries validated" if not problems else "")
    )
    for problem in problems:
        lines.append(f"  registry problem: {problem}")
    lines.append(
        "overall: "
        + ("PASS (every unit passes in at least one evaluated variant)"
           if result.resolved else "FAIL")
    )
    return "\n".join(lines) + "\n"


def _unit_sort_key(key: tuple[str, Optional[str]]):
    identity_id, class_id = key
    return (IDENTITY_IDS.index(identity_id), class_id or "")


def render_markdown(result: VerificationResult, stamp: Optional[str] = None) -> str:
    """Markdown report: summary table, deviations, corrections registry."""
    lines = ["# Identity verification report", ""]
    m_text = "default" if result.m_max is None else str(result.m_max)
    lines.append(
        f"Parameters: n_max = {result.n_max}, m_max = {m_text}, "
        f"variants = {', '.join(result.variants)}."
    )
    if stamp:
        lines.append(f"Stamp: {stamp}")
    lines.append("")
    lines.append("## Summary")
    lines.append("")
    variant_cols = list(result.variants)
    lines.append("| identity | class | " + " | ".join(variant_cols) + " | resolved |")
    lines.append("|---|---|" + "---|" * (len(variant_cols) + 1))
    units = result.units()
    for key in sorted(units, key=_unit_sort_key):
        identity_id, class_id = key
        by_variant = units[key]
        cells = []
        for variant in variant_cols:
            report = by_variant.get(variant)
            cells.append(report.status if report else "-")
        resolved = "yes" if any(r.status == "pass" for r in by_variant.values()) else "NO"
        lines.append(
            f"| {identity_id} | {class_id or '-'} | " + " | ".join(cells) + f" | {resolved} |"
        )
    lines.append("")
    lines.append("## Deviations from the stated forms")
    lines.append("")
    deviations = []
    for key in sorted(units, key=_unit_sort_key):
        by_variant = units[key]
        paper = by_variant.get("paper")
        corrected = by_variant.get("corrected")
        if paper is not None and paper.status != "pass":
            deviations.append((key, paper, corrected))
    if not deviations:
        lines.append("None: every identity holds as stated over the checked ranges.")
    for (identity_id, class_id), paper, corrected in deviations:
        title = _FAMILY_BY_ID[identity_id].title
        label = identity_id + (f" ({class_id})" if class_id else "")
        lines.append(f"### {label}: {title}")
        lines.append("")
        if paper.first_mismatch:
            lines.append(
                f"- as stated: **{paper.status}** over {paper.parameter_range}; "
                f"first mismatch {_mismatch_text(paper.first_mismatch)}"
            )
        else:
            lines.append(
                f"- as stated: **{paper.status}** over {paper.parameter_range}; {paper.notes}"
            )
        if corrected is not None:
            lines.append(
                f"- corrected: **{corrected.status}** over {corrected.parameter_range}"
            )
        for corr in CORRECTIONS:
            if corr.identity_id != identity_id:
                continue
            if corr.class_id is not None and corr.class_id != class_id:
                continue
            lines.append(f"- change: {corr.change}")
            lines.append(f"- reason: {corr.reason}")
            lines.append(f"- counterexample: {corr.counterexample}")
        lines.append("")
    lines.append("## Corrections registry")
    lines.append("")
    for corr in CORRECTIONS:
        label = corr.identity_id + (f" ({corr.class_id})" if corr.class_id else "")
        lines.append(f"### {label}")
        lines.append("")
        lines.append(f"- change: {corr.change}")
        lines.append(f"- reason: {corr.reason}")
        lines.append(f"- counterexample: {corr.counterexample}")
        lines.append("")
    lines.append("## Outcome")
    lines.append("")
    unresolved = result.unresolved_units()
    if result.resolved:
        lines.append(
            "All units pass in at least one evaluated variant and every "
            "exercised correction validated."
        )
    else:
        for identity_id, class_id in unresolved:
            lines.append(f"- unresolved: {identity_id}" + (f"/{class_id}" if class_id else ""))
        for problem in result.registry_problems():
            lines.append(f"- registry problem: {problem}")
    return "\n".join(lines) + "\n"


def to_json_doc(result: VerificationResult, stamp: Optional[str] = None) -> dict:
    """JSON-serializable document mirroring the markdown report."""
    units = result.units()
    return {
        "parameters": {
            "n_max": result.n_max,
            "m_max": result.m_max,
            "variants": list(result.variants),
        },
        "stamp": stamp,
        "reports": [
            {
                "identity": r.identity_id,
                "class": r.class_id,
                "variant": r.variant,
                "parameter_range": r.parameter_range,
                "status": r.status,
                "first_mismatch": r.first_mismatch,
                "notes": r.notes,
            }
            for r in result.reports
        ],
        "units": [
            {
                "identity": identity_id,
                "class": class_id,
                "resolved": any(r.status == "pass" for r in units[(identity_id, class_id)].values()),
            }
            for identity_id, class_id in sorted(units, key=_unit_sort_key)
        ],
        "resolved": result.resolved,
        "corrections": [
            {
                "identity": c.identity_id,
                "class": c.class_id,
                "change": c.change,
                "reason": c.reason,
                "counterexample": c.counterexample,
            }
            for c in CORRECTIONS
        ],
    }
