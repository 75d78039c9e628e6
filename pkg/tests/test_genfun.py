import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibperm.classes import CLASS_IDS, count
from fibperm.errors import NotEvaluableError, UnsupportedLengthError
from fibperm.fib import fib_number
from fibperm.genfun import (
    ONE,
    Q,
    V,
    ZERO,
    Poly,
    fib_poly,
    genfun_addition,
    genfun_closed,
    genfun_oracle,
    genfun_recurrence,
)


def small_polys():
    term = st.tuples(
        st.integers(0, 4), st.integers(0, 4), st.integers(-5, 5)
    )
    return st.lists(term, max_size=6).map(
        lambda ts: sum(
            (Poly.monomial(c, v, q) for v, q, c in ts), start=ZERO
        )
    )


class TestPoly:
    def test_construction_and_identity(self):
        assert Poly() == ZERO
        assert Poly.monomial(1, 0, 0) == ONE
        assert Poly.monomial(0, 3, 2) == ZERO  # zero coefficients vanish
        assert V == Poly.monomial(1, 1, 0)
        assert Q == Poly.monomial(1, 0, 1)

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            Poly.monomial(1, -1, 0)
        with pytest.raises(ValueError):
            Poly.monomial(1, 0, -2)

    def test_canonical_text(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(V) == "1*v"
        assert str(3 * V * V + Q) == "1*q + 3*v^2"
        assert str(fib_poly(3)) == "1 + 2*q"

    def test_terms_sorted(self):
        poly = Q * Q + V + ONE
        assert poly.terms() == (((0, 0), 1), ((0, 2), 1), ((1, 0), 1))

    def test_evaluate(self):
        poly = 2 * V * Q + V * V
        assert poly.evaluate(1, 1) == 3
        assert poly.evaluate(2, 3) == 16
        assert ZERO.evaluate(5, 5) == 0

    def test_coefficient(self):
        poly = 2 * V * Q + V * V
        assert poly.coefficient(1, 1) == 2
        assert poly.coefficient(0, 0) == 0

    @given(small_polys(), small_polys(), small_polys())
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a - a) == ZERO
        assert a * ONE == a and a * ZERO == ZERO

    @given(small_polys(), small_polys(), st.integers(0, 3), st.integers(0, 3))
    def test_evaluate_is_ring_homomorphism(self, a, b, v, q):
        assert (a + b).evaluate(v, q) == a.evaluate(v, q) + b.evaluate(v, q)
        assert (a * b).evaluate(v, q) == a.evaluate(v, q) * b.evaluate(v, q)


class TestFibPoly:
    def test_frozen(self):
        assert str(fib_poly(0)) == "1"
        assert str(fib_poly(6)) == "1 + 5*q + 6*q^2 + 1*q^3"

    def test_specializes_to_fibonacci(self):
        for n in range(0, 20):
            assert fib_poly(n).evaluate(1, 1) == fib_number(n)

    def test_two_term_recurrence(self):
        # appending a monomino leaves inversions unchanged; a domino on
        # the last two values adds exactly one
        for n in range(2, 15):
            assert fib_poly(n) == fib_poly(n - 1) + Q * fib_poly(n - 2)


class TestOracle:
    def test_frozen_small(self):
        assert str(genfun_oracle("A1", 3)) == "1*q^3 + 1*v^3 + 2*v^3*q"
        assert str(genfun_oracle("B2", 3)) == "1*q^2 + 1*v^3 + 2*v^3*q"
        assert str(genfun_oracle("A1", 1)) == "1*v"
        assert str(genfun_oracle("A1", 2)) == "1*v^2 + 1*v^2*q"

    def test_counting_specialization(self):
        for cls in CLASS_IDS:
            for n in range(1, 13):
                assert genfun_oracle(cls, n).evaluate(1, 1) == count(cls, n)


class TestClosedForm:
    def test_corrected_matches_oracle(self):
        for cls in CLASS_IDS:
            for n in range(3, 11):
                assert genfun_closed(cls, n, "corrected") == genfun_oracle(
                    cls, n
                ), (cls, n)

    def test_paper_a_classes_match(self):
        for cls in ("A1", "A2"):
            for n in range(3, 11):
                assert genfun_closed(cls, n, "paper") == genfun_oracle(cls, n)

    def test_paper_b1_first_mismatch_is_constant_term(self):
        stated = genfun_closed("B1", 3, "paper")
        truth = genfun_oracle("B1", 3)
        assert stated.coefficient(0, 0) == 1
        assert truth.coefficient(0, 0) == 0

    def test_paper_b2_not_evaluable(self):
        for n in range(3, 7):
            with pytest.raises(NotEvaluableError, match="j = 0"):
                genfun_closed("B2", n, "paper")

    def test_domain(self):
        with pytest.raises(UnsupportedLengthError):
            genfun_closed("A1", 2, "corrected")
        with pytest.raises(ValueError):
            genfun_closed("A1", 4, "folklore")


class TestRecurrence:
    def test_bases(self):
        for cls in CLASS_IDS:
            assert genfun_recurrence(cls, 1) == genfun_oracle(cls, 1)
            assert genfun_recurrence(cls, 2) == genfun_oracle(cls, 2)

    def test_matches_oracle(self):
        for cls in CLASS_IDS:
            for n in range(3, 13):
                assert genfun_recurrence(cls, n) == genfun_oracle(cls, n), (cls, n)

    def test_counting_specialization(self):
        for cls in CLASS_IDS:
            for n in range(1, 13):
                assert genfun_recurrence(cls, n).evaluate(1, 1) == count(cls, n)


class TestAddition:
    def test_corrected_matches_oracle(self):
        for cls in CLASS_IDS:
            for m in range(2, 7):
                for n in range(2, 7):
                    assert genfun_addition(cls, m, n, "corrected") == genfun_oracle(
                        cls, m + n
                    ), (cls, m, n)

    def test_paper_first_mismatches(self):
        # stated forms all fail already at m = n = 2
        truth = {cls: genfun_oracle(cls, 4) for cls in CLASS_IDS}
        for cls in ("A1", "A2"):
            stated = genfun_addition(cls, 2, 2, "paper")
            assert stated.coefficient(4, 1) == 2
            assert truth[cls].coefficient(4, 1) == 3
        # the stated B forms each drop a member with fib statistic zero
        stated_b1 = genfun_addition("B1", 2, 2, "paper")
        assert stated_b1.coefficient(0, 6) == 0
        assert truth["B1"].coefficient(0, 6) == 1
        stated_b2 = genfun_addition("B2", 2, 2, "paper")
        assert stated_b2.coefficient(0, 3) == 0
        assert truth["B2"].coefficient(0, 3) == 1

    def test_domain(self):
        with pytest.raises(UnsupportedLengthError):
            genfun_addition("A1", 1, 2, "corrected")
        with pytest.raises(UnsupportedLengthError):
            genfun_addition("A1", 2, 1, "corrected")
