import pytest

from fibperm.bijections import phi, phi_inverse, rho, rho_inverse
from fibperm.classes import A_CLASSES, B_CLASSES, generate
from fibperm.errors import ExcludedTilingError, NotInClassError
from fibperm.fib import tiling_cells, tilings


class TestWorkedExamples:
    def test_phi(self):
        assert phi("A1", (2, 1, 4, 3, 5, 6)) == "mddmm"
        assert phi("A1", (1, 4, 3, 2, 6, 5)) == "dmdd"
        assert phi("A2", (1, 4, 2, 3, 6, 5)) == "dmdd"
        assert phi("A1", (1,)) == "mm"

    def test_rho(self):
        assert rho("B1", (3, 2, 1, 5, 4, 6, 7)) == "mmddmm"
        assert rho("B1", (1, 2, 3, 5, 4, 7, 6)) == "dmmdd"
        assert rho("B2", (2, 3, 1)) == "mmd"
        assert rho("B1", (1,)) == "d"
        assert rho("B1", (1, 2, 3)) == "dmm"

    def test_inverses_of_worked_examples(self):
        assert phi_inverse("A1", "mddmm") == (2, 1, 4, 3, 5, 6)
        assert phi_inverse("A1", "dmdd") == (1, 4, 3, 2, 6, 5)
        assert phi_inverse("A2", "dmdd") == (1, 4, 2, 3, 6, 5)
        assert rho_inverse("B1", "mmddmm") == (3, 2, 1, 5, 4, 6, 7)
        assert rho_inverse("B1", "dmmdd") == (1, 2, 3, 5, 4, 7, 6)


class TestRoundTrip:
    def test_phi_round_trip(self):
        for cls in A_CLASSES:
            for n in range(0, 9):
                for perm in generate(cls, n):
                    word = phi(cls, perm)
                    assert tiling_cells(word) == n + 1
                    assert phi_inverse(cls, word) == perm, (cls, perm)

    def test_rho_round_trip(self):
        for cls in B_CLASSES:
            for n in range(1, 9):
                for perm in generate(cls, n):
                    word = rho(cls, perm)
                    assert tiling_cells(word) == n + 1
                    assert rho_inverse(cls, word) == perm, (cls, perm)


class TestImage:
    def test_phi_image_misses_exactly_one_word(self):
        for cls in A_CLASSES:
            for n in range(1, 9):
                words = {phi(cls, p) for p in generate(cls, n)}
                excluded = "d" + "m" * (n - 1)
                assert words == set(tilings(n + 1)) - {excluded}, (cls, n)

    def test_rho_image_misses_exactly_one_word(self):
        for cls in B_CLASSES:
            for n in range(1, 9):
                words = {rho(cls, p) for p in generate(cls, n)}
                excluded = "m" * (n + 1)
                assert words == set(tilings(n + 1)) - {excluded}, (cls, n)

    def test_excluded_words_raise(self):
        for n in range(1, 9):
            with pytest.raises(ExcludedTilingError):
                phi_inverse("A1", "d" + "m" * (n - 1))
            with pytest.raises(ExcludedTilingError):
                rho_inverse("B2", "m" * (n + 1))


class TestValidation:
    def test_class_pairing(self):
        with pytest.raises(ValueError):
            phi("B1", (1,))
        with pytest.raises(ValueError):
            rho("A1", (1,))
        with pytest.raises(ValueError):
            phi_inverse("B2", "mm")
        with pytest.raises(ValueError):
            rho_inverse("A2", "mm")

    def test_non_members_rejected(self):
        with pytest.raises(NotInClassError):
            phi("A1", (2, 3, 1))
        with pytest.raises(NotInClassError):
            rho("B1", (1, 4, 3, 2))
