"""Tests for closed-form values, bounds and conjectures."""

import pytest

from rado_numbers.domain.equation import find_mono_solution
from rado_numbers.domain.models import Equation, SearchBudget
from rado_numbers.domain.services import closed_forms
from rado_numbers.domain.services.closed_forms import (
    conj_ell3_value,
    conj_general_leading,
    hs_gs_ell1_value,
    leading_term_tolerance,
    predict,
    predictions,
    thm2_exact_threshold,
    thm2_upper,
    thm3_lower_coloring,
    thm3_value,
    thm7_value,
    thm8_lower_coloring,
    thm8_value,
    z_equals_w_forced,
)
from rado_numbers.exceptions import ConsistencyFault, NotApplicableError
from tests.conftest import (
    PUBLISHED_DIAGONAL,
    PUBLISHED_ELL3,
    PUBLISHED_OFFSET_FIVE,
    PUBLISHED_TABLE,
    eq,
)
from tests.oracle import quad_solutions, rado_number


class TestFormulas:
    """Formulas against the published table."""

    def test_upper_bound(self):
        """C(j+1, 2)."""
        assert [thm2_upper(j) for j in (4, 5, 6)] == [10, 15, 21]

    def test_exact_threshold(self):
        """(j^2 - 2)(j + 1)/2."""
        assert [thm2_exact_threshold(j) for j in (4, 5, 6)] == [35, 69, 119]

    @pytest.mark.parametrize("func", [thm2_upper, thm2_exact_threshold])
    def test_bounds_need_offset_four(self, func):
        """Both only apply for j >= 4."""
        with pytest.raises(NotApplicableError):
            func(3)

    def test_diagonal(self):
        """x+y+mz=mw for m=1..12."""
        assert [thm3_value(m) for m in range(1, 13)] == PUBLISHED_DIAGONAL

    def test_ell_two_column(self):
        """Column l=2 of the table."""
        assert [thm8_value(k) for k in range(1, 9)] == [row[1] for row in PUBLISHED_TABLE]

    def test_ell_one_column(self):
        """Column l=1 of the table."""
        assert [hs_gs_ell1_value(k) for k in range(1, 9)] == [row[0] for row in PUBLISHED_TABLE]

    def test_ell_three_conjecture(self):
        """The conjectured l=3 formula matches the computed column except at k=17."""
        misses = {k for k, value in PUBLISHED_ELL3.items() if conj_ell3_value(k) != value}
        assert misses == {17}
        assert conj_ell3_value(17) == 48
        assert PUBLISHED_ELL3[17] == 45

    def test_ell_three_needs_k_five(self):
        """Small k are outside the conjecture."""
        with pytest.raises(NotApplicableError):
            conj_ell3_value(4)

    def test_leading_term(self):
        """floor((k+l+1)/l)^2."""
        assert conj_general_leading(10, 3) == 16
        assert conj_general_leading(20, 4) == 36
        assert leading_term_tolerance(10, 3) == 4
        with pytest.raises(NotApplicableError):
            conj_general_leading(3, 3)

    def test_nonpositive_k(self):
        """k must be positive."""
        with pytest.raises(NotApplicableError):
            thm8_value(0)


class TestPredict:
    """Tests for predict and predictions."""

    @pytest.mark.parametrize(
        "k, ell, value",
        [(1, 1, 11), (1, 2, 4), (2, 2, 5), (2, 4, 1), (3, 8, 4), (9, 14, 8), (40, 44, 10)],
    )
    def test_exact(self, k, ell, value):
        """Proven values, agreeing across theorems where they overlap."""
        assert predict(k, ell).value == value

    def test_no_theorem(self):
        """Nothing covers x+y+4z=3w."""
        assert predict(4, 3) is None

    def test_bound_only(self):
        """Below the threshold theorem 2 gives only an upper bound."""
        sources = {p.source: p for p in predictions(10, 14)}
        assert sources["thm2_bound"].kind == "upper_bound"
        assert "thm2_exact" not in sources
        assert predict(10, 14).source == "thm6"

    def test_conjectures_listed(self):
        """Conjectures appear with their kind."""
        kinds = {p.source: p.kind for p in predictions(10, 3)}
        assert kinds["conj_ell3"] == "conjecture"
        assert kinds["conj_general_leading"] == "leading_term"

    def test_disagreement(self, monkeypatch):
        """Two exact predictors with different values raise."""
        monkeypatch.setattr(closed_forms, "thm8_value", lambda k: 99)
        with pytest.raises(ConsistencyFault):
            predict(1, 2)


class TestForcing:
    """z = w forcing above the threshold."""

    def test_forced_at_threshold(self):
        """No solution with z != w in [1, C(j+1,2) - 1] once k >= threshold."""
        assert z_equals_w_forced(35, 4)
        assert not [s for s in quad_solutions(35, 39, 9) if s[2] != s[3]]

    def test_not_forced_below(self):
        """E(10, 4) still has (9, 9, 1, 2)."""
        assert not z_equals_w_forced(10, 4)
        assert (9, 9, 1, 2) in quad_solutions(10, 14, 9)

    def test_forced_at_threshold_offset_five(self):
        """E(69, 5) has no solution with z != w in [1, 14]."""
        assert thm2_exact_threshold(5) == 69
        assert z_equals_w_forced(69, 5)
        assert not [s for s in quad_solutions(69, 74, 14) if s[2] != s[3]]
        assert not z_equals_w_forced(68, 5)


class TestLowerColorings:
    """The explicit constructions are valid and have the right length."""

    @pytest.mark.parametrize("m", range(3, 17))
    def test_diagonal(self, m):
        """Coloring of [1, RR-1] for x+y+mz=mw."""
        c = thm3_lower_coloring(m)
        assert c.n == thm3_value(m) - 1
        assert find_mono_solution(c, eq(m, m)) is None

    @pytest.mark.parametrize("k", range(1, 31))
    def test_ell_two(self, k):
        """Coloring of [1, RR-1] for x+y+kz=2w."""
        c = thm8_lower_coloring(k)
        assert c.n == thm8_value(k) - 1
        assert find_mono_solution(c, eq(k, 2)) is None

    def test_diagonal_small_m(self):
        """m = 1, 2 are not covered."""
        with pytest.raises(NotApplicableError):
            thm3_lower_coloring(2)


class TestAgainstSearch:
    """Closed forms agree with the search for small parameters."""

    @pytest.mark.parametrize("k", range(1, 7))
    def test_ell_two(self, solver, k):
        """x+y+kz=2w."""
        assert solver.rado_number(eq(k, 2), SearchBudget(n_max=30)).value == thm8_value(k)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_diagonal(self, solver, m):
        """x+y+mz=mw."""
        assert solver.rado_number(eq(m, m), SearchBudget(n_max=30)).value == thm3_value(m)

    @pytest.mark.parametrize("k", range(5, 10))
    def test_ell_three(self, solver, k):
        """x+y+kz=3w."""
        assert solver.rado_number(eq(k, 3), SearchBudget(n_max=30)).value == conj_ell3_value(k)

    @pytest.mark.parametrize("k", sorted(PUBLISHED_OFFSET_FIVE))
    def test_offset_five_exceptions(self, solver, k):
        """E(k, 5) for k in 16..18 and 21..23 agrees with search and the table."""
        expected = PUBLISHED_OFFSET_FIVE[k]
        assert thm7_value(k) == expected
        assert solver.rado_number(eq(k, k + 5), SearchBudget(n_max=20)).value == expected
        assert rado_number(k, k + 5, 12) == expected

    def test_offset_five_above_threshold(self, solver):
        """Above the threshold E(k, 5) reaches C(6, 2)."""
        e = Equation.from_offset(70, 5)
        assert solver.rado_number(e, SearchBudget(n_max=30)).value == 15
