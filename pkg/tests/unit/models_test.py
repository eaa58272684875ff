"""Tests for domain models."""

import pytest
from pydantic import ValidationError

from rado_numbers.domain.models import (
    Coincidence,
    Coloring,
    Equation,
    LinearForm,
    ParamSets,
    Quad,
    RadoResult,
    ResolutionTable,
    SearchBudget,
    TableCell,
)


class TestEquation:
    """Tests for Equation."""

    def test_offset_is_derived(self):
        """j = ell - k, and may be negative."""
        assert Equation(k=2, ell=5).j == 3
        assert Equation(k=5, ell=2).j == -3

    def test_from_offset(self):
        """E(k, j) has ell = k + j."""
        assert Equation.from_offset(6, 3) == Equation(k=6, ell=9)

    @pytest.mark.parametrize("k, ell", [(0, 1), (1, 0), (10**6 + 1, 1)])
    def test_rejects_out_of_range_coefficients(self, k, ell):
        """Coefficients must lie in [1, 10^6]."""
        with pytest.raises(ValidationError):
            Equation(k=k, ell=ell)

    def test_str(self):
        """Readable equation text."""
        assert str(Equation(k=2, ell=3)) == "x+y+2z=3w"


class TestColoring:
    """Tests for Coloring."""

    def test_length_and_colors(self):
        """Position t holds the color of integer t."""
        c = Coloring(bits="rbbr")
        assert c.n == 4
        assert c.color(1) == "r"
        assert c.color(3) == "b"
        assert c.members("b") == [2, 3]

    def test_empty_coloring_allowed(self):
        """The empty coloring witnesses RR = 1."""
        assert Coloring().n == 0

    def test_rejects_other_characters(self):
        """Only 'r' and 'b' are colors."""
        with pytest.raises(ValidationError):
            Coloring(bits="rgb")

    def test_color_out_of_range(self):
        """Positions outside [1, n] are rejected."""
        with pytest.raises(IndexError):
            Coloring(bits="rb").color(3)

    def test_swap(self):
        """Swap flips every color."""
        assert Coloring(bits="rbbr").swap().bits == "brrb"

    def test_mask_round_trip(self):
        """Bit t of the red mask is set iff t is red."""
        c = Coloring(bits="rbrrb")
        assert c.mask("r") == 0b11010
        assert Coloring.from_mask(5, c.mask("r")) == c

    def test_prefix(self):
        """Prefix restricts to [1, n]."""
        assert Coloring(bits="rbrrbb").prefix(4).bits == "rbrr"


class TestQuad:
    """Tests for Quad."""

    def test_canonical_orders_x_y(self):
        """Canonical form has x <= y."""
        assert Quad(x=4, y=3, z=4, w=3).canonical().as_tuple() == (3, 4, 4, 3)

    def test_components_positive(self):
        """Components are at least 1."""
        with pytest.raises(ValidationError):
            Quad(x=0, y=1, z=1, w=1)


class TestLinearForm:
    """Tests for LinearForm rendering."""

    @pytest.mark.parametrize(
        "slope, intercept, text",
        [(1, 3, "k+3"), (2, 4, "2k+4"), (6, 18, "6k+18"), (2, -3, "2k-3"), (3, 0, "3k"), (0, 5, "5")],
    )
    def test_str(self, slope, intercept, text):
        """Forms render in k-notation."""
        assert str(LinearForm(slope=slope, intercept=intercept)) == text

    def test_evaluation(self):
        """at(k) evaluates slope*k + intercept."""
        assert LinearForm(slope=3, intercept=9).at(1) == 12


def test_param_sets_render_sorted_by_slope():
    """Rendering sorts forms by slope, then intercept."""
    sets = ParamSets(
        b_w=frozenset(
            LinearForm(slope=s, intercept=3 * s) for s in (6, 2, 5)
        )
    )
    assert sets.render()[3] == "B_w = {2k+6, 5k+15, 6k+18}"
    assert sets.render()[0] == "R_{x,y,z} = {}"


def test_coincidence_puts_smaller_slope_first():
    """Left/right order does not matter, the smaller slope comes first."""
    c = Coincidence(
        k=8,
        left=LinearForm(slope=6, intercept=7),
        right=LinearForm(slope=5, intercept=15),
        quad=Quad(x=2, y=5, z=6, w=5),
    )
    assert str(c) == "5k+15=6k+7"


class TestResolutionTable:
    """Tests for ResolutionTable summaries."""

    def test_describe_terminated(self):
        """Exceptions grouped by value, default last."""
        table = ResolutionTable(
            j=3,
            n_reached=9,
            terminated=True,
            default_value=9,
            resolved={1: 4, 2: 4, 3: 4, 4: 4, 5: 4, 7: 4, 8: 6, 11: 6},
        )
        assert table.describe() == "RR=4 for k∈{1,2,3,4,5,7}; 6 for k∈{8,11}; 9 otherwise"
        assert table.value_for(8) == 6
        assert table.value_for(100) == 9
        assert table.residual.startswith("none")

    def test_describe_all_k(self):
        """No exceptions."""
        table = ResolutionTable(j=2, n_reached=1, terminated=True, default_value=1)
        assert table.describe() == "RR=1 for all k"

    def test_unresolved(self):
        """Without termination, unlisted k have no value."""
        table = ResolutionTable(j=5, n_reached=5, resolved={1: 4, 2: 4, 3: 4})
        assert table.value_for(4) is None
        assert table.describe() == "RR=4 for k∈{1,2,3}; unresolved otherwise (n<=5)"
        assert table.residual == "k outside {1,2,3} unresolved at n=5"


class TestResults:
    """Tests for RadoResult and TableCell."""

    def test_describe(self):
        """Short status text."""
        assert RadoResult(k=1, ell=2, status="exact", value=4).describe() == "exact 4"
        assert (
            RadoResult(k=1, ell=5, status="lower_bound", value=9).describe()
            == "lower_bound >=9"
        )

    def test_table_cell_text(self):
        """Lower bounds print with '>='."""
        result = RadoResult(
            k=1, ell=5, status="lower_bound", value=9, witness=Coloring(bits="rbbrrrbb")
        )
        cell = TableCell.from_result(result)
        assert cell.text == ">=9"
        assert cell.witness == "rbbrrrbb"
        assert TableCell(k=1, ell=1, status="exact", value=11).text == "11"

    def test_budget_bounds(self):
        """n_max must be positive."""
        with pytest.raises(ValidationError):
            SearchBudget(n_max=0)
