"""Domain models for Rado number computations.

Pure data structures shared by the search, FVR and closed-form services.
Uses Pydantic for validation, serialization, and immutability.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

Color = Literal["r", "b"]
ResultStatus = Literal["exact", "lower_bound", "budget_exhausted"]
PredictionKind = Literal["exact", "upper_bound", "conjecture", "leading_term"]
PredictionSource = Literal[
    "thm2_bound",
    "thm2_exact",
    "thm3",
    "thm4",
    "thm5",
    "thm6",
    "thm7",
    "thm8",
    "trivial_j2",
    "hs_gs_ell1",
    "conj_ell3",
    "conj_general_leading",
]

COEFFICIENT_CAP = 10**6

_FROZEN = ConfigDict(frozen=True)


class Equation(BaseModel):
    """The equation x + y + k*z = ell*w."""

    model_config = _FROZEN

    k: int = Field(ge=1, le=COEFFICIENT_CAP, description="Coefficient of z")
    ell: int = Field(ge=1, le=COEFFICIENT_CAP, description="Coefficient of w")

    @computed_field  # type: ignore[misc]
    @property
    def j(self) -> int:
        """Offset ell - k; the equation is E(k, j)."""
        return self.ell - self.k

    @classmethod
    def from_offset(cls, k: int, j: int) -> "Equation":
        """Build E(k, j), i.e. x + y + k*z = (k+j)*w."""
        return cls(k=k, ell=k + j)

    def __str__(self) -> str:
        return f"x+y+{self.k}z={self.ell}w"


class Coloring(BaseModel):
    """A 2-coloring of [1, n]; character t-1 of ``bits`` is the color of t."""

    model_config = _FROZEN

    bits: str = Field(default="", pattern=r"^[rb]*$", description="'r'/'b' per integer")

    @property
    def n(self) -> int:
        """Length of the colored interval."""
        return len(self.bits)

    def color(self, t: int) -> Color:
        """Return the color of integer t (1-based)."""
        if not 1 <= t <= self.n:
            raise IndexError(f"{t} is outside [1, {self.n}]")
        return self.bits[t - 1]  # type: ignore[return-value]

    def members(self, color: Color) -> list[int]:
        """Integers of [1, n] carrying the given color, ascending."""
        return [t for t, c in enumerate(self.bits, start=1) if c == color]

    def mask(self, color: Color) -> int:
        """Bitmask with bit t set for every integer t of the given color."""
        value = 0
        for t, c in enumerate(self.bits, start=1):
            if c == color:
                value |= 1 << t
        return value

    def swap(self) -> "Coloring":
        """Flip every color."""
        return Coloring(bits=self.bits.translate(str.maketrans("rb", "br")))

    def prefix(self, n: int) -> "Coloring":
        """Restriction to [1, n]."""
        return Coloring(bits=self.bits[:n])

    @classmethod
    def from_mask(cls, n: int, red: int) -> "Coloring":
        """Build a coloring of [1, n] whose red integers are the set bits of ``red``."""
        return cls(bits="".join("r" if red >> t & 1 else "b" for t in range(1, n + 1)))

    def __str__(self) -> str:
        return self.bits


class Quad(BaseModel):
    """A candidate solution (x, y, z, w); repetitions are allowed."""

    model_config = _FROZEN

    x: int = Field(ge=1)
    y: int = Field(ge=1)
    z: int = Field(ge=1)
    w: int = Field(ge=1)

    def canonical(self) -> "Quad":
        """Return the same solution with x <= y."""
        if self.x <= self.y:
            return self
        return Quad(x=self.y, y=self.x, z=self.z, w=self.w)

    def as_tuple(self) -> tuple[int, int, int, int]:
        """Return (x, y, z, w)."""
        return (self.x, self.y, self.z, self.w)


class Triple(BaseModel):
    """A solution (x, y, w) of x + y = j*w."""

    model_config = _FROZEN

    x: int = Field(ge=1)
    y: int = Field(ge=1)
    w: int = Field(ge=1)

    def as_tuple(self) -> tuple[int, int, int]:
        """Return (x, y, w)."""
        return (self.x, self.y, self.w)


class SearchBudget(BaseModel):
    """Limits for one backtracking run."""

    model_config = _FROZEN

    n_max: int = Field(default=256, ge=1, description="Deepest interval to try")
    node_limit: int | None = Field(default=None, ge=1, description="Optional node cap")


class RadoResult(BaseModel):
    """Outcome of a Rado number search.

    ``value`` is the exact number, or for the other statuses the bound it is
    known to be at least. The witness colors [1, value-1].
    """

    model_config = _FROZEN

    k: int | None = Field(default=None, description="Coefficient of z, None for x+y=jw")
    ell: int | None = Field(default=None, description="Coefficient of w, None for x+y=jw")
    j: int | None = Field(default=None, description="Offset for x+y=jw searches")
    status: ResultStatus
    value: int = Field(ge=1)
    witness: Coloring = Field(default_factory=Coloring)

    @property
    def is_exact(self) -> bool:
        """Whether the value is certified exact."""
        return self.status == "exact"

    def describe(self) -> str:
        """Short human form, e.g. ``exact 4`` or ``lower_bound >=9``."""
        if self.is_exact:
            return f"exact {self.value}"
        return f"{self.status} >={self.value}"


class LinearForm(BaseModel):
    """The expression slope*k + intercept."""

    model_config = _FROZEN

    slope: int = Field(ge=0)
    intercept: int

    def at(self, k: int) -> int:
        """Evaluate at a concrete k."""
        return self.slope * k + self.intercept

    def __str__(self) -> str:
        if self.slope == 0:
            return str(self.intercept)
        head = "k" if self.slope == 1 else f"{self.slope}k"
        if self.intercept > 0:
            return f"{head}+{self.intercept}"
        if self.intercept < 0:
            return f"{head}-{-self.intercept}"
        return head


def _sorted_forms(forms: frozenset[LinearForm]) -> list[LinearForm]:
    return sorted(forms, key=lambda f: (f.slope, f.intercept))


class ParamSets(BaseModel):
    """Parametric values of both sides of the equation over one coloring."""

    model_config = _FROZEN

    r_xyz: frozenset[LinearForm] = frozenset()
    b_xyz: frozenset[LinearForm] = frozenset()
    r_w: frozenset[LinearForm] = frozenset()
    b_w: frozenset[LinearForm] = frozenset()

    def render(self) -> list[str]:
        """Render the four sets as ``R_{x,y,z} = {k+2, 3k+4}`` style lines."""
        labels = (
            ("R_{x,y,z}", self.r_xyz),
            ("B_{x,y,z}", self.b_xyz),
            ("R_w", self.r_w),
            ("B_w", self.b_w),
        )
        return [
            f"{label} = {{{', '.join(str(f) for f in _sorted_forms(forms))}}}"
            for label, forms in labels
        ]


class Coincidence(BaseModel):
    """A same-colored left form and right form meeting at a positive k."""

    model_config = _FROZEN

    k: int = Field(ge=1)
    left: LinearForm
    right: LinearForm
    quad: Quad

    def __str__(self) -> str:
        first, second = sorted((self.left, self.right), key=lambda f: (f.slope, f.intercept))
        return f"{first}={second}"


class FailureReport(BaseModel):
    """The values of k for which a coloring has a monochromatic solution."""

    model_config = _FROZEN

    coloring: Coloring
    j: int
    invalid_for_all_k: bool = False
    kfree_witness: Triple | None = None
    k_failures: dict[int, Quad] = Field(default_factory=dict)
    coincidences: dict[int, tuple[Coincidence, ...]] = Field(default_factory=dict)

    def describe(self) -> str:
        """One line, e.g. ``rbbr: k=1 (2k+4=3k+3), k=2 (2k+5=3k+3)``."""
        if self.invalid_for_all_k:
            return f"{self.coloring}: invalid for all k {self.kfree_witness.as_tuple()}"  # type: ignore[union-attr]
        if not self.k_failures:
            return f"{self.coloring}: no intersection points"
        parts = [f"k={k} ({self.coincidences[k][0]})" for k in sorted(self.k_failures)]
        return f"{self.coloring}: {', '.join(parts)}"


class ResolutionLevel(BaseModel):
    """One n of the FVR loop."""

    model_config = _FROZEN

    n: int = Field(ge=1)
    reports: tuple[FailureReport, ...] = ()
    resolved: tuple[int, ...] = ()

    @property
    def colorings(self) -> list[Coloring]:
        """The generically valid colorings at this level."""
        return [r.coloring for r in self.reports]


class ResolutionTable(BaseModel):
    """Rado numbers of E(k, j) for all k, as far as the FVR loop got."""

    model_config = _FROZEN

    j: int
    n_reached: int = Field(ge=0)
    terminated: bool = False
    default_value: int | None = None
    resolved: dict[int, int] = Field(default_factory=dict)
    levels: tuple[ResolutionLevel, ...] = ()

    def value_for(self, k: int) -> int | None:
        """Exact RR(E(k, j)), or None if k is still unresolved."""
        if k in self.resolved:
            return self.resolved[k]
        return self.default_value if self.terminated else None

    @property
    def residual(self) -> str:
        """What remains unresolved."""
        if self.terminated:
            return (
                f"none: all k >= 1 resolved, default value {self.default_value} "
                "for all k outside the exception list"
            )
        listed = ",".join(str(k) for k in sorted(self.resolved))
        return f"k outside {{{listed}}} unresolved at n={self.n_reached}"

    def describe(self) -> str:
        """Piecewise summary, e.g. ``RR=4 for k∈{1,2,3}; 5 otherwise``."""
        by_value: dict[int, list[int]] = {}
        for k, value in self.resolved.items():
            by_value.setdefault(value, []).append(k)
        segments = [
            f"{value} for k∈{{{','.join(str(k) for k in sorted(ks))}}}"
            for value, ks in sorted(by_value.items())
        ]
        if self.terminated:
            if not segments:
                return f"RR={self.default_value} for all k"
            segments.append(f"{self.default_value} otherwise")
        elif segments:
            segments.append(f"unresolved otherwise (n<={self.n_reached})")
        else:
            return f"RR unresolved for all k (n<={self.n_reached})"
        return "RR=" + "; ".join(segments)


class Prediction(BaseModel):
    """A value claimed by a theorem, bound or conjecture."""

    model_config = _FROZEN

    source: PredictionSource
    kind: PredictionKind
    value: int = Field(ge=1)
    applicable: bool = True


class TableCell(BaseModel):
    """One cell of the RR(x+y+kz=lw) table."""

    model_config = _FROZEN

    k: int = Field(ge=1)
    ell: int = Field(ge=1)
    status: ResultStatus
    value: int = Field(ge=1)
    witness: str | None = None

    @property
    def at_least(self) -> bool:
        """Whether the cell is only a lower bound."""
        return self.status != "exact"

    @property
    def text(self) -> str:
        """CSV form: the integer, or ``>=N``."""
        return f">={self.value}" if self.at_least else str(self.value)

    @classmethod
    def from_result(cls, result: RadoResult) -> "TableCell":
        """Convert a search result for a quad equation."""
        return cls(
            k=result.k,  # type: ignore[arg-type]
            ell=result.ell,  # type: ignore[arg-type]
            status=result.status,
            value=result.value,
            witness=result.witness.bits,
        )


class CacheRecord(BaseModel):
    """One persisted search result."""

    k: int = Field(ge=1)
    ell: int = Field(ge=1)
    status: Literal["exact", "lower_bound"]
    value: int = Field(ge=1)
    witness: str = Field(pattern=r"^[rb]*$")
    engine_version: str
    timestamp: str = Field(description="ISO-8601 UTC time of computation")
