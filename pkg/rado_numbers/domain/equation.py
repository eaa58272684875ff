"""Solution and validity predicates for x+y+kz=lw and x+y=jw.

Scans run in (w, z, x) order so the first hit is the lexicographically
least canonical solution.
"""

from rado_numbers.domain.models import Color, Coloring, Equation, Quad, Triple
from rado_numbers.exceptions import ComponentRangeError

COLORS: tuple[Color, Color] = ("r", "b")


def eval_equation(eq: Equation, q: Quad) -> int:
    """Return x + y + k*z - ell*w; zero iff q solves eq."""
    return q.x + q.y + eq.k * q.z - eq.ell * q.w


def least_summands(c: Coloring) -> dict[Color, dict[int, int]]:
    """Map each color to {s: least x} over same-colored pairs x <= y with x + y = s."""
    sums: dict[Color, dict[int, int]] = {}
    for color in COLORS:
        members = c.members(color)
        table: dict[int, int] = {}
        for i, x in enumerate(members):
            for y in members[i:]:
                table.setdefault(x + y, x)
        sums[color] = table
    return sums


def is_mono_solution(c: Coloring, eq: Equation, q: Quad) -> bool:
    """Check whether q is a monochromatic solution of eq under c.

    Raises:
        ComponentRangeError: If a component lies outside [1, c.n].
    """
    for value in q.as_tuple():
        if value > c.n:
            raise ComponentRangeError(f"component {value} outside [1, {c.n}]")
    if eval_equation(eq, q) != 0:
        return False
    return len({c.color(v) for v in q.as_tuple()}) == 1


def find_mono_solution(c: Coloring, eq: Equation) -> Quad | None:
    """Return the least monochromatic solution of eq inside [1, c.n], or None."""
    n = c.n
    sums = least_summands(c)
    for w in range(1, n + 1):
        color = c.color(w)
        table = sums[color]
        for z in range(1, n + 1):
            s = eq.ell * w - eq.k * z
            if s < 2:
                break
            if s > 2 * n or c.color(z) != color:
                continue
            x = table.get(s)
            if x is not None:
                return Quad(x=x, y=s - x, z=z, w=w)
    return None


def kfree_mono_solution(c: Coloring, j: int) -> Triple | None:
    """Return the least monochromatic (x, y, w) with x + y = j*w, or None.

    These are the solutions of E(k, j) with z = w, present for every k.
    """
    n = c.n
    if j < 1:
        return None
    sums = least_summands(c)
    for w in range(1, n + 1):
        s = j * w
        if s > 2 * n:
            break
        x = sums[c.color(w)].get(s)
        if x is not None:
            return Triple(x=x, y=s - x, w=w)
    return None


def is_valid(c: Coloring, eq: Equation) -> bool:
    """Whether c has no monochromatic solution of eq."""
    return find_mono_solution(c, eq) is None


def is_generically_valid(c: Coloring, j: int) -> bool:
    """Whether c has no monochromatic solution of x + y = j*w."""
    return kfree_mono_solution(c, j) is None
