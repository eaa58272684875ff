"""Parametric failure analysis over k (the FVR method).

Treats k as a symbol: a coloring contributes left-side forms z*k + (x+y)
and right-side forms w*k + j*w per color, and fails for exactly those k
where a left form meets a same-colored right form. Growing n until every
generically valid coloring fails at a given k pins RR(E(k, j)) for all k.
"""

import logging

from rado_numbers.domain.equation import COLORS, kfree_mono_solution, least_summands
from rado_numbers.domain.models import (
    Coincidence,
    Coloring,
    FailureReport,
    LinearForm,
    ParamSets,
    Quad,
    ResolutionLevel,
    ResolutionTable,
)
from rado_numbers.domain.services.backtrack_service import enumerate_generic_valid

logger = logging.getLogger(__name__)


def param_sets(c: Coloring, j: int) -> ParamSets:
    """Return the left and right linear forms of each color."""
    sums = least_summands(c)
    left = {
        color: frozenset(
            LinearForm(slope=z, intercept=s) for z in c.members(color) for s in sums[color]
        )
        for color in COLORS
    }
    right = {
        color: frozenset(LinearForm(slope=w, intercept=j * w) for w in c.members(color))
        for color in COLORS
    }
    return ParamSets(r_xyz=left["r"], b_xyz=left["b"], r_w=right["r"], b_w=right["b"])


def failure_set(c: Coloring, j: int) -> FailureReport:
    """Solve for every positive k at which c has a monochromatic solution.

    Each k keeps its lexicographically least witness quad in (w, z, x) order,
    the same one find_mono_solution returns for E(k, j).
    """
    kfree = kfree_mono_solution(c, j)
    if kfree is not None:
        return FailureReport(coloring=c, j=j, invalid_for_all_k=True, kfree_witness=kfree)

    sums = least_summands(c)
    found: dict[int, list[tuple[tuple[int, int, int], Coincidence]]] = {}
    for color in COLORS:
        members = c.members(color)
        for z in members:
            for s, x in sums[color].items():
                for w in members:
                    if z == w:
                        continue
                    k, rest = divmod(j * w - s, z - w)
                    if rest or k < 1:
                        continue
                    coincidence = Coincidence(
                        k=k,
                        left=LinearForm(slope=z, intercept=s),
                        right=LinearForm(slope=w, intercept=j * w),
                        quad=Quad(x=x, y=s - x, z=z, w=w),
                    )
                    found.setdefault(k, []).append(((w, z, x), coincidence))

    k_failures: dict[int, Quad] = {}
    coincidences: dict[int, tuple[Coincidence, ...]] = {}
    for k in sorted(found):
        ordered = [item for _, item in sorted(found[k], key=lambda pair: pair[0])]
        k_failures[k] = ordered[0].quad
        coincidences[k] = tuple(ordered)
    return FailureReport(coloring=c, j=j, k_failures=k_failures, coincidences=coincidences)


class FvrService:
    """Resolves RR(E(k, j)) for all k at once."""

    def resolve_all_k(self, j: int, n_max: int) -> ResolutionTable:
        """Grow n until no generically valid coloring of [1, n] survives.

        A still-open k is settled at n when every generically valid coloring
        of [1, n] fails at k; an empty level settles all remaining k at n.

        Args:
            j: Offset of E(k, j)
            n_max: Largest interval length to examine

        Returns:
            ResolutionTable with per-level detail
        """
        resolved: dict[int, int] = {}
        levels: list[ResolutionLevel] = []
        for n in range(1, n_max + 1):
            colorings = enumerate_generic_valid(j, n)
            if not colorings:
                levels.append(ResolutionLevel(n=n))
                logger.debug(f"j={j}: no generically valid coloring of [1,{n}]")
                return ResolutionTable(
                    j=j,
                    n_reached=n,
                    terminated=True,
                    default_value=n,
                    resolved=resolved,
                    levels=tuple(levels),
                )

            reports = [failure_set(c, j) for c in colorings]
            common = set.intersection(*(set(r.k_failures) for r in reports))
            settled = sorted(common - resolved.keys())
            for k in settled:
                resolved[k] = n
            levels.append(ResolutionLevel(n=n, reports=tuple(reports), resolved=tuple(settled)))
            logger.debug(f"j={j}, n={n}: {len(colorings)} colorings, settled k={settled}")

        return ResolutionTable(j=j, n_reached=n_max, resolved=resolved, levels=tuple(levels))
