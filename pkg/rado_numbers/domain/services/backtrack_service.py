"""Backtracking search for Rado numbers.

Colors 1, 2, ... in order, red before blue, with color(1) fixed to red.
Each assignment is checked only against the solutions whose largest
component is the integer just colored.
"""

import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from rado_numbers.domain.models import Coloring, Equation, RadoResult, SearchBudget
from rado_numbers.domain.solution_index import QuadIndex, SolutionIndex, TripleIndex

logger = logging.getLogger(__name__)

# Bump whenever search semantics change; cached results of other versions are dropped.
ENGINE_VERSION = "1"

Node = tuple[int, int, int]  # (t, red mask, blue mask)

ROOT: Node = (0, 0, 0)


def walk(index: SolutionIndex, depth: int, start: Node = ROOT) -> Iterator[Node]:
    """Yield every valid coloring extending ``start`` up to length ``depth``.

    Nodes come in preorder with red tried first, so colorings of equal
    length appear in lexicographic order.
    """
    stack = [start]
    while stack:
        node = stack.pop()
        yield node
        t, red, blue = node
        if t >= depth:
            continue
        nxt = t + 1
        sols = index.masks(nxt)
        bit = 1 << nxt
        if nxt > 1 and 0 not in map(red.__and__, sols):
            stack.append((nxt, red, blue | bit))
        if 0 not in map(blue.__and__, sols):
            stack.append((nxt, red | bit, blue))


@dataclass
class SearchOutcome:
    """Raw result of one search from a prefix."""

    deepest: int
    red: int
    nodes: int
    reached_limit: bool = False
    exhausted: bool = False


def search(
    index: SolutionIndex,
    n_max: int,
    node_limit: int | None = None,
    start: Node = ROOT,
) -> SearchOutcome:
    """Find the longest valid coloring extending ``start``, capped at ``n_max``.

    The recorded coloring is the first one reached at the greatest depth,
    i.e. the lexicographically least of maximum length.
    """
    outcome = SearchOutcome(deepest=start[0], red=start[1], nodes=0)
    for t, red, _ in walk(index, n_max, start):
        if node_limit is not None and outcome.nodes >= node_limit:
            outcome.exhausted = True
            break
        outcome.nodes += 1
        if t > outcome.deepest:
            outcome.deepest = t
            outcome.red = red
        if t == n_max:
            outcome.reached_limit = True
            break
    return outcome


def _search_prefix(args: tuple[SolutionIndex, int, Node]) -> SearchOutcome:
    index, n_max, start = args
    return search(index, n_max, start=start)


def collect_at_depth(index: SolutionIndex, n: int) -> list[Coloring]:
    """All valid colorings of [1, n] with 1 red, in lexicographic order."""
    return [Coloring.from_mask(n, red) for t, red, _ in walk(index, n) if t == n]


def enumerate_valid_colorings(eq: Equation, n: int) -> list[Coloring]:
    """Colorings of [1, n] (1 red) with no monochromatic solution of eq."""
    return collect_at_depth(QuadIndex(eq.k, eq.ell), n)


def enumerate_generic_valid(j: int, n: int) -> list[Coloring]:
    """Colorings of [1, n] (1 red) with no monochromatic solution of x + y = j*w."""
    return collect_at_depth(TripleIndex(j), n)


class BacktrackService:
    """Computes Rado numbers by exhaustive search.

    With ``workers > 1`` the tree is split at ``split_depth`` and the
    subtrees are searched in a process pool. The merge keeps the first
    deepest subtree in lexicographic order, so results match a
    single-process run.
    """

    def __init__(self, workers: int = 1, split_depth: int = 12):
        """Initialize the search service.

        Args:
            workers: Process pool size; 1 searches in-process
            split_depth: Prefix length at which the tree is split
        """
        self._workers = workers
        self._split_depth = split_depth

    def rado_number(self, eq: Equation, budget: SearchBudget) -> RadoResult:
        """Compute RR(x + y + k*z = ell*w) within the budget."""
        outcome = self._run(QuadIndex(eq.k, eq.ell), budget)
        return self._to_result(outcome, budget, k=eq.k, ell=eq.ell)

    def burr_loo_number(self, j: int, budget: SearchBudget) -> RadoResult:
        """Compute RR(x + y = j*w) within the budget."""
        outcome = self._run(TripleIndex(j), budget)
        return self._to_result(outcome, budget, j=j)

    def _run(self, index: SolutionIndex, budget: SearchBudget) -> SearchOutcome:
        parallel = (
            self._workers > 1
            and budget.node_limit is None
            and self._split_depth < budget.n_max
        )
        if not parallel:
            outcome = search(index, budget.n_max, budget.node_limit)
        else:
            outcome = self._run_parallel(index, budget.n_max)
        logger.debug(
            f"Search visited {outcome.nodes} nodes, deepest valid prefix {outcome.deepest}"
        )
        return outcome

    def _run_parallel(self, index: SolutionIndex, n_max: int) -> SearchOutcome:
        depth = self._split_depth
        frontier: list[Node] = []
        shallow = SearchOutcome(deepest=0, red=0, nodes=0)
        for node in walk(index, depth):
            shallow.nodes += 1
            if node[0] > shallow.deepest:
                shallow.deepest, shallow.red = node[0], node[1]
            if node[0] == depth:
                frontier.append(node)
        if not frontier:
            return shallow

        logger.debug(f"Split frontier at depth {depth}: {len(frontier)} prefixes")
        with ProcessPoolExecutor(max_workers=self._workers) as executor:
            jobs = ((index, n_max, node) for node in frontier)
            outcomes = list(executor.map(_search_prefix, jobs))
        # max() keeps the first of equal depths, i.e. the lexicographically least prefix
        best = max(outcomes, key=lambda o: o.deepest)
        best.nodes = shallow.nodes + sum(o.nodes for o in outcomes)
        return best

    @staticmethod
    def _to_result(
        outcome: SearchOutcome,
        budget: SearchBudget,
        k: int | None = None,
        ell: int | None = None,
        j: int | None = None,
    ) -> RadoResult:
        witness = Coloring.from_mask(outcome.deepest, outcome.red)
        if outcome.reached_limit or outcome.deepest >= budget.n_max:
            status = "lower_bound"
        elif outcome.exhausted:
            status = "budget_exhausted"
        else:
            status = "exact"
        return RadoResult(
            k=k, ell=ell, j=j, status=status, value=outcome.deepest + 1, witness=witness
        )
