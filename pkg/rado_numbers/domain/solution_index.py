"""Per-integer solution tables for incremental validity checks.

When integer t receives a color, only solutions whose largest component is t
can become monochromatic. Each such solution is stored as a bitmask of its
other components (bit i stands for integer i, bit t itself removed), so a
solution is monochromatic in color c exactly when its mask avoids every
integer of the other color.
"""

from typing import Protocol


class SolutionIndex(Protocol):
    """Lazily built table of solution masks keyed by largest component."""

    def masks(self, t: int) -> tuple[int, ...]:
        """Return the masks of all solutions whose largest component is t."""
        ...


def _sorted_masks(found: set[int]) -> tuple[int, ...]:
    return tuple(sorted(found, key=lambda m: (m.bit_count(), m)))


class _LazyIndex:
    """Shared caching for the concrete indexes."""

    def __init__(self) -> None:
        self._tables: list[tuple[int, ...]] = [()]

    def masks(self, t: int) -> tuple[int, ...]:
        """Return the masks of all solutions whose largest component is t."""
        while len(self._tables) <= t:
            self._tables.append(self._build(len(self._tables)))
        return self._tables[t]

    def _build(self, t: int) -> tuple[int, ...]:
        raise NotImplementedError


class QuadIndex(_LazyIndex):
    """Solutions of x + y + k*z = ell*w."""

    def __init__(self, k: int, ell: int) -> None:
        super().__init__()
        self.k = k
        self.ell = ell

    def _build(self, t: int) -> tuple[int, ...]:
        k, ell = self.k, self.ell
        found: set[int] = set()
        clear = ~(1 << t)
        for z in range(1, t + 1):
            w_low = max(1, -(-(2 + k * z) // ell))
            w_high = min(t, (2 * t + k * z) // ell)
            for w in range(w_low, w_high + 1):
                s = ell * w - k * z
                base = (1 << z) | (1 << w)
                if z == t or w == t:
                    for x in range(max(1, s - t), s // 2 + 1):
                        found.add((base | (1 << x) | (1 << (s - x))) & clear)
                elif s > t:
                    found.add((base | (1 << (s - t))) & clear)
        return _sorted_masks(found)


class TripleIndex(_LazyIndex):
    """Solutions of x + y = j*w."""

    def __init__(self, j: int) -> None:
        super().__init__()
        self.j = j

    def _build(self, t: int) -> tuple[int, ...]:
        j = self.j
        found: set[int] = set()
        if j < 1:
            return ()
        clear = ~(1 << t)
        for w in range(1, min(t, (2 * t) // j) + 1):
            s = j * w
            if w == t:
                for x in range(max(1, s - t), s // 2 + 1):
                    found.add(((1 << w) | (1 << x) | (1 << (s - x))) & clear)
            elif s > t:
                found.add(((1 << w) | (1 << (s - t))) & clear)
        return _sorted_masks(found)
