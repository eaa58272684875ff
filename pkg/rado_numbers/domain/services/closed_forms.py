"""Closed-form values, bounds and conjectures for RR(x+y+kz=lw).

Theorem values are keyed by the offset j = ell - k. The diagonal family
x+y+mz=mw is parameterized by its single coefficient m.
"""

from collections.abc import Callable

from rado_numbers.domain.models import Coloring, Prediction, PredictionSource
from rado_numbers.exceptions import ConsistencyFault, NotApplicableError


def _piecewise(k: int, cases: dict[int, tuple[int, ...]], otherwise: int) -> int:
    for value, ks in cases.items():
        if k in ks:
            return value
    return otherwise


def _require_positive(k: int) -> None:
    if k < 1:
        raise NotApplicableError(f"k must be positive, got {k}")


def thm2_upper(j: int) -> int:
    """Upper bound C(j+1, 2) on RR(E(k, j)), valid for j >= 4."""
    if j < 4:
        raise NotApplicableError(f"upper bound needs j >= 4, got {j}")
    return j * (j + 1) // 2


def thm2_exact_threshold(j: int) -> int:
    """Least k from which RR(E(k, j)) equals C(j+1, 2)."""
    if j < 4:
        raise NotApplicableError(f"exactness threshold needs j >= 4, got {j}")
    return (j * j - 2) * (j + 1) // 2


def z_equals_w_forced(k: int, j: int) -> bool:
    """Whether every solution of E(k, j) below C(j+1, 2) must have z = w."""
    return k >= thm2_exact_threshold(j)


def thm3_value(m: int) -> int:
    """RR(x + y + m*z = m*w)."""
    _require_positive(m)
    if m == 1:
        return 11
    if m == 2:
        return 5
    if m % 2 == 0:
        return m
    return (3 * m + 1) // 2


def thm4_value(k: int) -> int:
    """RR(E(k, 1))."""
    _require_positive(k)
    return 4 if k <= 3 else 5


def thm5_value(k: int) -> int:
    """RR(E(k, 3))."""
    _require_positive(k)
    return _piecewise(k, {4: (1, 2, 3, 4, 5, 7), 6: (8, 11)}, otherwise=9)


def thm6_value(k: int) -> int:
    """RR(E(k, 4))."""
    _require_positive(k)
    cases = {
        3: (2, 3, 4),
        5: (6, 7, 8, 10, 11, 14),
        6: (5, 9, 12, 13, 15, 18),
        8: (17, 19, 22),
        9: (1, 23, 24),
    }
    return _piecewise(k, cases, otherwise=10)


def thm7_value(k: int) -> int:
    """RR(E(k, 5))."""
    _require_positive(k)
    cases = {
        4: (1, 2, 3),
        6: (4, 13, 14),
        # 16-18 and 21-23 match exhaustive search.
        8: (5, 6, 7, 8, 9, 10, 11, 12, 16, 17, 18),
        9: (21, 23),
        10: (19, 22, 24, 26, 27, 28, 29, 33),
        11: (30, 31, 32, 34, 36, 37, 38, 39, 41, 42, 43, 48),
        12: (15, 35, 44, 46, 47, 53),
        13: (51, 52),
    }
    return _piecewise(k, cases, otherwise=15)


def thm8_value(k: int) -> int:
    """RR(x + y + k*z = 2w)."""
    _require_positive(k)
    match k % 4:
        case 0:
            return k * (k + 4) // 4 + 1
        case 1:
            return (k + 2) * (k + 3) // 4 + 1
        case 2:
            return (k + 2) ** 2 // 4 + 1
        case _:
            return (k + 1) * (k + 4) // 4 + 1


def hs_gs_ell1_value(k: int) -> int:
    """RR(x + y + k*z = w)."""
    _require_positive(k)
    return (k + 1) * (k + 4) + 1


def conj_ell3_value(k: int) -> int:
    """Conjectured RR(x + y + k*z = 3w) for k >= 5."""
    if k < 5:
        raise NotApplicableError(f"conjecture for ell=3 needs k >= 5, got {k}")
    base = ((k + 4) // 3) ** 2
    match k % 9:
        case 0:
            return base - k // 9
        case 1 | 6:
            return base
        case 2:
            return base - (k + 7) // 9 - 1
        case 3 | 8:
            return base - 1
        case 4:
            return base + 1
        case 5:
            return base - (k + 4) // 9
        case _:
            return base + (k + 2) // 9


def conj_general_leading(k: int, ell: int) -> int:
    """Leading term floor((k+ell+1)/ell)^2 of the general conjecture."""
    if ell < 2 or k < ell + 2:
        raise NotApplicableError(f"leading term needs ell >= 2 and k >= ell+2, got {k}, {ell}")
    return ((k + ell + 1) // ell) ** 2


def leading_term_tolerance(k: int, ell: int) -> int:
    """Allowed gap between the leading term and the true value."""
    return -(-(k + ell + 1) // (ell * ell)) + 2


_J_FAMILIES: dict[int, tuple[PredictionSource, Callable[[int], int]]] = {
    1: ("thm4", thm4_value),
    3: ("thm5", thm5_value),
    4: ("thm6", thm6_value),
    5: ("thm7", thm7_value),
}


def predictions(k: int, ell: int) -> list[Prediction]:
    """Every theorem, bound and conjecture applicable to (k, ell)."""
    j = ell - k
    found: list[Prediction] = []
    if j == 0:
        found.append(Prediction(source="thm3", kind="exact", value=thm3_value(ell)))
    elif j == 2:
        found.append(Prediction(source="trivial_j2", kind="exact", value=1))
    elif j in _J_FAMILIES:
        source, value_of = _J_FAMILIES[j]
        found.append(Prediction(source=source, kind="exact", value=value_of(k)))
    if ell == 1:
        found.append(Prediction(source="hs_gs_ell1", kind="exact", value=hs_gs_ell1_value(k)))
    if ell == 2:
        found.append(Prediction(source="thm8", kind="exact", value=thm8_value(k)))
    if j >= 4:
        bound = thm2_upper(j)
        if z_equals_w_forced(k, j):
            found.append(Prediction(source="thm2_exact", kind="exact", value=bound))
        found.append(Prediction(source="thm2_bound", kind="upper_bound", value=bound))
    if ell == 3 and k >= 5:
        found.append(Prediction(source="conj_ell3", kind="conjecture", value=conj_ell3_value(k)))
    if ell >= 2 and k >= ell + 2:
        found.append(
            Prediction(
                source="conj_general_leading",
                kind="leading_term",
                value=conj_general_leading(k, ell),
            )
        )
    return found


def predict(k: int, ell: int) -> Prediction | None:
    """The proven exact value for (k, ell), if any theorem covers it.

    Raises:
        ConsistencyFault: If two applicable exact predictors disagree.
    """
    exact = [p for p in predictions(k, ell) if p.kind == "exact"]
    if not exact:
        return None
    values = {p.value for p in exact}
    if len(values) > 1:
        detail = ", ".join(f"{p.source}={p.value}" for p in exact)
        raise ConsistencyFault(f"predictors disagree for k={k}, ell={ell}: {detail}")
    return exact[0]


def thm3_lower_coloring(m: int) -> Coloring:
    """A valid coloring of [1, thm3_value(m) - 1] for x + y + m*z = m*w, m >= 3.

    Even m: odd integers red, even blue. Odd m = 2q-1: period-4 blocks rrbb,
    shifted one place when q is even.
    """
    if m < 3:
        raise NotApplicableError(f"construction covers m >= 3, got {m}")
    length = thm3_value(m) - 1
    if m % 2 == 0:
        return Coloring(bits="".join("r" if t % 2 else "b" for t in range(1, length + 1)))
    q = (m + 1) // 2
    shift = 1 if q % 2 == 0 else 0
    return Coloring(bits="".join("rrbb"[(t - 1 - shift) % 4] for t in range(1, length + 1)))


def thm8_lower_coloring(k: int) -> Coloring:
    """A valid coloring of [1, thm8_value(k) - 1] for x + y + k*z = 2w.

    An initial red segment, the last integer also red when k is 1 or 2 mod 4,
    everything else blue.
    """
    _require_positive(k)
    length = thm8_value(k) - 1
    red_prefix = (k + 1) // 2
    last_red = k % 4 in (1, 2)
    bits = [
        "r" if t <= red_prefix or (last_red and t == length) else "b"
        for t in range(1, length + 1)
    ]
    return Coloring(bits="".join(bits))
