"""Closed-form evaluators for the extremal values, with validity metadata.

Every evaluator returns a :class:`BoundValue` carrying the kind of bound
and the smallest n for which the source theorem asserts it, so callers
cannot silently use an asymptotic equality at small n.
"""

from __future__ import annotations

from dataclasses import dataclass

THEOREM3_THRESHOLD = 300 ** 3

EXACT = "exact"
UPPER = "upper"
LOWER = "lower"


class BelowThreshold(ValueError):
    """n is below the theorem's stated range."""


@dataclass(frozen=True)
class BoundValue:
    value: int
    kind: str            # exact | upper | lower
    valid_from: int      # minimal n for which the source asserts the bound
    source: str
    odd_case: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("bound value must be nonnegative")


def ex_c33_edges(n: int) -> BoundValue:
    """ex(n, C_3^3): max edges of a C_3^3-free graph, n >= 6."""
    if n < 6:
        raise BelowThreshold("ex(n, C_3^3) is stated for n >= 6")
    if n % 4 == 2:
        value = n * n // 4 + n // 2 - 1
    else:
        value = n * n // 4 + n // 2
    return BoundValue(value, EXACT, 6, "thm1")


def ex_c33_triangles_bound(n: int) -> BoundValue:
    """Upper bound n^2/4 - 1 + [4|n] on ex(n, K_3, C_3^3); exact for even n.

    For odd n the real-valued expression is non-integral; its floor is
    reported and flagged, and the kind stays an upper bound.
    """
    if n < 22:
        raise BelowThreshold("the triangle bound is stated for n >= 22")
    if n % 2 == 0:
        value = n * n // 4 - 1 + (1 if n % 4 == 0 else 0)
        return BoundValue(value, EXACT, 22, "thm2")
    return BoundValue((n * n - 4) // 4, UPPER, 22, "thm2", odd_case=True)


def ex_p33_triangles(n: int) -> BoundValue:
    """ex(n, K_3, P_3^3) = floor((n-1)^2/4), asserted exact for huge n.

    Below the threshold the construction still achieves the value, so the
    result is reported as a lower bound there.
    """
    if n < 3:
        raise BelowThreshold("needs n >= 3")
    value = (n - 1) ** 2 // 4
    kind = EXACT if n >= THEOREM3_THRESHOLD else LOWER
    return BoundValue(value, kind, THEOREM3_THRESHOLD, "thm3")


def ex_m23_triangles(n: int) -> BoundValue:
    """ex(n, K_3, M_2^3) = max{3n-8, floor((n-1)^2/4)} for n >= 7."""
    if n < 7:
        raise BelowThreshold("ex(n, K_3, M_2^3) is stated for n >= 7")
    return BoundValue(max(3 * n - 8, (n - 1) ** 2 // 4), EXACT, 7, "thm4")


FORMULAS = {
    "ex_c33_edges": ex_c33_edges,
    "ex_c33_triangles": ex_c33_triangles_bound,
    "ex_p33": ex_p33_triangles,
    "ex_m23": ex_m23_triangles,
}
