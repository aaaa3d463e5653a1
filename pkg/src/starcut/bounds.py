"""Exact-arithmetic threshold functions, closed-form connectivity values,
and the lookup table of every settled star-cut value.

All threshold arithmetic uses rationals: the even-r branch maxima produce
thirds at r = 8, and the dimension guarantees are strict comparisons
against those rationals, so floats never appear here.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import FQ, Q

MODES = ("structure", "substructure")


class ROutOfRange(ValueError):
    pass


class OutOfValidity(ValueError):
    pass


def _check_r(r: int) -> None:
    if r < 2:
        raise ROutOfRange(f"leaf count r={r} must be at least 2")


def threshold_q(r: int) -> Fraction:
    """Dimension threshold for hypercubes: above it the star-cut value is
    always ceil(n/2).  Piecewise maximum of three quadratic/linear branches;
    integral for every r except r = 8 (value 31/3)."""
    _check_r(r)
    if r % 2:
        return max(Fraction(r + 7, 2), Fraction(r * r + 4 * r + 3, 8))
    return max(
        Fraction(r * r + 2 * r, 8),
        Fraction(r + 8, 2),
        Fraction(r * r + 6 * r + 12, 12),
    )


def threshold_fq(r: int) -> Fraction:
    """Folded-hypercube analogue of threshold_q; 28/3 at r = 8."""
    _check_r(r)
    if r % 2:
        return max(
            Fraction(6),
            Fraction(r + 5, 2),
            Fraction(r * r + 4 * r - 5, 8),
        )
    return max(
        Fraction(6),
        Fraction(r * r + 2 * r - 8, 8),
        Fraction(r + 6, 2),
        Fraction(r * r + 6 * r, 12),
    )


def threshold(family: str, r: int) -> Fraction:
    if family == Q:
        return threshold_q(r)
    if family == FQ:
        return threshold_fq(r)
    raise ValueError(f"unknown family {family!r}")


def min_guaranteed_dim(family: str, r: int) -> int:
    """Smallest dimension strictly above the family threshold."""
    return math.floor(threshold(family, r)) + 1


def render_ratio(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def kappa_g_formula(family: str, n: int, g: int) -> int:
    """Closed form for the g-extra connectivity of Q_n (n >= 4) and
    FQ_n (n >= 7): the linear-quadratic branch up to the seam, then the
    constant middle-cut value."""
    if family == Q:
        if n < 4 or not 0 <= g <= n:
            raise OutOfValidity(f"Q formula needs n >= 4 and 0 <= g <= n, got ({n}, {g})")
        if g <= n - 4:
            return (g + 1) * n - 2 * g - math.comb(g, 2)
        return n * (n - 1) // 2
    if family == FQ:
        if n < 7 or not 0 <= g <= n + 1:
            raise OutOfValidity(f"FQ formula needs n >= 7 and 0 <= g <= n+1, got ({n}, {g})")
        if g <= n - 3:
            return (g + 1) * (n + 1) - 2 * g - math.comb(g, 2)
        return n * (n + 1) // 2
    raise ValueError(f"unknown family {family!r}")


def neighborhood_bound_formula(family: str, n: int, g: int) -> int:
    """Lower bound on |N(C)| for connected C with g+1 vertices."""
    if family == Q:
        if n < 4 or g < 0:
            raise OutOfValidity(f"Q bound needs n >= 4 and g >= 0, got ({n}, {g})")
        return (g + 1) * n - 2 * g - math.comb(g, 2)
    if family == FQ:
        # stated window only; behavior outside it is rejected, not extrapolated
        if n < 5 or not 1 <= g <= n + 2:
            raise OutOfValidity(f"FQ bound needs n >= 5 and 1 <= g <= n+2, got ({n}, {g})")
        return (g + 1) * (n + 1) - 2 * g - math.comb(g, 2)
    raise ValueError(f"unknown family {family!r}")


# ----------------------------------------------------------------------
# settled values

EXACT = "exact"
NO_CUT = "no_cut"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class KnownValue:
    kind: str  # exact | no_cut | unknown
    value: int | None = None
    source: str = ""

    @property
    def is_exact(self) -> bool:
        return self.kind == EXACT


def conjectured_value(family: str, n: int) -> int:
    return (n + 1) // 2 if family == Q else (n + 2) // 2


def known_value(family: str, n: int, r: int, mode: str = "structure") -> KnownValue:
    """Every star-cut value settled in the literature, else Unknown.

    Explicit low-dimensional results take precedence over the general
    dimension-threshold theorem, which only kicks in above threshold(r).
    Both cut flavors agree on every settled value; the flavor only matters
    for the no-cut case of two-leaf stars on the 4-cycle.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if n < 2 or r < 1:
        raise ValueError(f"need n >= 2 and r >= 1, got ({n}, {r})")
    half_up = conjectured_value(family, n)
    if family == Q:
        if r == 1:
            if n >= 3:
                return KnownValue(EXACT, n - 1, "classic-single-leaf")
            return KnownValue(UNKNOWN)
        if n == 2 and r == 2 and mode == "structure":
            return KnownValue(NO_CUT, None, "no-cut-small-cycle")
        if 2 <= r <= 3 and n >= 3:
            return KnownValue(EXACT, half_up, "classic-small-stars")
        if r == 4 and n >= 4:
            tag = "four-leaf-stars" if n >= 6 else "low-dim-four-leaf"
            return KnownValue(EXACT, half_up, tag)
        if r == 5 and 5 <= n <= 6:
            return KnownValue(EXACT, half_up, "low-dim-five-leaf")
        if r == 6 and 6 <= n <= 7:
            return KnownValue(EXACT, half_up, "low-dim-six-leaf")
        if r >= 2 and n > threshold_q(r):
            return KnownValue(EXACT, half_up, "dimension-threshold")
        return KnownValue(UNKNOWN)
    if family == FQ:
        if r == 1:
            if n >= 7:
                return KnownValue(EXACT, n, "folded-single-leaf")
            return KnownValue(UNKNOWN)
        if n > threshold_fq(r):
            tag = "folded-small-stars" if r <= 3 else "folded-dimension-threshold"
            return KnownValue(EXACT, half_up, tag)
        return KnownValue(UNKNOWN)
    raise ValueError(f"unknown family {family!r}")


def tables_tsv(max_r: int) -> str:
    """Threshold table: one row per r with both thresholds (exact rational
    rendering) and the dimensions they guarantee."""
    if max_r < 2:
        raise ROutOfRange(f"max_r must be at least 2, got {max_r}")
    lines = ["r\tthreshold_q\tthreshold_fq\tmin_dim_q\tmin_dim_fq"]
    for r in range(2, max_r + 1):
        lines.append(
            "\t".join(
                (
                    str(r),
                    render_ratio(threshold_q(r)),
                    render_ratio(threshold_fq(r)),
                    str(min_guaranteed_dim(Q, r)),
                    str(min_guaranteed_dim(FQ, r)),
                )
            )
        )
    return "\n".join(lines) + "\n"
