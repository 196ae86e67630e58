"""2-D aperiodic correlations, ZCAP verification, maximal-zone search, and
correlation-surface export.

The 2-D correlation at shift (u1, u2) sums C[i+u1, g+u2] * conj(D[i, g])
over the overlap of the shifted and unshifted index grids, which covers all
four sign quadrants uniformly; it is identically zero once |u1| >= L1 or
|u2| >= L2.  All zero tests are exact (CycSum); floating magnitudes appear
only in the exported surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import CycSum
from .gbf import Zq2DArray
from .sequences import RootVector


@dataclass(frozen=True)
class RootArray:
    """L1 x L2 array of M-th roots of unity, exponents row-major, M even."""

    modulus: int
    rows: int
    cols: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 2 or self.modulus % 2 != 0:
            raise ValueError(f"modulus must be even >= 2, got {self.modulus}")
        if self.rows < 1 or self.cols < 1:
            raise ValueError("dimensions must be >= 1")
        if len(self.exponents) != self.rows * self.cols:
            raise ValueError("exponent count does not match dimensions")
        if any(not 0 <= e < self.modulus for e in self.exponents):
            raise ValueError(f"exponents must lie in [0, {self.modulus})")

    def entry(self, i: int, g: int) -> int:
        return self.exponents[i * self.cols + g]

    def row(self, i: int) -> RootVector:
        return RootVector(self.modulus,
                          self.exponents[i * self.cols:(i + 1) * self.cols])

    def flatten(self) -> RootVector:
        """Row-major read-out as a 1-D sequence."""
        return RootVector(self.modulus, self.exponents)

    def to_nested(self) -> list[list[int]]:
        c = self.cols
        return [list(self.exponents[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "RootArray":
        exps = tuple(self.entry(i, g)
                     for g in range(self.cols) for i in range(self.rows))
        return RootArray(self.modulus, self.cols, self.rows, exps)


def lift2d(a: Zq2DArray, M: int | None = None) -> RootArray:
    """Express a Z_q array as a RootArray over modulus M (default q)."""
    if M is None:
        M = a.q
    if M % a.q != 0:
        raise ValueError(f"{M} is not a multiple of q={a.q}")
    k = M // a.q
    return RootArray(M, a.rows, a.cols, tuple(e * k for e in a.values))


def _check_compatible(C: RootArray, D: RootArray) -> None:
    if C.modulus != D.modulus:
        raise ValueError(f"modulus mismatch: {C.modulus} != {D.modulus}")
    if (C.rows, C.cols) != (D.rows, D.cols):
        raise ValueError(
            f"dimension mismatch: {(C.rows, C.cols)} != {(D.rows, D.cols)}")


def accf2d(C: RootArray, D: RootArray, u1: int, u2: int) -> CycSum:
    """Exact 2-D aperiodic cross-correlation of C against D at shift (u1, u2)."""
    _check_compatible(C, D)
    M = C.modulus
    L1, L2 = C.rows, C.cols
    out = CycSum(M)
    if abs(u1) >= L1 or abs(u2) >= L2:
        return out
    coeffs = out.coeffs
    ec, ed = C.exponents, D.exponents
    i_lo, i_hi = max(0, -u1), min(L1, L1 - u1)
    g_lo, g_hi = max(0, -u2), min(L2, L2 - u2)
    for i in range(i_lo, i_hi):
        base_c = (i + u1) * L2 + u2
        base_d = i * L2
        for g in range(g_lo, g_hi):
            coeffs[(ec[base_c + g] - ed[base_d + g]) % M] += 1
    return out


def aacf2d(C: RootArray, u1: int, u2: int) -> CycSum:
    return accf2d(C, C, u1, u2)


def _pair_sum2d(S: RootArray, T: RootArray, u1: int, u2: int) -> CycSum:
    out = accf2d(S, S, u1, u2)
    out += accf2d(T, T, u1, u2)
    return out


@dataclass(frozen=True)
class ZcapCertificate:
    """Verdict for a claimed zero-correlation rectangle of an array pair."""

    rows: int
    cols: int
    z1: int
    z2: int
    peak: int
    ok: bool

    @property
    def zcz_ratio(self) -> Fraction:
        return Fraction(self.z1 * self.z2, self.rows * self.cols)

    @property
    def is_gcap(self) -> bool:
        return self.ok and self.z1 == self.rows and self.z2 == self.cols


def zcap_check(S: RootArray, T: RootArray, z1: int, z2: int) -> ZcapCertificate:
    """Exact test of the (z1, z2) zero rectangle for the pair (S, T).

    True iff the autocorrelation sum is exactly 2*L1*L2 at (0, 0) and
    exactly zero at every other shift with |u1| < z1, |u2| < z2.  By
    conjugate symmetry only the half-plane u1 > 0 plus the ray
    (u1 = 0, u2 > 0) needs scanning.
    """
    _check_compatible(S, T)
    L1, L2 = S.rows, S.cols
    if not 1 <= z1 <= L1 or not 1 <= z2 <= L2:
        raise ValueError(f"claimed rectangle ({z1}, {z2}) out of range")
    peak = _pair_sum2d(S, T, 0, 0).integer_value()
    ok = peak == 2 * L1 * L2
    if ok:
        for u2 in range(1, z2):
            if not _pair_sum2d(S, T, 0, u2).is_zero():
                ok = False
                break
    if ok:
        for u1 in range(1, z1):
            for u2 in range(-z2 + 1, z2):
                if not _pair_sum2d(S, T, u1, u2).is_zero():
                    ok = False
                    break
            if not ok:
                break
    return ZcapCertificate(rows=L1, cols=L2, z1=z1, z2=z2,
                           peak=peak if peak is not None else -1, ok=ok)


@dataclass(frozen=True)
class ZczFrontier:
    """All maximal zero rectangles of an array pair (none dominates another)."""

    rows: int
    cols: int
    rectangles: tuple[tuple[int, int], ...]
    peak: int

    @property
    def best_ratio(self) -> Fraction:
        if not self.rectangles:
            return Fraction(0)
        best = max(z1 * z2 for z1, z2 in self.rectangles)
        return Fraction(best, self.rows * self.cols)

    def covers(self, z1: int, z2: int) -> bool:
        return any(z1 <= r1 and z2 <= r2 for r1, r2 in self.rectangles)


def max_zcz_rect(S: RootArray, T: RootArray) -> ZczFrontier:
    """The Pareto frontier of zero rectangles satisfied by (S, T), exactly.

    For each column budget the widest row extent is found incrementally;
    dominated rectangles are dropped.  The peak condition is part of the
    verdict: a wrong peak yields an empty frontier.
    """
    _check_compatible(S, T)
    L1, L2 = S.rows, S.cols
    peak = _pair_sum2d(S, T, 0, 0).integer_value()
    if peak != 2 * L1 * L2:
        return ZczFrontier(L1, L2, (), peak if peak is not None else -1)

    def col_extent(u1: int) -> int:
        # widest w such that shifts (u1, u2) vanish for all |u2| < w
        if u1 == 0:
            w = 1
            while w < L2 and _pair_sum2d(S, T, 0, w).is_zero():
                w += 1
            return w
        if not _pair_sum2d(S, T, u1, 0).is_zero():
            return 0
        w = 1
        while w < L2 and (_pair_sum2d(S, T, u1, w).is_zero()
                          and _pair_sum2d(S, T, u1, -w).is_zero()):
            w += 1
        return w

    frontier: list[tuple[int, int]] = []
    running = col_extent(0)
    z1 = 1
    while True:
        nxt = col_extent(z1) if z1 < L1 else 0
        nxt = min(running, nxt)
        if z1 == L1 or nxt < running:
            frontier.append((z1, running))
            running = nxt
        if z1 == L1 or running == 0:
            break
        z1 += 1
    return ZczFrontier(L1, L2, tuple(frontier), peak)


def surface(S: RootArray, T: RootArray) -> list[list[float]]:
    """Magnitude grid |rho(S;u1,u2) + rho(T;u1,u2)| over all shifts.

    The grid is (2*L1-1) x (2*L2-1); cell [a][b] corresponds to the shift
    (a - L1 + 1, b - L2 + 1).  Cells that are exactly zero are emitted as
    literal 0.0 so that downstream plots show a clean zone.
    """
    _check_compatible(S, T)
    L1, L2 = S.rows, S.cols
    grid: list[list[float]] = []
    for u1 in range(-L1 + 1, L1):
        row = []
        for u2 in range(-L2 + 1, L2):
            s = _pair_sum2d(S, T, u1, u2)
            row.append(0.0 if s.is_zero() else abs(s.value()))
        grid.append(row)
    return grid
