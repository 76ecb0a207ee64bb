"""Scalar root finding, interval maximization and a stable quadratic root.

Everything here is deliberately simple: bisection instead of Brent, a dense
grid followed by golden-section refinement instead of a derivative-based
optimizer.  The functions we feed in are cheap to evaluate, and a guaranteed
bracket is worth more than a few saved iterations.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import InvalidCoefficients, MaxIterExceeded, NoSignChange

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class ToleranceConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200
    grid_points: int = 4096
    refine_iter: int = 80

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_iter < 1:
            raise ValueError(f"max_iter must be >= 1, got {self.max_iter}")
        if self.grid_points < 3:
            raise ValueError(f"grid_points must be >= 3, got {self.grid_points}")
        if self.refine_iter < 1:
            raise ValueError(f"refine_iter must be >= 1, got {self.refine_iter}")


DEFAULT_TOL = ToleranceConfig()


@dataclass(frozen=True)
class Bracket:
    """An interval ``[lo, hi]`` together with the function values at its ends."""

    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def of(cls, f: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        """Evaluate ``f`` at both ends and build the bracket."""
        return cls(lo, hi, float(f(lo)), float(f(hi)))

    @property
    def has_sign_change(self) -> bool:
        return self.f_lo * self.f_hi <= 0


def find_root(f: Callable[[float], float], bracket: Bracket,
              tol: ToleranceConfig = DEFAULT_TOL) -> float:
    """Bisect ``f`` on ``bracket`` until the bracket is narrower than ``tol.abs_tol``.

    Raises NoSignChange when the end values share a sign and MaxIterExceeded
    when the width target is not met within ``tol.max_iter`` halvings (or the
    interval can no longer be split in floating point).
    """
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    if f_lo * f_hi > 0:
        raise NoSignChange(
            f"f({lo})={f_lo} and f({hi})={f_hi} have the same sign")
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi

    for _ in range(tol.max_iter):
        if hi - lo <= tol.abs_tol:
            return 0.5 * (lo + hi)
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    if hi - lo <= tol.abs_tol:
        return 0.5 * (lo + hi)
    raise MaxIterExceeded(
        f"bracket width {hi - lo:.3e} still above abs_tol={tol.abs_tol:.1e} "
        f"after {tol.max_iter} iterations")


def golden_section_max(f: Callable[[float], float], lo: float, hi: float,
                       iterations: int) -> tuple[float, float]:
    """Contract ``[lo, hi]`` towards a local maximum of ``f``.

    Returns the best point evaluated along the way, not the midpoint of the
    final interval, so the result never falls below an interior probe.
    """
    c = hi - INV_PHI * (hi - lo)
    d = lo + INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc >= fd else (d, fd)
    for _ in range(iterations):
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - INV_PHI * (hi - lo)
            fc = f(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            lo, c, fc = c, d, fd
            d = lo + INV_PHI * (hi - lo)
            fd = f(d)
            if fd > best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def maximize_on_interval(f: Callable, lo: float, hi: float,
                         tol: ToleranceConfig = DEFAULT_TOL,
                         vectorized: bool = False) -> tuple[float, float]:
    """Maximize ``f`` on ``[lo, hi]``: uniform grid, then golden-section polish.

    The grid has ``tol.grid_points`` points including both ends.  The best
    grid point and its two neighbours form the bracket that is refined for
    ``tol.refine_iter`` golden-section steps.  With ``vectorized=True`` the
    grid is evaluated in one call on a numpy array.

    Returns ``(argmax, max)``; ``max`` is never below the best grid value.
    """
    if hi < lo:
        raise ValueError(f"need lo <= hi, got [{lo}, {hi}]")
    if hi == lo:
        return lo, float(f(lo))

    xs = np.linspace(lo, hi, tol.grid_points)
    if vectorized:
        ys = np.asarray(f(xs), dtype=float)
    else:
        ys = np.array([f(x) for x in xs], dtype=float)
    i = int(np.argmax(ys))
    best_x, best_f = float(xs[i]), float(ys[i])

    a = float(xs[max(i - 1, 0)])
    b = float(xs[min(i + 1, len(xs) - 1)])
    x, fx = golden_section_max(lambda s: float(f(s)), a, b, tol.refine_iter)
    if fx > best_f:
        best_x, best_f = x, fx
    return best_x, best_f


def stable_quadratic_root(A: float, B: float, C: float) -> float:
    """Positive root of ``A x^2 + B x + C`` for ``B > 0``, ``C < 0``.

    Uses the conjugate form ``-2C / (B + sqrt(B^2 - 4AC))``, which has no
    cancellation and passes smoothly through ``A = 0``.
    """
    disc = B * B - 4.0 * A * C
    if not (B > 0 and C < 0 and disc >= 0):
        raise InvalidCoefficients(
            f"need B > 0, C < 0 and a nonnegative discriminant; got A={A}, B={B}, C={C}")
    return -2.0 * C / (B + math.sqrt(disc))
