"""The extremal Moebius family and coefficient-series arithmetic.

The extremal function throughout is ``f(z) = (a - z) / (1 - a z)`` with
``0 <= a < 1``, whose Taylor coefficients have moduli ``a`` and
``(1 - a^2) a^(k-1)`` for ``k >= 1``.  The closed-form helpers below accept a
scalar or a numpy array for ``a`` so the sup-over-``a`` searches can evaluate
a whole grid at once.
"""

import math
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ParseError

DEFAULT_TRUNCATION = 200


@dataclass(frozen=True)
class MoebiusFamily:
    a: float

    def __post_init__(self):
        if not 0 <= self.a < 1:
            raise DomainError(f"Moebius parameter must satisfy 0 <= a < 1, got a={self.a}")

    def __call__(self, z):
        return (self.a - z) / (1 - self.a * z)

    def coefficients(self, n: int = DEFAULT_TRUNCATION) -> "CoefficientSeries":
        return moebius_coefficients(self, n)


def _a(fam) -> float:
    return fam.a if isinstance(fam, MoebiusFamily) else fam


@dataclass(frozen=True)
class CoefficientSeries:
    """Moduli ``|a_0|, ..., |a_n|`` of a power series, plus an optional
    geometric bound ``tail_ratio`` on ``|a_{k+1}| / |a_k|`` past the prefix."""

    moduli: tuple
    tail_ratio: Optional[float] = None
    flagged: tuple = field(default=(), compare=False)

    def __post_init__(self):
        moduli = tuple(float(m) for m in self.moduli)
        if not moduli:
            raise ValueError("a coefficient series needs at least one modulus")
        if any(m < 0 or not math.isfinite(m) for m in moduli):
            raise ValueError("moduli must be finite and nonnegative")
        if self.tail_ratio is not None and not 0 <= self.tail_ratio < 1:
            raise ValueError(f"tail_ratio must lie in [0, 1), got {self.tail_ratio}")
        object.__setattr__(self, "moduli", moduli)

    def __len__(self):
        return len(self.moduli)

    def lemma22_violations(self) -> list[int]:
        """Indices ``k >= 1`` with ``|a_k| > 1 - |a_0|^2``.

        A function bounded by 1 on the disk has none.
        """
        bound = 1 - self.moduli[0] ** 2
        return [k for k, m in enumerate(self.moduli) if k >= 1 and m > bound]


def moebius_coefficients(fam, n: int) -> CoefficientSeries:
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    a = _a(fam)
    MoebiusFamily(a)
    moduli = [a] + [(1 - a * a) * a ** (k - 1) for k in range(1, n + 1)]
    return CoefficientSeries(tuple(moduli), tail_ratio=a)


def bohr_partial_sum(series: CoefficientSeries, r: float,
                     skip_constant: bool = False) -> tuple[float, Optional[float]]:
    """Sum ``|a_k| r^k`` over the stored prefix.

    Returns ``(value, tail_bound)``.  The tail bound is the geometric estimate
    ``|a_n| r^n * q r / (1 - q r)`` with ``q = tail_ratio``, or ``None`` when
    the series carries no tail ratio.
    """
    if not 0 <= r < 1:
        raise DomainError(f"need 0 <= r < 1, got r={r}")
    start = 1 if skip_constant else 0
    terms = [m * r**k for k, m in enumerate(series.moduli) if k >= start]
    value = math.fsum(terms)

    if series.tail_ratio is None:
        return value, None
    qr = series.tail_ratio * r
    if qr >= 1:
        raise DomainError(f"tail_ratio * r = {qr} >= 1, tail does not converge")
    n = len(series.moduli) - 1
    tail = series.moduli[n] * r**n * qr / (1 - qr)
    return value, tail


def moebius_tail_closed(fam, r):
    """``sum_{k>=1} |a_k| r^k = (1 - a^2) r / (1 - a r)`` for the Moebius family."""
    a = _a(fam)
    return (1 - a * a) * r / (1 - a * r)


def schwarz_pick_majorant(fam, r):
    """Upper bound ``(r + a) / (1 + a r)`` for ``|f(z)|`` on ``|z| = r`` when
    ``|f(0)| = a``.  The Moebius family attains it at ``z = -r``."""
    a = _a(fam)
    return (r + a) / (1 + a * r)


def moebius_derivative_modulus(fam, k: int, r):
    """``|f^(k)(r)| = (1 - a^2) k! a^(k-1) / (1 - a r)^(k+1)``."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    a = _a(fam)
    return (1 - a * a) * math.factorial(k) * np.power(a, k - 1) / (1 - a * r) ** (k + 1)


def derivative_bound(k: int, r: float, m: float) -> float:
    """Bound on ``|f^(k)(z)|`` at ``|z| = r`` for ``|f| <= 1`` with ``|f(z)| = m``:

        (1 - m^2) k! (1 + r)^(k-1) / (1 - r^2)^k
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not 0 <= r < 1:
        raise DomainError(f"need 0 <= r < 1, got r={r}")
    if not 0 <= m <= 1:
        raise DomainError(f"need 0 <= m <= 1, got m={m}")
    return (1 - m * m) * math.factorial(k) * (1 + r) ** (k - 1) / (1 - r * r) ** k


def weighted_derivative_tail(fam, r):
    """``sum_{k>=1} |f^(k)(r)| r^k / k!`` for the Moebius family, in closed form
    ``(1 - a^2) r / ((1 - a r)(1 - 2 a r))``.  Diverges once ``2 a r >= 1``.
    """
    a = _a(fam)
    if np.any(np.asarray(r) < 0):
        raise DomainError("need r >= 0")
    if np.any(2 * np.asarray(a) * np.asarray(r) >= 1):
        raise DomainError("need 2 a r < 1 for the derivative series to converge")
    return (1 - a * a) * r / ((1 - a * r) * (1 - 2 * a * r))


def parse_series(text: str) -> CoefficientSeries:
    """Parse coefficient-file text; see :func:`load_series` for the format."""
    moduli: list[float] = []
    tail_ratio = None
    seen_tail = False
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if seen_tail:
            raise ParseError("nothing may follow the tail_ratio line", lineno)
        if line.lower().startswith("tail_ratio"):
            key, sep, value = line.partition("=")
            if not sep or key.strip().lower() != "tail_ratio":
                raise ParseError(f"malformed tail_ratio line {line!r}", lineno)
            try:
                tail_ratio = float(value)
            except ValueError:
                raise ParseError(f"bad tail_ratio value {value.strip()!r}", lineno) from None
            if not 0 <= tail_ratio < 1:
                raise ParseError(f"tail_ratio must lie in [0, 1), got {tail_ratio}", lineno)
            seen_tail = True
            continue
        for token in line.split(","):
            token = token.strip()
            try:
                value = float(token)
            except ValueError:
                raise ParseError(f"not a decimal number: {token!r}", lineno) from None
            if not math.isfinite(value) or value < 0:
                raise ParseError(f"moduli must be finite and nonnegative, got {token}", lineno)
            moduli.append(value)
    if not moduli:
        raise ParseError("no coefficients found", len(lines) or 1)

    series = CoefficientSeries(tuple(moduli), tail_ratio)
    flagged = tuple(series.lemma22_violations())
    if flagged:
        bound = 1 - moduli[0] ** 2
        warnings.warn(
            f"coefficients at k={list(flagged)} exceed 1 - |a_0|^2 = {bound:.6g}; "
            "the series cannot come from a function bounded by 1",
            stacklevel=2)
    return CoefficientSeries(series.moduli, tail_ratio, flagged)


def load_series(path) -> CoefficientSeries:
    """Read nonnegative coefficient moduli from a UTF-8 text file.

    Either one decimal per line or a single comma-separated line; index ``k``
    is the zero-based position.  An optional final line ``tail_ratio=<q>``
    sets the geometric tail ratio.  Indices violating ``|a_k| <= 1 - |a_0|^2``
    are recorded in ``series.flagged`` and trigger a warning, not an error.
    """
    text = Path(path).read_text(encoding="utf-8")
    return parse_series(text)


def as_series(moduli: Sequence[float], tail_ratio: Optional[float] = None) -> CoefficientSeries:
    return CoefficientSeries(tuple(moduli), tail_ratio)
