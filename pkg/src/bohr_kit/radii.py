"""Sharp radii in closed form, their defining equations and region labels.

Each radius is the positive zero of a low-degree defining function.  The
printed formulas for these zeros have removable 0/0 points (at ``p = 2 lam``
for the ``|f|^p + lam * sum`` inequality, at ``t = 3/(p+3)`` for the convex
combination), so the values returned here come from conjugate-rationalized
forms that are a single expression over the whole parameter range.  The
printed forms are kept in :func:`literal_radius` for cross-checking.
"""

import enum
import math
import threading
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, InvalidParams
from .numerics import DEFAULT_TOL, Bracket, ToleranceConfig, find_root


class Theorem(str, enum.Enum):
    """Theorem selector.  Values mirror the numbering users look up."""

    T31 = "31"  # |f|^p + lam * sum_{k>=1} |a_k| r^k
    T32 = "32"  # |f|^p + lam * sum_{k>=1} |f^(k)/k!| r^k
    T33 = "33"  # t |f|^p + (1-t) * sum_{k>=0} |a_k| r^k
    T34 = "34"  # t |f| + (1-t) * sum_{k>=1} |f^(k)/k!| r^k + (1-t) |a_0|
    T12 = "12"  # lacunary series starting at z^N

    @classmethod
    def parse(cls, value) -> "Theorem":
        if isinstance(value, cls):
            return value
        s = str(value).strip().upper().lstrip("T")
        try:
            return cls(s)
        except ValueError:
            raise InvalidParams(f"unknown theorem {value!r}; expected one of "
                                f"{', '.join(m.value for m in cls)}") from None


# Parameter names each theorem takes, in canonical order.
PARAM_NAMES = {
    Theorem.T31: ("p", "lam"),
    Theorem.T32: ("p", "lam"),
    Theorem.T33: ("t", "p"),
    Theorem.T34: ("t",),
    Theorem.T12: ("n",),
}


@dataclass(frozen=True)
class TheoremParams:
    """Validated parameters of one theorem instance.

    Only the fields named in ``PARAM_NAMES[theorem]`` are set; the others
    stay ``None``.
    """

    theorem: Theorem
    p: Optional[float] = None
    lam: Optional[float] = None
    t: Optional[float] = None
    n: Optional[int] = None

    def __post_init__(self):
        th = Theorem.parse(self.theorem)
        object.__setattr__(self, "theorem", th)
        wanted = PARAM_NAMES[th]
        for name in ("p", "lam", "t", "n"):
            value = getattr(self, name)
            if name in wanted and value is None:
                raise InvalidParams(f"theorem {th.value} needs parameter {name!r}")
            if name not in wanted and value is not None:
                raise InvalidParams(f"theorem {th.value} takes no parameter {name!r}")
            if value is not None and name != "n":
                value = float(value)
                if not math.isfinite(value):
                    raise InvalidParams(f"{name} must be finite, got {value}")
                object.__setattr__(self, name, value)

        p, lam, t = self.p, self.lam, self.t
        if th is Theorem.T31:
            if not (p > 0 and lam > 0):
                raise InvalidParams(f"need p > 0 and lam > 0, got p={p}, lam={lam}")
        elif th is Theorem.T32:
            if not (0 < p <= 1 and lam > 0):
                raise InvalidParams(f"need 0 < p <= 1 and lam > 0, got p={p}, lam={lam}")
        elif th is Theorem.T33:
            if not (0 < p <= 1 and 0 < t < 1):
                raise InvalidParams(f"need 0 < p <= 1 and 0 < t < 1, got t={t}, p={p}")
        elif th is Theorem.T34:
            if not 0 < t < 1:
                raise InvalidParams(f"need 0 < t < 1, got t={t}")
        else:
            n = self.n
            if isinstance(n, float) and n.is_integer():
                n = int(n)
            if isinstance(n, bool) or not isinstance(n, int) or n < 2:
                raise InvalidParams(f"need an integer N >= 2, got {self.n!r}")
            object.__setattr__(self, "n", n)

    @classmethod
    def of(cls, theorem, **kwargs) -> "TheoremParams":
        """Build from keyword arguments, ignoring ones that are ``None``.

        ``lambda`` is accepted as an alias of ``lam`` and ``N`` of ``n``.
        """
        if "lambda" in kwargs:
            kwargs["lam"] = kwargs.pop("lambda")
        if "N" in kwargs:
            kwargs["n"] = kwargs.pop("N")
        return cls(theorem, **{k: v for k, v in kwargs.items() if v is not None})

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAM_NAMES[self.theorem]}


@dataclass(frozen=True)
class RadiusResult:
    theorem: Theorem
    params: TheoremParams
    value: float
    branch: str
    region: str
    residual: float
    formula: str

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "params": self.params.as_dict(),
            "radius": self.value,
            "branch": self.branch,
            "region": self.region,
            "residual": self.residual,
            "formula": self.formula,
        }


def classify_region(p: float, lam: float) -> str:
    """Return ``"I"``, ``"II"`` or ``"outside"`` for the pair ``(p, lam)``.

    I is ``0 < p <= 1``; II is ``1 < p <= 3/2`` with ``lam <= 9p/10``.
    """
    if not (p > 0 and lam > 0):
        raise InvalidParams(f"need p > 0 and lam > 0, got p={p}, lam={lam}")
    if p <= 1:
        return "I"
    if p <= 1.5 and lam <= 9 * p / 10:
        return "II"
    return "outside"


def tstar_quartic(t: float) -> float:
    return t**4 - 8 * t**3 + 7 * t**2 + 4 * t - 4


_tstar_lock = threading.Lock()
_tstar_value: Optional[float] = None


def tstar() -> float:
    """Root in (0, 1) of ``t^4 - 8t^3 + 7t^2 + 4t - 4``, where the two radius
    branches of the derivative-sum convex combination cross.

    The quartic also vanishes at ``t = 1``, so the bracket stops short of it.
    """
    global _tstar_value
    if _tstar_value is None:
        with _tstar_lock:
            if _tstar_value is None:
                _tstar_value = find_root(
                    tstar_quartic, Bracket.of(tstar_quartic, 0.0, 0.9))
    return _tstar_value


def lemma26_branch_radii(t: float) -> tuple[float, float]:
    """Both candidate radii ``(r1, r2)`` for weight ``t``.

    ``r1`` zeroes ``2t r^2 + (2-t) r - t`` and ``r2`` zeroes
    ``2r^2 + (t-4) r + 1``; r1 < r2 below t* and r1 > r2 above it.
    """
    if not 0 < t < 1:
        raise InvalidParams(f"need 0 < t < 1, got t={t}")
    r1 = 2 * t / (2 - t + math.sqrt(9 * t * t - 4 * t + 4))
    r2 = 2 / (4 - t + math.sqrt(t * t - 8 * t + 8))
    return r1, r2


def _t34_branch(t: float) -> str:
    ts = tstar()
    if abs(t - ts) <= DEFAULT_TOL.abs_tol:
        return "t=t*"
    return "t<t*" if t < ts else "t>t*"


def _lacunary(r: float, n: int) -> float:
    return (1 + r) * (1 - 2 * r) * (1 - r) ** (n - 1) - 2 * r**n


def defining_value(theorem, r: float, params: TheoremParams) -> float:
    """The defining function of ``theorem`` at ``r``, signed as printed.

    The sharp radius is a zero of it.  For the derivative-sum convex
    combination the branch (``l`` or ``nu``) follows the position of ``t``
    relative to t*.
    """
    th = Theorem.parse(theorem)
    _check_params(th, params)
    if not 0 <= r < 1:
        raise DomainError(f"need 0 <= r < 1, got r={r}")
    if th is Theorem.T31:
        p, lam = params.p, params.lam
        return 2 * r * lam * (1 + r) - p * (1 - r) ** 2
    if th is Theorem.T32:
        p, lam = params.p, params.lam
        return 2 * p * r * r + (2 * lam + p) * r - p
    if th is Theorem.T33:
        t, p = params.t, params.p
        return t * p * (1 - r) ** 2 + (1 - t) * (1 - 3 * r) * (1 + r)
    if th is Theorem.T34:
        t = params.t
        if _t34_branch(t) == "t>t*":
            return 2 * r * r + (t - 4) * r + 1
        return 2 * t * r * r + (2 - t) * r - t
    return _lacunary(r, params.n)


def _check_params(th: Theorem, params: TheoremParams):
    if not isinstance(params, TheoremParams):
        raise InvalidParams(f"expected TheoremParams, got {type(params).__name__}")
    if params.theorem is not th:
        raise InvalidParams(
            f"parameters are for theorem {params.theorem.value}, not {th.value}")


def _lacunary_radius(n: int, tol: ToleranceConfig) -> float:
    # First sign change on a 1e-3 grid over (0, 1/2], then bisection.
    step = 1e-3
    lo, f_lo = 0.0, _lacunary(0.0, n)
    for k in range(1, 501):
        hi = k * step
        f_hi = _lacunary(hi, n)
        if f_lo * f_hi <= 0:
            return find_root(lambda r: _lacunary(r, n), Bracket(lo, hi, f_lo, f_hi), tol)
        lo, f_lo = hi, f_hi
    # (1 - 2r) forces a sign change by r = 1/2, so this is unreachable for N >= 2.
    raise AssertionError("no sign change of the lacunary equation on (0, 1/2]")


def sharp_radius(theorem, params: TheoremParams,
                 tol: ToleranceConfig = DEFAULT_TOL) -> RadiusResult:
    """Sharp radius of ``theorem`` for ``params``.

    For the two-parameter ``|f|^p`` inequality, pairs outside regions I and
    II still get the formula value, labelled ``region="outside"``.

    >>> round(sharp_radius("31", TheoremParams.of("31", p=1, lam=1)).value, 12)
    0.236067977500
    """
    th = Theorem.parse(theorem)
    _check_params(th, params)
    region = "n/a"
    branch = "generic"

    if th is Theorem.T31:
        p, lam = params.p, params.lam
        region = classify_region(p, lam)
        value = p / (lam + p + math.sqrt(lam * lam + 4 * p * lam))
        if math.isclose(p, 2 * lam, rel_tol=1e-15):
            branch = "p=2λ"
        formula = "p/(lam+p+sqrt(lam^2+4*p*lam))"
    elif th is Theorem.T32:
        p, lam = params.p, params.lam
        value = 2 * p / (2 * lam + p + math.sqrt(9 * p * p + 4 * lam * p + 4 * lam * lam))
        formula = "2p/(2lam+p+sqrt(9p^2+4lam*p+4lam^2))"
    elif th is Theorem.T33:
        t, p = params.t, params.p
        su = math.sqrt(t * p + 1 - t)
        value = su / (su + 2 * math.sqrt(1 - t))
        if math.isclose(t, 3 / (p + 3), rel_tol=1e-15):
            branch = "t=3/(p+3)"
        formula = "sqrt(u)/(sqrt(u)+2sqrt(1-t)), u=tp+1-t"
    elif th is Theorem.T34:
        t = params.t
        r1, r2 = lemma26_branch_radii(t)
        branch = _t34_branch(t)
        if branch == "t=t*":
            if abs(r1 - r2) >= 1e-6:
                raise AssertionError(f"branch radii disagree at t*: {r1} vs {r2}")
            value, formula = r1, "2t/(2-t+sqrt(9t^2-4t+4))"
        elif branch == "t<t*":
            value, formula = r1, "2t/(2-t+sqrt(9t^2-4t+4))"
        else:
            value, formula = r2, "2/(4-t+sqrt(t^2-8t+8))"
    else:
        value = _lacunary_radius(params.n, tol)
        formula = "first root of (1+r)(1-2r)(1-r)^(N-1)-2r^N on (0,1/2]"

    residual = defining_value(th, value, params)
    return RadiusResult(th, params, value, branch, region, residual, formula)


def literal_radius(theorem, params: TheoremParams) -> float:
    """The radius exactly as the closed forms are usually printed.

    These are numerically poor near their split points and exist to be
    compared against :func:`sharp_radius`.  Not defined for ``T12``.
    """
    th = Theorem.parse(theorem)
    _check_params(th, params)
    if th is Theorem.T31:
        p, lam = params.p, params.lam
        if p == 2 * lam:
            return 1 / 3
        return (-p - lam + math.sqrt(lam * lam + 4 * p * lam)) / (2 * lam - p)
    if th is Theorem.T32:
        p, lam = params.p, params.lam
        return (-2 * lam - p + math.sqrt(9 * p * p + 4 * lam * p + 4 * lam * lam)) / (4 * p)
    if th is Theorem.T33:
        t, p = params.t, params.p
        if t == 3 / (p + 3):
            return 0.5
        return ((1 - t + t * p - 2 * math.sqrt((1 - t) * (t * p + 1 - t)))
                / (t * p - 3 + 3 * t))
    if th is Theorem.T34:
        t = params.t
        if t < tstar():
            return (t - 2 + math.sqrt(9 * t * t - 4 * t + 4)) / (4 * t)
        return (4 - t - math.sqrt(t * t - 8 * t + 8)) / 4
    raise InvalidParams("the lacunary radius has no closed form")


def radius_value(theorem, **params) -> float:
    """Shorthand: ``radius_value("31", p=1, lam=1)``."""
    return sharp_radius(theorem, TheoremParams.of(theorem, **params)).value


__all__ = [
    "Theorem", "TheoremParams", "RadiusResult", "PARAM_NAMES",
    "classify_region", "sharp_radius", "defining_value", "literal_radius",
    "tstar", "tstar_quartic", "lemma26_branch_radii", "radius_value",
]
