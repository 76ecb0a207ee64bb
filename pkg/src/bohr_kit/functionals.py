"""Majorant and extremal functionals of ``(a, r)`` for each inequality.

``majorant_value`` is the upper bound for the left-hand side over the whole
class of self-maps with ``|f(0)| = a``, after the Schwarz-Pick and
coefficient/derivative reductions.  ``extremal_value`` is the left-hand side
evaluated exactly on the Moebius function ``(a - z)/(1 - a z)`` at the point
where it is largest (``z = -r`` or ``z = r``).

Both accept a scalar or a numpy array for ``a``; ``r`` is a scalar.  ``a = 1``
is admitted, where every majorant equals 1.
"""

import enum

import numpy as np

from .errors import DomainError, InvalidParams
from .radii import Theorem, TheoremParams
from .series import moebius_tail_closed, schwarz_pick_majorant, weighted_derivative_tail


class FunctionalKind(str, enum.Enum):
    MAJORANT = "majorant"
    EXTREMAL = "extremal"

    @classmethod
    def parse(cls, value) -> "FunctionalKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise InvalidParams(f"unknown functional kind {value!r}") from None


def functional_domain(theorem, params: TheoremParams) -> tuple[float, float, bool]:
    """``(r_min, r_max, needs_2ar)``; ``r`` must lie in ``[r_min, r_max)``."""
    th = _theorem_for(theorem, params)
    if th in (Theorem.T31, Theorem.T33):
        return 0.0, 1.0, False
    if th in (Theorem.T32, Theorem.T34):
        return 0.0, 0.5, True
    raise InvalidParams("no functionals are defined for the lacunary theorem")


def _theorem_for(theorem, params) -> Theorem:
    th = Theorem.parse(theorem)
    if not isinstance(params, TheoremParams) or params.theorem is not th:
        raise InvalidParams(f"parameters do not belong to theorem {th.value}")
    return th


def _prepare(theorem, a, r, params):
    th = _theorem_for(theorem, params)
    _, r_max, _ = functional_domain(th, params)
    if not 0 <= r < r_max:
        raise DomainError(f"theorem {th.value} needs 0 <= r < {r_max}, got r={r}")
    arr = np.asarray(a, dtype=float)
    if np.any(arr < 0) or np.any(arr > 1) or np.any(np.isnan(arr)):
        raise DomainError("need 0 <= a <= 1")
    return th, arr


def _finish(a, value):
    return float(value) if np.ndim(a) == 0 else value


def _pow(x, p):
    # x >= 0 here; np.power gives 0**p == 0 for p > 0.
    return np.power(x, p)


def _derivative_factor(r):
    # sum_{k>=1} r^k / ((1-r)^k (1+r)) = r / ((1+r)(1-2r))
    return r / ((1 + r) * (1 - 2 * r))


def _majorant(th, a, r, params):
    x = schwarz_pick_majorant(a, r)
    if th is Theorem.T31:
        return _pow(x, params.p) + params.lam * (1 - a * a) * r / (1 - r)
    if th is Theorem.T32:
        return _pow(x, params.p) + params.lam * _derivative_factor(r) * (1 - x * x)
    t = params.t
    if th is Theorem.T33:
        return t * _pow(x, params.p) + (1 - t) * (a + (1 - a * a) * r / (1 - r))
    return t * x + (1 - t) * _derivative_factor(r) * (1 - x * x) + (1 - t) * a


def _extremal(th, a, r, params):
    if th is Theorem.T31:
        return (_pow(schwarz_pick_majorant(a, r), params.p)
                + params.lam * moebius_tail_closed(a, r))
    if th is Theorem.T32:
        m = np.abs(a - r) / (1 - a * r)
        return _pow(m, params.p) + params.lam * weighted_derivative_tail(a, r)
    t = params.t
    if th is Theorem.T33:
        return (t * _pow(schwarz_pick_majorant(a, r), params.p)
                + (1 - t) * (a + moebius_tail_closed(a, r)))
    # No extremal point is singled out for this case; z = r is a choice.
    m = np.abs(a - r) / (1 - a * r)
    return t * m + (1 - t) * weighted_derivative_tail(a, r) + (1 - t) * a


def majorant_value(theorem, a, r: float, params: TheoremParams):
    th, a_arr = _prepare(theorem, a, r, params)
    return _finish(a, _majorant(th, a_arr, r, params))


def extremal_value(theorem, a, r: float, params: TheoremParams):
    """Left-hand side on the Moebius function.

    The ``|f|^p + lam * coefficient sum`` and convex-combination cases use
    ``z = -r``; the two derivative-sum cases use ``z = r``, where the first
    term is ``|a - r| / (1 - a r)`` so that ``a < r`` is handled too.
    """
    th, a_arr = _prepare(theorem, a, r, params)
    return _finish(a, _extremal(th, a_arr, r, params))


def functional_value(kind, theorem, a, r: float, params: TheoremParams):
    if FunctionalKind.parse(kind) is FunctionalKind.MAJORANT:
        return majorant_value(theorem, a, r, params)
    return extremal_value(theorem, a, r, params)


def functional_closure(kind, theorem, params: TheoremParams, r: float):
    """Validate ``(theorem, params, r)`` once and return ``a -> value``.

    The returned function skips argument checks; it is meant for the
    sup-over-``a`` searches, which call it thousands of times with ``a`` in
    ``[0, 1]``.
    """
    th, _ = _prepare(theorem, 0.0, r, params)
    core = _majorant if FunctionalKind.parse(kind) is FunctionalKind.MAJORANT else _extremal

    def evaluate(a):
        return core(th, a, r, params)
    return evaluate
