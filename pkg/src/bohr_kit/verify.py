"""Machine checks of the inequalities and of the sharpness of their radii.

The inequality side asks whether ``sup_a majorant(a, r) <= 1``; the sharpness
side asks whether some Moebius parameter ``a`` pushes the extremal functional
above 1.  Excess near a sharp radius shows up only for ``a`` very close to 1,
so every sup-over-``a`` search here combines a uniform grid with a geometric
grid in ``1 - a``.
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import DomainError, InvalidParams, NonMonotonePredicate
from .functionals import FunctionalKind, functional_closure, functional_domain
from .numerics import DEFAULT_TOL, ToleranceConfig, golden_section_max, maximize_on_interval
from .radii import Theorem, TheoremParams, lemma26_branch_radii, sharp_radius, tstar
from .series import derivative_bound, moebius_coefficients, moebius_derivative_modulus

VIOLATION_EPS = 1e-12
# Geometric grid in 1 - a: from 0.5 down to 1e-8, 64 points per decade.
_GAP_DECADES = math.log10(0.5) + 8
_GAPS = np.logspace(math.log10(0.5), -8, int(round(64 * _GAP_DECADES)) + 1)
SCAN_POINTS = 256


@dataclass(frozen=True)
class VerificationReport:
    theorem: Theorem
    params: TheoremParams
    r: float
    kind: FunctionalKind
    sup_value: float
    argmax_a: float
    verdict: str
    margin: float
    violation_eps: float = VIOLATION_EPS

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "params": self.params.as_dict(),
            "r": self.r,
            "kind": self.kind.value,
            "sup_value": self.sup_value,
            "argmax_a": self.argmax_a,
            "verdict": self.verdict,
            "margin": self.margin,
            "violation_eps": self.violation_eps,
        }


@dataclass(frozen=True)
class WitnessResult:
    theorem: Theorem
    params: TheoremParams
    r: float
    found: bool
    a: Optional[float]
    excess: Optional[float]
    max_value: float
    argmax_a: float
    exploratory: bool = False

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "params": self.params.as_dict(),
            "r": self.r,
            "found": self.found,
            "a": self.a,
            "excess": self.excess,
            "max_value": self.max_value,
            "argmax_a": self.argmax_a,
            "exploratory": self.exploratory,
        }


def _check(theorem, params, r):
    th = Theorem.parse(theorem)
    if not isinstance(params, TheoremParams) or params.theorem is not th:
        raise InvalidParams(f"parameters do not belong to theorem {th.value}")
    r_min, r_max, _ = functional_domain(th, params)
    if not r_min <= r < r_max:
        raise DomainError(f"theorem {th.value} needs {r_min} <= r < {r_max}, got r={r}")
    return th


def sup_over_a(fn, tol: ToleranceConfig = DEFAULT_TOL) -> tuple[float, float]:
    """``(argmax, max)`` of a vectorized ``fn`` over ``a`` in ``[0, 1]``.

    A uniform grid with golden-section polish covers interior maxima; a
    geometric grid in ``1 - a`` followed by golden-section on ``log(1 - a)``
    resolves peaks hugging ``a = 1``.
    """
    best_a, best_v = maximize_on_interval(fn, 0.0, 1.0, tol, vectorized=True)

    values = np.asarray(fn(1.0 - _GAPS), dtype=float)
    i = int(np.argmax(values))
    if values[i] > best_v:
        best_a, best_v = float(1.0 - _GAPS[i]), float(values[i])
    lo = math.log(_GAPS[min(i + 1, len(_GAPS) - 1)])
    hi = math.log(_GAPS[max(i - 1, 0)])
    if hi > lo:
        s, v = golden_section_max(lambda s: float(fn(1.0 - math.exp(s))), lo, hi, tol.refine_iter)
        if v > best_v:
            best_a, best_v = 1.0 - math.exp(s), v

    end = float(fn(1.0))
    if end > best_v:
        best_a, best_v = 1.0, end
    return best_a, best_v


def _exploratory(th: Theorem, params: TheoremParams, r: float) -> bool:
    if th is Theorem.T31:
        return sharp_radius(th, params).region == "outside"
    if th is Theorem.T34:
        return r > sharp_radius(th, params).value
    return False


def check_holds(theorem, params: TheoremParams, r: float, kind=FunctionalKind.MAJORANT,
                tol: ToleranceConfig = DEFAULT_TOL,
                violation_eps: float = VIOLATION_EPS) -> VerificationReport:
    """Supremum over ``a`` of the chosen functional at radius ``r``, with a verdict.

    ``holds`` means the supremum is at most ``1 + violation_eps``.  Pairs
    outside the proven regions, and the derivative-sum convex combination
    above its radius, are reported as ``exploratory`` instead.
    """
    th = _check(theorem, params, r)
    kind = FunctionalKind.parse(kind)
    fn = functional_closure(kind, th, params, r)
    argmax_a, sup_value = sup_over_a(fn, tol)
    if _exploratory(th, params, r):
        verdict = "exploratory"
    elif sup_value <= 1 + violation_eps:
        verdict = "holds"
    else:
        verdict = "violated"
    return VerificationReport(th, params, r, kind, sup_value, argmax_a, verdict,
                              1 - sup_value, violation_eps)


def sharpness_witness(theorem, params: TheoremParams, r: float,
                      tol: ToleranceConfig = DEFAULT_TOL,
                      violation_eps: float = VIOLATION_EPS) -> WitnessResult:
    """Search for a Moebius parameter ``a`` whose extremal value exceeds 1 at ``r``."""
    th = _check(theorem, params, r)
    fn = functional_closure(FunctionalKind.EXTREMAL, th, params, r)
    a, value = sup_over_a(fn, tol)
    found = value > 1 + violation_eps
    exploratory = _exploratory(th, params, r) or th is Theorem.T34
    return WitnessResult(th, params, r, found, a if found else None,
                         value - 1 if found else None, value, a, exploratory)


def empirical_radius(theorem, params: TheoremParams, tol: float = 1e-6,
                     tol_config: ToleranceConfig = DEFAULT_TOL,
                     violation_eps: float = VIOLATION_EPS,
                     scan_points: int = SCAN_POINTS) -> float:
    """Smallest ``r`` at which a sharpness witness appears, found numerically.

    A uniform scan over the radius domain must show the witness predicate
    switching exactly once, from absent to present; that transition is then
    bisected down to width ``tol``.  Any other pattern raises
    NonMonotonePredicate rather than bisecting blindly.
    """
    th = Theorem.parse(theorem)
    if th is Theorem.T12:
        raise InvalidParams("no functionals are defined for the lacunary theorem")
    if th is Theorem.T31 and sharp_radius(th, params).region == "outside":
        raise InvalidParams("empirical radius needs (p, lam) in region I or II")
    _, r_max, _ = functional_domain(th, params)

    def violated(r):
        return sharpness_witness(th, params, r, tol_config, violation_eps).found

    rs = r_max * np.arange(scan_points) / scan_points
    flags = [violated(float(r)) for r in rs]
    transitions = [float(rs[i]) for i in range(1, len(flags)) if flags[i] != flags[i - 1]]
    if flags[0] or len(transitions) != 1:
        raise NonMonotonePredicate(
            f"violation predicate over r in [0, {r_max}) is not a single "
            f"absent-to-present switch (starts {'present' if flags[0] else 'absent'}, "
            f"{len(transitions)} transitions)", transitions)

    i = flags.index(True)
    lo, hi = float(rs[i - 1]), float(rs[i])
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if violated(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


# -- lemma property suites -------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)
    note: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checked} checks"
        if self.failures:
            text += f", {len(self.failures)} failures (first: {self.failures[0]})"
        if self.note:
            text += f" [{self.note}]"
        return text


@dataclass
class LemmaReport:
    grid_n: int
    suites: list

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def lines(self) -> list[str]:
        return [s.line() for s in self.suites]


def _monotone_phi_suite(n: int) -> SuiteResult:
    """x^p + A(1 - x^2) strictly increasing on [0, 1) for p in (0, 2], A in (0, p/2]."""
    xs = np.arange(n) / n
    failures, checked = [], 0
    for i in range(1, n + 1):
        p = 2 * i / n
        for j in range(1, n + 1):
            A = (p / 2) * j / n
            diffs = np.diff(np.power(xs, p) + A * (1 - xs * xs))
            checked += len(diffs)
            if p == 2 and j == n:
                # p = 2, A = 1 makes the function identically 1.
                bad = np.abs(diffs) > 1e-15
            else:
                bad = diffs <= 0
            if bad.any():
                k = int(np.argmax(bad))
                failures.append((p, A, float(xs[k]), float(diffs[k])))
    return SuiteResult("lemma2.3 monotone x^p + A(1-x^2)", not failures, checked, failures,
                       "p=2, A=1 is constant and checked for flatness")


def _power_mean_suite(n: int) -> SuiteResult:
    """alpha-power mean value inequalities on x >= y > 0 in (0, 10]."""
    grid = 10 * np.arange(1, n + 1) / n
    x, y = np.meshgrid(grid, grid, indexing="ij")
    mask = x >= y
    x, y = x[mask], y[mask]
    failures, checked = [], 0
    for i in range(1, n + 1):
        for alpha, lhs_base, label in ((i / n, x, "2.1"), (1 + 3 * i / n, y, "2.2")):
            lhs = alpha * np.power(lhs_base, alpha - 1) * (x - y)
            rhs = np.power(x, alpha) - np.power(y, alpha)
            slack = 1e-12 * np.maximum(1.0, np.power(x, alpha))
            bad = lhs > rhs + slack
            checked += lhs.size
            if bad.any():
                k = int(np.argmax(bad))
                failures.append((label, alpha, float(x[k]), float(y[k])))
    return SuiteResult("lemma2.5 power mean value bounds", not failures, checked, failures)


def _branch_order_suite(n: int) -> SuiteResult:
    ts_ = tstar()
    samples = [i / (n + 1) for i in range(1, n + 1)] + [ts_ - 1e-3, ts_ + 1e-3]
    failures = []
    for t in samples:
        r1, r2 = lemma26_branch_radii(t)
        if (r1 < r2) != (t < ts_):
            failures.append((t, r1, r2))
    return SuiteResult("lemma2.6 branch radius ordering", not failures, len(samples), failures)


def _coefficient_bound_suite(n: int) -> SuiteResult:
    failures, checked = [], 0
    for i in range(n):
        a = i / n
        moduli = moebius_coefficients(a, n).moduli
        bound = 1 - a * a
        if moduli[1] != bound:
            failures.append(("k=1 equality", a, moduli[1], bound))
        for k in range(1, n + 1):
            checked += 1
            if moduli[k] > bound or (k >= 2 and a > 0 and not moduli[k] < bound):
                failures.append(("bound", a, k, moduli[k]))
    return SuiteResult("lemma2.2 coefficient bound on Moebius family", not failures,
                       checked, failures)


def _derivative_bound_suite(n: int, kmax: int = 10) -> SuiteResult:
    failures, checked = [], 0
    grid = np.arange(n) / n
    for a in grid:
        for r in grid:
            m = abs(a - r) / (1 - a * r)
            for k in range(1, kmax + 1):
                lhs = float(moebius_derivative_modulus(float(a), k, float(r)))
                rhs = derivative_bound(k, float(r), min(float(m), 1.0))
                checked += 1
                scale = max(1.0, rhs)
                if lhs > rhs + 1e-12 * scale:
                    failures.append(("bound", float(a), float(r), k))
                if k == 1 and abs(lhs - rhs) > 1e-12 * scale:
                    failures.append(("k=1 equality", float(a), float(r), lhs - rhs))
    return SuiteResult("lemma2.4 derivative bound on Moebius family", not failures,
                       checked, failures)


def lemma_suite(grid_n: int = 64) -> LemmaReport:
    """Run the five lemma property suites on grids of ``grid_n`` points per axis."""
    if grid_n < 16:
        raise ValueError(f"grid_n must be >= 16, got {grid_n}")
    suites = [
        _coefficient_bound_suite(grid_n),
        _monotone_phi_suite(grid_n),
        _derivative_bound_suite(grid_n),
        _power_mean_suite(grid_n),
        _branch_order_suite(grid_n),
    ]
    return LemmaReport(grid_n, suites)
