"""Sharp Bohr-type radii for bounded analytic functions on the unit disk.

Closed-form radii, their defining equations, the majorant and extremal
functionals over the Moebius family, and numerical checks of both the
inequalities and the sharpness of each radius.
"""

from .errors import (BohrError, DomainError, InvalidCoefficients, InvalidParams,
                     MaxIterExceeded, NonMonotonePredicate, NoSignChange, ParseError)
from .functionals import (FunctionalKind, extremal_value, functional_domain,
                          majorant_value)
from .numerics import (DEFAULT_TOL, Bracket, ToleranceConfig, find_root,
                       maximize_on_interval, stable_quadratic_root)
from .radii import (RadiusResult, Theorem, TheoremParams, classify_region,
                    defining_value, lemma26_branch_radii, literal_radius,
                    radius_value, sharp_radius, tstar)
from .series import (CoefficientSeries, MoebiusFamily, bohr_partial_sum,
                     derivative_bound, load_series, moebius_coefficients,
                     moebius_tail_closed, schwarz_pick_majorant,
                     weighted_derivative_tail)
from .verify import (VIOLATION_EPS, VerificationReport, WitnessResult, check_holds,
                     empirical_radius, lemma_suite, sharpness_witness)

__version__ = "0.1.0"
