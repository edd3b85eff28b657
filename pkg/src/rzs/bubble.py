"""One-loop polarization of the 2D O(N) non-linear sigma model.

At leading order in 1/N the Lagrange-multiplier fluctuation propagates
with inverse propagator Pi(p), the one-loop two-propagator bubble

    Pi(p) = (1 / (2 pi f(m/p) p^2)) * ln[(1 + f(m/p)) / (f(m/p) - 1)],
    f(x)  = sqrt(1 + 4 x^2),

which is the (alpha, beta) = (1, 1), d = 2 case of the general
Feynman-parameter integral

    I(a, b, d, p) = (4 pi)^{-d/2} (p^2)^{d/2-a-b}
                    * Gamma(a+b-d/2) / (Gamma(a) Gamma(b))
                    * Int_0^1 dx x^{a-1} (1-x)^{b-1}
                      [x(1-x) + m^2/p^2]^{d/2-a-b}.

The correlator of the multiplier field is Pi(p)^{-1}, with the large-t
asymptote 2 pi t / ln(t/m^2) in terms of t = p^2.  The dynamically
generated mass m^2 comes from the saddle-point gap equation; with a
sharp momentum cutoff Lambda on the tadpole it reads

    1/g0^2 = N * (1/4pi) * ln((Lambda^2 + m^2) / m^2).

All quantities are expressed in units of the mass unless both scales
appear (the gap equation), so no unit ambiguity can arise.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from scipy.integrate import quad

from .errors import ConvergenceError, DomainError, NoSolutionError

__all__ = [
    "BubbleSpec",
    "CorrelatorSample",
    "GapEquationSpec",
    "f_kinematic",
    "feynman_integral",
    "pi_closed",
    "pi_at_zero",
    "correlator_sample",
    "gap_mass",
    "gap_residual",
]

TWO_PI = 2.0 * math.pi

# Below this p^2/m^2 the closed form loses accuracy to the ln(1 + small)
# cancellation, so pi_closed switches to a 3-term series around p = 0.
SMALL_P_RATIO = 1.0e-6

# m^2/p^2 below this makes the Feynman-parameter integrand near-singular
# at the endpoints; refuse rather than return garbage.
FEYNMAN_MASS_RATIO_MIN = 1.0e-14

_QUAD_EPSREL = 1.0e-9  # adaptive tolerance on the Feynman x-integral


@dataclass(frozen=True)
class BubbleSpec:
    """Parameters (alpha, beta, dim, p, m) of the integral I(a,b,d,p)."""

    alpha: float
    beta: float
    dim: float
    p: float
    m: float


@dataclass(frozen=True)
class CorrelatorSample:
    """A point (t, Pi, Pi^{-1}, asymptote) at squared momentum t = p^2.

    asymptote is None (the undefined marker) when t <= m2, where the
    logarithm in 2 pi t / ln(t/m^2) is not positive.
    """

    t: float
    pi_value: float
    correlator: float
    asymptote: float | None
    m2: float


@dataclass(frozen=True)
class GapEquationSpec:
    """Gap-equation inputs: coupling g0, component count N, cutoff."""

    coupling: float
    n_components: int
    cutoff: float


def f_kinematic(x: float) -> float:
    """f(x) = sqrt(1 + 4 x^2); even in x, always >= 1."""
    x = float(x)
    return math.sqrt(1.0 + 4.0 * x * x)


def _validate_bubble_spec(spec: BubbleSpec) -> None:
    if not spec.m > 0.0:
        raise DomainError("feynman_integral: m must be positive")
    if spec.p < 0.0:
        raise DomainError("feynman_integral: p must be non-negative")
    if not spec.alpha + spec.beta - spec.dim / 2.0 > 0.0:
        raise DomainError(
            "feynman_integral: need alpha + beta - dim/2 > 0 for the "
            "Gamma prefactor to converge"
        )
    if spec.alpha < 1.0 or spec.beta < 1.0:
        raise DomainError(
            "feynman_integral: exponents below 1 give endpoint-singular "
            "integrands; this implementation restricts to alpha, beta >= 1"
        )


def feynman_integral(spec: BubbleSpec) -> float:
    """General Feynman-parameter form I(alpha, beta, dim, p) at mass m.

    The x-integral runs through adaptive quadrature at relative
    tolerance 1e-9.  p must be strictly positive (the p = 0 limit is
    served by pi_at_zero); m^2/p^2 below 1e-14 is rejected because the
    integrand turns near-singular at the endpoints.
    """
    _validate_bubble_spec(spec)
    if not spec.p > 0.0:
        raise DomainError("feynman_integral: p must be positive (see pi_at_zero)")
    a, b, d = float(spec.alpha), float(spec.beta), float(spec.dim)
    p, m = float(spec.p), float(spec.m)
    mass_ratio = (m * m) / (p * p)
    if mass_ratio < FEYNMAN_MASS_RATIO_MIN:
        raise ConvergenceError(
            f"feynman_integral: m^2/p^2 = {mass_ratio:.3e} below "
            f"{FEYNMAN_MASS_RATIO_MIN:g}; integrand too close to singular"
        )
    power = d / 2.0 - a - b

    def integrand(x: float) -> float:
        return x ** (a - 1.0) * (1.0 - x) ** (b - 1.0) * (
            x * (1.0 - x) + mass_ratio
        ) ** power

    result = quad(integrand, 0.0, 1.0, epsabs=0.0, epsrel=_QUAD_EPSREL,
                  limit=200, full_output=1)
    if len(result) > 3:
        raise ConvergenceError(f"feynman_integral: quadrature failed: {result[3]}")
    integral = result[0]
    prefactor = (
        (4.0 * math.pi) ** (-d / 2.0)
        * (p * p) ** power
        * math.gamma(a + b - d / 2.0)
        / (math.gamma(a) * math.gamma(b))
    )
    return prefactor * integral


def pi_closed(p: float, m: float) -> float:
    """Closed-form bubble Pi(p) for d = 2, alpha = beta = 1.

    Uses the identity (1+f)/(f-1) = ((1+f) p / (2m))^2 so no subtraction
    f - 1 ever happens, and a 3-term series in p^2/(p^2 + 4 m^2) below
    p^2/m^2 = 1e-6 where even the rewritten logarithm loses digits.
    Depends on p only through p^2.
    """
    p = float(p)
    m = float(m)
    if not m > 0.0:
        raise DomainError("pi_closed: m must be positive")
    if p == 0.0 or not math.isfinite(p):
        raise DomainError("pi_closed: p must be nonzero and finite (see pi_at_zero)")
    p = abs(p)
    p2 = p * p
    m2 = m * m
    if p2 / m2 < SMALL_P_RATIO:
        w = p2 / (p2 + 4.0 * m2)
        return (1.0 + w / 3.0 + w * w / 5.0) / (math.pi * (p2 + 4.0 * m2))
    f = f_kinematic(m / p)
    log_ratio = 2.0 * math.log((1.0 + f) * p / (2.0 * m))
    return log_ratio / (TWO_PI * f * p2)


def pi_at_zero(m: float) -> float:
    """The p -> 0 limit of the bubble: Pi(0) = 1 / (4 pi m^2)."""
    m = float(m)
    if not m > 0.0:
        raise DomainError("pi_at_zero: m must be positive")
    return 1.0 / (4.0 * math.pi * m * m)


def correlator_sample(t: float, m2: float) -> CorrelatorSample:
    """Sample the multiplier correlator at squared momentum t.

    pi_value = Pi(sqrt(t)), correlator = 1/pi_value, and the asymptote
    2 pi t / ln(t/m2) is attached when t > m2 (None otherwise, since the
    logarithm is not positive there).
    """
    t = float(t)
    m2 = float(m2)
    if not t > 0.0:
        raise DomainError("correlator_sample: t must be positive")
    if not m2 > 0.0:
        raise DomainError("correlator_sample: m2 must be positive")
    pi_value = pi_closed(math.sqrt(t), math.sqrt(m2))
    asymptote = TWO_PI * t / math.log(t / m2) if t > m2 else None
    return CorrelatorSample(
        t=t,
        pi_value=pi_value,
        correlator=1.0 / pi_value,
        asymptote=asymptote,
        m2=m2,
    )


def _validate_gap_spec(spec: GapEquationSpec) -> None:
    if not spec.coupling > 0.0:
        raise DomainError("gap_mass: coupling must be positive")
    if isinstance(spec.n_components, bool) or not isinstance(
        spec.n_components, numbers.Integral
    ):
        raise DomainError("gap_mass: n_components must be an integer")
    if spec.n_components < 2:
        raise DomainError("gap_mass: need n_components >= 2")
    if not spec.cutoff > 0.0:
        raise DomainError("gap_mass: cutoff must be positive")


def _gap_lhs_minus_rhs(m2: float, spec: GapEquationSpec) -> float:
    """1/g0^2 - N ln(1 + Lambda^2/m^2) / 4pi; increasing in m2."""
    lam2 = spec.cutoff * spec.cutoff
    return (
        1.0 / (spec.coupling * spec.coupling)
        - spec.n_components * math.log1p(lam2 / m2) / (4.0 * math.pi)
    )


def gap_mass(spec: GapEquationSpec) -> float:
    """Solve the cutoff-regularized gap equation for the mass m^2.

        1/g0^2 = N * (1/4pi) * ln((Lambda^2 + m^2) / m^2)

    The root is found by bracketed bisection to 1e-10 relative width.
    Solutions with m^2 > Lambda^2 (which the closed-form inversion
    m^2 = Lambda^2 / (e^{4pi/(N g0^2)} - 1) produces when the exponent
    drops below ln 2) are unphysical at this cutoff and raise
    NoSolutionError rather than being returned silently.
    """
    _validate_gap_spec(spec)
    lam2 = spec.cutoff * spec.cutoff
    exponent = 4.0 * math.pi / (spec.n_components * spec.coupling * spec.coupling)
    try:
        denom = math.expm1(exponent)
    except OverflowError:
        denom = math.inf
    if not math.isfinite(denom) or lam2 / denom == 0.0:
        raise DomainError(
            "gap_mass: mass underflows double precision at this coupling"
        )
    # 1e-12 of slack keeps the boundary case m^2 = Lambda^2 solvable
    # when rounding lands the exponent a hair below ln 2.
    if denom < 1.0 - 1.0e-12:
        raise NoSolutionError(
            f"gap_mass: inverted mass m^2 = {lam2 / denom:.6g} exceeds the "
            f"squared cutoff {lam2:.6g}; no physical solution"
        )

    hi = lam2 * (1.0 + 1.0e-9)
    lo = 0.5 * hi
    while _gap_lhs_minus_rhs(lo, spec) > 0.0:
        lo *= 0.5
    while hi - lo > 1.0e-10 * lo:
        mid = 0.5 * (lo + hi)
        if _gap_lhs_minus_rhs(mid, spec) > 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def gap_residual(spec: GapEquationSpec, m2: float) -> float:
    """|LHS - RHS| of the quadrature-form gap equation at mass m2.

    The tadpole G = (1/2pi) Int_0^Lambda r dr / (r^2 + m2) is evaluated
    by adaptive quadrature (not the closed form), so this is an
    independent back-substitution check on gap_mass.
    """
    _validate_gap_spec(spec)
    if not m2 > 0.0:
        raise DomainError("gap_residual: m2 must be positive")
    tadpole, _ = quad(
        lambda r: r / (r * r + m2), 0.0, spec.cutoff,
        epsabs=0.0, epsrel=_QUAD_EPSREL, limit=200,
    )
    lhs = 1.0 / (spec.coupling * spec.coupling)
    rhs = spec.n_components * tadpole / TWO_PI
    return abs(lhs - rhs)
