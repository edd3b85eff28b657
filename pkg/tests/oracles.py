"""Independent numerical oracles used only by the test suite.

Each oracle reaches a quantity the library also computes, but through a
different route, so agreement is evidence rather than tautology:

- theta_oracle: the log-gamma phase through Binet's integral
  representation (adaptive quadrature), instead of the Stirling series.
- zeta_oracle: Euler-Maclaurin again, but with its own truncation
  point and ten tail terms instead of eight, implemented on complex
  scalars rather than numpy arrays.
- pi_momentum_oracle: the bubble as a literal 2D momentum integral in
  polar coordinates -- fixed high-order angular rule, adaptive radial
  quadrature -- instead of the Feynman-parameter form.
- tadpole_oracle: the gap-equation tadpole by adaptive quadrature.
"""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy.integrate import quad

TWO_PI = 2.0 * math.pi
LN_2PI = math.log(TWO_PI)

# ----------------------------------------------------------------------
# theta via Binet's second integral:
# ln Gamma(z) = (z - 1/2) ln z - z + ln(2pi)/2
#               + 2 Int_0^inf arctan(u/z) / (e^{2 pi u} - 1) du
# ----------------------------------------------------------------------

def theta_oracle(t: float) -> float:
    """theta(t) from Binet's integral for Im ln Gamma(1/4 + it/2)."""
    z = 0.25 + 0.5j * t

    def integrand(u: float) -> float:
        return (cmath.atan(u / z)).imag / math.expm1(TWO_PI * u)

    # Integrand decays like e^{-2 pi u}; by u = 40 it is below 1e-100.
    tail, _ = quad(integrand, 0.0, 40.0, epsabs=1.0e-14, epsrel=1.0e-12,
                   limit=400)
    main = ((z - 0.5) * cmath.log(z) - z).imag
    return main + 2.0 * tail - 0.5 * t * math.log(math.pi)


# ----------------------------------------------------------------------
# Independent Euler-Maclaurin zeta(1/2 + it)
# ----------------------------------------------------------------------

# B_2 .. B_20 over (2k)!, k = 1..10: deliberately two more tail terms
# and a different truncation point than the library uses.
_BERN = [
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0,
]
_COEF = [b / math.factorial(2 * (k + 1)) for k, b in enumerate(_BERN)]


def zeta_oracle(t: float) -> tuple[complex, float]:
    """zeta(1/2 + it) with a truncation-error bound, by Euler-Maclaurin.

    Truncation N = max(32, ceil(2.5 t) + 16) and K = 10 tail terms.
    Returns (value, bound); the bound covers truncation only, so allow
    a few 1e-13 on top for rounding when comparing.
    """
    s = 0.5 + 1j * t
    big_n = max(32, math.ceil(2.5 * t) + 16)
    value = 0.0 + 0.0j
    for n in range(1, big_n):
        value += cmath.exp(-s * math.log(n))
    n_pow = cmath.exp(-s * math.log(big_n))  # N^{-s}
    value += 0.5 * n_pow + n_pow * big_n / (s - 1.0)

    rising = s
    q = n_pow / big_n
    inv_n2 = 1.0 / (big_n * big_n)
    for k, coef in enumerate(_COEF, start=1):
        if k > 1:
            rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2))
        value += coef * rising * q
        q *= inv_n2

    k_next = len(_COEF) + 1  # bound the first omitted term with B_22
    rising_next = rising * (s + (2 * k_next - 3)) * (s + (2 * k_next - 2))
    bern_22 = 854513.0 / 138.0
    first_omitted = abs(bern_22 / math.factorial(22)) * abs(rising_next) * abs(q)
    bound = first_omitted * abs(s + (2 * k_next - 1)) / (0.5 + 2 * k_next - 1)
    return value, bound


def z_oracle(t: float) -> tuple[float, float]:
    """Z(t) from zeta_oracle and the library-independent phase here."""
    value, bound = zeta_oracle(t)
    phase = cmath.exp(1j * theta_oracle(t))
    return (phase * value).real, bound + 1.0e-12


# ----------------------------------------------------------------------
# Bubble as a direct 2D momentum integral (polar coordinates)
# ----------------------------------------------------------------------

# Fixed 192-point Gauss-Legendre rule on [0, pi] for the angular
# integral; the phi-integrand is analytic and even about pi, so the
# half-range doubled is exact in the limit and the fixed order keeps
# the oracle free of any shared adaptive machinery on the angle.
_ANG_NODES, _ANG_WEIGHTS = np.polynomial.legendre.leggauss(192)
_PHI = 0.5 * math.pi * (_ANG_NODES + 1.0)
_PHI_W = 0.5 * math.pi * _ANG_WEIGHTS


def _angular(r: float, p: float, m2: float) -> float:
    """Int_0^{2pi} dphi / ((r^2+m^2)((r+p)^2 ... )) at fixed radius."""
    a = r * r + p * p + m2
    b = 2.0 * p * r
    vals = 1.0 / (a + b * np.cos(_PHI))
    return 2.0 * float(_PHI_W @ vals) / (r * r + m2)


def pi_momentum_oracle(p: float, m: float) -> float:
    """Pi(p) = Int d^2q/(2pi)^2 [ (q^2+m^2)((q+p)^2+m^2) ]^{-1}.

    Angular integral by the fixed rule above, radial integral adaptive
    and truncated where the integrand falls below 1e-16 of its peak
    (the tail decays like 1/r^3).
    """
    m2 = m * m

    def radial(r: float) -> float:
        return r * _angular(r, p, m2)

    # All structure lives below r ~ p + m; beyond that the integrand
    # decays like 2pi/r^3.  A single adaptive pass over one huge
    # interval loses the peak region, so integrate the two regimes
    # separately and cut the tail where it falls below 1e-16 of the
    # peak value.
    r_mid = 10.0 * (p + m)
    peak = radial(max(p, m))
    r_cut = max(10.0 * r_mid, (TWO_PI / (1.0e-16 * peak)) ** (1.0 / 3.0))
    head, _ = quad(radial, 0.0, r_mid, epsabs=0.0, epsrel=1.0e-10,
                   limit=400, points=[m, p, p + m])
    tail, _ = quad(radial, r_mid, r_cut, epsabs=0.0, epsrel=1.0e-10,
                   limit=400)
    return (head + tail) / (TWO_PI * TWO_PI)


def pi_zero_momentum_oracle(m: float) -> float:
    """The p = 0 bubble Int d^2q/(2pi)^2 (q^2+m^2)^{-2}, radial quad.

    The tail beyond the truncation radius R integrates exactly to
    1/(2(R^2+m^2)), so quadrature error is the only approximation.
    """
    m2 = m * m
    r_cut = 1.0e4 * m
    total, _ = quad(lambda r: r / (r * r + m2) ** 2, 0.0, r_cut,
                    epsabs=0.0, epsrel=1.0e-10, limit=200)
    total += 0.5 / (r_cut * r_cut + m2)
    return total / TWO_PI


# ----------------------------------------------------------------------
# Gap-equation tadpole
# ----------------------------------------------------------------------

def tadpole_oracle(m2: float, cutoff: float) -> float:
    """G = (1/2pi) Int_0^Lambda r dr / (r^2 + m2) by quadrature."""
    total, _ = quad(lambda r: r / (r * r + m2), 0.0, cutoff,
                    epsabs=0.0, epsrel=1.0e-10, limit=200)
    return total / TWO_PI
