"""Critical-line zeta evaluation, zero location, and zero-counting statistics.

The central object is the real-valued function

    Z(t) = exp(i*theta(t)) * zeta(1/2 + i*t),

whose sign changes mark the zeros of zeta on the critical line.  Here
theta is the phase

    theta(t) = Im ln Gamma(1/4 + i*t/2) - (t/2) ln pi,

computed from the Stirling series after a recurrence shift.  Z itself is
evaluated by truncated Euler-Maclaurin summation at low heights (cheap
and certifiable there) and by the main sum of the Riemann-Siegel
expansion plus its first two correction terms above a fixed crossover
height; the crossover is t = 30.

Zeros are located by a uniform-stride sign-change scan refined by plain
bisection.  The scan audits itself against the counting formula

    N(T) ~ (T/2pi) ln(T/2pi) - T/2pi + 7/8

and retries with a halved stride when the audit detects a shortfall
(close pairs of zeros can hide inside one stride cell).  All heights are
limited to t <= 1e4 and tolerances to >= 1e-8: that is the regime where
plain double precision keeps every promise made here.
"""

from __future__ import annotations

import math
import numbers
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.chebyshev import Chebyshev

from .errors import AuditError, DomainError, PrecisionError

__all__ = [
    "CriticalLineSample",
    "ZeroTable",
    "ZeroEntry",
    "ZeroCountEstimate",
    "theta",
    "z_function",
    "scan_zeros",
    "count_zeros",
    "gamma_asymptotic",
    "zero_table_to_csv",
]

TWO_PI = 2.0 * math.pi
LN_PI = math.log(math.pi)
LN_2PI = math.log(TWO_PI)

# Supported precision regime: double precision keeps the error model
# honest only for heights up to 1e4 and tolerances down to 1e-8.
T_SUPPORT_MAX = 1.0e4
TOL_SUPPORT_MIN = 1.0e-8

# Evaluation crossover: Euler-Maclaurin below, Riemann-Siegel above.
CROSSOVER_T = 30.0

# Zero-scan stride schedule.  Mean zero spacing 2pi/ln(T/2pi) stays
# above 0.5 for t <= 1e5, so 0.25 resolves typical spacings and the
# halving handles close pairs.
STRIDE_INITIAL = 0.25
STRIDE_FLOOR = 1.0 / 1024.0

# Bernoulli numbers B_2, B_4, ..., B_16.
_BERN2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)

# B_2k / (2k)! for the Euler-Maclaurin tail, k = 1..8; B_18 feeds the
# truncation bound on the first omitted term.
_EM_COEF = tuple(
    b / math.factorial(2 * (k + 1)) for k, b in enumerate(_BERN2K)
)
_BERN_18 = 43867.0 / 798.0

_STIRLING_SHIFT = 12  # ln Gamma recurrence shift before the series


# ----------------------------------------------------------------------
# Domain types
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CriticalLineSample:
    """One evaluation of Z on the critical line.

    method records which path produced the value ("euler_maclaurin" or
    "riemann_siegel"); est_abs_error is a positive bound on |error|.
    """

    t: float
    z_value: float
    theta_value: float
    method: str
    est_abs_error: float


@dataclass(frozen=True)
class ZeroEntry:
    """One located zero: global index, refined height, final bracket."""

    n: int
    gamma: float
    bracket_lo: float
    bracket_hi: float
    refined_tol: float


@dataclass(frozen=True)
class ZeroTable:
    """Ordered zeros with bracketing metadata, up to height t_max."""

    zeros: tuple[ZeroEntry, ...]
    t_max: float


@dataclass(frozen=True)
class ZeroCountEstimate:
    """Counting-formula value N(T) split into main term and correction,
    plus the local density D(T) = ln(T/2pi) / 2pi."""

    t: float
    n_main: float
    n_correction: float
    n_estimate: float
    density: float


# ----------------------------------------------------------------------
# theta(t): Stirling series for Im ln Gamma(1/4 + i t/2)
# ----------------------------------------------------------------------

def _log_gamma_imag(z: np.ndarray) -> np.ndarray:
    """Im ln Gamma(z) for complex z with Re z > 0, elementwise.

    Shift z by the recurrence ln Gamma(z) = ln Gamma(z+s) - sum ln(z+k)
    so the asymptotic series runs at |z+s| >= 12, where eight Bernoulli
    terms reach double-precision accuracy.
    """
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for k in range(_STIRLING_SHIFT):
        acc += np.log(z + k)
    zs = z + _STIRLING_SHIFT
    series = np.zeros_like(z)
    zpow = zs.copy()
    z2 = zs * zs
    for k, b in enumerate(_BERN2K, start=1):
        series += b / ((2 * k) * (2 * k - 1) * zpow)
        zpow = zpow * z2
    total = (zs - 0.5) * np.log(zs) - zs + 0.5 * LN_2PI + series - acc
    return total.imag


def _theta_vec(ts: np.ndarray) -> np.ndarray:
    """theta on an array of non-negative heights."""
    z = 0.25 + 0.5j * ts
    return _log_gamma_imag(z) - 0.5 * ts * LN_PI


def theta(t: float) -> float:
    """Riemann-Siegel theta, theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi.

    Odd in t.  Raises PrecisionError outside the supported height range.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("theta: height must be finite")
    if abs(t) > T_SUPPORT_MAX:
        raise PrecisionError(
            f"theta: |t| = {abs(t):g} exceeds supported height {T_SUPPORT_MAX:g}"
        )
    if t < 0.0:
        return -theta(-t)
    return float(_theta_vec(np.array([t]))[0])


# ----------------------------------------------------------------------
# Euler-Maclaurin evaluation of zeta(1/2 + it), t below the crossover
# ----------------------------------------------------------------------

def _em_order(t: float) -> int:
    """Truncation point N of the Euler-Maclaurin sum at height t."""
    return max(20, int(math.ceil(1.2 * t + 10.0)))


def _zeta_em_group(ts: np.ndarray, n_terms: int) -> tuple[np.ndarray, np.ndarray]:
    """zeta(1/2 + i ts) by Euler-Maclaurin with a shared truncation N.

    Returns (values, truncation bounds).  The remainder after the k = K
    tail term is bounded by |next term| * |s + 2K + 1| / (sigma + 2K + 1).
    """
    s = 0.5 + 1j * ts
    ns = np.arange(1, n_terms)
    # sum n^{-s} = n^{-1/2} e^{-i t ln n}
    phases = np.exp(-1j * np.outer(ts, np.log(ns)))
    partial = phases @ (1.0 / np.sqrt(ns)).astype(complex)
    n_pow = float(n_terms) ** (-s)  # N^{-s}
    value = partial + 0.5 * n_pow + n_pow * n_terms / (s - 1.0)

    # Tail: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    rising = s.copy()
    q = n_pow / n_terms  # N^{-s-1}
    n_inv2 = 1.0 / (n_terms * n_terms)
    for k, coef in enumerate(_EM_COEF, start=1):
        if k > 1:
            rising = rising * (s + (2 * k - 3)) * (s + (2 * k - 2))
        value = value + coef * rising * q
        q = q * n_inv2

    k_next = len(_EM_COEF) + 1  # first omitted tail index; needs B_18
    rising_next = rising * (s + (2 * k_next - 3)) * (s + (2 * k_next - 2))
    coef_next = _BERN_18 / math.factorial(2 * k_next)
    first_omitted = abs(coef_next) * np.abs(rising_next) * np.abs(q)
    bound = first_omitted * np.abs(s + (2 * k_next - 1)) / (0.5 + 2 * k_next - 1)
    return value, bound


def _z_em_vec(ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Z(t) below the crossover, with error estimates, grouped by N."""
    vals = np.empty_like(ts)
    errs = np.empty_like(ts)
    orders = np.array([_em_order(t) for t in ts])
    th = _theta_vec(ts)
    for n_terms in np.unique(orders):
        m = orders == n_terms
        zeta_vals, bounds = _zeta_em_group(ts[m], int(n_terms))
        vals[m] = (np.exp(1j * th[m]) * zeta_vals).real
        # Truncation bound plus a rounding floor for the ~N-term sums.
        errs[m] = bounds + 1.0e-13
    return vals, errs


# ----------------------------------------------------------------------
# Riemann-Siegel evaluation, t at or above the crossover
# ----------------------------------------------------------------------

def _psi_ref(p: float) -> float:
    """Psi(p) = cos(2pi(p^2 - p - 1/16)) / cos(2pi p).

    Entire in p: the zeros of the denominator at p = 1/4, 3/4 are
    cancelled by the numerator; the removable points are handled by
    one l'Hopital step if a sample lands exactly on them.
    """
    c = math.cos(TWO_PI * p)
    if abs(c) < 1.0e-12:
        return ((2.0 * p - 1.0) * math.sin(TWO_PI * (p * p - p - 0.0625))
                / math.sin(TWO_PI * p))
    return math.cos(TWO_PI * (p * p - p - 0.0625)) / c


# Degree-64 Chebyshev interpolant of Psi on [0, 1].  The first-kind
# nodes never coincide with the removable singularities, and the
# derivative needed for the second correction term comes from the
# interpolant, which is accurate to ~1e-13 across the interval.
_PSI = Chebyshev.interpolate(np.vectorize(_psi_ref), 64, domain=[0.0, 1.0])
_PSI3 = _PSI.deriv(3)

_RS_ERR_COEF = 0.02  # measured: |error| <= 0.005 * a^{-5/2}; 4x margin


def _z_rs_vec(ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Z(t) by the Riemann-Siegel main sum plus two correction terms.

    With a = sqrt(t/2pi), N = floor(a), p = a - N:

        Z(t) ~ 2 sum_{n<=N} cos(theta(t) - t ln n)/sqrt(n)
               + (-1)^{N-1} a^{-1/2} [ Psi(p) - Psi'''(p)/(96 pi^2 a) ].
    """
    a = np.sqrt(ts / TWO_PI)
    big_n = np.floor(a).astype(int)
    p = a - big_n
    th = _theta_vec(ts)

    vals = np.empty_like(ts)
    for n_terms in np.unique(big_n):
        m = big_n == n_terms
        ns = np.arange(1, n_terms + 1)
        phases = np.cos(th[m, None] - ts[m, None] * np.log(ns)[None, :])
        vals[m] = 2.0 * (phases @ (1.0 / np.sqrt(ns)))

    c0 = _PSI(p)
    c1 = -_PSI3(p) / (96.0 * math.pi ** 2)
    sign = np.where(big_n % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
    corr = sign * (c0 + c1 / a) / np.sqrt(a)
    vals = vals + corr
    errs = _RS_ERR_COEF * a ** (-2.5) + 1.0e-11
    return vals, errs


def _z_values(ts: np.ndarray) -> np.ndarray:
    """Z on an array of heights in [0, T_SUPPORT_MAX]; values only."""
    ts = np.asarray(ts, dtype=float)
    vals = np.empty_like(ts)
    low = ts < CROSSOVER_T
    if low.any():
        vals[low] = _z_em_vec(ts[low])[0]
    if (~low).any():
        vals[~low] = _z_rs_vec(ts[~low])[0]
    return vals


def z_function(t: float, tol: float) -> CriticalLineSample:
    """Evaluate Z(t) with a certified absolute error bound <= tol.

    Dispatches to Euler-Maclaurin below t = 30 and Riemann-Siegel above.
    Even in t (Z(-t) = Z(t)), so negative heights are served through
    their absolute value; theta_value keeps its odd sign.  Raises
    PrecisionError when the tolerance is unreachable at this height
    with the configured term counts: the Euler-Maclaurin floor sits
    near 1e-13, the Riemann-Siegel truncation near 0.02 (t/2pi)^{-5/4},
    so tight tolerances are only servable below the crossover.
    """
    t = float(t)
    tol = float(tol)
    if not math.isfinite(t):
        raise DomainError("z_function: height must be finite")
    if not tol > 0.0:
        raise DomainError("z_function: tol must be positive")
    if abs(t) > T_SUPPORT_MAX:
        raise PrecisionError(
            f"z_function: |t| = {abs(t):g} exceeds supported height {T_SUPPORT_MAX:g}"
        )
    at = abs(t)
    arr = np.array([at])
    if at < CROSSOVER_T:
        vals, errs = _z_em_vec(arr)
        method = "euler_maclaurin"
    else:
        vals, errs = _z_rs_vec(arr)
        method = "riemann_siegel"
    est = float(errs[0])
    if est > tol:
        raise PrecisionError(
            f"z_function: reachable error {est:.3e} at t = {t:g} exceeds tol = {tol:g}"
        )
    return CriticalLineSample(
        t=t,
        z_value=float(vals[0]),
        theta_value=theta(t),
        method=method,
        est_abs_error=est,
    )


# ----------------------------------------------------------------------
# Counting formula and zero-height asymptote
# ----------------------------------------------------------------------

def count_zeros(t: float, *, n_correction: float = 7.0 / 8.0) -> ZeroCountEstimate:
    """Counting-formula estimate N(T) = (T/2pi) ln(T/2pi) - T/2pi + c.

    The constant correction defaults to c = 7/8, which makes the scan
    audit tight at these heights; pass n_correction=0.0 for the bare
    main term.  Also returns the density D(T) = ln(T/2pi) / 2pi.
    """
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError("count_zeros: height must be finite and positive")
    u = t / TWO_PI
    log_u = math.log(u)
    n_main = u * log_u - u
    if not math.isfinite(n_main):
        raise DomainError("count_zeros: counting formula overflowed")
    return ZeroCountEstimate(
        t=t,
        n_main=n_main,
        n_correction=float(n_correction),
        n_estimate=n_main + float(n_correction),
        density=log_u / TWO_PI,
    )


def gamma_asymptotic(n: int) -> float:
    """Asymptotic height of the n-th zero, 2 pi n / ln(n/2pi).

    Meaningful only once the logarithm is positive, which needs n >= 7;
    smaller n raise DomainError.
    """
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError("gamma_asymptotic: n must be a positive integer")
    n = int(n)
    if n <= 6:
        raise DomainError(
            f"gamma_asymptotic: n = {n} has n/2pi <= 1, logarithm not positive"
        )
    return TWO_PI * n / math.log(n / TWO_PI)


# ----------------------------------------------------------------------
# Zero scan
# ----------------------------------------------------------------------

def _z_values_chunk(ts: np.ndarray) -> np.ndarray:
    # Module-level so process pools can pickle it.
    return _z_values(ts)


def _grid_values(ts: np.ndarray, workers: int) -> np.ndarray:
    if workers > 1 and ts.size >= 4096:
        chunks = np.array_split(ts, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_z_values_chunk, chunks))
        return np.concatenate(parts)
    return _z_values(ts)


def _collect_brackets(
    t_max: float, stride: float, workers: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Sign-change cells of Z on the uniform grid covering (0, t_max].

    Returns (lo, hi, z_lo) arrays for every cell with a sign change.
    """
    n_cells = int(math.ceil(t_max / stride))
    ts = stride * np.arange(n_cells + 1)
    ts[-1] = min(ts[-1], t_max)
    vals = _grid_values(ts, workers)
    exact = vals == 0.0
    if exact.any():
        # A grid sample landing exactly on a zero would break the
        # sign-change bookkeeping; nudge such samples by stride/1e6
        # (inward at the top edge) and re-evaluate.
        ts = ts.copy()
        shift = stride * 1.0e-6
        ts[exact] += shift
        if exact[-1]:
            ts[-1] = t_max - shift
        vals = vals.copy()
        vals[exact] = _z_values(ts[exact])
    change = vals[:-1] * vals[1:] < 0.0
    idx = np.nonzero(change)[0]
    return ts[idx], ts[idx + 1], vals[idx]


def _refine_brackets(
    lo: np.ndarray, hi: np.ndarray, z_lo: np.ndarray, tol: float
) -> tuple[np.ndarray, np.ndarray]:
    """Bisect every bracket until its width is <= tol (batched)."""
    lo = lo.copy()
    hi = hi.copy()
    z_lo = z_lo.copy()
    while True:
        active = (hi - lo) > tol
        if not active.any():
            return lo, hi
        mid = 0.5 * (lo[active] + hi[active])
        fm = _z_values(mid)
        exact = fm == 0.0
        if exact.any():
            # Re-pick the 3/4 point of the cell rather than storing a
            # zero endpoint; keeps both endpoint signs strict.
            mid = mid.copy()
            sub = np.nonzero(active)[0][exact]
            mid[exact] = lo[sub] + 0.75 * (hi[sub] - lo[sub])
            fm[exact] = _z_values(mid[exact])
        below = z_lo[active] * fm < 0.0
        idx = np.nonzero(active)[0]
        hi_idx = idx[below]
        lo_idx = idx[~below]
        hi[hi_idx] = mid[below]
        lo[lo_idx] = mid[~below]
        z_lo[lo_idx] = fm[~below]


def scan_zeros(
    t_min: float,
    t_max: float,
    tol: float,
    *,
    initial_stride: float = STRIDE_INITIAL,
    workers: int = 1,
) -> ZeroTable:
    """Locate every sign-change zero of Z in (t_min, t_max].

    The scan always covers (0, t_max] internally so indices n are global
    counts from t = 0; entries below t_min are dropped from the output
    only after indexing.  After the grid pass, the zero count over
    (0, t_max] is audited against the counting formula: a discrepancy
    beyond 1 (the formula itself oscillates by about that much) means
    close pairs were missed, and the scan retries with the stride
    halved, down to a floor of 1/1024.  Each surviving bracket is then
    refined by plain bisection to width <= tol.

    Disjoint upper ranges may be scanned in separate calls or processes
    and merged by sorting; grid values are pure functions of t, so the
    result is deterministic regardless of partitioning.  workers > 1
    parallelizes the grid pass across that many processes.
    """
    t_min = float(t_min)
    t_max = float(t_max)
    tol = float(tol)
    if not (0.0 <= t_min < t_max):
        raise DomainError("scan_zeros: need 0 <= t_min < t_max")
    if not tol > 0.0:
        raise DomainError("scan_zeros: tol must be positive")
    if tol < TOL_SUPPORT_MIN:
        raise PrecisionError(
            f"scan_zeros: tol = {tol:g} below supported minimum {TOL_SUPPORT_MIN:g}"
        )
    if t_max > T_SUPPORT_MAX:
        raise PrecisionError(
            f"scan_zeros: t_max = {t_max:g} exceeds supported height {T_SUPPORT_MAX:g}"
        )
    if not (0.0 < initial_stride <= 1.0):
        raise DomainError("scan_zeros: initial_stride must lie in (0, 1]")
    workers = int(workers)
    if workers < 1:
        raise DomainError("scan_zeros: workers must be a positive integer")

    target = round(count_zeros(t_max).n_estimate)
    stride = float(initial_stride)
    while True:
        lo, hi, z_lo = _collect_brackets(t_max, stride, workers)
        if abs(len(lo) - target) <= 1:
            break
        if stride <= STRIDE_FLOOR:
            raise AuditError(
                f"scan_zeros: found {len(lo)} zeros below t = {t_max:g} but the "
                f"counting formula expects {target}; stride floor "
                f"{STRIDE_FLOOR:g} reached"
            )
        stride *= 0.5

    lo, hi = _refine_brackets(lo, hi, z_lo, tol)
    gammas = 0.5 * (lo + hi)
    entries = tuple(
        ZeroEntry(
            n=i + 1,
            gamma=float(gammas[i]),
            bracket_lo=float(lo[i]),
            bracket_hi=float(hi[i]),
            refined_tol=tol,
        )
        for i in range(len(gammas))
        if gammas[i] > t_min
    )
    return ZeroTable(zeros=entries, t_max=t_max)


# ----------------------------------------------------------------------
# Serialization (text only; file handling lives in the cli module)
# ----------------------------------------------------------------------

def zero_table_to_csv(table: ZeroTable) -> str:
    """ZeroTable as CSV with header n,gamma,bracket_lo,bracket_hi.

    Full double precision (17 significant digits), '.' radix, newline
    line ends.
    """
    lines = ["n,gamma,bracket_lo,bracket_hi"]
    for entry in table.zeros:
        lines.append(
            f"{entry.n},{entry.gamma:.17g},{entry.bracket_lo:.17g},{entry.bracket_hi:.17g}"
        )
    return "\n".join(lines) + "\n"
