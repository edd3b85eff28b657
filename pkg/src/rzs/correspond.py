"""Pairing zeta zeros with the sigma-model correlator at t = n.

Identifying the zero index n with the squared momentum t makes the
correlator asymptote 2 pi t / ln(t/m^2) and the zero-height asymptote
2 pi n / ln(n/2pi) literally the same expression when m^2 = 2 pi.  This
module quantifies how well the computed zeros track the exact
correlator under that identification: one row per n in [7, n_max]
(n <= 6 is excluded because ln(n/2pi) is not positive there), with

    prediction      = 1 / Pi(sqrt(n))   at mass m2,
    asym_prediction = 2 pi n / ln(n/2pi),
    rel_dev         = |gamma_n - prediction| / gamma_n.

The default m^2 = 2 pi is a choice, not a law: it is the unique mass
for which the two asymptotes coincide, and it is configurable.  The
comparison reports deviations without asserting a convergence rate:
the zero-height asymptote converges only logarithmically, and at
accessible n the pointwise deviation is not even monotone (it grows
from n ~ 100 to n ~ 1000 before the asymptotic regime takes over),
which is why the summary bins mean deviations by decade of n.  Note
also that t is a continuous momentum while n is a discrete index; this
module simply samples the correlator at integer t and records the
caveat rather than resolving it.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .bubble import correlator_sample
from .errors import DomainError, InsufficientZerosError
from .zeta import TWO_PI, ZeroTable, gamma_asymptotic

__all__ = [
    "ReportRow",
    "ReportSummary",
    "CorrespondenceReport",
    "FitResult",
    "build_report",
    "log_slope_fit",
    "report_to_csv",
    "report_to_json",
]

_N_ROW_MIN = 7  # smallest index with ln(n/2pi) > 0
_FIT_ROWS_MIN = 50


@dataclass(frozen=True)
class ReportRow:
    """One paired observation at index n."""

    n: int
    gamma_n: float
    prediction: float
    asym_prediction: float
    rel_dev: float


@dataclass(frozen=True)
class ReportSummary:
    """Deviation statistics over all rows.

    mean_rel_dev_per_decade maps the decade exponent e (rows with
    10^e <= n < 10^{e+1}) to the mean rel_dev in that decade; slope is
    the fitted slope of gamma_n * ln(n/2pi) against 2 pi n, which tends
    to 1 as the two asymptotes merge.
    """

    max_rel_dev: float
    mean_rel_dev_per_decade: tuple[tuple[int, float], ...]
    slope: float


@dataclass(frozen=True)
class CorrespondenceReport:
    """Rows plus summary for one mass value m2."""

    m2: float
    rows: tuple[ReportRow, ...]
    summary: ReportSummary


class FitResult(NamedTuple):
    slope: float
    intercept: float
    residual: float


def build_report(zeros: ZeroTable, m2: float, n_max: int) -> CorrespondenceReport:
    """One row per n in [7, n_max] pairing gamma_n with the correlator.

    The zero table must carry global indices starting at 1 (a full scan
    from t = 0) and hold at least n_max entries.
    """
    if isinstance(n_max, bool) or not isinstance(n_max, numbers.Integral):
        raise DomainError("build_report: n_max must be an integer")
    n_max = int(n_max)
    if n_max < 10:
        raise DomainError("build_report: need n_max >= 10")
    if not m2 > 0.0:
        raise DomainError("build_report: m2 must be positive")
    m2 = float(m2)
    if len(zeros.zeros) < n_max:
        raise InsufficientZerosError(
            f"build_report: table holds {len(zeros.zeros)} zeros, "
            f"need {n_max}"
        )
    if zeros.zeros[0].n != 1:
        raise DomainError(
            "build_report: zero table must start at global index 1 "
            "(scan from t = 0)"
        )

    rows = []
    for n in range(_N_ROW_MIN, n_max + 1):
        entry = zeros.zeros[n - 1]
        if entry.n != n:
            raise DomainError("build_report: zero table indices not consecutive")
        prediction = correlator_sample(float(n), m2).correlator
        rows.append(
            ReportRow(
                n=n,
                gamma_n=entry.gamma,
                prediction=prediction,
                asym_prediction=gamma_asymptotic(n),
                rel_dev=abs(entry.gamma - prediction) / entry.gamma,
            )
        )

    devs = np.array([r.rel_dev for r in rows])
    exponents = np.array([int(math.floor(math.log10(r.n))) for r in rows])
    decades = tuple(
        (int(e), float(devs[exponents == e].mean()))
        for e in sorted(set(exponents.tolist()))
    )
    x = np.array([TWO_PI * r.n for r in rows])
    y = np.array([r.gamma_n * math.log(r.n / TWO_PI) for r in rows])
    slope = float(np.polyfit(x, y, 1)[0])
    summary = ReportSummary(
        max_rel_dev=float(devs.max()),
        mean_rel_dev_per_decade=decades,
        slope=slope,
    )
    return CorrespondenceReport(m2=m2, rows=tuple(rows), summary=summary)


def log_slope_fit(
    report: CorrespondenceReport,
    *,
    n_min: int | None = None,
    n_max: int | None = None,
) -> FitResult:
    """Least squares of y = gamma_n * ln(n/2pi) against x = n.

    If the identification holds asymptotically, y grows linearly with
    slope near 2 pi.  The optional window [n_min, n_max] restricts the
    fit (defaults cover the whole report); at least 50 rows must
    survive the restriction.  residual is the root-mean-square misfit
    relative to mean(y).
    """
    lo = report.rows[0].n if n_min is None else int(n_min)
    hi = report.rows[-1].n if n_max is None else int(n_max)
    rows = [r for r in report.rows if lo <= r.n <= hi]
    if len(rows) < _FIT_ROWS_MIN:
        raise DomainError(
            f"log_slope_fit: {len(rows)} rows in window, need >= {_FIT_ROWS_MIN}"
        )
    x = np.array([float(r.n) for r in rows])
    y = np.array([r.gamma_n * math.log(r.n / TWO_PI) for r in rows])
    slope, intercept = np.polyfit(x, y, 1)
    misfit = y - (slope * x + intercept)
    residual = math.sqrt(float(np.mean(misfit * misfit))) / float(np.mean(y))
    return FitResult(slope=float(slope), intercept=float(intercept),
                     residual=residual)


# ----------------------------------------------------------------------
# Serialization (text only; file handling lives in the cli module)
# ----------------------------------------------------------------------

def _fmt(x: float) -> str:
    """17 significant digits: round-trips any double exactly."""
    return format(float(x), ".17g")


def report_to_csv(report: CorrespondenceReport) -> str:
    """Rows only, header n,gamma,prediction,asym_prediction,rel_dev."""
    lines = ["n,gamma,prediction,asym_prediction,rel_dev"]
    for r in report.rows:
        lines.append(
            f"{r.n},{_fmt(r.gamma_n)},{_fmt(r.prediction)},"
            f"{_fmt(r.asym_prediction)},{_fmt(r.rel_dev)}"
        )
    return "\n".join(lines) + "\n"


def report_to_json(report: CorrespondenceReport, fit: FitResult | None = None) -> str:
    """Report as JSON: m2, rows as arrays, summary object.

    Numbers carry 17 significant digits (hand-rendered: the stdlib
    encoder formats floats its own way).  When a fit is supplied it is
    appended as a "fit" object.
    """
    row_items = ",".join(
        f"[{r.n},{_fmt(r.gamma_n)},{_fmt(r.prediction)},"
        f"{_fmt(r.asym_prediction)},{_fmt(r.rel_dev)}]"
        for r in report.rows
    )
    decade_items = ",".join(
        f'"{e}":{_fmt(mean)}'
        for e, mean in report.summary.mean_rel_dev_per_decade
    )
    parts = [
        f'"m2":{_fmt(report.m2)}',
        f'"rows":[{row_items}]',
        (
            '"summary":{'
            f'"max_rel_dev":{_fmt(report.summary.max_rel_dev)},'
            f'"mean_rel_dev_per_decade":{{{decade_items}}},'
            f'"slope":{_fmt(report.summary.slope)}'
            "}"
        ),
    ]
    if fit is not None:
        parts.append(
            '"fit":{'
            f'"slope":{_fmt(fit.slope)},'
            f'"intercept":{_fmt(fit.intercept)},'
            f'"residual":{_fmt(fit.residual)}'
            "}"
        )
    return "{" + ",".join(parts) + "}\n"
