"""Minimal powers after which a hyperbolic twist certifies distance one.

For a hyperbolic (Anosov) matrix sigma and any gluing psi, every class map
composition sigma^n psi Phi eventually satisfies the denominator-trace
test, hence has no rational eigenslopes and cannot fix a slope.  The trace
sequence t_n = trace(sigma^n K) obeys the Cayley-Hamilton recurrence

    t_(n+1) = trace(sigma) t_n - t_(n-1),

which replaces the real-valued diagonalization argument with exact
rational arithmetic.  Since |trace(sigma)| >= 3, once consecutive traces
satisfy |t_(n0+1)| >= |t_n0| and |t_(n0+1)| > 2 d(K), every later trace
grows by a factor of at least two, and d(sigma^n K) always divides d(K)
because sigma is integral; that pair of inequalities is therefore a finite
certificate covering the whole tail.  The only other possibility over the
rationals is t_n identically zero from some point on (K exchanges the two
eigendirections, forcing two consecutive zero traces), where the small-trace
branch of the test holds forever.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classmaps import classmap_to_json
from .errors import InvalidInputError
from .matrices import (
    UnimodularZ,
    compose,
    denominator,
    rational_eigenslopes,
)
from .serialize import format_fraction, matrix_to_json, slope_to_json

__all__ = [
    "is_hyperbolic",
    "trace_sequence",
    "power_bound",
    "PrefixDiagnostic",
    "ClassPowerBound",
    "PowerBoundReport",
    "power_report_to_json",
]

_TAIL_SEARCH_CAP = 100_000


def is_hyperbolic(sigma):
    """True iff |trace| > 2 (the map is Anosov)."""
    return abs(sigma.trace()) > 2


def trace_sequence(sigma, k, n_max):
    """Exact traces t_0 ... t_n_max of sigma^n * k, by the trace recurrence."""
    if n_max < 0:
        raise InvalidInputError("n_max must be a natural number")
    t0 = k.trace()
    if n_max == 0:
        return [t0]
    t1 = compose(sigma, k).trace()
    tau = sigma.trace()
    out = [t0, t1]
    for _ in range(n_max - 1):
        out.append(tau * out[-1] - out[-2])
    return out


def _criterion(t, d):
    """Per-power test: |t| < 2/d or |t| > 2 d, both strict."""
    t = abs(t)
    return t * d < 2 or t > 2 * d


@dataclass(frozen=True)
class PrefixDiagnostic:
    """One power below the certified index: what held and what did not."""

    n: int
    trace: object
    denominator: int
    criterion_passed: bool
    eigenslopes: object  # Eigenslopes of sigma^n * K


@dataclass(frozen=True)
class ClassPowerBound:
    class_map: object
    n_class: int
    tail_index: int
    tail_kind: str  # "growth" or "zero"
    tail_traces: tuple
    d_k: int
    prefix: tuple


@dataclass(frozen=True)
class PowerBoundReport:
    sigma: UnimodularZ
    psi: UnimodularZ
    per_class: tuple
    overall_n: int


def _class_power_bound(sigma, psi, cm):
    k = compose(psi, cm.phi)
    d_k = denominator(k)
    tau = sigma.trace()
    traces = [k.trace(), compose(sigma, k).trace()]
    mats = [k]
    tail_index = tail_start = None
    tail_kind = None
    n = 0
    while n < _TAIL_SEARCH_CAP:
        if traces[n] == 0 and traces[n + 1] == 0:
            # The recurrence forces every later trace to zero, and zero
            # always passes the small branch of the test.
            tail_index, tail_kind, tail_start = n, "zero", n
            break
        if abs(traces[n + 1]) >= abs(traces[n]) and abs(traces[n + 1]) > 2 * d_k:
            tail_index, tail_kind, tail_start = n, "growth", n + 1
            break
        traces.append(tau * traces[-1] - traces[-2])
        mats.append(compose(sigma, mats[-1]))
        n += 1
    if tail_index is None:
        raise RuntimeError("trace tail not found; hyperbolicity violated?")
    while len(mats) < tail_start:
        mats.append(compose(sigma, mats[-1]))
    # Exact per-power check below the tail, with the true denominators.
    last_failure = -1
    passed = []
    for i in range(tail_start):
        ok = _criterion(traces[i], denominator(mats[i]))
        passed.append(ok)
        if not ok:
            last_failure = i
    n_class = last_failure + 1
    prefix = tuple(
        PrefixDiagnostic(
            n=i,
            trace=traces[i],
            denominator=denominator(mats[i]),
            criterion_passed=passed[i],
            eigenslopes=rational_eigenslopes(mats[i]),
        )
        for i in range(n_class)
    )
    return ClassPowerBound(
        class_map=cm,
        n_class=n_class,
        tail_index=tail_index,
        tail_kind=tail_kind,
        tail_traces=(traces[tail_index], traces[tail_index + 1]),
        d_k=d_k,
        prefix=prefix,
    )


def power_bound(sigma, psi, classes):
    """Least N with the trace test certified for all powers n >= N, per class.

    N is defined against the denominator-trace test, whose tail rule gives
    a finite certificate for every larger power; smaller powers where the
    eigenslope set happens to be empty anyway are reported in the prefix
    diagnostics but do not lower N.
    """
    if not isinstance(sigma, UnimodularZ) or not isinstance(psi, UnimodularZ):
        raise InvalidInputError("sigma and psi must be integral with determinant 1")
    if not is_hyperbolic(sigma):
        raise InvalidInputError(
            f"sigma must be hyperbolic: |trace| = {abs(sigma.trace())} is not > 2"
        )
    classes = list(classes)
    if not classes:
        raise InvalidInputError("power bounds need at least one class map")
    per_class = tuple(_class_power_bound(sigma, psi, cm) for cm in classes)
    return PowerBoundReport(
        sigma=sigma,
        psi=psi,
        per_class=per_class,
        overall_n=max(c.n_class for c in per_class),
    )


def _eigenslopes_json(eig):
    if eig.fixes_all:
        return "all"
    return [slope_to_json(s) for s in eig.slopes]


def power_report_to_json(report):
    return {
        "kind": "power-bound-report",
        "sigma": matrix_to_json(report.sigma),
        "psi": matrix_to_json(report.psi),
        "overall_N": report.overall_n,
        "per_class": [
            {
                "class_map": classmap_to_json(c.class_map),
                "N": c.n_class,
                "tail_index": c.tail_index,
                "tail_kind": c.tail_kind,
                "tail_traces": [
                    format_fraction(c.tail_traces[0]),
                    format_fraction(c.tail_traces[1]),
                ],
                "d_K": c.d_k,
                "prefix": [
                    {
                        "n": p.n,
                        "trace": format_fraction(p.trace),
                        "denominator": p.denominator,
                        "criterion_passed": p.criterion_passed,
                        "eigenslopes": _eigenslopes_json(p.eigenslopes),
                    }
                    for p in c.prefix
                ],
            }
            for c in report.per_class
        ],
    }
