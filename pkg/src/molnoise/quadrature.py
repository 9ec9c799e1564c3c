"""Shared adaptive-quadrature kernel for time integrals of emission kernels.

All impact integrals in this package are 1-D integrals over elapsed time of a
smooth, non-negative kernel that vanishes (with all derivatives) at tau -> 0+
and decays at least like tau**-3/2 for large tau. Finite intervals go straight
to an adaptive Gauss-Kronrod scheme; infinite upper limits are mapped to [0, 1)
with tau = u/(1-u), after truncating exponentially decaying tails once they can
no longer move the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.integrate import quad

from .errors import InvalidParameterError

__all__ = ["QuadResult", "integrate_kernel", "DEFAULT_ABS_TOL", "DEFAULT_REL_TOL"]

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-9

# Beyond this point an exp(-decay_rate * tau) envelope cannot contribute more
# than ~1e-14 of the accumulated value, so the tail is dropped.
_TAIL_LOG_CUTOFF = math.log(1e-16)


@dataclass(frozen=True)
class QuadResult:
    value: float
    est_error: float


def _guarded(f: Callable[[float], float]) -> Callable[[float], float]:
    # The integrands have a removable 1/tau**(3/2)-type form at 0; their
    # analytic limit there is 0.
    def g(tau: float) -> float:
        if tau <= 0.0:
            return 0.0
        return f(tau)

    return g


def integrate_kernel(
    f: Callable[[float], float],
    upper: float,
    *,
    decay_rate: float = 0.0,
    abs_tol: float = DEFAULT_ABS_TOL,
    rel_tol: float = DEFAULT_REL_TOL,
    peak_hint: float | None = None,
) -> QuadResult:
    """Integrate ``f`` over elapsed time from 0 to ``upper`` (may be ``inf``).

    ``decay_rate`` is an optional known exponential envelope rate of the tail
    (degradation plus advective escape); it is used only to truncate infinite
    upper limits. ``peak_hint`` marks the kernel's peak location so the
    subdivision starts there.
    """
    if not upper > 0.0:
        raise InvalidParameterError(f"upper integration limit must be positive, got {upper!r}")
    g = _guarded(f)

    if math.isinf(upper):
        if decay_rate > 0.0:
            # exp(-decay_rate * tau) tail: beyond tail_start the envelope is
            # below 1e-16 of its scale, so a finite interval suffices.
            tail_start = -_TAIL_LOG_CUTOFF / decay_rate
            lo = max(peak_hint or 0.0, 1.0)
            upper_eff = max(tail_start, 10.0 * lo)
            return integrate_kernel(
                f, upper_eff, decay_rate=0.0, abs_tol=abs_tol, rel_tol=rel_tol, peak_hint=peak_hint
            )

        def mapped(u: float) -> float:
            if u >= 1.0:
                return 0.0
            one_minus = 1.0 - u
            return g(u / one_minus) / (one_minus * one_minus)

        points = None
        if peak_hint is not None and peak_hint > 0.0:
            points = [peak_hint / (1.0 + peak_hint)]
        value, err = quad(mapped, 0.0, 1.0, epsabs=abs_tol, epsrel=rel_tol, limit=200, points=points)
        return QuadResult(value, err)

    points = None
    if peak_hint is not None and 0.0 < peak_hint < upper:
        points = [peak_hint]
    value, err = quad(g, 0.0, upper, epsabs=abs_tol, epsrel=rel_tol, limit=200, points=points)
    return QuadResult(value, err)
