"""Conversions between dimensional and dimensionless model quantities.

All analytic machinery in this package works in dimensionless form: lengths are
scaled by a reference length L, times by the diffusion time L**2/D, first-order
rates by D/L**2, molecule counts by a reference count, and concentrations by
N_ref/L**3. A :class:`ScalingContext` holds one choice of (L, D, N_ref) and
exposes one conversion pair per quantity kind, so a time cannot silently be
converted with the rate factor and vice versa.

Advection enters dimensionlessly as a Peclet number v*L/D per axis, bundled in
:class:`FlowSpec` with the parallel axis pointing from the source toward the
receiver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameterError

__all__ = [
    "ScalingContext",
    "FlowSpec",
    "NO_FLOW",
    "make_context",
    "peclet",
    "noise_ref_count",
    "tx_ref_count",
]


@dataclass(frozen=True)
class ScalingContext:
    """Reference scales and the conversion factors derived from them.

    Attributes
    ----------
    ref_length_m:
        Reference length L in metres.
    diffusion_m2_s:
        Diffusion coefficient D of the information molecules in m**2/s.
    ref_count:
        Reference number of molecules (dimensionless count scale).
    """

    ref_length_m: float
    diffusion_m2_s: float
    ref_count: float = 1.0

    def __post_init__(self) -> None:
        for name in ("ref_length_m", "diffusion_m2_s", "ref_count"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise InvalidParameterError(f"{name} must be positive and finite, got {value!r}")

    # Derived scales -------------------------------------------------------

    @property
    def time_unit_s(self) -> float:
        """Dimensional duration of one dimensionless time unit: L**2/D."""
        return self.ref_length_m**2 / self.diffusion_m2_s

    @property
    def concentration_unit_per_m3(self) -> float:
        """Reference concentration N_ref/L**3 in molecule/m**3."""
        return self.ref_count / self.ref_length_m**3

    @property
    def speed_unit_m_s(self) -> float:
        """Speed giving Peclet number 1: D/L."""
        return self.diffusion_m2_s / self.ref_length_m

    @property
    def rate_unit_per_s(self) -> float:
        """First-order rate giving dimensionless rate 1: D/L**2."""
        return self.diffusion_m2_s / self.ref_length_m**2

    # Per-kind conversions -------------------------------------------------

    def length_to_star(self, x_m: float) -> float:
        return x_m / self.ref_length_m

    def length_from_star(self, x_star: float) -> float:
        return x_star * self.ref_length_m

    def time_to_star(self, t_s: float) -> float:
        return t_s / self.time_unit_s

    def time_from_star(self, t_star: float) -> float:
        return t_star * self.time_unit_s

    def rate_to_star(self, k_per_s: float) -> float:
        return k_per_s / self.rate_unit_per_s

    def rate_from_star(self, k_star: float) -> float:
        return k_star * self.rate_unit_per_s

    def speed_to_peclet(self, v_m_s: float) -> float:
        return v_m_s / self.speed_unit_m_s

    def speed_from_peclet(self, pe: float) -> float:
        return pe * self.speed_unit_m_s

    def count_to_star(self, n: float) -> float:
        return n / self.ref_count

    def count_from_star(self, n_star: float) -> float:
        return n_star * self.ref_count

    def concentration_to_star(self, c_per_m3: float) -> float:
        return c_per_m3 / self.concentration_unit_per_m3

    def concentration_from_star(self, c_star: float) -> float:
        return c_star * self.concentration_unit_per_m3

    def emission_rate_to_star(self, rate_per_s: float) -> float:
        """Continuous emission rate (molecule/s) to molecules per unit dimensionless time,
        in units of the reference count: rate * L**2 / (D * N_ref)."""
        return rate_per_s * self.time_unit_s / self.ref_count

    def emission_rate_from_star(self, rate_star: float) -> float:
        return rate_star * self.ref_count / self.time_unit_s


@dataclass(frozen=True)
class FlowSpec:
    """Steady uniform flow in the source's frame, as Peclet numbers.

    ``pe_parallel`` is along the source-to-receiver line (positive toward the
    receiver); ``pe_perp`` is the single perpendicular component left after
    rotating the second perpendicular axis away by symmetry.
    """

    pe_parallel: float = 0.0
    pe_perp: float = 0.0

    def __post_init__(self) -> None:
        for name in ("pe_parallel", "pe_perp"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidParameterError(f"{name} must be finite, got {value!r}")

    @property
    def is_still(self) -> bool:
        return self.pe_parallel == 0.0 and self.pe_perp == 0.0

    @property
    def speed(self) -> float:
        """Magnitude of the dimensionless velocity."""
        return math.hypot(self.pe_parallel, self.pe_perp)


NO_FLOW = FlowSpec(0.0, 0.0)


def make_context(ref_length_m: float, diffusion_m2_s: float, ref_count: float = 1.0) -> ScalingContext:
    """Build a :class:`ScalingContext`; arguments must be positive."""
    return ScalingContext(ref_length_m=ref_length_m, diffusion_m2_s=diffusion_m2_s, ref_count=ref_count)


def peclet(speed_m_s: float, ctx: ScalingContext) -> float:
    """Peclet number v*L/D for a flow speed in m/s. Zero speed is allowed."""
    if not math.isfinite(speed_m_s):
        raise InvalidParameterError(f"speed must be finite, got {speed_m_s!r}")
    return ctx.speed_to_peclet(speed_m_s)


def noise_ref_count(gen_rate_per_s: float, ctx: ScalingContext) -> float:
    """Reference count normalizing a continuous source: L**2 * rate / D.

    With this choice the source's dimensionless expected emission function is
    the unit step (1 for t* >= 0).
    """
    if not (math.isfinite(gen_rate_per_s) and gen_rate_per_s > 0.0):
        raise InvalidParameterError(f"generation rate must be positive, got {gen_rate_per_s!r}")
    return gen_rate_per_s * ctx.time_unit_s


def tx_ref_count(molecules_per_emission: float, bit_interval_s: float, p1: float, ctx: ScalingContext) -> float:
    """Reference count normalizing a transmitter's effective continuous emission.

    Equals L**2 * P1 * N_em / (T * D): the expected emission of P1*N_em molecules
    per interval T, spread continuously, becomes the unit-step function.
    """
    if not (math.isfinite(molecules_per_emission) and molecules_per_emission > 0.0):
        raise InvalidParameterError(f"molecules per emission must be positive, got {molecules_per_emission!r}")
    if not (math.isfinite(bit_interval_s) and bit_interval_s > 0.0):
        raise InvalidParameterError(f"bit interval must be positive, got {bit_interval_s!r}")
    if not (0.0 <= p1 <= 1.0):
        raise InvalidParameterError(f"p1 must lie in [0, 1], got {p1!r}")
    return p1 * molecules_per_emission * ctx.time_unit_s / bit_interval_s
