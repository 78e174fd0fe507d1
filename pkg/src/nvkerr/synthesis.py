"""Seeded synthetic datasets: helicity scans, time traces, fluence series.

Every generator evaluates a forward model from `optomag` and adds white
Gaussian noise drawn from numpy's PCG64 generator, so (seed, parameters)
fully determines the dataset.  The generator name, seed and model
parameters are recorded in each dataset's ``meta`` dict so files written
from them carry complete provenance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .optomag import HarmonicCoefficients, TimeTraceModel, signal_extended, time_trace

__all__ = [
    "GENERATOR_NAME",
    "NoiseSpec",
    "HelicityScan",
    "TimeTrace",
    "FluenceSeries",
    "default_alpha_grid",
    "default_delay_grid",
    "synth_helicity_scan",
    "synth_time_trace",
    "synth_fluence_series",
]

GENERATOR_NAME = "numpy-pcg64"

# Reference scan fluence (mJ/cm^2) at which helicity scans are taken.
SCAN_FLUENCE_DEFAULT = 29.0

FLUENCE_SPAN_DEFAULT = (8.0, 40.0)  # mJ/cm^2


@dataclass(frozen=True)
class NoiseSpec:
    """Additive white Gaussian noise: per-point sigma (degrees) and RNG seed."""

    sigma_deg: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.sigma_deg < 0.0:
            raise ValueError("sigma_deg must be >= 0")

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


def _as_float_array(x, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(x, dtype=float)).copy()
    if arr.ndim != 1:
        raise ValueError(f"{name} must be one-dimensional")
    return arr


@dataclass
class HelicityScan:
    """Peak Kerr rotation vs QWP angle at fixed pump fluence.

    Parallel arrays alpha_deg / delta_theta_deg / sigma_deg; alpha values
    must lie in [0, 360) and sigmas must be nonnegative.
    """

    alpha_deg: np.ndarray
    delta_theta_deg: np.ndarray
    sigma_deg: np.ndarray
    fluence_mj_cm2: float = SCAN_FLUENCE_DEFAULT
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.alpha_deg = _as_float_array(self.alpha_deg, "alpha_deg")
        self.delta_theta_deg = _as_float_array(self.delta_theta_deg, "delta_theta_deg")
        self.sigma_deg = _as_float_array(self.sigma_deg, "sigma_deg")
        n = self.alpha_deg.size
        if n == 0:
            raise ValueError("scan must contain at least one point")
        if self.delta_theta_deg.size != n or self.sigma_deg.size != n:
            raise ValueError("alpha, delta_theta and sigma must have equal length")
        if np.any(self.sigma_deg < 0.0):
            raise ValueError("per-point sigma must be >= 0")
        if np.any((self.alpha_deg < 0.0) | (self.alpha_deg >= 360.0)):
            raise ValueError("alpha values must lie in [0, 360)")

    def __len__(self) -> int:
        return self.alpha_deg.size

    @property
    def points(self):
        """Iterate (alpha, delta_theta, sigma) tuples."""
        return zip(self.alpha_deg, self.delta_theta_deg, self.sigma_deg)

    def shifted(self, delta_alpha_deg: float) -> "HelicityScan":
        """Same data relabeled at alpha + delta (mod 360); models helicity reversal for delta = 90."""
        return HelicityScan(
            alpha_deg=(self.alpha_deg + delta_alpha_deg) % 360.0,
            delta_theta_deg=self.delta_theta_deg.copy(),
            sigma_deg=self.sigma_deg.copy(),
            fluence_mj_cm2=self.fluence_mj_cm2,
            meta=dict(self.meta),
        )


@dataclass
class TimeTrace:
    """Kerr rotation vs pump-probe delay (ps)."""

    t_ps: np.ndarray
    delta_theta_deg: np.ndarray
    sigma_deg: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.t_ps = _as_float_array(self.t_ps, "t_ps")
        self.delta_theta_deg = _as_float_array(self.delta_theta_deg, "delta_theta_deg")
        self.sigma_deg = _as_float_array(self.sigma_deg, "sigma_deg")
        if self.t_ps.size == 0:
            raise ValueError("trace must contain at least one point")
        if self.delta_theta_deg.size != self.t_ps.size or self.sigma_deg.size != self.t_ps.size:
            raise ValueError("t, delta_theta and sigma must have equal length")
        if np.any(np.diff(self.t_ps) < 0.0):
            raise ValueError("delay grid must be sorted ascending")

    def __len__(self) -> int:
        return self.t_ps.size


@dataclass
class FluenceSeries:
    """Coefficient magnitude vs pump fluence for one harmonic (C, L or F)."""

    fluence_mj_cm2: np.ndarray
    value_deg: np.ndarray
    sigma_deg: np.ndarray
    coefficient_label: str = "C"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.fluence_mj_cm2 = _as_float_array(self.fluence_mj_cm2, "fluence_mj_cm2")
        self.value_deg = _as_float_array(self.value_deg, "value_deg")
        self.sigma_deg = _as_float_array(self.sigma_deg, "sigma_deg")
        n = self.fluence_mj_cm2.size
        if self.value_deg.size != n or self.sigma_deg.size != n:
            raise ValueError("fluence, value and sigma must have equal length")
        if np.any(self.fluence_mj_cm2 <= 0.0):
            raise ValueError("fluences must be strictly positive")
        if n > 1 and np.any(np.diff(self.fluence_mj_cm2) <= 0.0):
            raise ValueError("fluences must be strictly increasing")
        if self.coefficient_label not in ("C", "L", "F"):
            raise ValueError(f"coefficient_label must be C, L or F, got {self.coefficient_label!r}")

    def __len__(self) -> int:
        return self.fluence_mj_cm2.size


def default_alpha_grid() -> np.ndarray:
    """24 QWP angles, 0° to 172.5° in 7.5° steps.

    Uniform over one 180° signal period, which makes {1, sin2a, sin4a,
    sin6a} exactly orthogonal under the discrete inner product; the
    two-stage residual fit then equals the direct fit.
    """
    return np.arange(24) * 7.5


def default_delay_grid(start_ps: float = -2.0, stop_ps: float = 15.0, step_ps: float = 0.02) -> np.ndarray:
    """Delay grid covering the scan span of the experiment (up to 15 ps)."""
    n = int(round((stop_ps - start_ps) / step_ps)) + 1
    return start_ps + step_ps * np.arange(n)


def synth_helicity_scan(
    coeffs: HarmonicCoefficients,
    alpha_grid_deg=None,
    noise: NoiseSpec = NoiseSpec(),
    fluence_mj_cm2: float = SCAN_FLUENCE_DEFAULT,
) -> HelicityScan:
    """Sample the extended harmonic model on a QWP-angle grid, plus noise."""
    alpha = default_alpha_grid() if alpha_grid_deg is None else _as_float_array(alpha_grid_deg, "alpha_grid_deg")
    if alpha.size == 0:
        raise ValueError("alpha grid must be nonempty")
    values = signal_extended(alpha, coeffs) + noise.rng().normal(0.0, noise.sigma_deg, alpha.size)
    return HelicityScan(
        alpha_deg=alpha,
        delta_theta_deg=values,
        sigma_deg=np.full(alpha.size, noise.sigma_deg),
        fluence_mj_cm2=fluence_mj_cm2,
        meta={
            "kind": "helicity_scan",
            "generator": GENERATOR_NAME,
            "seed": noise.seed,
            "sigma_deg": noise.sigma_deg,
            "fluence_mj_cm2": fluence_mj_cm2,
            "coeffs": {"C": coeffs.c, "L": coeffs.l, "F": coeffs.f, "D": coeffs.d},
        },
    )


def synth_time_trace(model: TimeTraceModel, t_grid_ps=None, noise: NoiseSpec = NoiseSpec()) -> TimeTrace:
    """Sample the temporal response model on a delay grid, plus noise."""
    t = default_delay_grid() if t_grid_ps is None else _as_float_array(t_grid_ps, "t_grid_ps")
    if t.size == 0:
        raise ValueError("delay grid must be nonempty")
    values = time_trace(model, t) + noise.rng().normal(0.0, noise.sigma_deg, t.size)
    return TimeTrace(
        t_ps=t,
        delta_theta_deg=values,
        sigma_deg=np.full(t.size, noise.sigma_deg),
        meta={
            "kind": "time_trace",
            "generator": GENERATOR_NAME,
            "seed": noise.seed,
            "sigma_deg": noise.sigma_deg,
            "model": {
                "peak_deg": model.peak_deg,
                "t0_ps": model.t0_ps,
                "cross_correlation_fwhm_ps": model.cross_correlation_fwhm_ps,
                "decay_tau_ps": model.decay_tau_ps,
            },
        },
    )


def synth_fluence_series(
    law: str,
    coefficient: float,
    fluences_mj_cm2,
    noise: NoiseSpec = NoiseSpec(),
    coefficient_label: str | None = None,
) -> FluenceSeries:
    """Generate a coefficient-vs-fluence series from a scaling law.

    law is "linear" (value = coefficient * I) or "quadratic"
    (value = coefficient * I^2).  The label defaults to "C" for linear and
    "F" for quadratic series.
    """
    fluences = _as_float_array(fluences_mj_cm2, "fluences_mj_cm2")
    if fluences.size == 0:
        raise ValueError("fluence grid must be nonempty")
    if np.any(fluences <= 0.0):
        raise ValueError("fluences must be strictly positive")
    if law == "linear":
        values = coefficient * fluences
    elif law == "quadratic":
        values = coefficient * fluences**2
    else:
        raise ValueError(f"law must be 'linear' or 'quadratic', got {law!r}")
    if coefficient_label is None:
        coefficient_label = "C" if law == "linear" else "F"
    values = values + noise.rng().normal(0.0, noise.sigma_deg, fluences.size)
    return FluenceSeries(
        fluence_mj_cm2=fluences,
        value_deg=values,
        sigma_deg=np.full(fluences.size, noise.sigma_deg),
        coefficient_label=coefficient_label,
        meta={
            "kind": "fluence_series",
            "generator": GENERATOR_NAME,
            "seed": noise.seed,
            "sigma_deg": noise.sigma_deg,
            "law": law,
            "coefficient": coefficient,
            "coefficient_label": coefficient_label,
        },
    )
