"""Forward models for the opto-magnetic Kerr-rotation signal.

Three effects contribute to the pump-helicity dependence of the probe
rotation:

* IFE   — field along the beam axis, odd in helicity (sin 2a),
* OKE   — third-order nonlinear rotation (sin 4a),
* ICME  — second-order opto-magnetic rotation, surfacing as sin 6a through
  the product of helicity (sin 2a) and linear anisotropy (cos 4a).

The harmonic signal models below parameterize a helicity scan directly;
`two_step_icme` is the product form of the 6a term; `time_trace` is the
instantaneous (cross-correlation-limited) temporal response.

Angles in degrees; rotations in degrees; times in ps.  Model functions
accept scalars or numpy arrays in ``alpha_deg`` and broadcast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polarization import JonesVector, stokes

__all__ = [
    "MaterialParams",
    "HarmonicCoefficients",
    "TimeTraceModel",
    "ife_field",
    "icme_field",
    "signal_base",
    "signal_extended",
    "two_step_icme",
    "time_trace",
    "PULSE_BROADENING_DEFAULT",
]

# FWHM stretch of the pump-probe cross-correlation relative to one pulse,
# for equal Gaussian pump and probe pulses.
PULSE_BROADENING_DEFAULT = math.sqrt(2.0)


@dataclass(frozen=True)
class MaterialParams:
    """Material and setup constants.

    mo_alpha / mo_beta are the first- and second-order magneto-optical
    coefficients in arbitrary calibrated units (field per intensity);
    chi2_mo is the second-order magneto-optical susceptibility in deg/T^2.
    Defaults correspond to the reference 800 nm / 40 fs experiment on
    NV diamond.
    """

    n: float = 2.41
    mo_alpha: float = 1.0
    mo_beta: float = 1.0
    chi2_mo: float = 3.2e-3
    pulse_fwhm_fs: float = 40.0
    theta_sensitivity_deg: float = 1.0e-6

    def __post_init__(self):
        if not self.n > 1.0:
            raise ValueError(f"refractive index must be > 1, got {self.n}")
        if not self.pulse_fwhm_fs > 0.0:
            raise ValueError(f"pulse_fwhm_fs must be > 0, got {self.pulse_fwhm_fs}")
        if self.theta_sensitivity_deg < 0.0:
            raise ValueError("theta_sensitivity_deg must be >= 0")


@dataclass(frozen=True)
class HarmonicCoefficients:
    """Amplitudes (degrees) of the helicity-scan harmonics.

    c: sin 2a (IFE), l: sin 4a (OKE), f: sin 6a (ICME), d: constant offset.
    Signs are free; reversing the pump helicity flips c and f.
    """

    c: float = 0.0
    l: float = 0.0
    f: float = 0.0
    d: float = 0.0

    def __post_init__(self):
        for name in ("c", "l", "f", "d"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"coefficient {name} must be finite")


@dataclass(frozen=True)
class TimeTraceModel:
    """Instantaneous pump-probe response: Gaussian peak, optional decay tail.

    cross_correlation_fwhm_ps is the temporal width of the response; the
    optional decay_tau_ps multiplies the trace past t0 by exp(-(t-t0)/tau).
    """

    peak_deg: float
    t0_ps: float = 0.0
    cross_correlation_fwhm_ps: float = 40.0e-3 * PULSE_BROADENING_DEFAULT
    decay_tau_ps: float | None = None

    def __post_init__(self):
        if not self.cross_correlation_fwhm_ps > 0.0:
            raise ValueError("cross_correlation_fwhm_ps must be > 0")
        if self.decay_tau_ps is not None and not self.decay_tau_ps > 0.0:
            raise ValueError("decay_tau_ps must be > 0 when present")

    @classmethod
    def from_pulse_fwhm(
        cls,
        peak_deg: float,
        pulse_fwhm_fs: float,
        t0_ps: float = 0.0,
        decay_tau_ps: float | None = None,
        broadening: float = PULSE_BROADENING_DEFAULT,
    ) -> "TimeTraceModel":
        """Build a model whose width is broadening x pulse FWHM (fs -> ps)."""
        if not pulse_fwhm_fs > 0.0:
            raise ValueError("pulse_fwhm_fs must be > 0")
        return cls(
            peak_deg=peak_deg,
            t0_ps=t0_ps,
            cross_correlation_fwhm_ps=broadening * pulse_fwhm_fs * 1.0e-3,
            decay_tau_ps=decay_tau_ps,
        )


def ife_field(state: JonesVector, mo_alpha: float) -> float:
    """Axial field induced by the inverse Faraday effect: mo_alpha * s3.

    Zero for any linearly polarized state; sign follows the helicity.
    """
    return mo_alpha * stokes(state).s3


def icme_field(state: JonesVector, m_transverse: float, mo_beta: float) -> float:
    """Field induced by the inverse Cotton-Mouton effect: mo_beta * s0 * M.

    Linear in the transverse magnetization and independent of helicity.
    """
    if not math.isfinite(m_transverse):
        raise ValueError("m_transverse must be finite")
    return mo_beta * stokes(state).s0 * m_transverse


def signal_base(alpha_deg, coeffs: HarmonicCoefficients):
    """Base helicity model: c sin2a + l sin4a + d (the sin 6a term excluded)."""
    a = np.radians(alpha_deg)
    return coeffs.c * np.sin(2.0 * a) + coeffs.l * np.sin(4.0 * a) + coeffs.d


def signal_extended(alpha_deg, coeffs: HarmonicCoefficients):
    """Extended helicity model: c sin2a + l sin4a + f sin6a + d."""
    a = np.radians(alpha_deg)
    return (
        coeffs.c * np.sin(2.0 * a)
        + coeffs.l * np.sin(4.0 * a)
        + coeffs.f * np.sin(6.0 * a)
        + coeffs.d
    )


def two_step_icme(alpha_deg, amplitude_deg: float):
    """Two-step ICME model: amplitude * sin2a * cos4a.

    By the product-to-sum identity this equals (amplitude/2)(sin6a - sin2a),
    so it carries equal-and-opposite weight on the 6a and 2a harmonics.
    """
    a = np.radians(alpha_deg)
    return amplitude_deg * np.sin(2.0 * a) * np.cos(4.0 * a)


def time_trace(model: TimeTraceModel, t_ps) -> np.ndarray:
    """Evaluate the temporal response on a sorted delay grid (ps).

    Gaussian of FWHM cross_correlation_fwhm_ps centered at t0, scaled to
    peak_deg; when decay_tau_ps is set, delays past t0 are additionally
    damped by exp(-(t-t0)/tau).  An empty grid gives an empty output.
    """
    t = np.asarray(t_ps, dtype=float)
    if t.size == 0:
        return np.empty(0)
    if np.any(np.diff(t) < 0.0):
        raise ValueError("delay grid must be sorted ascending")
    dt = t - model.t0_ps
    y = model.peak_deg * np.exp(-4.0 * math.log(2.0) * (dt / model.cross_correlation_fwhm_ps) ** 2)
    if model.decay_tau_ps is not None:
        y = np.where(dt > 0.0, y * np.exp(-dt / model.decay_tau_ps), y)
    return y
