"""Jones/Stokes description of the pump polarization behind a rotatable QWP.

The pump starts horizontally (p-) polarized and passes through an ideal,
lossless quarter-wave plate whose fast axis sits at ``alpha`` degrees from
the input polarization axis.  Rotating the plate sweeps the pump through
linear (0°), right-circular (45°), linear (90°), left-circular (135°) and
back to linear (180°).  Everything downstream (IFE, OKE, ICME driving
factors) is derived from the Stokes parameters of that state.

Sign convention: ``alpha = 45°`` produces right-circular light with
``s3 = +1``.  Angles are degrees at the API surface and radians internally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "JonesVector",
    "StokesVector",
    "WavePlateSetting",
    "qwp_jones_matrix",
    "qwp_state",
    "stokes",
    "helicity_factor",
    "linear_anisotropy_factor",
]


@dataclass(frozen=True)
class JonesVector:
    """Complex transverse field (ex, ey), normalized so |ex|^2+|ey|^2 = intensity."""

    ex: complex
    ey: complex

    @property
    def intensity(self) -> float:
        return abs(self.ex) ** 2 + abs(self.ey) ** 2


@dataclass(frozen=True)
class StokesVector:
    """Intensity s0, linear anisotropies s1/s2 and circularity s3 (same units as s0)."""

    s0: float
    s1: float
    s2: float
    s3: float

    @property
    def polarized_fraction(self) -> float:
        """sqrt(s1^2+s2^2+s3^2)/s0; equals 1 for the fully polarized states made here."""
        if self.s0 == 0.0:
            return 0.0
        return math.sqrt(self.s1**2 + self.s2**2 + self.s3**2) / self.s0


@dataclass(frozen=True)
class WavePlateSetting:
    """QWP fast-axis angle in degrees, stored normalized to [0, 360).

    The physical signal model is 180°-periodic in this angle.
    """

    alpha_deg: float

    def __post_init__(self):
        if not math.isfinite(self.alpha_deg):
            raise ValueError("QWP angle must be finite")
        object.__setattr__(self, "alpha_deg", float(self.alpha_deg) % 360.0)

    def __float__(self) -> float:
        return self.alpha_deg


def _rotation(theta_rad: float) -> np.ndarray:
    c, s = math.cos(theta_rad), math.sin(theta_rad)
    return np.array([[c, s], [-s, c]])


def qwp_jones_matrix(alpha_deg: float) -> np.ndarray:
    """2x2 Jones matrix of an ideal quarter-wave plate, fast axis at alpha_deg.

    The slow-axis component is retarded by a quarter wave (factor -1j); this
    is the convention under which a 45° plate turns horizontal input into
    right-circular light (s3 = +1).
    """
    a = math.radians(float(alpha_deg))
    retarder = np.array([[1.0, 0.0], [0.0, -1.0j]])
    return _rotation(-a) @ retarder @ _rotation(a)


def qwp_state(alpha_deg: float, input_intensity: float = 1.0) -> JonesVector:
    """Pump state after the QWP, for horizontally polarized input.

    The plate is ideal and lossless, so the output intensity equals
    ``input_intensity``.  Raises ``ValueError`` for negative intensity.
    """
    if input_intensity < 0.0:
        raise ValueError(f"input_intensity must be >= 0, got {input_intensity}")
    e_in = np.array([math.sqrt(input_intensity), 0.0])
    ex, ey = qwp_jones_matrix(alpha_deg) @ e_in
    return JonesVector(complex(ex), complex(ey))


def stokes(j: JonesVector) -> StokesVector:
    """Stokes parameters of a Jones vector.

    s3 uses the sign convention -2 Im(ex conj(ey)), so qwp_state(45°) has
    s3 = +1.  Invariant under a global phase of the field.
    """
    cross = j.ex * np.conj(j.ey)
    return StokesVector(
        s0=abs(j.ex) ** 2 + abs(j.ey) ** 2,
        s1=abs(j.ex) ** 2 - abs(j.ey) ** 2,
        s2=2.0 * float(np.real(cross)),
        s3=-2.0 * float(np.imag(cross)),
    )


def helicity_factor(alpha_deg: float) -> float:
    """Photon helicity s3 of the pump at this QWP angle; equals sin(2*alpha).

    Drives the IFE: circular polarization (45°, 135°) gives ±1, linear gives 0.
    Computed from the Jones state, not from the closed form.
    """
    return stokes(qwp_state(float(alpha_deg), 1.0)).s3


def linear_anisotropy_factor(alpha_deg: float) -> float:
    """Linear-polarization projection driving the ICME; equals cos(4*alpha).

    Twice the intensity fraction polarized along the input axis, minus one,
    normalized to 1 at alpha = 0.  Computed from the Jones state.
    """
    st = stokes(qwp_state(float(alpha_deg), 1.0))
    return 2.0 * st.s1 / st.s0 - 1.0
