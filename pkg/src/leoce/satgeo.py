"""Satellite-UT geometry and link budget.

Space angles are the direction-cosine pair (xi_x, xi_y) seen from the
satellite array; every admissible pair lies in the disc of radius
sin(theta_max), where theta_max is the maximum nadir angle of the
coverage region.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

BOLTZMANN = 1.38e-23  # J/K
SPEED_OF_LIGHT = 299792458.0  # m/s


@dataclass(frozen=True)
class OrbitParams:
    """Circular-orbit geometry, all lengths in km."""

    earth_radius: float = 6378.0
    altitude: float = 1000.0

    def __post_init__(self):
        if self.altitude <= 0:
            raise ValueError("altitude must be positive")

    @property
    def orbit_radius(self) -> float:
        return self.earth_radius + self.altitude


@dataclass(frozen=True)
class UTGeometry:
    """Derived per-UT geometry: angles in rad, slant distance in km."""

    space_angle: tuple[float, float]
    nadir: float
    elevation: float
    slant_distance: float


@dataclass(frozen=True)
class LinkBudget:
    """Uplink power/noise parameters.

    tx_power in W, noise_temp in K, bandwidth in Hz, carrier in Hz,
    antenna gains in dBi, iono_loss in dB.
    """

    tx_power: float = 1.0
    noise_temp: float = 290.0
    bandwidth: float = 20e6
    num_subcarriers: int = 512
    sat_gain: float = 7.0
    ut_gain: float = 0.0
    iono_loss: float = 2.0
    carrier: float = 2e9

    def __post_init__(self):
        for name in ("tx_power", "noise_temp", "bandwidth", "num_subcarriers", "carrier"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def sample_space_angle(rng: np.random.Generator, theta_max: float) -> tuple[float, float]:
    """Draw one space-angle pair uniformly on the disc of radius sin(theta_max).

    Uses the polar inverse-CDF method (radius = sin(theta_max) * sqrt(u)),
    so exactly two uniform draws are consumed per sample.
    """
    if not 0.0 < theta_max < np.pi / 2:
        raise ValueError("theta_max must lie in (0, pi/2)")
    r = np.sin(theta_max) * np.sqrt(rng.uniform())
    phi = rng.uniform(0.0, 2.0 * np.pi)
    return (r * np.cos(phi), r * np.sin(phi))


def ut_geometry(xi: tuple[float, float], orbit: OrbitParams) -> UTGeometry:
    """Nadir angle, elevation and slant distance for a space-angle pair.

    Raises ValueError if the implied nadir angle puts the UT below the
    horizon (orbit_radius/earth_radius * sin(nadir) > 1).
    """
    xi_x, xi_y = xi
    rho2 = xi_x**2 + xi_y**2
    if rho2 >= 1.0:
        raise ValueError("space angle outside the unit disc")
    nadir = np.arccos(np.sqrt(1.0 - rho2))
    sin_ratio = (orbit.orbit_radius / orbit.earth_radius) * np.sin(nadir)
    if sin_ratio > 1.0:
        raise ValueError("UT below the horizon for this nadir angle")
    elevation = np.arccos(sin_ratio)
    re, h = orbit.earth_radius, orbit.altitude
    sin_el = np.sin(elevation)
    slant = np.sqrt(re**2 * sin_el**2 + h**2 + 2.0 * h * re) - re * sin_el
    return UTGeometry((xi_x, xi_y), float(nadir), float(elevation), float(slant))


def noise_variance(lb: LinkBudget) -> float:
    """Per-subcarrier noise power k_B * T_n * B / N_c in W."""
    return BOLTZMANN * lb.noise_temp * lb.bandwidth / lb.num_subcarriers


def large_scale_beta(geom: UTGeometry, lb: LinkBudget, shadow_db: float = 0.0) -> float:
    """Large-scale channel gain from free-space pathloss plus fixed losses.

    beta = 10^((G_sat + G_ut - FSPL - iono - shadow)/10), with the slant
    distance taken in km and FSPL = 20 log10(4 pi D f_c / c).
    """
    if geom.slant_distance <= 0:
        raise ValueError("slant distance must be positive")
    d_m = geom.slant_distance * 1e3
    fspl_db = 20.0 * np.log10(4.0 * np.pi * d_m * lb.carrier / SPEED_OF_LIGHT)
    total_db = lb.sat_gain + lb.ut_gain - fspl_db - lb.iono_loss - shadow_db
    return float(10.0 ** (total_db / 10.0))
