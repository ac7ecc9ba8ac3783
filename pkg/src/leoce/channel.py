"""Ground-truth channel synthesis and the angle-delay representation.

A UT channel is rank one in space (single steering vector) and a sparse
tapped delay line in frequency. The delay axis is quantised onto a
refined grid covering the cyclic prefix; projecting the physical paths
onto that grid gives the angle-delay coefficients that the estimators
recover.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Taps this far below the strongest one generate no paths.
TAP_POWER_FLOOR = 1e-6


@dataclass(frozen=True)
class ArrayGeometry:
    """Uniform planar array: counts per axis and spacings in wavelengths."""

    mx: int = 12
    my: int = 12
    dx_wl: float = 1.0
    dy_wl: float = 1.0

    def __post_init__(self):
        if self.mx < 1 or self.my < 1:
            raise ValueError("antenna counts must be >= 1")

    @property
    def m(self) -> int:
        return self.mx * self.my


@dataclass(frozen=True)
class OFDMGrid:
    """Subcarrier layout of the pilot OFDM symbol."""

    nc: int = 512
    np_: int = 128
    rp: int = 0
    ng: int = 36
    delta_f: float = 60e3

    def __post_init__(self):
        if self.rp + self.np_ > self.nc:
            raise ValueError("pilot block exceeds the subcarrier grid")
        if self.ng >= self.nc:
            raise ValueError("CP length must be shorter than the symbol")

    @property
    def ts(self) -> float:
        return 1.0 / (self.nc * self.delta_f)

    @property
    def tg(self) -> float:
        return self.ng * self.ts


@dataclass(frozen=True)
class DelayGrid:
    """Refined delay grid over the CP window.

    nd = mu_d * ld grid points tau_l = l * step with step = 1/(npe * delta_f)
    and npe = mu_d * np; the grid step shrinks as the refining factor grows.
    """

    mu_d: int
    ld: int
    nd: int
    npe: int
    step: float
    tau: np.ndarray

    def interval_edges(self) -> np.ndarray:
        """All nd+1 interval edges, the last one closing the CP window."""
        return np.arange(self.nd + 1) * self.step


@dataclass(frozen=True)
class PDP:
    """Normalized nonnegative tap powers."""

    gamma: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gamma, dtype=float)
        if np.any(g < 0):
            raise ValueError("tap powers must be nonnegative")
        if abs(g.sum() - 1.0) > 1e-12:
            raise ValueError("tap powers must sum to 1")
        object.__setattr__(self, "gamma", g)


@dataclass(frozen=True)
class PathSet:
    """Physical paths: complex gains and residual delays in seconds."""

    gains: np.ndarray
    delays: np.ndarray


@dataclass(frozen=True)
class UTChannel:
    """One UT's ground truth for a single pilot symbol."""

    xi: tuple[float, float]
    beta: float
    g: np.ndarray  # unit-norm steering vector, length M
    paths: PathSet
    d_true: np.ndarray  # frequency response on the pilot subcarriers, length N_p
    d_adc: np.ndarray  # on-grid angle-delay coefficients, length N_d
    omega: np.ndarray  # per-tap second moments beta * gamma, length N_d


def _ula_response(n: int, d_wl: float, x: float) -> np.ndarray:
    m = np.arange(n)
    return np.exp(-2j * np.pi * d_wl * m * x) / np.sqrt(n)


def array_response(geom: ArrayGeometry, xi: tuple[float, float]) -> np.ndarray:
    """Unit-norm UPA steering vector for a space-angle pair.

    Kronecker product of the two per-axis uniform-linear-array responses;
    the x-axis factor varies slowest.
    """
    return np.kron(_ula_response(geom.mx, geom.dx_wl, xi[0]),
                   _ula_response(geom.my, geom.dy_wl, xi[1]))


def delay_grid(ofdm: OFDMGrid, mu_d: int) -> DelayGrid:
    """Build the refined delay grid for a refining factor mu_d >= 1."""
    if mu_d < 1:
        raise ValueError("refining factor must be a positive integer")
    ld = math.ceil(ofdm.np_ * ofdm.ng / ofdm.nc)
    nd = mu_d * ld
    npe = mu_d * ofdm.np_
    step = 1.0 / (npe * ofdm.delta_f)
    return DelayGrid(mu_d=mu_d, ld=ld, nd=nd, npe=npe, step=step, tau=np.arange(nd) * step)


def exp_pdp(nd: int, decay_taps: float) -> PDP:
    """Exponential power delay profile, gamma_l proportional to exp(-l/decay_taps)."""
    if decay_taps <= 0:
        raise ValueError("decay_taps must be positive")
    g = np.exp(-np.arange(nd) / decay_taps)
    return PDP(g / g.sum())


def sample_paths(
    rng: np.random.Generator,
    pdp: PDP,
    grid: DelayGrid,
    beta: float,
    q_per_tap: int = 1,
    on_grid: bool = False,
) -> PathSet:
    """Draw one realization of the physical paths.

    Each active tap l spawns q_per_tap paths with delays uniform in the
    tap's interval (or pinned to the grid point when on_grid is set) and
    i.i.d. circular Gaussian gains totalling expected power beta*gamma_l.
    """
    if q_per_tap < 1:
        raise ValueError("q_per_tap must be >= 1")
    edges = grid.interval_edges()
    active = np.flatnonzero(pdp.gamma > TAP_POWER_FLOOR * pdp.gamma.max())
    gains = []
    delays = []
    for ell in active:
        pw = beta * pdp.gamma[ell] / q_per_tap
        g = np.sqrt(pw / 2.0) * (rng.standard_normal(q_per_tap) + 1j * rng.standard_normal(q_per_tap))
        if on_grid:
            d = np.full(q_per_tap, grid.tau[ell])
        else:
            d = rng.uniform(edges[ell], edges[ell + 1], size=q_per_tap)
        gains.append(g)
        delays.append(d)
    return PathSet(np.concatenate(gains), np.concatenate(delays))


def true_dp(paths: PathSet, ofdm: OFDMGrid) -> np.ndarray:
    """Exact frequency response on the N_p pilot subcarriers.

    d_p[n] = sum_q a_q exp(-j 2 pi (rp+n) delta_f tau_q), evaluated at the
    physical (possibly off-grid) delays.
    """
    n = ofdm.rp + np.arange(ofdm.np_)
    phase = np.exp(-2j * np.pi * np.outer(n, ofdm.delta_f * paths.delays))
    return phase @ paths.gains


def adc_project(paths: PathSet, grid: DelayGrid) -> np.ndarray:
    """Sum path gains per delay-grid interval (right-open bins)."""
    edges = grid.interval_edges()
    idx = np.searchsorted(edges, paths.delays, side="right") - 1
    if np.any(idx < 0) or np.any(idx >= grid.nd):
        raise ValueError("path delay outside the CP window")
    alpha = np.zeros(grid.nd, dtype=complex)
    np.add.at(alpha, idx, paths.gains)
    return alpha


def extended_dft(grid: DelayGrid, ofdm: OFDMGrid) -> np.ndarray:
    """N_p x N_pe slice of the unnormalized N_pe-point DFT matrix.

    Entry (n, m) = exp(-j 2 pi (rp+n) m / N_pe); the delay-grid columns
    are the first N_d and pilot windows start at each phase offset.
    """
    n = ofdm.rp + np.arange(ofdm.np_)
    m = np.arange(grid.npe)
    return np.exp(-2j * np.pi * np.outer(n, m) / grid.npe)


def partial_dft(grid: DelayGrid, ofdm: OFDMGrid) -> np.ndarray:
    """First N_d columns of extended_dft: maps on-grid taps to d_p."""
    n = ofdm.rp + np.arange(ofdm.np_)
    m = np.arange(grid.nd)
    return np.exp(-2j * np.pi * np.outer(n, m) / grid.npe)


def build_rt(beta: float, pdp: PDP) -> np.ndarray:
    """Diagonal of the angle-delay correlation: omega_l = beta * gamma_l."""
    return beta * pdp.gamma
