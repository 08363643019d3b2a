"""Forward computation of DtN eigenvalues for radial potentials.

Two independent routes are provided:

* ``m_function`` / ``dtn_eigenvalue``: the boundary spectral function of
  the half-line operator -u'' + Q u, computed by integrating the Riccati
  equation m' = Q + kappa^2 - m^2 backwards from the truncation horizon.
  The decaying branch is attracting under backward integration, which is
  what makes this route stable.  The eigenvalue is
  lambda_k = -(d-2)/2 - m(0) at kappa_k = k + (d-2)/2.

* ``dtn_eigenvalue_ode``: outward integration of the radial equation for
  the regular solution, transformed so the centrifugal stiffness cancels:
  with b(r) = r^k w(r), the profile w satisfies
  w'' + ((2k+d-1)/r) w' = q(r) w, and lambda_k = k + w'(1)/w(1).

Route agreement on closed-form families is asserted in the test suite.
"""

from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .errors import BelowThresholdWarning, RiccatiBlowup, SingularOrigin
from .potentials import (
    HalfLinePotential,
    R_MIN_DEFAULT,
    RadialPotential,
    T_MAX_DEFAULT,
    beta_from_window_norm,
    to_halfline,
    window_norm,
)


class EigFlag(enum.Enum):
    """Provenance of one eigenvalue."""

    COMPUTED = "computed"
    CONVENTION_K = "convention_k"


@dataclass(frozen=True)
class KappaIndex:
    """Half-line spectral parameter kappa_k = k + (d-2)/2."""

    k: int
    d: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("harmonic degree must be >= 0")
        if self.d < 2:
            raise ValueError("dimension must be >= 2")

    @property
    def kappa(self) -> float:
        return self.k + 0.5 * (self.d - 2)


@dataclass(frozen=True)
class DtNSpectrum:
    """Dimension plus the eigenvalue sequence lambda_k, k = 0..K."""

    d: int
    lambdas: tuple[float, ...]
    flags: tuple[EigFlag, ...]

    def __post_init__(self):
        if len(self.lambdas) != len(self.flags):
            raise ValueError("lambdas and flags must have equal length")

    def __len__(self) -> int:
        return len(self.lambdas)

    @property
    def K(self) -> int:
        return len(self.lambdas) - 1

    def sigma(self) -> np.ndarray:
        """Moment data lambda_k - k."""
        return np.asarray(self.lambdas) - np.arange(len(self.lambdas))


def m_function(
    Q: HalfLinePotential,
    kappa: float,
    *,
    t_max: float = T_MAX_DEFAULT,
    rtol: float = 1e-12,
    atol: float = 1e-12,
    blowup: float = 1e8,
    beta_q: float | None = None,
    check_threshold: bool = True,
) -> float:
    """Boundary spectral value M(-kappa^2) = u'(0)/u(0) of the decaying
    solution of -u'' + Q u = -kappa^2 u.

    The Riccati equation m' = Q + kappa^2 - m^2 is integrated backwards
    from ``t_max`` with seed -sqrt(kappa^2 + c), c being the tail
    constant of Q.  For Q == 0 this returns exactly -kappa.

    Raises :class:`RiccatiBlowup` when |m| crosses ``blowup`` before
    t = 0 (an exceptional index: u vanishes at the origin).  Emits
    :class:`BelowThresholdWarning` when kappa is at or below the
    analyticity threshold beta_Q, where the computed value may not be
    the canonical branch.
    """
    if check_threshold:
        if beta_q is None:
            beta_q = beta_from_window_norm(window_norm(Q, t_max=t_max))
        if kappa <= beta_q:
            warnings.warn(
                f"kappa={kappa:g} <= beta_Q={beta_q:g}; value may not be the "
                "canonical branch",
                BelowThresholdWarning,
                stacklevel=2,
            )
    c = Q.tail_constant
    seed_sq = kappa * kappa + c
    if seed_sq <= 0.0:
        raise RiccatiBlowup(kappa, t_max)
    profile = Q.profile

    def rhs(t, m):
        return [profile.Q(t) + kappa * kappa - m[0] * m[0]]

    def overflow(t, m):
        return abs(m[0]) - blowup

    overflow.terminal = True

    sol = solve_ivp(
        rhs,
        (t_max, 0.0),
        [-math.sqrt(seed_sq)],
        method="RK45",
        rtol=rtol,
        atol=atol,
        events=overflow,
        dense_output=False,
    )
    if sol.status == 1:
        raise RiccatiBlowup(kappa, float(sol.t_events[0][0]))
    if not sol.success:
        raise RuntimeError(f"Riccati integration failed: {sol.message}")
    return float(sol.y[0, -1])


def dtn_eigenvalue(
    V: RadialPotential, k: int, *, beta_q: float | None = None, **opts
) -> tuple[float, EigFlag]:
    """One DtN eigenvalue lambda_k = -(d-2)/2 - M(-kappa_k^2).

    A Riccati blowup is converted into the convention lambda_k := k with
    flag ``CONVENTION_K``; no exception escapes.
    """
    kappa = KappaIndex(k, V.d).kappa
    Q = to_halfline(V)
    try:
        m_val = m_function(Q, kappa, beta_q=beta_q, **opts)
    except RiccatiBlowup:
        return float(k), EigFlag.CONVENTION_K
    return -0.5 * (V.d - 2) - m_val, EigFlag.COMPUTED


def dtn_spectrum(V: RadialPotential, K: int, **opts) -> DtNSpectrum:
    """Spectrum lambda_k for k = 0..K, flags recorded per index."""
    if K < 0:
        raise ValueError("K must be >= 0")
    Q = to_halfline(V)
    beta_q = opts.pop("beta_q", None)
    if beta_q is None and opts.get("check_threshold", True):
        beta_q = beta_from_window_norm(
            window_norm(Q, t_max=opts.get("t_max", T_MAX_DEFAULT))
        )
    lambdas = []
    flags = []
    for k in range(K + 1):
        lam, flag = dtn_eigenvalue(V, k, beta_q=beta_q, **opts)
        lambdas.append(lam)
        flags.append(flag)
    return DtNSpectrum(d=V.d, lambdas=tuple(lambdas), flags=tuple(flags))


def dtn_eigenvalue_ode(
    V: RadialPotential,
    k: int,
    *,
    r_min: float = R_MIN_DEFAULT,
    rtol: float = 1e-12,
    atol: float = 1e-13,
) -> float:
    """Outward-integration route for lambda_k.

    Integrates w'' + ((2k+d-1)/r) w' = q w from ``r_min`` with the
    leading Frobenius data w = 1, w' = 0 and returns k + w'(1)/w(1).
    Raises :class:`SingularOrigin` when the potential is so singular at
    the origin that the regular branch is not power-like there (the
    effective index kappa_k^2 + r^2 q(r) turns negative), in which case
    the spectral-function route must be used.
    """
    kappa = KappaIndex(k, V.d).kappa
    probe = r_min * np.array([1.0, 2.0, 4.0])
    eff = kappa * kappa + probe**2 * np.asarray(V.q(probe))
    if np.any(eff <= 0.0):
        raise SingularOrigin(
            f"kappa_k^2 + r^2 q(r) <= 0 near r={r_min:g}; use the "
            "spectral-function route"
        )
    d = V.d
    coeff = 2 * k + d - 1
    profile = V.profile

    def rhs(r, y):
        w, dw = y
        return [dw, profile.q(r) * w - coeff * dw / r]

    sol = solve_ivp(
        rhs, (r_min, 1.0), [1.0, 0.0], method="RK45", rtol=rtol, atol=atol
    )
    if not sol.success:
        raise RuntimeError(f"outward integration failed: {sol.message}")
    w1, dw1 = sol.y[:, -1]
    return k + float(dw1 / w1)
