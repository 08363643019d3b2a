"""Radial potentials on the unit ball and their half-line counterparts.

A radial potential ``V(x) = q(|x|)`` on the punctured unit ball maps to a
half-line potential through

    Q(t) = exp(-2t) q(exp(-t)),        q(r) = r^{-2} Q(-log r),

and dilation on the ball, ``V_s(x) = s^2 V(sx)`` with ``s in (0,1]``,
corresponds to translation ``Q(. - log s)`` on the half-line.  The module
provides the closed-form families used throughout (zero, inverse-square,
and the explicitly solvable two-parameter family with a single-exponential
amplitude), sampled profiles, the sliding-window and dyadic-shell norms,
and the solvability thresholds they control.

All profile objects are immutable and safe to share across threads; every
operation here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import NonIntegrableWindow, SchemaError

#: Default evaluation floor: profiles may be singular at the origin, so all
#: grid operations live on (R_MIN_DEFAULT, 1].
R_MIN_DEFAULT = 1e-4

#: Default half-line truncation horizon.
T_MAX_DEFAULT = 40.0


def sphere_area(d: int) -> float:
    """Surface area of the unit sphere S^{d-1}, via log-gamma."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    return 2.0 * math.exp(0.5 * d * math.log(math.pi) - math.lgamma(0.5 * d))


def _as_float_array(x) -> tuple[np.ndarray, bool]:
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    return np.atleast_1d(arr), scalar


def _ret(values: np.ndarray, scalar: bool):
    return float(values[0]) if scalar else values


# ---------------------------------------------------------------------------
# Ball-side profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroProfile:
    family = "zero"

    def q(self, r):
        arr, scalar = _as_float_array(r)
        return _ret(np.zeros_like(arr), scalar)


@dataclass(frozen=True)
class InverseSquareProfile:
    """q(r) = q0 / r^2; scale invariant under dilation."""

    q0: float
    family = "inverse-square"

    def q(self, r):
        arr, scalar = _as_float_array(r)
        return _ret(self.q0 / (arr * arr), scalar)


@dataclass(frozen=True)
class BargmannProfile:
    """Explicitly solvable family with parameters mu > 0, nu >= 0.

    q(r) = -8 mu^2 c r^{2 mu - 2} / (1 + c r^{2 mu})^2 with
    c = (mu - nu)/(mu + nu).  Its half-line amplitude is the single
    exponential 2 (nu^2 - mu^2) e^{-2 nu t}.
    """

    mu: float
    nu: float
    family = "bargmann"

    def __post_init__(self):
        if self.mu <= 0 or self.nu < 0:
            raise ValueError("bargmann family requires mu > 0 and nu >= 0")

    @property
    def c(self) -> float:
        return (self.mu - self.nu) / (self.mu + self.nu)

    def q(self, r):
        arr, scalar = _as_float_array(r)
        c = self.c
        p = arr ** (2.0 * self.mu)
        vals = -8.0 * self.mu**2 * c * (p / (arr * arr)) / (1.0 + c * p) ** 2
        return _ret(vals, scalar)


@dataclass(frozen=True)
class DilatedProfile:
    """q_s(r) = s^2 base(s r), kept symbolic for families without a
    closed-form dilation."""

    base: "Profile"
    s: float

    def __post_init__(self):
        if not 0.0 < self.s <= 1.0:
            raise ValueError("dilation factor must lie in (0, 1]")

    @property
    def family(self) -> str:
        return f"dilated({self.base.family}, s={self.s:g})"

    def q(self, r):
        arr, scalar = _as_float_array(r)
        vals = self.s**2 * np.asarray(self.base.q(self.s * arr))
        return _ret(np.atleast_1d(vals), scalar)


@dataclass(frozen=True, eq=False)
class SampledProfile:
    """Profile given on a strictly increasing grid ending at r = 1.

    Interpolation is monotone-limited cubic Hermite in log r, so uniform
    half-line grids map to the interpolant's natural coordinate.
    """

    grid: np.ndarray
    values: np.ndarray
    family = "sampled"

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.shape != values.shape:
            raise SchemaError("sampled profile needs matching 1-d grid/values")
        if np.any(np.diff(grid) <= 0):
            raise SchemaError("sampled grid must be strictly increasing")
        if not np.isclose(grid[-1], 1.0, rtol=0, atol=1e-12):
            raise SchemaError("sampled grid must end at r = 1")
        if grid[0] <= 0:
            raise SchemaError("sampled grid must be positive")
        if not np.all(np.isfinite(values)):
            raise SchemaError("sampled values must be finite")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(
            self, "_interp", PchipInterpolator(np.log(grid), values, extrapolate=True)
        )

    def q(self, r):
        arr, scalar = _as_float_array(r)
        return _ret(self._interp(np.log(arr)), scalar)


Profile = Union[
    ZeroProfile, InverseSquareProfile, BargmannProfile, DilatedProfile, SampledProfile
]


@dataclass(frozen=True)
class RadialPotential:
    """A radial potential V(x) = q(|x|) on the punctured unit ball."""

    d: int
    profile: Profile

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"dimension must be >= 2, got {self.d}")

    @property
    def family(self) -> str:
        return self.profile.family

    def q(self, r):
        """Radial profile q evaluated at r (scalar or array)."""
        return self.profile.q(r)


def zero_potential(d: int) -> RadialPotential:
    return RadialPotential(d, ZeroProfile())


def inverse_square_potential(d: int, q0: float) -> RadialPotential:
    return RadialPotential(d, InverseSquareProfile(q0))


def bargmann_potential(d: int, mu: float, nu: float) -> RadialPotential:
    return RadialPotential(d, BargmannProfile(mu, nu))


def sampled_potential(d: int, grid, values) -> RadialPotential:
    return RadialPotential(d, SampledProfile(np.asarray(grid), np.asarray(values)))


# ---------------------------------------------------------------------------
# Half-line profiles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroQ:
    family = "zero"
    tail_constant = 0.0

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        return _ret(np.zeros_like(arr), scalar)


@dataclass(frozen=True)
class ConstantQ:
    q0: float
    family = "constant"

    @property
    def tail_constant(self) -> float:
        return self.q0

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        return _ret(np.full_like(arr, self.q0), scalar)


@dataclass(frozen=True)
class BargmannQ:
    mu: float
    nu: float
    family = "bargmann"
    tail_constant = 0.0

    @property
    def c(self) -> float:
        return (self.mu - self.nu) / (self.mu + self.nu)

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        e = np.exp(-2.0 * self.mu * arr)
        vals = -8.0 * self.mu**2 * self.c * e / (1.0 + self.c * e) ** 2
        return _ret(vals, scalar)


@dataclass(frozen=True)
class ShiftedQ:
    """Left translate Q(. + shift), shift >= 0."""

    base: "QProfile"
    shift: float

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError("shift must be >= 0")

    @property
    def family(self) -> str:
        return f"shifted({self.base.family}, a={self.shift:g})"

    @property
    def tail_constant(self) -> float:
        return self.base.tail_constant

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        vals = np.asarray(self.base.Q(arr + self.shift))
        return _ret(np.atleast_1d(vals), scalar)


@dataclass(frozen=True, eq=False)
class SampledQ:
    """Half-line potential sampled on an increasing t grid starting at 0.

    Beyond the last node the tail model applies: identically equal to
    ``tail_constant`` (zero tail by default).
    """

    t: np.ndarray
    values: np.ndarray
    tail_constant: float = 0.0
    family = "sampled"

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if t.ndim != 1 or t.shape != values.shape:
            raise SchemaError("sampled half-line potential needs matching grids")
        if np.any(np.diff(t) <= 0):
            raise SchemaError("t grid must be strictly increasing")
        if not np.all(np.isfinite(values)):
            raise SchemaError("sampled values must be finite")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "values", values)
        object.__setattr__(
            self, "_interp", PchipInterpolator(t, values, extrapolate=True)
        )

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        vals = np.where(arr <= self.t[-1], self._interp(arr), self.tail_constant)
        vals = np.where(arr < self.t[0], self._interp(self.t[0]), vals)
        return _ret(vals, scalar)


@dataclass(frozen=True, eq=False)
class CallableQ:
    """Escape hatch wrapping an arbitrary vectorized Q(t)."""

    fn: Callable[[np.ndarray], np.ndarray]
    tail_constant: float = 0.0
    family = "callable"

    def Q(self, t):
        arr, scalar = _as_float_array(t)
        vals = np.asarray(self.fn(arr), dtype=float)
        return _ret(np.atleast_1d(vals), scalar)


QProfile = Union[ZeroQ, ConstantQ, BargmannQ, ShiftedQ, SampledQ, CallableQ]


@dataclass(frozen=True)
class HalfLinePotential:
    """Q(t) = e^{-2t} q(e^{-t}) on the half-line t >= 0."""

    profile: QProfile

    @property
    def family(self) -> str:
        return self.profile.family

    @property
    def tail_constant(self) -> float:
        return self.profile.tail_constant

    def Q(self, t):
        return self.profile.Q(t)


# ---------------------------------------------------------------------------
# Conversions
# ---------------------------------------------------------------------------


def bargmann_shift_params(mu: float, nu: float, shift: float) -> float:
    """Second parameter of the translated two-parameter family.

    Translating its half-line potential left by ``shift`` lands back in
    the family with the same mu and nu replaced by the returned value.
    """
    c = (mu - nu) / (mu + nu)
    ca = c * math.exp(-2.0 * mu * shift)
    return mu * (1.0 - ca) / (1.0 + ca)


def to_halfline(V: RadialPotential) -> HalfLinePotential:
    """Map a ball potential to its half-line form Q(t) = e^{-2t} q(e^{-t})."""
    p = V.profile
    if isinstance(p, ZeroProfile):
        return HalfLinePotential(ZeroQ())
    if isinstance(p, InverseSquareProfile):
        return HalfLinePotential(ConstantQ(p.q0))
    if isinstance(p, BargmannProfile):
        return HalfLinePotential(BargmannQ(p.mu, p.nu))
    if isinstance(p, DilatedProfile):
        base = to_halfline(RadialPotential(V.d, p.base))
        return HalfLinePotential(ShiftedQ(base.profile, -math.log(p.s)))
    if isinstance(p, SampledProfile):
        t = -np.log(p.grid[::-1])
        q_vals = p.values[::-1]
        vals = np.exp(-2.0 * t) * q_vals
        return HalfLinePotential(SampledQ(t, vals))
    raise SchemaError(f"cannot convert profile of type {type(p).__name__}")


def from_halfline(
    Q: HalfLinePotential, d: int, *, r_min: float = R_MIN_DEFAULT, n: int = 801
) -> RadialPotential:
    """Inverse map q(r) = r^{-2} Q(-log r).

    Closed-form families map back to closed forms; callables are sampled
    on a log-uniform grid over (r_min, 1].
    """
    p = Q.profile
    if isinstance(p, ZeroQ):
        return zero_potential(d)
    if isinstance(p, ConstantQ):
        return inverse_square_potential(d, p.q0)
    if isinstance(p, BargmannQ):
        return bargmann_potential(d, p.mu, p.nu)
    if isinstance(p, ShiftedQ):
        base = from_halfline(HalfLinePotential(p.base), d, r_min=r_min, n=n)
        return dilate(base, math.exp(-p.shift))
    if isinstance(p, SampledQ):
        r = np.exp(-p.t[::-1])
        q_vals = p.values[::-1] / (r * r)
        return RadialPotential(d, SampledProfile(r, q_vals))
    if isinstance(p, CallableQ):
        r = np.exp(np.linspace(math.log(r_min), 0.0, n))
        q_vals = np.asarray(p.Q(-np.log(r))) / (r * r)
        return RadialPotential(d, SampledProfile(r, q_vals))
    raise SchemaError(f"cannot convert profile of type {type(p).__name__}")


def dilate(V: RadialPotential, s: float) -> RadialPotential:
    """Dilated potential V_s(x) = s^2 V(s x), with s in (0, 1].

    On the half-line this is the translate Q(. - log s).  Families with
    closed-form dilations stay closed form: the inverse-square profile is
    scale invariant and the two-parameter solvable family maps to itself
    with a shifted second parameter.
    """
    if not 0.0 < s <= 1.0:
        raise ValueError("dilation factor must lie in (0, 1]")
    if s == 1.0:
        return V
    p = V.profile
    if isinstance(p, ZeroProfile):
        return V
    if isinstance(p, InverseSquareProfile):
        return V
    if isinstance(p, BargmannProfile):
        nu_s = bargmann_shift_params(p.mu, p.nu, -math.log(s))
        return bargmann_potential(V.d, p.mu, nu_s)
    if isinstance(p, DilatedProfile):
        return RadialPotential(V.d, DilatedProfile(p.base, p.s * s))
    return RadialPotential(V.d, DilatedProfile(p, s))


# ---------------------------------------------------------------------------
# Norms and thresholds
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormBundle:
    """Norms and derived solvability thresholds of a potential.

    ``k_v = beta_v - (d-2)/2`` bounds the indices below which the radial
    boundary problem may fail to single out a decaying solution.
    """

    d: int
    vd_norm: float
    window_norm: float
    beta_v: float
    beta_q: float
    k_v: float

    def validate(self, rtol: float = 1e-9) -> None:
        area = sphere_area(self.d)
        lo = area * self.window_norm / 3.0
        hi = area * self.window_norm
        if not (lo <= self.vd_norm * (1 + rtol) and self.vd_norm <= hi * (1 + rtol)):
            raise AssertionError("norm sandwich violated")
        if self.beta_q > self.beta_v * (1 + rtol) + 1e-300:
            raise AssertionError("beta_q must not exceed beta_v")


def _cumulative_abs_q(
    Q: HalfLinePotential, t_max: float, samples_per_unit: int
) -> tuple[np.ndarray, np.ndarray]:
    n = max(2, int(round(t_max * samples_per_unit)) + 1)
    t = np.linspace(0.0, t_max, n)
    vals = np.abs(np.asarray(Q.Q(t), dtype=float))
    if not np.all(np.isfinite(vals)):
        raise NonIntegrableWindow("Q is not finite on the sweep grid")
    # trapezoid is exact for constant Q, which keeps the closed-form
    # examples free of sweep error
    cums = np.concatenate([[0.0], np.cumsum(0.5 * (vals[1:] + vals[:-1]) * np.diff(t))])
    return t, cums


def window_norm(
    Q: HalfLinePotential | RadialPotential,
    *,
    t_max: float = T_MAX_DEFAULT,
    sweep_step: float = 0.01,
    samples_per_unit: int = 4096,
) -> float:
    """Sliding-window norm sup_{y>0} int_y^{y+1} |Q|.

    The sup is approximated by a sweep of y over [0, t_max] in steps of
    ``sweep_step`` on a dense quadrature grid, combined with the tail
    model (a constant tail contributes |c| exactly).  Raises
    :class:`NonIntegrableWindow` when the window integrals keep growing
    at the horizon, which signals an inadmissible potential.
    """
    if isinstance(Q, RadialPotential):
        Q = to_halfline(Q)
    t, cums = _cumulative_abs_q(Q, t_max + 1.0, samples_per_unit)
    y = np.arange(0.0, t_max + 0.5 * sweep_step, sweep_step)
    w = np.interp(y + 1.0, t, cums) - np.interp(y, t, cums)
    sup = float(w.max())
    tail = abs(Q.tail_constant)
    n_guard = max(2, int(0.05 * len(w)))
    growing = np.all(np.diff(w[-n_guard:]) >= -1e-30)
    if sup > 1e6 and growing and w.argmax() >= len(w) - n_guard:
        raise NonIntegrableWindow(
            f"window integrals still growing at t={t_max:g} (sup={sup:.3e})"
        )
    return max(sup, tail)


def vd_norm(
    V: RadialPotential,
    *,
    t_max: float = T_MAX_DEFAULT,
    samples_per_unit: int = 4096,
) -> float:
    """Dyadic-shell norm: |S^{d-1}| sup_j int_{j log2}^{(j+1) log2} |Q|."""
    Q = to_halfline(V)
    log2 = math.log(2.0)
    j_max = int(math.ceil(t_max / log2))
    t, cums = _cumulative_abs_q(Q, (j_max + 1) * log2, samples_per_unit)
    edges = np.arange(j_max + 2) * log2
    c_at = np.interp(edges, t, cums)
    windows = np.diff(c_at)
    sup = float(windows.max())
    tail = abs(Q.tail_constant) * log2
    n_guard = max(2, int(0.05 * len(windows)))
    if sup > 1e6 and windows.argmax() >= len(windows) - n_guard:
        raise NonIntegrableWindow(
            f"dyadic shell integrals still growing at t={t_max:g}"
        )
    return sphere_area(V.d) * max(sup, tail)


def beta_from_window_norm(wnorm: float) -> float:
    """beta_Q = 2 max(sqrt(2 |||Q|||), e |||Q|||)."""
    return 2.0 * max(math.sqrt(2.0 * wnorm), math.e * wnorm)


def thresholds(V: RadialPotential, **norm_opts) -> NormBundle:
    """Populate the norm bundle (both norms, beta_V, beta_Q, k_V)."""
    area = sphere_area(V.d)
    vnorm = vd_norm(V, **norm_opts)
    wnorm = window_norm(V, **norm_opts)
    beta_v = (2.0 / area) * max(math.sqrt(6.0 * area * vnorm), 3.0 * math.e * vnorm)
    beta_q = beta_from_window_norm(wnorm)
    k_v = beta_v - 0.5 * (V.d - 2)
    return NormBundle(
        d=V.d, vd_norm=vnorm, window_norm=wnorm, beta_v=beta_v, beta_q=beta_q, k_v=k_v
    )


def default_grid(r_min: float = R_MIN_DEFAULT, n: int = 801) -> np.ndarray:
    """Log-uniform radial grid over (r_min, 1], increasing, last node 1."""
    return np.exp(np.linspace(math.log(r_min), 0.0, n))
