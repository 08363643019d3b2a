"""Exceptions and warnings shared across the package."""

from __future__ import annotations


class RadialCalderonError(Exception):
    """Base class for all package-specific errors."""


class NonIntegrableWindow(RadialCalderonError):
    """A sliding-window integral of |Q| diverges, so the potential is
    outside the admissible class."""


class RiccatiBlowup(RadialCalderonError):
    """Backward Riccati integration diverged before reaching t = 0.

    Signals that the spectral parameter hit an exceptional index (a
    Dirichlet resonance of the half-line operator).
    """

    def __init__(self, kappa: float, t_blow: float):
        self.kappa = kappa
        self.t_blow = t_blow
        super().__init__(
            f"Riccati integration blew up at t={t_blow:.6g} for kappa={kappa:.6g}"
        )


class SingularOrigin(RadialCalderonError):
    """The potential is too singular at the origin for the outward ODE
    route; use the M-function route instead."""


class UnsupportedFamily(RadialCalderonError):
    """No closed form is available for the requested family."""


class DivergentMoment(RadialCalderonError):
    """The weighted moment integral diverges for the requested index."""


class IllConditioned(RadialCalderonError):
    """The moment-inversion step exceeded its residual tolerance.

    This signals the intrinsic ill-posedness of the linear step, not a
    bug; the offending residual is attached.
    """

    def __init__(self, residual: float, message: str = ""):
        self.residual = residual
        super().__init__(
            message or f"moment inversion residual {residual:.3e} exceeds tolerance"
        )


class StepBlowup(RadialCalderonError):
    """The layer-field march exceeded the amplitude guard."""

    def __init__(self, t: float, s: float, value: float):
        self.t = t
        self.s = s
        self.value = value
        super().__init__(
            f"layer field exceeded guard at (t={t:.6g}, s={s:.6g}): |K|={value:.3e}"
        )


class HypothesisViolated(RadialCalderonError):
    """A stability theorem's hypothesis fails for the supplied data."""

    def __init__(self, failures: list[str]):
        self.failures = list(failures)
        super().__init__("hypothesis violated: " + "; ".join(self.failures))


class CancellationOverflow(RadialCalderonError):
    """Finite-difference table lost all significance in float mode;
    rerun in rational mode."""


class SchemaError(RadialCalderonError):
    """A serialized artifact does not match its documented schema."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message if field is None else f"{message} (field: {field})")


class BelowThresholdWarning(UserWarning):
    """kappa is at or below the analyticity threshold; the returned value
    may not be the canonical branch."""


class TruncationDominatedWarning(UserWarning):
    """The last retained series term is not negligible against the
    partial sum."""
