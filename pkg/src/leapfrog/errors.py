"""Exception types raised by the leapfrog package."""


class LeapfrogError(Exception):
    """Base class for all package errors."""


class ParameterError(LeapfrogError, ValueError):
    """A model or configuration parameter is outside its valid range."""


class Diverged(LeapfrogError):
    """An orbit left the divergence bound."""

    def __init__(self, step: int, z: float, w: float, bound: float):
        self.step = step
        self.z = z
        self.w = w
        self.bound = bound
        super().__init__(
            f"orbit diverged at step {step}: |z|={abs(z):.3g}, |w|={abs(w):.3g} "
            f"exceeds bound {bound:.3g}"
        )


class DegenerateSlope(LeapfrogError):
    """a1*beta1 - b1*alpha1 vanishes, so w0 is not a linear function of z0."""


class NoSignChange(LeapfrogError, ValueError):
    """A root bracket does not enclose a sign change."""


class ZeroB1(LeapfrogError):
    """b1 = b - a vanishes; the critical elasticity is undefined."""


class NotConverged(LeapfrogError):
    """A fixed point failed its residual check."""


class InsufficientSamples(LeapfrogError, ValueError):
    """A sequence is too short for the requested analysis."""
