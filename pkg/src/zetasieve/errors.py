"""Exception hierarchy.

Two families matter to callers: bad arguments (:class:`InputError`, the CLI
maps these to exit code 2) and mathematically out-of-domain requests
(:class:`DomainError` and subclasses, exit code 3).
"""

from __future__ import annotations

__all__ = [
    "ZetaSieveError",
    "InputError",
    "DomainError",
    "PoleError",
    "PoleProximityError",
    "SingularPrefactorError",
    "ConvergenceDomainError",
    "ContourError",
    "ResolutionError",
]


class ZetaSieveError(Exception):
    """Base class for every error raised by this package."""


class InputError(ZetaSieveError, ValueError):
    """Malformed or out-of-range argument (wrong type, n < 2, ...)."""


class DomainError(ZetaSieveError):
    """Mathematically valid input outside the operation's domain."""


class PoleError(DomainError):
    """Evaluation requested at (or too near) a pole."""


class PoleProximityError(PoleError):
    """Within the gate distance of a term pole 2*pi*i*k / log(r).

    Carries the offending base and lattice index so root-finding can reason
    about which term blew up.
    """

    def __init__(self, z: complex, base: int, lattice_index: int, distance: float):
        self.z = z
        self.base = base
        self.lattice_index = lattice_index
        self.distance = distance
        super().__init__(
            f"z = {z} lies {distance:.3e} from the pole 2*pi*i*{lattice_index}"
            f"/log({base}); evaluation is gated"
        )


class SingularPrefactorError(DomainError):
    """The eta prefactor 1/(1 - 2**(1-z)) is singular or out of domain."""


class ConvergenceDomainError(DomainError):
    """Argument outside the Laurent convergence disk |z|*log(r_max) < 2*pi."""

    def __init__(self, z: complex, radius: float, r_max: int):
        self.z = z
        self.radius = radius
        self.r_max = r_max
        super().__init__(
            f"|z| = {abs(z):.6g} is outside the convergence disk of the"
            f" Bernoulli series: need |z| < 2*pi/log({r_max}) = {radius:.6g}"
        )


class ContourError(DomainError):
    """A verification contour passes through or encloses a term pole."""


class ResolutionError(DomainError):
    """Phase sampling along a contour is too coarse to unwrap safely."""
