"""Zeros of the partial-sum targets.

A target is the scalar function whose roots the experiments hunt: a constant
plus the (optionally sign-alternating) sum of 1/(r**z - 1) over the
admissible bases r <= n.  For the alternating family this is the numerator
of the representation; the eta prefactor never vanishes, so the numerator
carries all the zeros.

The pipeline is grid-seeded Newton refinement, deterministic deduplication,
conjugate canonicalization, and an argument-principle verification on a
pole-free circle around each candidate.  Aggregation is order-independent:
results are collected in seed order whatever the thread schedule, so runs
with different thread counts produce identical output.

Scalar evaluation here is plain cmath over the member list, sized for the
desk-scale truncations the experiments use (a handful of terms); the
vectorized evaluators in the representations module are the tool for large n.
"""

from __future__ import annotations

import cmath
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import partial

import numpy as np

from .admissible import admissible_up_to
from .errors import ContourError, InputError, ResolutionError
from .representations import POLE_GATE, TWO_PI, RepresentationKind

__all__ = [
    "Target",
    "make_target",
    "PRESETS",
    "SearchRegion",
    "RootRecord",
    "NewtonFailure",
    "newton_refine",
    "winding_count",
    "find_zeros",
]


@dataclass(frozen=True)
class Target:
    """Partial-sum descriptor: kind, truncation, and additive constant."""

    kind: RepresentationKind
    n: int
    constant: float
    members: tuple[int, ...]
    logs: tuple[float, ...]
    signs: tuple[float, ...]

    def describe(self) -> str:
        return f"{self.kind.value} n={self.n} constant={self.constant:g}"

    def value_at(self, z: complex) -> complex:
        total = complex(self.constant)
        if z.real >= 0.0:
            for lg, s in zip(self.logs, self.signs):
                w = cmath.exp(-z * lg)
                total += s * w / (1.0 - w)
        else:
            for lg, s in zip(self.logs, self.signs):
                v = cmath.exp(z * lg)
                total += s / (v - 1.0)
        return total

    def derivative_at(self, z: complex) -> complex:
        total = 0j
        if z.real >= 0.0:
            for lg, s in zip(self.logs, self.signs):
                w = cmath.exp(-z * lg)
                d = 1.0 - w
                total += s * lg * w / (d * d)
        else:
            for lg, s in zip(self.logs, self.signs):
                v = cmath.exp(z * lg)
                d = v - 1.0
                total += s * lg * v / (d * d)
        return -total

    def pole_distance_at(self, z: complex) -> float:
        best = math.inf
        for lg in self.logs:
            spacing = TWO_PI / lg
            k = round(z.imag / spacing)
            d = math.hypot(z.real, z.imag - k * spacing)
            if d < best:
                best = d
        return best


def make_target(kind, n, constant: float = 1.0) -> Target:
    if kind not in (RepresentationKind.DIRECT, RepresentationKind.ALTERNATING):
        raise InputError(
            f"targets exist for DIRECT and ALTERNATING kinds, got {kind!r}"
        )
    constant = float(constant)
    if not math.isfinite(constant):
        raise InputError(f"constant must be finite, got {constant!r}")
    members = admissible_up_to(n).members
    logs = tuple(math.log(r) for r in members)
    if kind is RepresentationKind.ALTERNATING:
        signs = tuple(1.0 if r % 2 else -1.0 for r in members)
    else:
        signs = (1.0,) * len(members)
    return Target(
        kind=kind,
        n=int(n),
        constant=constant,
        members=members,
        logs=logs,
        signs=signs,
    )


# The eight test equations, with each one's printed constant: the third
# alternating equation uses 1/2 (odd term count branch), the others 1.
PRESETS: dict[str, Target] = {
    "paper-direct-2": make_target(RepresentationKind.DIRECT, 2),
    "paper-direct-3": make_target(RepresentationKind.DIRECT, 3),
    "paper-direct-5": make_target(RepresentationKind.DIRECT, 5),
    "paper-direct-6": make_target(RepresentationKind.DIRECT, 6),
    "paper-alt-2": make_target(RepresentationKind.ALTERNATING, 2),
    "paper-alt-3": make_target(RepresentationKind.ALTERNATING, 3),
    "paper-alt-5": make_target(RepresentationKind.ALTERNATING, 5, 0.5),
    "paper-alt-6": make_target(RepresentationKind.ALTERNATING, 6),
}


@dataclass(frozen=True)
class SearchRegion:
    """Rectangle in the z plane plus the per-axis seed counts."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    grid_re: int = 40
    grid_im: int = 40

    def __post_init__(self):
        for name in ("re_min", "re_max", "im_min", "im_max"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise InputError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))
        if not self.re_min < self.re_max:
            raise InputError("re_min must be < re_max")
        if not self.im_min < self.im_max:
            raise InputError("im_min must be < im_max")
        for name in ("grid_re", "grid_im"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 2:
                raise InputError(f"{name} must be an integer >= 2, got {v!r}")

    def contains(self, z: complex) -> bool:
        return (
            self.re_min <= z.real <= self.re_max
            and self.im_min <= z.imag <= self.im_max
        )


@dataclass
class RootRecord:
    """A located zero: position, residual, verification, conjugate link.

    winding is the argument-principle count on the verification circle
    (1 for a certified simple zero; larger counts flag multiplicity).
    """

    location: complex
    residual: float
    verified: bool
    conjugate_of: int | None
    winding: int | None = None


@dataclass(frozen=True)
class NewtonFailure:
    """Why a seed did not produce a root."""

    reason: str  # "pole" | "stagnation" | "escape" | "max-iter"
    last: complex
    iterations: int


def newton_refine(
    target: Target,
    seed,
    tol: float = 1e-10,
    max_iter: int = 60,
    *,
    box: tuple[float, float, float, float] | None = None,
    gate: float = POLE_GATE,
):
    """Newton iteration from seed; RootRecord on success, NewtonFailure else.

    Success requires both |f(z)| <= tol and the last step below tol.  The
    box is the escape fence; by default it extends 25 units around the seed,
    wide enough that a genuine basin is never cut, while unbounded drifts
    (targets with no zeros at all) are cut off quickly.
    """
    z = complex(seed)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"seed must be finite, got {seed!r}")
    if tol <= 0.0:
        raise InputError(f"tol must be positive, got {tol}")
    if box is None:
        box = (z.real - 25.0, z.real + 25.0, z.imag - 25.0, z.imag + 25.0)
    iterations = 0
    while iterations < max_iter:
        if target.pole_distance_at(z) <= gate:
            return NewtonFailure("pole", z, iterations)
        fz = target.value_at(z)
        dz = target.derivative_at(z)
        if abs(dz) < 1e-14:
            return NewtonFailure("stagnation", z, iterations)
        step = fz / dz
        z_next = z - step
        iterations += 1
        if not (
            box[0] <= z_next.real <= box[1] and box[2] <= z_next.imag <= box[3]
        ):
            return NewtonFailure("escape", z_next, iterations)
        z = z_next
        if abs(step) < tol:
            if target.pole_distance_at(z) <= gate:
                return NewtonFailure("pole", z, iterations)
            if abs(target.value_at(z)) <= tol:
                z = _polish(target, z, box, gate)
                return RootRecord(
                    location=z,
                    residual=abs(target.value_at(z)),
                    verified=False,
                    conjugate_of=None,
                )
            # Tiny step at a large residual is a near-stationary point, not
            # convergence; keep iterating until a definite outcome.
    return NewtonFailure("max-iter", z, max_iter)


def _polish(target, z, box, gate):
    """A couple of extra Newton steps to push the residual to rounding."""
    for _ in range(2):
        dz = target.derivative_at(z)
        if abs(dz) < 1e-14:
            break
        z_next = z - target.value_at(z) / dz
        if not (
            box[0] <= z_next.real <= box[1] and box[2] <= z_next.imag <= box[3]
        ):
            break
        if target.pole_distance_at(z_next) <= gate:
            break
        if abs(target.value_at(z_next)) <= abs(target.value_at(z)):
            z = z_next
        else:
            break
    return z


def winding_count(
    target: Target,
    center,
    radius: float,
    samples: int = 256,
    *,
    gate: float = POLE_GATE,
) -> int:
    """Winding number of the target around 0 along a circle.

    Valid as a zero count only when the disc is pole-free; lattice poles
    strictly inside are detected analytically and raise ContourError.
    Phase steps above pi/2 are refused (ResolutionError) rather than
    unwrapped optimistically.
    """
    center = complex(center)
    if not (math.isfinite(center.real) and math.isfinite(center.imag)):
        raise InputError(f"center must be finite, got {center!r}")
    if not (isinstance(radius, (int, float)) and radius > 0.0):
        raise InputError(f"radius must be positive, got {radius!r}")
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 8:
        raise InputError(f"samples must be an integer >= 8, got {samples!r}")

    # Analytic pole check: a lattice point i*k*spacing lies inside the circle
    # iff |center.re| < radius and k*spacing falls within the chord.
    for r, lg in zip(target.members, target.logs):
        spacing = TWO_PI / lg
        if abs(center.real) < radius:
            half = math.sqrt(radius * radius - center.real * center.real)
            k_lo = math.ceil((center.imag - half) / spacing)
            k_hi = math.floor((center.imag + half) / spacing)
            if k_lo <= k_hi:
                raise ContourError(
                    f"pole 2*pi*i*{k_lo}/log({r}) lies inside the contour"
                    f" around {center} (radius {radius})"
                )

    theta = np.linspace(0.0, TWO_PI, samples + 1)
    pts = center + radius * np.exp(1j * theta)
    clearance = min(target.pole_distance_at(complex(p)) for p in pts)
    if clearance <= gate:
        raise ContourError(
            f"contour around {center} (radius {radius}) passes within"
            f" {clearance:.3e} of a pole"
        )
    values = np.array([target.value_at(complex(p)) for p in pts])
    if np.any(values == 0):
        raise ResolutionError("exact zero on the contour; perturb the radius")
    steps = np.angle(values[1:] / values[:-1])
    worst = float(np.max(np.abs(steps)))
    if worst > math.pi / 2.0:
        raise ResolutionError(
            f"largest phase step {worst:.3f} exceeds pi/2 at {samples}"
            " samples; increase samples"
        )
    total = float(steps.sum()) / TWO_PI
    count = round(total)
    if abs(total - count) > 0.25:
        raise ResolutionError(
            f"accumulated phase {total:.3f} turns is not close to an integer"
        )
    return int(count)


def _boundary_distance(x: float, y: float, region: SearchRegion) -> tuple[float, str]:
    """Distance from a point to the rectangle boundary, and the nearest side."""
    inside_x = region.re_min <= x <= region.re_max
    inside_y = region.im_min <= y <= region.im_max
    gaps = (
        (abs(x - region.re_min), "re_min"),
        (abs(region.re_max - x), "re_max"),
        (abs(y - region.im_min), "im_min"),
        (abs(region.im_max - y), "im_max"),
    )
    if inside_x and inside_y:
        return min(gaps)
    dx = max(region.re_min - x, 0.0, x - region.re_max)
    dy = max(region.im_min - y, 0.0, y - region.im_max)
    side = min(
        (g for g in gaps),
        key=lambda g: g[0],
    )[1]
    return math.hypot(dx, dy), side


def _nudged(region: SearchRegion, target: Target, gate: float) -> SearchRegion:
    """Shift any rectangle side that a lattice pole touches, one cell outward."""
    cell_re = (region.re_max - region.re_min) / (region.grid_re - 1)
    cell_im = (region.im_max - region.im_min) / (region.grid_im - 1)
    for _ in range(2):
        worst: tuple[float, str] | None = None
        for lg in target.logs:
            spacing = TWO_PI / lg
            k_lo = math.floor(region.im_min / spacing) - 1
            k_hi = math.ceil(region.im_max / spacing) + 1
            for k in range(k_lo, k_hi + 1):
                d, side = _boundary_distance(0.0, k * spacing, region)
                if d <= gate and (worst is None or d < worst[0]):
                    worst = (d, side)
        if worst is None:
            return region
        side = worst[1]
        shift = {
            "re_min": {"re_min": region.re_min - cell_re},
            "re_max": {"re_max": region.re_max + cell_re},
            "im_min": {"im_min": region.im_min - cell_im},
            "im_max": {"im_max": region.im_max + cell_im},
        }[side]
        region = replace(region, **shift)
    return region


def find_zeros(
    target: Target,
    region: SearchRegion,
    tol: float = 1e-10,
    *,
    threads: int = 1,
    gate: float = POLE_GATE,
) -> list[RootRecord]:
    """All roots of the target inside the region, verified and sorted.

    Deterministic for a given (target, region, tol): seeds are refined
    independently (optionally across threads), collected in seed order,
    deduplicated at radius 10*tol, canonicalized into exact conjugate
    pairs, sorted by (im, re), and each verified by a winding count on a
    pole-free circle.  Unverifiable candidates are kept with
    verified=False rather than dropped.
    """
    if tol <= 0.0:
        raise InputError(f"tol must be positive, got {tol}")
    if isinstance(threads, bool) or not isinstance(threads, int) or threads < 1:
        raise InputError(f"threads must be an integer >= 1, got {threads!r}")
    region = _nudged(region, target, gate)

    res = np.linspace(region.re_min, region.re_max, region.grid_re)
    ims = np.linspace(region.im_min, region.im_max, region.grid_im)
    seeds = [complex(a, b) for b in ims for a in res]
    margin_re = max(1.0, 0.5 * (region.re_max - region.re_min))
    margin_im = max(1.0, 0.5 * (region.im_max - region.im_min))
    box = (
        region.re_min - margin_re,
        region.re_max + margin_re,
        region.im_min - margin_im,
        region.im_max + margin_im,
    )
    refine = partial(
        newton_refine, target, tol=tol, max_iter=60, box=box, gate=gate
    )
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(refine, seeds))
    else:
        results = [refine(seed) for seed in seeds]

    # Seed-order deduplication: with a fixed seed list this is schedule
    # independent.  Keep the lowest residual per cluster.
    dedupe_radius = 10.0 * tol
    roots: list[RootRecord] = []
    for outcome in results:
        if not isinstance(outcome, RootRecord):
            continue
        if not region.contains(outcome.location):
            continue
        for i, kept in enumerate(roots):
            if abs(outcome.location - kept.location) <= dedupe_radius:
                if outcome.residual < kept.residual:
                    roots[i] = outcome
                break
        else:
            roots.append(outcome)

    for rec in roots:
        if abs(rec.location.imag) <= dedupe_radius:
            rec.location = complex(rec.location.real, 0.0)

    _canonicalize_conjugates(roots, dedupe_radius)
    for rec in roots:
        rec.residual = abs(target.value_at(rec.location))
    roots.sort(key=lambda r: (r.location.imag, r.location.real))

    for i, rec in enumerate(roots):
        if rec.location.imag != 0.0:
            mirror = rec.location.conjugate()
            for j, other in enumerate(roots):
                if j != i and other.location == mirror:
                    rec.conjugate_of = j
                    break

    _verify(target, roots, tol, gate)
    return roots


def _canonicalize_conjugates(roots: list[RootRecord], radius: float) -> None:
    """Average near-conjugate pairs into exact mirror locations."""
    upper = [r for r in roots if r.location.imag > 0.0]
    lower = [r for r in roots if r.location.imag < 0.0]
    taken: set[int] = set()
    for rec in upper:
        best_j = -1
        best_d = radius
        mirror = rec.location.conjugate()
        for j, other in enumerate(lower):
            if j in taken:
                continue
            d = abs(other.location - mirror)
            if d <= best_d:
                best_d = d
                best_j = j
        if best_j >= 0:
            taken.add(best_j)
            other = lower[best_j]
            re = 0.5 * (rec.location.real + other.location.real)
            im = 0.5 * (rec.location.imag - other.location.imag)
            rec.location = complex(re, im)
            other.location = complex(re, -im)


def _verify(target, roots, tol, gate) -> None:
    locations = [r.location for r in roots]
    for i, rec in enumerate(roots):
        neighbor = min(
            (abs(rec.location - other) for j, other in enumerate(locations) if j != i),
            default=math.inf,
        )
        base_radius = 0.5 * min(
            target.pole_distance_at(rec.location), neighbor, 1.0
        )
        count = None
        for shrink in (1.0, 0.5, 0.25):
            radius = base_radius * shrink
            if radius <= gate:
                continue
            samples = 256
            while samples <= 4096 and count is None:
                try:
                    count = winding_count(
                        target, rec.location, radius, samples, gate=gate
                    )
                except ResolutionError:
                    samples *= 2
                except ContourError:
                    break
            if count is not None:
                break
        rec.winding = count
        rec.verified = count == 1 and rec.residual <= tol
