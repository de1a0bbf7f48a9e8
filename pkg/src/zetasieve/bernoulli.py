"""Exact Bernoulli numbers.

Sign convention B_1 = -1/2, forced by the Laurent expansion of 1/(e**x - 1)
that the series representation is built on.  Values are exact rationals;
float conversion is a separate, explicit step.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError

__all__ = ["BernoulliTable", "bernoulli_table", "DEFAULT_MAX_INDEX"]

DEFAULT_MAX_INDEX = 200


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable table of B_0 .. B_max_index as exact rationals."""

    max_index: int
    values: tuple[Fraction, ...]

    def __getitem__(self, index: int) -> Fraction:
        if not 0 <= index <= self.max_index:
            raise InputError(
                f"Bernoulli index {index} outside table range 0..{self.max_index}"
            )
        return self.values[index]

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.values)


def bernoulli_table(max_index, *, maximum: int = DEFAULT_MAX_INDEX) -> BernoulliTable:
    """B_0 .. B_max_index via the binomial recurrence, exactly.

    sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.  With exact
    rationals the recurrence is stable (no cancellation concern applies to
    Fraction arithmetic).
    """
    if isinstance(max_index, bool) or not isinstance(max_index, int):
        raise InputError(f"max_index must be an integer, got {max_index!r}")
    if max_index < 0:
        raise InputError(f"max_index must be >= 0, got {max_index}")
    if max_index > maximum:
        raise InputError(
            f"max_index {max_index} exceeds the configured maximum {maximum}"
        )
    values = [Fraction(1)]
    for m in range(1, max_index + 1):
        acc = Fraction(0)
        for j in range(m):
            if values[j]:
                acc += comb(m + 1, j) * values[j]
        values.append(-acc / (m + 1))
    return BernoulliTable(max_index=max_index, values=tuple(values))
