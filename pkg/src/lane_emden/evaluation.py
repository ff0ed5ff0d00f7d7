"""Evaluation of truncated series solutions and the exact residual check.

A :class:`TruncatedSeries` is the degree-``m`` polynomial obtained by
evaluating the symbolic coefficient table at a fixed index.  It can be
evaluated in floating point (Horner over ``u = x**2``, exploiting that the
series is even) or as an exact fraction.  :func:`residual_coefficients`
substitutes the truncated series back into f'' + (2/x) f' + f^n using
brute-force exact series arithmetic; by construction of the recurrence the
result must vanish identically through order ``m - 2``, which makes it the
strongest available correctness oracle for the coefficient engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import CoeffLike
from .series import (
    CoefficientTable,
    EvaluatedTable,
    compute_coefficients,
    evaluate_table,
    mul_truncated,
)


@dataclass(frozen=True)
class TruncatedSeries:
    """Evaluated coefficients ``a_k`` through ``x**max_index`` at one index."""

    n_value: Fraction
    max_index: int
    a_values: tuple[Fraction, ...]

    @classmethod
    def from_table(cls, ev: EvaluatedTable) -> "TruncatedSeries":
        return cls(
            n_value=ev.n_value,
            max_index=ev.max_index,
            a_values=ev.a_values,
        )

    @classmethod
    def for_index(cls, n_value: CoeffLike, m: int) -> "TruncatedSeries":
        """Compute and evaluate the coefficient table in one step."""
        table = compute_coefficients(m)
        return cls.from_table(evaluate_table(table, Fraction(n_value)))


def eval_series_float(s: TruncatedSeries, x: float) -> float:
    """Value of the truncated series at ``x`` in double precision.

    Horner evaluation over ``u = x**2`` using only the even coefficients
    (odd ones are identically zero).
    """
    evens = [float(c) for c in s.a_values[::2]]
    u = float(x) * float(x)
    acc = 0.0
    for c in reversed(evens):
        acc = acc * u + c
    return acc


def eval_series_exact(s: TruncatedSeries, x: CoeffLike) -> Fraction:
    """Exact rational value of the truncated series at a rational ``x``."""
    u = Fraction(x) ** 2
    acc = Fraction(0)
    for c in reversed(s.a_values[::2]):
        acc = acc * u + c
    return acc


def residual_coefficients(
    t: CoefficientTable, n_value: int, m: int | None = None
) -> list[Fraction]:
    """Exact residual coefficients of the truncated series in the equation.

    Substituting f = sum_{k<=m} a_k x^k into f'' + (2/x) f' + f^n and
    collecting powers gives the coefficient of ``x**j`` as

        (j + 2) * (j + 3) * a_{j+2} + (f^n)_j      for j = 0 .. m-2,

    with ``f^n`` computed by repeated truncated multiplication (integer
    index required for exactness).  Every entry must be exactly zero.
    """
    if not isinstance(n_value, int) or n_value < 0:
        raise ValueError("exact residual check needs an integer index >= 0")
    if m is None:
        m = t.max_index
    if m > t.max_index:
        raise ValueError("m exceeds the table size")
    a_vals = [poly.evaluate(n_value) for poly in t.a[: m + 1]]
    power = [Fraction(1)] + [Fraction(0)] * m
    for _ in range(n_value):
        power = mul_truncated(power, a_vals, m)
    residual = []
    for j in range(m - 1):
        k = j + 2
        residual.append(k * (k + 1) * a_vals[k] + power[j])
    return residual
