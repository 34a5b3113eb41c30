"""Truncated power series for rooted-tree generating functions.

The central object is the pair of formal series U(x) and T(x) solving

    U = x * Zt(U),        T = x * Z(U),

where Z and Zt are polynomials with constant term 1 and non-negative
integer coefficients (neighborhood growth profiles). Coefficients are
computed exactly over the integers by fixed-point iteration, which
stabilizes coefficient n after n rounds. The module also locates the
radius sup_u u/Zt(u) and the saturation point x = Z^{-1}(b)/Zt(Z^{-1}(b))
used by the bound optimizers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .optimize import bisect_increasing
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients a_1 .. a_order of a series with no constant term."""

    coefficients: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if len(self.coefficients) != self.order:
            raise ValueError("coefficient count must equal the order")
        if any(not isinstance(c, int) for c in self.coefficients):
            raise TypeError("coefficients must be integers")

    def coefficient(self, n: int) -> int:
        """The coefficient of x^n, for 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 1..{self.order}")
        return self.coefficients[n - 1]

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coefficients):
            acc = (acc + c) * x
        return acc

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [str(c) for c in self.coefficients],
        }


def _check_profile_poly(p: IntPolynomial, name: str) -> None:
    if not p.coefficients or p.coefficients[0] != 1:
        raise ValueError(f"{name} must have constant term 1")
    if any(c < 0 for c in p.coefficients):
        raise ValueError(f"{name} must have non-negative coefficients")


def solve_tree_series(
    z_tilde: IntPolynomial, z: IntPolynomial, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Solve U = x*z_tilde(U) and T = x*z(U) to the given order.

    Returns the pair (U, T) as truncated integer series.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    _check_profile_poly(z_tilde, "z_tilde")
    _check_profile_poly(z, "z")

    u = [0] * (order + 1)
    for _ in range(order):
        u = _shift(_eval_at_series(z_tilde, u, order), order)
    t = _shift(_eval_at_series(z, u, order), order)
    return (
        TruncatedSeries(tuple(u[1:]), order),
        TruncatedSeries(tuple(t[1:]), order),
    )


def _mul_trunc(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(min(len(b), order + 1 - i)):
            out[i + j] += ai * b[j]
    return out


def _eval_at_series(p: IntPolynomial, u: list[int], order: int) -> list[int]:
    coeffs = p.coefficients
    acc = [coeffs[-1]] + [0] * order
    for c in reversed(coeffs[:-1]):
        acc = _mul_trunc(acc, u, order)
        acc[0] += c
    return acc


def _shift(series: list[int], order: int) -> list[int]:
    return [0] + series[:order]


@lru_cache(maxsize=None)
def t_n_delta(delta: int, order: int) -> TruncatedSeries:
    """The series t_n for the degree-delta regular profile, to the
    given order.

    t_n is [x^n] T where T = x*(1+U)^delta and U = x*(1+U)^(delta-1):
    the number of n-vertex rooted subtrees of the infinite delta-regular
    tree containing the root.
    """
    if delta < 1:
        raise ValueError("delta must be at least 1")
    one_plus = IntPolynomial([1, 1])
    _, tbar = solve_tree_series(one_plus ** (delta - 1), one_plus ** delta, order)
    return tbar


def series_radius(z_tilde: IntPolynomial) -> tuple[float, float]:
    """Radius of convergence sup_u u/z_tilde(u) and the maximizing u.

    For constant z_tilde the supremum is infinite; for linear z_tilde it
    is the reciprocal slope, approached as u grows without bound. In
    both cases the maximizer is reported as inf.
    """
    _check_profile_poly(z_tilde, "z_tilde")
    if z_tilde.degree == 0:
        return math.inf, math.inf
    if z_tilde.degree == 1:
        return 1.0 / z_tilde.coefficients[1], math.inf
    dz = z_tilde.derivative()
    u0 = bisect_increasing(lambda u: u * dz(u) - z_tilde(u), 0.0, 0.0)
    return u0 / z_tilde(u0), u0


def sup_x_threshold(b: float, z: IntPolynomial, z_tilde: IntPolynomial) -> float:
    """The point x_b = u_b / z_tilde(u_b) where u_b solves z(u_b) = b.

    Requires b > 1 and a non-constant z, so that the level set exists on
    u > 0.
    """
    if not b > 1.0:
        raise ValueError("level b must exceed 1")
    _check_profile_poly(z, "z")
    _check_profile_poly(z_tilde, "z_tilde")
    if z.degree < 1:
        raise ValueError("z must be non-constant to reach the level b")
    u_b = bisect_increasing(z, float(b), 0.0)
    return u_b / z_tilde(u_b)
