"""Numerical roots of integer polynomials with certified residuals.

Strategy: simultaneous Aberth iteration in double precision from a
perturbed-circle start, then a short high-precision Newton polish of
each root against the exact integer coefficients. Every reported root
carries a residual |p(z)| / max_k |coeff_k| evaluated at 60 digits, and
the whole set is rejected if any residual misses the caller's tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import mpmath as mp

from .errors import ConvergenceError
from .polynomial import IntPolynomial

_ABERTH_MAX_ITER = 500
_ABERTH_STOP = 1e-14
_POLISH_DPS = 50
_RESIDUAL_DPS = 60
_NEWTON_STEPS = 12
_REAL_AXIS_TOL = 1e-8
_PAIR_TOL = 1e-6


@dataclass(frozen=True)
class RootSet:
    """All complex roots of a polynomial, with evaluation residuals.

    ``roots[i]`` and ``residuals[i]`` correspond; ``max_modulus`` is the
    largest |z| over the set (0.0 for constant polynomials). Roots are
    sorted by real part, then imaginary part.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    max_modulus: float

    def __post_init__(self):
        if len(self.roots) != len(self.residuals):
            raise ValueError("roots and residuals must align")

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "residuals": list(self.residuals),
            "max_modulus": self.max_modulus,
        }


def polynomial_roots(p: IntPolynomial, tol: float = 1e-8) -> RootSet:
    """Find all roots of p, raising ConvergenceError on residuals >= tol."""
    if not p:
        raise ValueError("the zero polynomial has no well-defined root set")
    if p.degree == 0:
        return RootSet((), (), 0.0)

    coeffs = list(p.coefficients)
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1

    roots = [0j] * zero_mult
    if len(coeffs) > 1:
        approx = _aberth(coeffs)
        roots.extend(_polish(z, coeffs) for z in approx)

    roots = _symmetrize(roots)
    roots.sort(key=lambda z: (z.real, z.imag))

    residuals = tuple(_residual(p.coefficients, z) for z in roots)
    bad = [i for i, r in enumerate(residuals) if not r < tol]
    if bad:
        raise ConvergenceError(
            f"{len(bad)} of {len(roots)} roots have residual >= {tol:g}",
            roots=tuple(roots),
            residuals=residuals,
        )
    max_mod = max((abs(z) for z in roots), default=0.0)
    return RootSet(tuple(roots), residuals, max_mod)


def _aberth(coeffs: list[int]) -> list[complex]:
    """Simultaneous root iteration on the zero-root-free part, in float."""
    d = len(coeffs) - 1
    fc = [float(c) for c in coeffs]
    lead = fc[-1]
    radius = 0.7 * _fujiwara_radius(fc)
    center = -fc[-2] / (d * lead)
    z = [
        center
        + radius
        * (1.0 + 0.05 * math.sin(3.0 * j + 1.0))
        * cmath.exp(1j * (2.0 * math.pi * j / d + 0.4))
        for j in range(d)
    ]
    for _ in range(_ABERTH_MAX_ITER):
        max_step = 0.0
        for i in range(d):
            pv, dv = _horner_pair(fc, z[i])
            if dv == 0:
                z[i] += 1e-6 * (1.0 + abs(z[i]))
                max_step = math.inf
                continue
            ratio = pv / dv
            s = sum(1.0 / (z[i] - z[j]) for j in range(d) if j != i)
            denom = 1.0 - ratio * s
            step = ratio if denom == 0 else ratio / denom
            z[i] -= step
            rel = abs(step) / (1.0 + abs(z[i]))
            if rel > max_step:
                max_step = rel
        if max_step <= _ABERTH_STOP:
            break
    return z


def _fujiwara_radius(fc: list[float]) -> float:
    d = len(fc) - 1
    lead = abs(fc[-1])
    r = 0.0
    for k in range(1, d + 1):
        c = abs(fc[d - k])
        if c:
            r = max(r, (c / lead) ** (1.0 / k))
    return 2.0 * r if r else 1.0


def _horner_pair(fc: list[float], z: complex) -> tuple[complex, complex]:
    pv = 0j
    dv = 0j
    for c in reversed(fc):
        dv = dv * z + pv
        pv = pv * z + c
    return pv, dv


def _polish(z: complex, coeffs: list[int]) -> complex:
    """High-precision Newton refinement; keeps the best |p| seen."""
    dcoeffs = _derivative(coeffs)
    with mp.workdps(_POLISH_DPS):
        w = mp.mpc(z)
        pv = _mp_horner(coeffs, w)
        best, best_abs = w, abs(pv)
        for _ in range(_NEWTON_STEPS):
            dv = _mp_horner(dcoeffs, w)
            if dv == 0:
                break
            w = w - pv / dv
            pv = _mp_horner(coeffs, w)
            if abs(pv) < best_abs:
                best, best_abs = w, abs(pv)
        return complex(best)


def _derivative(coeffs: list[int]) -> list[int]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _mp_horner(coeffs, z):
    acc = mp.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _residual(coeffs: tuple[int, ...], z: complex) -> float:
    scale = max(abs(c) for c in coeffs)
    with mp.workdps(_RESIDUAL_DPS):
        val = abs(_mp_horner(coeffs, mp.mpc(z)))
        return float(val / scale)


def _symmetrize(roots: list[complex]) -> list[complex]:
    """Snap near-real roots to the axis and average conjugate partners.

    Pairing is tolerance-gated and greedy; roots without a partner within
    tolerance (clusters from multiple roots, say) pass through untouched,
    since residual certification is what ultimately vouches for them.
    """
    real_part: list[complex] = []
    upper: list[complex] = []
    lower: list[complex] = []
    for z in roots:
        if abs(z.imag) <= _REAL_AXIS_TOL * (1.0 + abs(z)):
            real_part.append(complex(z.real, 0.0))
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)

    out = real_part
    used = [False] * len(lower)
    for z in upper:
        best_j, best_dist = -1, math.inf
        for j, w in enumerate(lower):
            if used[j]:
                continue
            dist = abs(z - w.conjugate())
            if dist < best_dist:
                best_j, best_dist = j, dist
        if best_j >= 0 and best_dist <= _PAIR_TOL * (1.0 + abs(z)):
            used[best_j] = True
            avg = (z + lower[best_j].conjugate()) / 2.0
            out.append(avg)
            out.append(avg.conjugate())
        else:
            out.append(z)
    out.extend(w for j, w in enumerate(lower) if not used[j])
    return out
