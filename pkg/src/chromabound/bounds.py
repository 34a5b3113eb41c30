"""Zero-free disk radii for the coloring polynomial.

Three nested bounds, each a one-dimensional minimization:

  * the classical degree-only bound, minimizing
    e^a (1+a e^{-a})^{1-1/D} / ((1+a e^{-a})^{1/D} - 1) over a > 0;
  * the improved degree-only bound, minimizing
    (1+x)^{D-1} / (x (2-(1+x)^D)) over 0 < x < 2^{1/D} - 1;
  * the per-graph bound, the same shape with the binomials replaced by
    the graph's neighborhood growth polynomials.

The module also evaluates the per-graph bound a second way, through the
truncated rooted-tree series with a certified-enough tail, computes the
two limiting constants of the degree-only bounds, and verifies actual
zero-freeness by locating every chromatic root.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
from dataclasses import dataclass
from functools import lru_cache

from .chromatic import chromatic_polynomial
from .errors import InconclusiveError
from .graphs import Graph, NeighborhoodProfile, canonical_form, neighborhood_profile
from .optimize import OptimizationResult, bisect_increasing, minimize_scalar
from .roots import polynomial_roots
from .series import series_radius, solve_tree_series

_ORDER_SLACK = 1e-9


@dataclass(frozen=True)
class BoundReport:
    """Bounds for one graph, ordered strongest to weakest.

    ``c_star_graph`` is None for maximum degree below 2, where the
    per-graph formula degenerates; the degree-based fields then report
    the first meaningful degree, 2. ``max_root_modulus`` and
    ``zero_free_verified`` are filled only when roots were computed.
    """

    graph_id: str
    delta: int
    profile: NeighborhoodProfile | None
    c_sokal: float
    c_star_delta: float
    c_star_graph: float | None
    c_star_graph_series: float | None = None
    max_root_modulus: float | None = None
    zero_free_verified: bool = False

    def __post_init__(self):
        if self.c_star_delta > self.c_sokal + _ORDER_SLACK:
            raise ValueError("bound ordering violated: c_star_delta > c_sokal")
        if (
            self.c_star_graph is not None
            and self.c_star_graph > self.c_star_delta + _ORDER_SLACK
        ):
            raise ValueError("bound ordering violated: c_star_graph > c_star_delta")

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "delta": self.delta,
            "profile": None if self.profile is None else self.profile.to_json(),
            "c_sokal": self.c_sokal,
            "c_star_delta": self.c_star_delta,
            "c_star_graph": self.c_star_graph,
            "c_star_graph_series": self.c_star_graph_series,
            "max_root_modulus": self.max_root_modulus,
            "zero_free_verified": self.zero_free_verified,
        }


def graph_id(g: Graph) -> str:
    """Stable identifier built from the canonical form of g."""
    digest = hashlib.sha1(repr(canonical_form(g)).encode()).hexdigest()[:8]
    return f"g{g.n}v{g.m}e-{digest}"


# ---------------------------------------------------------------------------
# Degree-only bounds
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def sokal_bound(delta: int) -> OptimizationResult:
    """The classical degree-only zero-free radius, by minimization."""
    if delta < 2:
        raise ValueError("delta must be at least 2")

    def objective(a: float) -> float:
        w = 1.0 + a * math.exp(-a)
        return math.exp(a) * w ** (1.0 - 1.0 / delta) / (w ** (1.0 / delta) - 1.0)

    return minimize_scalar(objective, 0.0, 10.0)


@lru_cache(maxsize=None)
def cstar_delta(delta: int) -> OptimizationResult:
    """The improved degree-only radius, minimized in the x variable."""
    if delta < 2:
        raise ValueError("delta must be at least 2")
    hi = 2.0 ** (1.0 / delta) - 1.0

    def objective(x: float) -> float:
        return (1.0 + x) ** (delta - 1) / (x * (2.0 - (1.0 + x) ** delta))

    return minimize_scalar(objective, 0.0, hi)


@lru_cache(maxsize=None)
def cstar_delta_a_form(delta: int) -> OptimizationResult:
    """The same improved radius in the a variable, for cross-checking.

    The substitution 2 - e^{-a} = (1+x)^delta identifies the two
    objectives, so the minima must coincide.
    """
    if delta < 2:
        raise ValueError("delta must be at least 2")

    def objective(a: float) -> float:
        b = 2.0 - math.exp(-a)
        return math.exp(a) * b ** (1.0 - 1.0 / delta) / (b ** (1.0 / delta) - 1.0)

    return minimize_scalar(objective, 0.0, 10.0)


def complete_graph_bound(delta: int) -> float:
    """Closed-form per-graph radius of the complete graph on delta+1
    vertices."""
    if delta < 2:
        raise ValueError("delta must be at least 2")
    return (delta - 1.0) ** 2 / (
        3.0 * delta - 1.0 - 2.0 * math.sqrt(2.0 * delta * delta - delta)
    )


@lru_cache(maxsize=None)
def constants() -> dict[str, float]:
    """The two limiting ratios bound/degree as the degree grows."""

    def k_objective(a: float) -> float:
        w = math.log(1.0 + a * math.exp(-a))
        return math.exp(a) * (1.0 + a * math.exp(-a)) / w

    def k_star_objective(y: float) -> float:
        return y / ((2.0 - y) * math.log(y))

    return {
        "K": minimize_scalar(k_objective, 0.0, 10.0).value,
        "K_star": minimize_scalar(k_star_objective, 1.0, 2.0).value,
    }


# ---------------------------------------------------------------------------
# Per-graph bound
# ---------------------------------------------------------------------------

def cstar_graph_opt(g: Graph) -> OptimizationResult:
    """Minimize zt(x) / (x (2 - z(x))) over 0 < x < z^{-1}(2), where z
    and zt are the graph's neighborhood growth polynomials."""
    prof = neighborhood_profile(g)
    z = prof.z_polynomial()
    zt = prof.z_tilde_polynomial()
    x_max = bisect_increasing(z, 2.0, 0.0)

    def objective(x: float) -> float:
        return zt(x) / (x * (2.0 - z(x)))

    return minimize_scalar(objective, 0.0, x_max)


def cstar_graph(g: Graph) -> BoundReport:
    """Per-graph bound report; degree-only bounds fill the weaker fields.

    For maximum degree 1 the per-graph field is reported as None and the
    degree-based fields use degree 2, the first degree where the
    formulas are meaningful.
    """
    delta = g.max_degree
    if delta == 0:
        raise ValueError("per-graph bound undefined for an edgeless graph")
    prof = neighborhood_profile(g)
    ref_delta = max(delta, 2)
    c_graph = cstar_graph_opt(g).value if delta >= 2 else None
    return BoundReport(
        graph_id=graph_id(g),
        delta=delta,
        profile=prof,
        c_sokal=sokal_bound(ref_delta).value,
        c_star_delta=cstar_delta(ref_delta).value,
        c_star_graph=c_graph,
    )


def fp_parameters(g: Graph) -> tuple[float, float]:
    """The pair (a, x): x minimizes the per-graph objective and
    a = -ln(2 - z(x)) is the matching convergence-check parameter."""
    prof = neighborhood_profile(g)
    opt = cstar_graph_opt(g)
    x = opt.argmin
    return -math.log(2.0 - prof.z_polynomial()(x)), x


def cstar_graph_series(g: Graph, order: int = 64) -> float:
    """The per-graph bound recovered from the rooted-tree series.

    For each a on a grid, bisection finds the least k such that
    sum_{n>=1} t_n (e^a/k)^{n-1} stays within 2 - e^{-a}, where the sum
    is the order-N partial sum plus a geometric tail allowance using the
    empirical coefficient ratio inflated by 10%. The evaluation point
    e^a/k is kept below 0.9 of the series radius. The minimum over a
    must agree with the closed-form minimization.
    """
    if order < 8:
        raise ValueError("order must be at least 8")
    prof = neighborhood_profile(g)
    z = prof.z_polynomial()
    zt = prof.z_tilde_polynomial()
    _, tbar = solve_tree_series(zt, z, order)
    coeffs = [float(c) for c in tbar.coefficients]
    radius, _ = series_radius(zt)

    ratios = [
        coeffs[i + 1] / coeffs[i]
        for i in range(max(0, order - 8), order - 1)
        if coeffs[i] > 0.0
    ]
    rho = 1.1 * max(ratios, default=0.0)

    def partial_sum(x: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    def certified_within(x: float, b: float) -> bool:
        if coeffs[-1] == 0.0:
            tail = 0.0
        else:
            if rho * x >= 1.0:
                return False
            tail = coeffs[-1] * x ** (order - 1) * rho * x / (1.0 - rho * x)
        return partial_sum(x) + tail <= b

    def least_kappa(a: float) -> float:
        b = 2.0 - math.exp(-a)
        ea = math.exp(a)
        lo = ea / (0.9 * radius) if math.isfinite(radius) else 1e-12
        if certified_within(ea / lo, b):
            return lo
        hi = lo
        for _ in range(80):
            hi *= 2.0
            if certified_within(ea / hi, b):
                break
        else:
            raise InconclusiveError(
                "tail allowance never certifiable; ratio too close to 1"
            )
        while hi - lo > 1e-12 * hi:
            mid = 0.5 * (lo + hi)
            if certified_within(ea / mid, b):
                hi = mid
            else:
                lo = mid
        return hi

    coarse = minimize_scalar(least_kappa, 1e-3, 3.0, grid_points=96, tol=1e-9)
    return coarse.value


def verify_zero_free(
    g: Graph, *, tol: float = 1e-8, max_vertices: int = 18
) -> BoundReport:
    """Locate every chromatic root and compare against the bounds.

    The verified flag records whether the largest root modulus falls
    strictly inside the strongest applicable bound (the per-graph bound
    for degree >= 2, the degree-2 improved bound for degenerate
    graphs).
    """
    p = chromatic_polynomial(g, max_vertices=max_vertices)
    rs = polynomial_roots(p, tol)
    delta = g.max_degree
    if delta == 0:
        report = BoundReport(
            graph_id=graph_id(g),
            delta=0,
            profile=None,
            c_sokal=sokal_bound(2).value,
            c_star_delta=cstar_delta(2).value,
            c_star_graph=None,
        )
    else:
        report = cstar_graph(g)
    reference = (
        report.c_star_graph if report.c_star_graph is not None else report.c_star_delta
    )
    return dataclasses.replace(
        report,
        max_root_modulus=rs.max_modulus,
        zero_free_verified=rs.max_modulus < reference,
    )
