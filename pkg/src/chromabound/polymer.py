"""Hard-core polymer machinery for the coloring partition function.

A monomer is a vertex set of size at least 2 inducing a connected
subgraph; its activity at parameter q is S / q^(k-1), where k is its
size and S is the signed sum over connected spanning subgraphs of the
induced graph. The module computes these activities two independent
ways (direct subset enumeration and the linear coefficient of the
coloring polynomial), classifies rooted spanning trees by the
generation conditions that make the signed sum collapse to a single
count, evaluates the exact hard-core partition function, and checks the
fixed-point convergence inequality with a certified geometric tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .chromatic import _chrom, _induced_masks
from .errors import ResourceLimitError
from .graphs import Graph, _components_masks, _connected_sets_masks, neighborhood_profile
from .series import solve_tree_series

_SIGNED_SUM_EDGE_CAP = 24
_PARTITION_VERTEX_CAP = 8
_SUBSET_SIZE_CAP = 16

# Coloring-polynomial subresults are shared across all polymer
# computations; keys are canonical forms, so the cache stays small.
_CHROM_CACHE: dict = {}


# ---------------------------------------------------------------------------
# Signed connected-subgraph sums and monomer activities
# ---------------------------------------------------------------------------

def signed_connected_sum(g: Graph, *, max_edges: int = _SIGNED_SUM_EDGE_CAP) -> int:
    """Sum of (-1)^{|E'|} over connected spanning subgraphs (V, E') of g.

    Enumerated directly over edge subsets with connectivity pruning, so
    it is independent of the polynomial engine and usable as an oracle
    against it.
    """
    if g.n == 0:
        raise ValueError("signed sum needs at least one vertex")
    if not g.is_connected():
        raise ValueError("signed sum is defined for connected graphs only")
    if g.m > max_edges:
        raise ResourceLimitError(
            f"graph has {g.m} edges, exceeding the enumeration cap of {max_edges}"
        )
    edges = sorted(g.edges)
    n, m = g.n, len(edges)

    def spans(chosen_masks: list[int], i: int) -> bool:
        masks = list(chosen_masks)
        for u, v in edges[i:]:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return len(_components_masks(tuple(masks))) == 1

    total = 0
    stack = [(0, [0] * n, 0)]
    while stack:
        i, masks, count = stack.pop()
        if not spans(masks, i):
            continue
        if i == m:
            total += -1 if count % 2 else 1
            continue
        u, v = edges[i]
        with_e = list(masks)
        with_e[u] |= 1 << v
        with_e[v] |= 1 << u
        stack.append((i + 1, masks, count))
        stack.append((i + 1, with_e, count + 1))
    return total


def _s_value_induced(masks: tuple[int, ...], sub_mask: int) -> int:
    """S of the induced subgraph, via the linear coefficient of its
    coloring polynomial (equal to the signed sum for connected graphs)."""
    ind = _induced_masks(masks, sub_mask)
    if len(_components_masks(ind)) != 1:
        raise ValueError("vertex set does not induce a connected subgraph")
    return _chrom(ind, _CHROM_CACHE).coefficients[1]


@dataclass(frozen=True)
class Monomer:
    """A vertex set of size >= 2; validity in a host graph is checked
    where the host is known (activity computations)."""

    vertices: frozenset[int]

    def __init__(self, vertices):
        object.__setattr__(self, "vertices", frozenset(vertices))
        if len(self.vertices) < 2:
            raise ValueError("a monomer needs at least 2 vertices")
        if any(not isinstance(v, int) for v in self.vertices):
            raise TypeError("monomer vertices must be integers")

    def __len__(self) -> int:
        return len(self.vertices)


def activity_exact(g: Graph, m: Monomer) -> tuple[int, int]:
    """The activity of m in g as an exact pair (S, k): value S / q^k."""
    if any(not 0 <= v < g.n for v in m.vertices):
        raise ValueError("monomer vertices out of range for the graph")
    sub_mask = 0
    for v in m.vertices:
        sub_mask |= 1 << v
    s = _s_value_induced(g.adjacency_masks, sub_mask)
    return s, len(m) - 1


def activity(g: Graph, m: Monomer, q):
    """The activity S / q^(|m|-1) at a numeric q (real or complex).

    Exact q (int or Fraction) gives an exact Fraction back.
    """
    if q == 0:
        raise ValueError("activity is undefined at q = 0")
    s, power = activity_exact(g, m)
    if isinstance(q, (int, Fraction)):
        return Fraction(s) / Fraction(q) ** power
    return s / q ** power


def enumerate_monomers(
    g: Graph, *, min_size: int = 2, max_size: int | None = None
) -> Iterator[Monomer]:
    """All monomers of g, each exactly once."""
    if max_size is None:
        max_size = g.n
    for mask in _all_connected_masks(g.adjacency_masks, max(2, min_size), max_size):
        yield Monomer(_bits(mask))


def _all_connected_masks(
    masks: tuple[int, ...], min_size: int, max_size: int
) -> Iterator[int]:
    n = len(masks)
    full = (1 << n) - 1
    for v in range(n):
        allowed = full & ~((1 << v) - 1)
        yield from _connected_sets_masks(masks, v, allowed, min_size, max_size)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


# ---------------------------------------------------------------------------
# Rooted spanning trees and generation conditions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RootedSpanningTree:
    """A spanning tree of ``host`` rooted at vertex 0.

    ``parent`` maps every non-root vertex to its predecessor and
    ``depth`` gives the generation number, 0 at the root.
    """

    host: Graph
    parent: dict[int, int]
    depth: dict[int, int]
    root: int = 0

    def __post_init__(self):
        n = self.host.n
        if not 0 <= self.root < n:
            raise ValueError("root out of range")
        if set(self.parent) != set(range(n)) - {self.root}:
            raise ValueError("parent map must cover exactly the non-root vertices")
        if self.depth.get(self.root) != 0:
            raise ValueError("root must have depth 0")
        for v, p in self.parent.items():
            if not self.host.has_edge(v, p):
                raise ValueError(f"tree edge {{{v}, {p}}} is not a host edge")
            if self.depth.get(v) != self.depth.get(p, -2) + 1:
                raise ValueError("depth must increase by 1 along parent links")

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return frozenset(
            (min(v, p), max(v, p)) for v, p in self.parent.items()
        )


def enumerate_spanning_trees(g: Graph) -> Iterator[RootedSpanningTree]:
    """Every spanning tree of g exactly once, rooted at vertex 0.

    Edge-by-edge inclusion/exclusion: an edge is included only when it
    joins two current components, and a branch is abandoned as soon as
    the chosen plus remaining edges can no longer connect the graph.
    """
    if g.n == 0:
        raise ValueError("spanning trees need at least one vertex")
    if not g.is_connected():
        raise ValueError("spanning trees exist only for connected graphs")
    edges = sorted(g.edges)
    n, m = g.n, len(edges)

    def feasible(parents: list[int], i: int) -> bool:
        scratch = list(parents)

        def find(x: int) -> int:
            while scratch[x] != x:
                scratch[x] = scratch[scratch[x]]
                x = scratch[x]
            return x

        comps = len({find(v) for v in range(n)})
        for u, v in edges[i:]:
            ru, rv = find(u), find(v)
            if ru != rv:
                scratch[ru] = rv
                comps -= 1
        return comps == 1

    def rec(i: int, parents: list[int], chosen: list[tuple[int, int]]):
        if len(chosen) == n - 1:
            yield _root_tree(g, chosen)
            return
        if i == m or not feasible(parents, i):
            return
        u, v = edges[i]
        ru, rv = _find(parents, u), _find(parents, v)
        if ru != rv:
            merged = list(parents)
            merged[ru] = rv
            yield from rec(i + 1, merged, chosen + [(u, v)])
        yield from rec(i + 1, parents, chosen)

    yield from rec(0, list(range(n)), [])


def _find(parents: list[int], x: int) -> int:
    while parents[x] != x:
        x = parents[x]
    return x


def _root_tree(g: Graph, tree_edges: list[tuple[int, int]]) -> RootedSpanningTree:
    adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    parent: dict[int, int] = {}
    depth = {0: 0}
    queue = [0]
    while queue:
        v = queue.pop()
        for w in adj[v]:
            if w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                queue.append(w)
    return RootedSpanningTree(host=g, parent=parent, depth=depth)


def classify_tree(t: RootedSpanningTree) -> str:
    """Sort a rooted spanning tree into one of three buckets.

    "penrose": no host edge joins equal-depth vertices, and no host
    edge {i, j} has depth(j) = depth(i) - 1 with j > parent(i).
    "weakly-penrose-only": not that, but no host edge joins two
    children of a common parent. "neither": some host edge does.
    """
    tree_edges = t.edges
    depth, parent = t.depth, t.parent
    same_gen_ok = True
    cross_gen_ok = True
    sibling_ok = True
    for i, j in t.host.edges:
        if (i, j) in tree_edges:
            continue
        di, dj = depth[i], depth[j]
        if di == dj:
            same_gen_ok = False
            if parent.get(i) == parent.get(j):
                sibling_ok = False
        elif dj == di - 1 and j > parent[i]:
            cross_gen_ok = False
        elif di == dj - 1 and i > parent[j]:
            cross_gen_ok = False
    if same_gen_ok and cross_gen_ok:
        return "penrose"
    if sibling_ok:
        return "weakly-penrose-only"
    return "neither"


@dataclass(frozen=True)
class PenroseReport:
    """Signed sum S next to the tree census it collapses onto."""

    s_value: int
    tree_count: int
    penrose_count: int
    weak_penrose_count: int

    def __post_init__(self):
        if not 0 <= self.penrose_count <= self.weak_penrose_count <= self.tree_count:
            raise ValueError("tree counts must be ordered and non-negative")

    def to_json(self) -> dict:
        return {
            "s_value": str(self.s_value),
            "tree_count": str(self.tree_count),
            "penrose_count": str(self.penrose_count),
            "weak_penrose_count": str(self.weak_penrose_count),
        }


def penrose_report(g: Graph) -> PenroseReport:
    """Count spanning trees by class and set them against the signed sum.

    S comes from direct subset enumeration when the edge count permits,
    otherwise from the polynomial route; the tree census is always a
    separate enumeration, so the collapse identity stays a real check.
    """
    if g.m <= _SIGNED_SUM_EDGE_CAP:
        s = signed_connected_sum(g)
    else:
        if not g.is_connected():
            raise ValueError("signed sum is defined for connected graphs only")
        full = (1 << g.n) - 1
        s = _s_value_induced(g.adjacency_masks, full)
    trees = penrose = weak = 0
    for t in enumerate_spanning_trees(g):
        cls = classify_tree(t)
        trees += 1
        if cls == "penrose":
            penrose += 1
        if cls != "neither":
            weak += 1
    return PenroseReport(
        s_value=s,
        tree_count=trees,
        penrose_count=penrose,
        weak_penrose_count=weak,
    )


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees, via a Laplacian minor determinant.

    Float-precision arithmetic rounded to the nearest integer; intended
    for sizing decisions, with exactness guaranteed only while counts
    stay well below 2^52.
    """
    if g.n <= 1:
        return 1
    if not g.is_connected():
        return 0
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return int(round(float(np.linalg.det(lap[1:, 1:]))))


# ---------------------------------------------------------------------------
# Exact partition function
# ---------------------------------------------------------------------------

def hardcore_partition(
    g: Graph, q, *, max_vertices: int = _PARTITION_VERTEX_CAP
) -> Fraction:
    """The hard-core partition function of the monomer gas, exactly.

    Sum over all collections of pairwise-disjoint monomers of the
    product of their activities, in rational arithmetic. Multiplying by
    q^n recovers the number of proper q-colorings, and the test suite
    holds the implementation to that identity.
    """
    if isinstance(q, (float, complex)):
        raise TypeError("partition function requires exact rational q, not float")
    q = Fraction(q)
    if q == 0:
        raise ValueError("partition function is undefined at q = 0")
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"graph has {g.n} vertices, exceeding the cap of {max_vertices}"
        )
    masks = g.adjacency_masks
    activities: dict[int, Fraction] = {}
    for mask in _all_connected_masks(masks, 2, g.n):
        s = _s_value_induced(masks, mask)
        activities[mask] = Fraction(s) / q ** (mask.bit_count() - 1)

    memo: dict[int, Fraction] = {0: Fraction(1)}

    def rec(avail: int) -> Fraction:
        hit = memo.get(avail)
        if hit is not None:
            return hit
        low = avail & -avail
        total = rec(avail & ~low)
        for mask, z in activities.items():
            if mask & low and mask & avail == mask:
                total += z * rec(avail & ~mask)
        memo[avail] = total
        return total

    return rec((1 << g.n) - 1)


# ---------------------------------------------------------------------------
# Activity norms and the fixed-point convergence check
# ---------------------------------------------------------------------------

def cq_norm_scaled(g: Graph, n: int) -> int:
    """max over vertices x of the sum of |S| over size-n monomers at x.

    This is the activity norm with the q-power stripped off, so it is an
    integer.
    """
    if n < 2:
        raise ValueError("monomer sizes start at 2")
    if n > _SUBSET_SIZE_CAP:
        raise ResourceLimitError(
            f"subset enumeration capped at size {_SUBSET_SIZE_CAP}"
        )
    if n > g.n:
        return 0
    masks = g.adjacency_masks
    full = (1 << g.n) - 1
    best = 0
    for x in range(g.n):
        acc = 0
        for mask in _connected_sets_masks(masks, x, full, n, n):
            acc += abs(_s_value_induced(masks, mask))
        best = max(best, acc)
    return best


def cq_norm(g: Graph, n: int, q: float) -> float:
    """max over vertices of the summed activity magnitudes at size n."""
    if not q > 0:
        raise ValueError("q must be positive")
    return cq_norm_scaled(g, n) / q ** (n - 1)


@dataclass(frozen=True)
class CnBoundReport:
    """Activity norm against the constrained-tree coefficient, both
    exactly (scaled by q^{n-1}) and at the evaluation q."""

    lhs: float
    rhs: float
    holds: bool
    lhs_scaled: int
    rhs_scaled: int

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "lhs_scaled": str(self.lhs_scaled),
            "rhs_scaled": str(self.rhs_scaled),
        }


def verify_cn_bound(g: Graph, n: int, q: float) -> CnBoundReport:
    """Check that the size-n activity norm is at most q^{-(n-1)} t_n.

    t_n is the coefficient of the rooted-tree series built from the
    graph's own neighborhood growth profile. The comparison is exact:
    both sides are integers after scaling by q^{n-1}.
    """
    if not q > 0:
        raise ValueError("q must be positive")
    lhs_scaled = cq_norm_scaled(g, n)
    if g.max_degree == 0:
        rhs_scaled = 0
    else:
        prof = neighborhood_profile(g)
        _, tbar = solve_tree_series(
            prof.z_tilde_polynomial(), prof.z_polynomial(), n
        )
        rhs_scaled = tbar.coefficient(n)
    scale = q ** (n - 1)
    return CnBoundReport(
        lhs=lhs_scaled / scale,
        rhs=rhs_scaled / scale,
        holds=lhs_scaled <= rhs_scaled,
        lhs_scaled=lhs_scaled,
        rhs_scaled=rhs_scaled,
    )


@dataclass(frozen=True)
class FpConditionReport:
    """Certificate for the fixed-point convergence inequality.

    ``head`` is the exact enumerated part sum_{n=2}^{order} e^{an} C_n;
    the tail beyond the truncation is dominated by the geometric series
    e^a r^n with r = e^{1+a} * Delta / q, giving ``tail_bound`` when
    r < 1. The inequality asks head + tail <= e^a - 1 = ``threshold``.
    """

    status: str
    head: float
    tail_bound: float | None
    threshold: float
    geometric_ratio: float
    order: int
    q: float
    a: float

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "head": self.head,
            "tail_bound": self.tail_bound,
            "threshold": self.threshold,
            "geometric_ratio": self.geometric_ratio,
            "order": str(self.order),
            "q": self.q,
            "a": self.a,
        }


def check_fp_condition(g: Graph, q: float, a: float, order: int) -> FpConditionReport:
    """Decide the convergence inequality at (q, a) with truncation order.

    Returns status "violated" when the enumerated head alone exceeds
    e^a - 1 (conclusive regardless of the tail), "satisfied" when head
    plus the certified geometric tail stays within it, and
    "inconclusive" otherwise, in particular whenever the tail ratio
    reaches 1 and certification is impossible.
    """
    if not q > 0:
        raise ValueError("q must be positive")
    if not a > 0:
        raise ValueError("a must be positive")
    if order < 2:
        raise ValueError("truncation order must be at least 2")
    delta = g.max_degree
    threshold = math.expm1(a)
    head = 0.0
    for n in range(2, min(order, g.n) + 1):
        scaled = cq_norm_scaled(g, n)
        if scaled:
            head += math.exp(a * n) * scaled / q ** (n - 1)
    ratio = math.exp(1.0 + a) * delta / q
    if head > threshold:
        return FpConditionReport(
            "violated", head, None, threshold, ratio, order, q, a
        )
    if ratio >= 1.0:
        return FpConditionReport(
            "inconclusive", head, None, threshold, ratio, order, q, a
        )
    tail = math.exp(a) * ratio ** order / (1.0 - ratio)
    status = "satisfied" if head + tail <= threshold else "inconclusive"
    return FpConditionReport(status, head, tail, threshold, ratio, order, q, a)
