"""Simple undirected graphs: representation, parsing, generators, profiles.

Vertices are dense integers 0..n-1. The adjacency is mirrored as a tuple
of bitmasks (bit u of ``masks[v]`` set iff u ~ v), which the exhaustive
routines in the rest of the package lean on heavily.

The neighborhood profile of a graph records, for each k, the maximal
number of independent k-subsets inside a single vertex neighborhood
(t_k), and the same maximum when one neighbor is removed first (t~_k).
These two vectors are all the graph-dependent zero-free bound needs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import ChromaboundError, GraphParseError
from .polynomial import IntPolynomial


class Graph:
    """Immutable simple graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            norm.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", None)
        object.__setattr__(self, "_masks", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        if self._adj is None:
            adj = [set() for _ in range(self.n)]
            for u, v in self.edges:
                adj[u].add(v)
                adj[v].add(u)
            object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        return self._adj

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        if self._masks is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            object.__setattr__(self, "_masks", tuple(masks))
        return self._masks

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        masks = tuple(masks)
        edges = []
        for v, m in enumerate(masks):
            m >>= v + 1
            u = v + 1
            while m:
                if m & 1:
                    edges.append((v, u))
                m >>= 1
                u += 1
        return cls(len(masks), edges)

    def neighbors(self, v: int) -> frozenset:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(_components_masks(self.adjacency_masks)) == 1

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of the connected components, each sorted, in order of minimum vertex."""
        return [tuple(_mask_bits(m)) for m in _components_masks(self.adjacency_masks)]

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled densely in sorted vertex order."""
        verts = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(verts)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(verts), edges)

    def relabeled(self, perm: Iterable[int]) -> "Graph":
        """Apply the permutation old-label -> new-label."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _components_masks(masks: tuple[int, ...]) -> list[int]:
    """Connected components of a bitmask adjacency, as vertex masks."""
    n = len(masks)
    seen = 0
    out = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in _mask_bits(frontier):
                nxt |= masks[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

def _refine(masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Stable color refinement: iterate (color, sorted neighbor colors) ranking."""
    n = len(masks)
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(colors[u] for u in _mask_bits(masks[v]))
            sigs.append((colors[v], tuple(neigh)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _relabel_masks(masks: tuple[int, ...], newlabel: list[int]) -> tuple[int, ...]:
    n = len(masks)
    out = [0] * n
    for v in range(n):
        m = 0
        for u in _mask_bits(masks[v]):
            m |= 1 << newlabel[u]
        out[newlabel[v]] = m
    return tuple(out)


def canonical_form(g: Graph) -> tuple[int, ...]:
    """A canonical adjacency-mask tuple: equal iff the graphs are isomorphic.

    Individualization-refinement search returning the lexicographically
    least relabeled mask tuple over the explored branches. Branching is
    restricted to one representative per group of interchangeable
    vertices (identical neighborhoods after ignoring each other), which
    keeps complete and complete-multipartite graphs linear.
    """
    return _canonical_masks(g.adjacency_masks)


def _canonical_masks(masks: tuple[int, ...]) -> tuple[int, ...]:
    n = len(masks)
    if n <= 1:
        return tuple(masks)
    best: list[tuple[int, ...] | None] = [None]

    def search(colors: list[int]) -> None:
        colors = _refine(masks, colors)
        ncolors = len(set(colors))
        if ncolors == n:
            cand = _relabel_masks(masks, colors)
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        # invariant cell choice: among non-singleton classes, smallest
        # size, then smallest color value
        counts: dict[int, int] = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        cell_color = min((sz, c) for c, sz in counts.items() if sz > 1)[1]
        cell = [v for v in range(n) if colors[v] == cell_color]
        tried: list[int] = []
        for v in cell:
            if any(_interchangeable(masks, v, u) for u in tried):
                continue
            tried.append(v)
            child = [2 * c for c in colors]
            child[v] -= 1
            search(child)

    degs = [m.bit_count() for m in masks]
    rank = {d: i for i, d in enumerate(sorted(set(degs)))}
    search([rank[d] for d in degs])
    return best[0]


def _interchangeable(masks: tuple[int, ...], v: int, u: int) -> bool:
    """True when swapping u and v (fixing the rest) is an automorphism.

    Holds iff the two neighborhoods agree once u and v ignore each other;
    adjacency between u and v themselves is symmetric either way.
    """
    return masks[v] & ~(1 << u) == masks[u] & ~(1 << v)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

def parse_graph(text: str, format: str) -> Graph:
    """Parse a graph from text.

    Formats: ``edge-list`` (header "n m", then m lines "u v", 0-based,
    '#' comment lines ignored) and ``dimacs`` ("p edge n m" then m lines
    "e u v", 1-based). Duplicate edges collapse silently; self-loops and
    out-of-range endpoints are errors naming the offending line.
    """
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "dimacs":
        return _parse_dimacs(text)
    raise ValueError(f"unknown graph format {format!r}")


def _data_lines(text: str, comment: str) -> Iterator[tuple[int, str]]:
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        yield i, line


def _parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text, "#")
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphParseError("empty input, expected 'n m' header") from None
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError("header must be two integers 'n m'", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError("header must be two integers 'n m'", lineno) from None
    if n < 0 or m < 0:
        raise GraphParseError("negative count in header", lineno)
    edges = []
    count = 0
    for lineno, line in lines:
        count += 1
        if count > m:
            raise GraphParseError(f"more than the declared {m} edges", lineno)
        edges.append(_parse_endpoint_pair(line, lineno, n, base=0))
    if count < m:
        raise GraphParseError(f"declared {m} edges, found {count}")
    return Graph(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    count = 0
    for lineno, line in _data_lines(text, "c"):
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise GraphParseError("problem line must be 'p edge n m'", lineno)
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise GraphParseError("problem line must be 'p edge n m'", lineno) from None
        elif fields[0] == "e":
            if n is None:
                raise GraphParseError("edge before problem line", lineno)
            count += 1
            if count > m:
                raise GraphParseError(f"more than the declared {m} edges", lineno)
            edges.append(_parse_endpoint_pair(line[1:].strip(), lineno, n, base=1))
        else:
            raise GraphParseError(f"unknown line type {fields[0]!r}", lineno)
    if n is None:
        raise GraphParseError("missing 'p edge n m' line")
    if count < m:
        raise GraphParseError(f"declared {m} edges, found {count}")
    return Graph(n, edges)


def _parse_endpoint_pair(s: str, lineno: int, n: int, base: int) -> tuple[int, int]:
    parts = s.split()
    if len(parts) != 2:
        raise GraphParseError("edge line must be two integers", lineno)
    try:
        u, v = int(parts[0]) - base, int(parts[1]) - base
    except ValueError:
        raise GraphParseError("edge line must be two integers", lineno) from None
    for w in (u, v):
        if not (0 <= w < n):
            raise GraphParseError(f"vertex index {w + base} out of range", lineno)
    if u == v:
        raise GraphParseError(f"self-loop at vertex {u + base}", lineno)
    return u, v


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def generate_graph(
    family: str,
    *,
    n: int | None = None,
    rows: int | None = None,
    cols: int | None = None,
    leaves: int | None = None,
    degree: int | None = None,
    seed: int | None = None,
) -> Graph:
    """Construct a named graph family member.

    complete(n), cycle(n >= 3), path(n), star(leaves), grid(rows, cols)
    (or grid(n) for the square), petersen(), random-regular(n, degree,
    seed). The random-regular sampler is the pairing model with
    rejection, reproducible from the seed.
    """
    fam = family.lower().replace("_", "-")
    if fam == "complete":
        k = _require(n, "n")
        if k < 1:
            raise ValueError("complete graph needs n >= 1")
        return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])
    if fam == "cycle":
        k = _require(n, "n")
        if k < 3:
            raise ValueError("cycle needs length >= 3")
        return Graph(k, [(i, (i + 1) % k) for i in range(k)])
    if fam == "path":
        k = _require(n, "n")
        if k < 1:
            raise ValueError("path needs n >= 1")
        return Graph(k, [(i, i + 1) for i in range(k - 1)])
    if fam == "star":
        k = leaves if leaves is not None else n
        k = _require(k, "leaves")
        if k < 1:
            raise ValueError("star needs at least one leaf")
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if fam == "grid":
        r, c = rows, cols
        if r is None and c is None:
            r = c = _require(n, "n")
        r = _require(r, "rows")
        c = _require(c, "cols")
        if r < 1 or c < 1:
            raise ValueError("grid needs positive dimensions")
        edges = []
        for i in range(r):
            for j in range(c):
                v = i * c + j
                if j + 1 < c:
                    edges.append((v, v + 1))
                if i + 1 < r:
                    edges.append((v, v + c))
        return Graph(r * c, edges)
    if fam == "petersen":
        pairs = [(a, b) for a in range(5) for b in range(a + 1, 5)]
        idx = {p: i for i, p in enumerate(pairs)}
        edges = [
            (idx[p], idx[q])
            for p in pairs
            for q in pairs
            if p < q and not (set(p) & set(q))
        ]
        return Graph(10, edges)
    if fam == "random-regular":
        return _random_regular(_require(n, "n"), _require(degree, "degree"), seed)
    raise ValueError(f"unknown graph family {family!r}")


def _require(value, name):
    if value is None:
        raise ValueError(f"missing parameter {name!r}")
    return value


def _random_regular(n: int, degree: int, seed: int | None) -> Graph:
    if seed is None:
        raise ValueError("random-regular needs a seed for reproducibility")
    if degree < 0 or degree >= n:
        raise ValueError("degree must satisfy 0 <= degree < n")
    if n * degree % 2:
        raise ValueError("n * degree must be even")
    rng = random.Random(seed)
    stubs = [v for v in range(n) for _ in range(degree)]
    for _ in range(2000):
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph(n, edges)
    raise ChromaboundError("random-regular sampling failed to produce a simple graph")


# ---------------------------------------------------------------------------
# Neighborhood profiles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NeighborhoodProfile:
    """Independent-subset counts of vertex neighborhoods.

    ``t[k-1]`` is the maximum over vertices v of degree >= k of the
    number of independent k-subsets of the neighborhood of v, for
    k = 1..delta. ``t_tilde[k-1]`` is the same maximum taken over
    neighborhoods with one neighbor removed, for k = 1..delta-1.
    Both satisfy the binomial bounds t_k <= C(delta, k) and
    t~_k <= C(delta-1, k), with equality exactly when some maximum
    degree vertex has an independent (triangle-free) neighborhood.
    """

    delta: int
    t: tuple[int, ...]
    t_tilde: tuple[int, ...]

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("profile needs delta >= 1")
        if len(self.t) != self.delta or len(self.t_tilde) != self.delta - 1:
            raise ValueError("profile vector lengths must be delta and delta-1")
        if any(x < 0 for x in self.t) or any(x < 0 for x in self.t_tilde):
            raise ValueError("profile counts must be non-negative")

    def z_polynomial(self) -> IntPolynomial:
        """Z(u) = 1 + sum_k t_k u^k."""
        return IntPolynomial((1,) + self.t)

    def z_tilde_polynomial(self) -> IntPolynomial:
        """Z~(u) = 1 + sum_k t~_k u^k."""
        return IntPolynomial((1,) + self.t_tilde)

    def is_binomial(self) -> bool:
        """True when both vectors attain their binomial upper bounds."""
        return self.t == tuple(comb(self.delta, k) for k in range(1, self.delta + 1)) and (
            self.t_tilde == tuple(comb(self.delta - 1, k) for k in range(1, self.delta))
        )

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "t": [str(x) for x in self.t],
            "t_tilde": [str(x) for x in self.t_tilde],
        }


def _independent_subset_counts(masks: tuple[int, ...], pool: int, max_k: int) -> list[int]:
    """counts[k] = number of independent k-subsets of the vertex mask ``pool``."""
    counts = [0] * (max_k + 1)
    counts[0] = 1

    def rec(cand: int, size: int):
        if size == max_k:
            return
        c = cand
        while c:
            b = c & -c
            c ^= b
            v = b.bit_length() - 1
            counts[size + 1] += 1
            if size + 1 < max_k:
                rec(c & ~masks[v], size + 1)

    rec(pool, 0)
    return counts


def neighborhood_profile(g: Graph) -> NeighborhoodProfile:
    """Compute the independent-subset profile of every neighborhood.

    Enumerates independent subsets of each neighborhood directly, so the
    cost is at most 2^delta per vertex; fine for the desk scale this
    package targets.
    """
    delta = g.max_degree
    if delta == 0:
        raise ValueError("profile undefined for maximum degree 0")
    masks = g.adjacency_masks
    t = [0] * (delta + 1)
    t_tilde = [0] * delta
    for v in range(g.n):
        pool = masks[v]
        d = pool.bit_count()
        if d == 0:
            continue
        counts = _independent_subset_counts(masks, pool, d)
        for k in range(1, d + 1):
            if counts[k] > t[k]:
                t[k] = counts[k]
        if d >= 2:
            for u in _mask_bits(pool):
                reduced = pool & ~(1 << u)
                counts = _independent_subset_counts(masks, reduced, d - 1)
                for k in range(1, d):
                    if counts[k] > t_tilde[k]:
                        t_tilde[k] = counts[k]
    return NeighborhoodProfile(delta=delta, t=tuple(t[1:]), t_tilde=tuple(t_tilde[1:]))


# ---------------------------------------------------------------------------
# Connected subset enumeration
# ---------------------------------------------------------------------------

def _connected_sets_masks(
    masks: tuple[int, ...],
    v0: int,
    allowed: int,
    min_size: int,
    max_size: int,
) -> Iterator[int]:
    """Yield each connected vertex set containing v0 within ``allowed`` exactly once.

    Binary decision scheme: the lowest-labeled extension vertex is either
    added (bringing its fresh neighbors into the extension) or excluded
    for good, so every set arises along exactly one decision path.
    """
    if not (allowed >> v0) & 1 or min_size > max_size:
        return

    def rec(sub: int, size: int, ext: int, forb: int) -> Iterator[int]:
        if size >= min_size:
            yield sub
        if size >= max_size:
            return
        while ext:
            b = ext & -ext
            ext ^= b
            w = b.bit_length() - 1
            grown = masks[w] & allowed & ~(sub | forb | ext | b)
            yield from rec(sub | b, size + 1, ext | grown, forb)
            forb |= b

    yield from rec(1 << v0, 1, masks[v0] & allowed, 0)


def enumerate_connected_subsets(g: Graph, v0: int, n: int) -> Iterator[frozenset]:
    """All vertex sets of size n that contain v0 and induce a connected subgraph."""
    if not 0 <= v0 < g.n:
        raise ValueError(f"vertex {v0} out of range")
    if n < 1:
        raise ValueError("subset size must be >= 1")
    full = (1 << g.n) - 1
    for mask in _connected_sets_masks(g.adjacency_masks, v0, full, n, n):
        yield frozenset(_mask_bits(mask))
