"""Exact chromatic polynomials and an exhaustive coloring oracle.

The polynomial engine is deletion-contraction with memoization keyed by
a canonical graph form, plus base cases (edgeless, tree, cycle, complete
graph, and multiplicativity over components) that prune the recursion to
desk-scale cost. The oracle counts proper colorings by enumerating every
assignment of q colors to n vertices, so the two agree only if both are
right; that cross-check is the backbone of the test suite.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import ResourceLimitError
from .graphs import Graph, _canonical_masks, _components_masks, _mask_bits
from .polynomial import IntPolynomial, X

_DEFAULT_VERTEX_CAP = 18


def chromatic_polynomial(
    g: Graph,
    *,
    cache: dict | None = None,
    max_vertices: int = _DEFAULT_VERTEX_CAP,
) -> IntPolynomial:
    """Number of proper q-colorings of g, as an exact polynomial in q.

    ``cache`` may be a dict shared across calls to reuse subproblem
    results between related graphs; pass nothing to keep the memo
    confined to this computation. Results are identical either way.
    """
    if g.n > max_vertices:
        raise ResourceLimitError(
            f"graph has {g.n} vertices, exceeding the cap of {max_vertices}"
        )
    if cache is None:
        cache = {}
    return _chrom(g.adjacency_masks, cache)


def _chrom(masks: tuple[int, ...], cache: dict) -> IntPolynomial:
    n = len(masks)
    if n == 0:
        return IntPolynomial([1])
    comps = _components_masks(masks)
    if len(comps) > 1:
        result = IntPolynomial([1])
        for comp in comps:
            result = result * _chrom(_induced_masks(masks, comp), cache)
        return result

    m = sum(mask.bit_count() for mask in masks) // 2
    if m == 0:
        return X ** n
    if m == n - 1:
        # connected with n-1 edges: a tree
        return (X * (X - IntPolynomial([1])) ** (n - 1))
    if m == n * (n - 1) // 2:
        result = X
        for k in range(1, n):
            result = result * IntPolynomial([-k, 1])
        return result
    if m == n and all(mask.bit_count() == 2 for mask in masks):
        # connected 2-regular: the n-cycle
        qm1 = X - IntPolynomial([1])
        return qm1 ** n + (qm1 if n % 2 == 0 else -qm1)

    key = _canonical_masks(masks)
    hit = cache.get(key)
    if hit is not None:
        return hit

    u, v = _pick_edge(masks)
    deleted = list(masks)
    deleted[u] &= ~(1 << v)
    deleted[v] &= ~(1 << u)
    result = _chrom(tuple(deleted), cache) - _chrom(_contracted(masks, u, v), cache)
    cache[key] = result
    return result


def _pick_edge(masks: tuple[int, ...]) -> tuple[int, int]:
    """Edge with maximal endpoint degree sum; densifies the contraction."""
    degs = [mask.bit_count() for mask in masks]
    best = None
    for v, mask in enumerate(masks):
        for u in _mask_bits(mask >> (v + 1)):
            u += v + 1
            score = degs[v] + degs[u]
            if best is None or score > best[0]:
                best = (score, v, u)
    return best[1], best[2]


def _contracted(masks: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Merge v into u, drop v, relabel densely; parallel edges collapse."""
    bu, bv = 1 << u, 1 << v
    merged = list(masks)
    merged[u] = (masks[u] | masks[v]) & ~(bu | bv)
    for w in _mask_bits(masks[v] & ~bu):
        merged[w] |= bu
    out = []
    low = bv - 1
    for w in range(len(masks)):
        if w == v:
            continue
        mw = merged[w] & ~bv
        out.append((mw & low) | ((mw >> (v + 1)) << v))
    return tuple(out)


def _induced_masks(masks: tuple[int, ...], vert_mask: int) -> tuple[int, ...]:
    verts = list(_mask_bits(vert_mask))
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for u in _mask_bits(masks[v] & vert_mask):
            m |= 1 << pos[u]
        out.append(m)
    return tuple(out)


# ---------------------------------------------------------------------------
# Exhaustive coloring oracle
# ---------------------------------------------------------------------------

_TABLE_BIT_LIMIT = 1 << 20      # largest q^n kept as precomputed edge masks
_CHUNK = 1 << 20                # assignments per numpy chunk beyond that


def count_proper_colorings(
    g: Graph,
    q: int,
    *,
    max_vertices: int = 10,
    max_colors: int = 6,
) -> int:
    """Count proper colorings of g with q colors by full enumeration.

    All q^n color assignments are examined (vectorized over numpy bit
    tables), so this is exact and independent of the polynomial engine.
    """
    if q < 0:
        raise ValueError("color count must be non-negative")
    if g.n == 0:
        return 1
    if g.n > max_vertices or q > max_colors:
        raise ResourceLimitError(
            f"coloring enumeration capped at {max_vertices} vertices and {max_colors} colors"
        )
    if q == 0:
        return 0
    if not g.edges:
        return q ** g.n
    if q == 1:
        return 0
    total = q ** g.n
    if total <= _TABLE_BIT_LIMIT:
        pair_masks = _edge_bit_masks(q, g.n)
        edges = sorted(g.edges)
        acc = pair_masks[edges[0]]
        for e in edges[1:]:
            acc &= pair_masks[e]
        return acc.bit_count()
    return _count_chunked(g, q, total)


@lru_cache(maxsize=32)
def _edge_bit_masks(q: int, n: int) -> dict[tuple[int, int], int]:
    """For every vertex pair, the bitset of assignments coloring them differently.

    Assignment index a gives vertex j the color (a // q^j) mod q; bit i of
    the mask (counted from the most significant end) corresponds to
    assignment i. Only relative consistency between masks matters.
    """
    idx = np.arange(q ** n, dtype=np.int64)
    cols = [((idx // q ** j) % q).astype(np.uint8) for j in range(n)]
    out = {}
    for u in range(n):
        for v in range(u + 1, n):
            diff = np.packbits(cols[u] != cols[v])
            out[(u, v)] = int.from_bytes(diff.tobytes(), "big")
    return out


def _count_chunked(g: Graph, q: int, total: int) -> int:
    edges = sorted(g.edges)
    count = 0
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        ok = np.ones(idx.shape, dtype=bool)
        for u, v in edges:
            ok &= ((idx // q ** u) % q) != ((idx // q ** v) % q)
        count += int(np.count_nonzero(ok))
    return count
