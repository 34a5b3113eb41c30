"""Exhaustive and named graph corpora for verification runs.

Connected graphs are generated one vertex count at a time: every
connected graph on n vertices arises from a connected graph on n-1
vertices by attaching a fresh vertex to a non-empty neighbor set (some
vertex of any connected graph can be removed without disconnecting it,
and that vertex is the fresh one). Candidates are deduplicated by
canonical form, so each isomorphism class appears exactly once, in a
deterministic order.
"""

from __future__ import annotations

from .graphs import Graph, canonical_form, generate_graph

_LEVELS: dict[int, tuple[Graph, ...]] = {}

# Isomorphism class counts for connected graphs, used as a self-check
# during generation.
_KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All isomorphism classes of connected graphs on exactly n vertices."""
    if n < 1:
        raise ValueError("vertex count must be at least 1")
    if n not in _LEVELS:
        _LEVELS[n] = _build_level(n)
    return _LEVELS[n]


def _build_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, []),)
    seen: dict[tuple[int, ...], None] = {}
    for parent in connected_graphs(n - 1):
        base_edges = list(parent.edges)
        for subset in range(1, 1 << (n - 1)):
            edges = base_edges + [
                (v, n - 1) for v in range(n - 1) if (subset >> v) & 1
            ]
            seen.setdefault(canonical_form(Graph(n, edges)), None)
    level = tuple(
        Graph.from_masks(masks)
        for masks in sorted(seen, key=lambda masks: (_mask_edge_count(masks), masks))
    )
    expected = _KNOWN_COUNTS.get(n)
    if expected is not None and len(level) != expected:
        raise AssertionError(
            f"generated {len(level)} connected graphs on {n} vertices, expected {expected}"
        )
    return level


def _mask_edge_count(masks: tuple[int, ...]) -> int:
    return sum(m.bit_count() for m in masks) // 2


def corpus_graphs(max_n: int):
    """All connected graphs with at most max_n vertices, smallest first."""
    for n in range(1, max_n + 1):
        yield from connected_graphs(n)


def named_corpus() -> list[tuple[str, Graph]]:
    """Hand-picked larger instances exercising every generator family."""
    return [
        ("complete-8", generate_graph("complete", n=8)),
        ("petersen", generate_graph("petersen")),
        ("cycle-12", generate_graph("cycle", n=12)),
        ("path-12", generate_graph("path", n=12)),
        ("star-11", generate_graph("star", leaves=11)),
        ("grid-3x4", generate_graph("grid", rows=3, cols=4)),
        ("random-regular-10-3", generate_graph("random-regular", n=10, degree=3, seed=7)),
    ]
