"""Parameter triples (v, k, i) for generalized Johnson graphs.

J(v,k,i) has the k-subsets of {0,...,v-1} as vertices, two subsets being
adjacent exactly when their intersection has size i.  The constructor
accepts any triple with v >= k >= i >= 0 and classifies it; formulas and
witness constructions additionally require the normalized form v >= 2k,
reachable through :func:`normalize` (complementing every vertex set).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateClass, InvalidOrder


class GraphClass(enum.Enum):
    """Classification tag; exactly one applies per triple."""

    EMPTY_VERTEX_SET = "empty_vertex_set"  # k = i or v = k: no edges possible
    EDGELESS = "edgeless"                  # v < 2k and i < 2k - v: intersections too large
    MATCHING = "matching"                  # (2k, k, 0): disjoint union of single edges
    ODD_GRAPH = "odd_graph"                # (2k+1, k, 0)
    JOHNSON = "johnson_graph"              # i = k - 1
    KNESER = "kneser_graph"                # i = 0
    STANDARD = "standard"


_DEGENERATE = frozenset({GraphClass.EMPTY_VERTEX_SET, GraphClass.EDGELESS})


@dataclass(frozen=True)
class Parameters:
    """Validated triple with its classification.  Build via make_parameters."""

    v: int
    k: int
    i: int
    graph_class: GraphClass

    def __str__(self) -> str:
        return f"J({self.v},{self.k},{self.i})"

    @property
    def is_degenerate(self) -> bool:
        """True when the graph is empty or edgeless (no invariants defined)."""
        return self.graph_class in _DEGENERATE

    @property
    def is_normalized(self) -> bool:
        return self.v >= 2 * self.k


def _classify(v: int, k: int, i: int) -> GraphClass:
    # Precedence: empty > edgeless > matching > odd > johnson > kneser > standard.
    if k == i or v == k:
        return GraphClass.EMPTY_VERTEX_SET
    if v < 2 * k and i < 2 * k - v:
        return GraphClass.EDGELESS
    if v == 2 * k and i == 0:
        return GraphClass.MATCHING
    if v == 2 * k + 1 and i == 0:
        return GraphClass.ODD_GRAPH
    if i == k - 1:
        return GraphClass.JOHNSON
    if i == 0:
        return GraphClass.KNESER
    return GraphClass.STANDARD


def make_parameters(v: int, k: int, i: int) -> Parameters:
    """Validate and classify a triple.

    Raises InvalidOrder unless v >= k >= i >= 0.  Degenerate triples
    (k = i, v = k, or intersections forced above i) are accepted and
    tagged rather than rejected, so callers can explain them.
    """
    if not (isinstance(v, int) and isinstance(k, int) and isinstance(i, int)):
        raise InvalidOrder(f"parameters must be integers, got ({v!r}, {k!r}, {i!r})")
    if not v >= k >= i >= 0:
        raise InvalidOrder(f"need v >= k >= i >= 0, got ({v}, {k}, {i})")
    return Parameters(v, k, i, _classify(v, k, i))


def delta(p: Parameters) -> int:
    """The quantity v - 2k + 2i; positive for every normalized non-matching triple."""
    return p.v - 2 * p.k + 2 * p.i


def normalize(p: Parameters) -> Parameters:
    """Return the complement-isomorphic triple with v >= 2k.

    J(v,k,i) and J(v, v-k, v-2k+i) are isomorphic via complementation of
    every vertex set; when v < 2k the latter satisfies v >= 2k'.  Identity
    for already-normalized input; never produces a matching unless given
    one.  Raises DegenerateClass for empty or edgeless input.
    """
    if p.is_degenerate:
        raise DegenerateClass(f"{p} ({p.graph_class.value}) has no normal form")
    if p.is_normalized:
        return p
    return make_parameters(p.v, p.v - p.k, p.v - 2 * p.k + p.i)


def intersection_range(p: Parameters) -> range:
    """Possible |A ∩ B| for two k-subsets of a v-set: max(0, 2k-v) .. k."""
    return range(max(0, 2 * p.k - p.v), p.k + 1)
