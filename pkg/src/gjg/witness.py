"""Explicit witnesses: common neighbors, geodesics, shortest cycles, odd walks.

Every construction works over the ground set {0,...,v-1} and picks the
lexicographically smallest eligible elements at each step, so identical
inputs always produce identical walks.  Walk lengths provably match the
closed-form values in :mod:`gjg.formulas`; verify_walk rechecks the walk
axioms independently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateClass, Disconnected, InvalidSet, NoCommonNeighbor
from .formulas import ceil_div, distance_by_intersection, girth, has_common_neighbor, odd_girth
from .params import GraphClass, Parameters, delta

VertexSet = tuple[int, ...]


class WalkKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    CLOSED_WALK = "closed_walk"


@dataclass(frozen=True)
class Walk:
    """A vertex sequence with a claimed kind and edge count."""

    vertices: tuple[VertexSet, ...]
    kind: WalkKind
    claimed_length: int


def as_vertex_set(p: Parameters, elements: Sequence[int]) -> VertexSet:
    """Sorted, validated k-subset of the ground set."""
    t = tuple(sorted(elements))
    if len(t) != p.k or len(set(t)) != p.k:
        raise InvalidSet(f"expected {p.k} distinct elements, got {tuple(elements)}")
    if t and not (0 <= t[0] and t[-1] < p.v):
        raise InvalidSet(f"elements outside [0, {p.v}): {t}")
    return t


def _ground_complement(p: Parameters, *sets: Sequence[int]) -> list[int]:
    used = set()
    for s in sets:
        used.update(s)
    return [e for e in range(p.v) if e not in used]


def verify_walk(p: Parameters, w: Walk) -> bool:
    """Independent check of the walk axioms; never raises.

    Consecutive vertices must intersect in exactly i elements; paths have
    distinct vertices; cycles are closed with distinct interior and at
    least 3 edges; closed walks are merely closed.  The claimed length
    must equal the number of edges traversed.
    """
    vs = w.vertices
    if not vs:
        return False
    for s in vs:
        if len(s) != p.k or list(s) != sorted(set(s)):
            return False
        if s and (s[0] < 0 or s[-1] >= p.v):
            return False
    if w.claimed_length != len(vs) - 1:
        return False
    for a, b in zip(vs, vs[1:]):
        if len(set(a) & set(b)) != p.i:
            return False
    if w.kind is WalkKind.PATH:
        return len(set(vs)) == len(vs)
    if w.kind is WalkKind.CYCLE:
        interior = vs[:-1]
        return vs[0] == vs[-1] and len(vs) >= 4 and len(set(interior)) == len(interior)
    return vs[0] == vs[-1]  # closed walk


def common_neighbor(p: Parameters, a: Sequence[int], b: Sequence[int]) -> VertexSet:
    """A vertex adjacent to both a and b, when one exists.

    Takes s = max(0, i+x-k, 2i-k) elements inside a ∩ b, i-s from each
    private side, and fills up from outside a ∪ b; any s in the feasible
    interval would do, the lower endpoint is the fixed choice.
    """
    A, B = as_vertex_set(p, a), as_vertex_set(p, b)
    shared = sorted(set(A) & set(B))
    x = len(shared)
    if not has_common_neighbor(p, x):
        raise NoCommonNeighbor(f"|A ∩ B| = {x} < max(k - delta, 2i - k) in {p}")
    k, i = p.k, p.i
    s = max(0, i + x - k, 2 * i - k)
    only_a = sorted(set(A) - set(B))
    only_b = sorted(set(B) - set(A))
    outside = _ground_complement(p, A, B)
    picked = shared[:s] + only_a[: i - s] + only_b[: i - s] + outside[: k - 2 * i + s]
    return as_vertex_set(p, picked)


def _canonical_adjacent_pair(p: Parameters) -> tuple[VertexSet, VertexSet]:
    # {0..k-1} and the shift sharing exactly the top i elements.
    k, i = p.k, p.i
    return tuple(range(k)), tuple(range(k - i, 2 * k - i))


def canonical_pair(p: Parameters, x: int) -> tuple[VertexSet, VertexSet]:
    """The standard pair with intersection x: {0..k-1} vs {0..x-1} ∪ {k..2k-x-1}."""
    k = p.k
    return tuple(range(k)), tuple(list(range(x)) + list(range(k, 2 * k - x)))


def _even_route(p: Parameters, A: VertexSet, B: VertexSet) -> list[VertexSet]:
    """Path of length 2*ceil((k-x)/delta) from A to B, valid when that is
    the distance and x = |A ∩ B| > i.

    Alternates between vertices built on the outside of A ∪ B and on the
    core A ∩ B, shifting delta elements from A's private part to B's per
    round trip; two final hops go through a common neighbor.
    """
    k, i, d = p.k, p.i, delta(p)
    shared = sorted(set(A) & set(B))
    x = len(shared)
    t = k - x
    q, m = divmod(t - 1, d)
    m += 1  # t = q*d + m with 0 < m <= d
    path = [A]
    if q > 0:
        az = sorted(set(A) - set(B))
        bz = sorted(set(B) - set(A))
        outside = _ground_complement(p, A, B)
        for j in range(1, q + 1):
            odd_step = outside + az[: (j - 1) * d + i] + bz[j * d - i :]
            even_step = shared + bz[: j * d] + az[j * d :]
            path.append(as_vertex_set(p, odd_step))
            path.append(as_vertex_set(p, even_step))
    path.append(common_neighbor(p, path[-1], B))
    path.append(B)
    return path


def geodesic(p: Parameters, a: Sequence[int], b: Sequence[int]) -> Walk:
    """Shortest path from a to b, length exactly distance_by_intersection.

    For intersections above i the route is the shorter of the even
    construction and one edge followed by the even construction from a
    swapped start; below i a chain of (k-i)-element exchanges, or a
    single detour vertex when the distance is 3.
    """
    A, B = as_vertex_set(p, a), as_vertex_set(p, b)
    x = len(set(A) & set(B))
    if p.graph_class is GraphClass.MATCHING:
        if x == p.k:
            return Walk((A,), WalkKind.PATH, 0)
        if x == 0:
            return Walk((A, B), WalkKind.PATH, 1)
        raise Disconnected(f"{p}: vertices with 0 < |A ∩ B| < k lie in different edges")
    if p.is_degenerate:
        raise DegenerateClass(f"{p} admits no paths")
    if not p.is_normalized:
        raise ValueError(f"{p} is not normalized; complement the sets and use normalize()")
    k, i, d = p.k, p.i, delta(p)

    if x == k:
        return Walk((A,), WalkKind.PATH, 0)
    if x == i:
        return Walk((A, B), WalkKind.PATH, 1)

    if x > i:
        even_len = 2 * ceil_div(k - x, d)
        odd_len = 2 * ceil_div(x - i, d) + 1
        if even_len < odd_len:
            path = _even_route(p, A, B)
        else:
            # Swap x - i core elements for outside ones: the new start is
            # adjacent to A and closer to B along the even route.
            swap = x - i
            core_out = sorted(set(A) & set(B))[:swap]
            fresh = _ground_complement(p, A, B)[:swap]
            start = as_vertex_set(p, (set(B) - set(core_out)) | set(fresh))
            path = [A] + _even_route(p, start, B)
    else:  # x < i
        if x < k - d:
            # Distance 3: detour raising the overlap with B to k - i + x.
            only_a = sorted(set(A) - set(B))
            only_b = sorted(set(B) - set(A))
            detour = as_vertex_set(
                p, only_a[: i - x] + sorted(set(A) & set(B)) + only_b[: k - i]
            )
            path = [A, detour, common_neighbor(p, detour, B), B]
        else:
            steps = ceil_div(k - x, k - i)
            if steps == 2:
                path = [A, common_neighbor(p, A, B), B]
            else:
                # Replace one (k-i)-block of A's private part per step.
                q = steps - 2
                az = sorted(set(A) - set(B))
                bz = sorted(set(B) - set(A))
                shared = sorted(set(A) & set(B))
                path = [A]
                for j in range(1, q + 1):
                    path.append(
                        as_vertex_set(p, bz[: j * (k - i)] + az[j * (k - i) :] + shared)
                    )
                path.append(common_neighbor(p, path[-1], B))
                path.append(B)

    expected = distance_by_intersection(p, x)
    assert len(path) - 1 == expected, f"route of length {len(path) - 1}, distance {expected}"
    return Walk(tuple(path), WalkKind.PATH, len(path) - 1)


def _six_cycle(p: Parameters) -> list[VertexSet]:
    # Explicit 6-cycle in J(2k+1, k, 0) for k >= 3: consecutive sets are
    # disjoint, alternating between low and high halves of the ground set.
    k = p.k
    lo = list(range(k - 1))
    hi = list(range(k, 2 * k - 1))
    cyc = [
        list(range(k)),
        list(range(k, 2 * k)),
        lo + [2 * k],
        list(range(k - 1, 2 * k - 1)),
        lo + [2 * k - 1],
        hi + [2 * k],
    ]
    return [as_vertex_set(p, c) for c in cyc]


def shortest_cycle(p: Parameters) -> Walk:
    """A cycle of length girth(p), closed vertex repeated at the end."""
    g = girth(p)
    if g is None:
        raise DegenerateClass(f"{p} ({p.graph_class.value}) is acyclic or empty")
    if not p.is_normalized:
        raise ValueError(f"{p} is not normalized")
    k, i = p.k, p.i

    if g == 3:
        A, B = _canonical_adjacent_pair(p)
        cyc = [A, B, common_neighbor(p, A, B)]
    elif g == 4:
        if i >= 2 or p.v > 2 * k + 1:
            # Four singletons around two alternating (k-i-1)-blocks and a core.
            a = [[j] for j in range(4)]
            b1 = list(range(4, 3 + k - i))
            b2 = list(range(3 + k - i, 2 + 2 * (k - i)))
            core = list(range(2 + 2 * (k - i), 2 + 2 * (k - i) + i))
            cyc = [
                as_vertex_set(p, a[0] + b1 + core),
                as_vertex_set(p, a[1] + b2 + core),
                as_vertex_set(p, a[2] + b1 + core),
                as_vertex_set(p, a[3] + b2 + core),
            ]
        else:  # i == 1
            a = list(range(4))
            b1 = list(range(4, 2 + k))
            b2 = list(range(2 + k, k * 2))
            cyc = [
                as_vertex_set(p, [a[0], a[1]] + b1),
                as_vertex_set(p, [a[1], a[2]] + b2),
                as_vertex_set(p, [a[2], a[3]] + b1),
                as_vertex_set(p, [a[3], a[0]] + b2),
            ]
    elif g == 5:
        walk = odd_closed_walk(p)  # at (5,2,0) the minimum odd walk is a 5-cycle
        cyc = list(walk.vertices[:-1])
    else:
        cyc = _six_cycle(p)

    cyc.append(cyc[0])
    w = Walk(tuple(cyc), WalkKind.CYCLE, len(cyc) - 1)
    assert verify_walk(p, w), f"shortest_cycle built an invalid cycle for {p}"
    return w


def odd_closed_walk(p: Parameters) -> Walk:
    """A closed walk of length odd_girth(p) starting and ending at {0..k-1}.

    Girth-3 graphs use a triangle.  Odd graphs (2k+1,k,0) walk A -> B -> C
    -> A where the three sets pairwise intersect in (d, d, 0) elements for
    k = 2d or 2d+1, joined by geodesics of length k each plus one edge.
    Girth-4 graphs pick a third vertex equidistant from both ends of an
    edge at distance r = ceil((k-i)/delta) and glue the two geodesics.
    """
    og = odd_girth(p)
    if og is None:
        raise DegenerateClass(f"{p} ({p.graph_class.value}) has no odd closed walk")
    if not p.is_normalized:
        raise ValueError(f"{p} is not normalized")
    k, i, d = p.k, p.i, delta(p)

    if girth(p) == 3:
        tri = shortest_cycle(p)
        walk = Walk(tri.vertices, WalkKind.CLOSED_WALK, tri.claimed_length)
        assert verify_walk(p, walk)
        return walk

    if p.graph_class is GraphClass.ODD_GRAPH:
        half = k // 2
        if k % 2 == 0:
            A = range(0, 2 * half)
            B = range(half, 3 * half)
            C = range(2 * half, 4 * half)
        else:
            A = range(0, 2 * half + 1)
            B = range(half + 1, 3 * half + 2)
            C = range(2 * half + 2, 4 * half + 3)
        A, B, C = (as_vertex_set(p, s) for s in (A, B, C))
        leg_ab = geodesic(p, A, B)
        leg_bc = geodesic(p, B, C)
        vertices = leg_ab.vertices + leg_bc.vertices[1:] + (A,)
    else:  # girth 4
        r = ceil_div(k - i, d)
        A, B = _canonical_adjacent_pair(p)
        only_a = sorted(set(A) - set(B))
        only_b = sorted(set(B) - set(A))
        if r % 2 == 1:
            doubled = k + i - d  # target overlaps (floor, ceil) of (k+i-delta)/2
            core = _ground_complement(p, A, B)
            take_a, take_b = doubled // 2, doubled - doubled // 2
        else:
            doubled = k + i
            core = sorted(set(A) & set(B))
            take_a, take_b = doubled // 2 - i, doubled - doubled // 2 - i
        apex = as_vertex_set(p, only_a[:take_a] + only_b[:take_b] + core)
        leg_a = geodesic(p, A, apex)
        leg_b = geodesic(p, B, apex)
        assert leg_a.claimed_length == leg_b.claimed_length == r
        vertices = leg_a.vertices + tuple(reversed(leg_b.vertices))[1:] + (A,)

    walk = Walk(vertices, WalkKind.CLOSED_WALK, len(vertices) - 1)
    assert walk.claimed_length == og, f"walk length {walk.claimed_length}, odd girth {og}"
    assert verify_walk(p, walk), f"odd_closed_walk built an invalid walk for {p}"
    return walk


def complement_walk(p: Parameters, w: Walk) -> Walk:
    """Map a walk in J(v, v-k, v-2k+i) back to J(v,k,i) by complementing
    every vertex set; the complement isomorphism preserves adjacency."""
    vertices = tuple(
        tuple(e for e in range(p.v) if e not in set(s)) for s in w.vertices
    )
    return Walk(vertices, w.kind, w.claimed_length)
