"""Ribbon and Möbius graphs as half-edge combinatorial maps.

Half-edges are ``0..h-1``.  A graph is given by the vertex rotation (cycles
of half-edges in cyclic order), the edge matching (a fixed-point-free
involution) and one twist bit per edge.  Ribbon graphs have no twists.

Surface data comes from the orientation double cover, whose darts are pairs
``(half-edge, side)`` encoded as ``2*h + side``.  On side 0 the rotation is
read forwards and on side 1 backwards; an edge keeps the side if untwisted
and swaps it if twisted.  The double cover is an oriented map with ``2f``
faces, and it is disconnected exactly when the surface is orientable.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import GraphError, WorkBoundExceeded
from .groups import FiniteGroup
from .limits import work_bound
from .surfaces import SurfaceType

ORIENTED = "oriented"
MOBIUS = "mobius"
MAX_AUT_HALF_EDGES = 16


class MobiusGraph:
    """A Möbius graph; immutable after construction."""

    def __init__(self, rotation: Sequence[Sequence[int]], matching: Sequence[Sequence[int]],
                 twists: Sequence[int] | None = None):
        cycles = tuple(tuple(int(x) for x in c) for c in rotation)
        edges = tuple(tuple(int(x) for x in e) for e in matching)
        if not cycles or any(len(c) == 0 for c in cycles):
            raise GraphError("every vertex needs at least one half-edge")
        flat = [x for c in cycles for x in c]
        h = len(flat)
        counts = Counter(flat)
        dup = sorted(x for x, n in counts.items() if n > 1)
        if dup:
            raise GraphError(f"half-edge {dup[0]} appears twice in the rotation")
        if sorted(flat) != list(range(h)):
            raise GraphError(f"rotation must use half-edges 0..{h - 1} exactly once")
        partner = [-1] * h
        edge_of = [-1] * h
        for i, e in enumerate(edges):
            if len(e) != 2:
                raise GraphError(f"edge {list(e)} is not a pair")
            a, b = e
            if a == b:
                raise GraphError(f"matching has a fixed point at half-edge {a}")
            for x in e:
                if not 0 <= x < h:
                    raise GraphError(f"matching names unknown half-edge {x}")
                if partner[x] != -1:
                    raise GraphError(f"half-edge {x} is matched twice")
            partner[a], partner[b] = b, a
            edge_of[a] = edge_of[b] = i
        if -1 in partner:
            raise GraphError(f"half-edge {partner.index(-1)} is unmatched "
                             f"({h} half-edges, {len(edges)} edges)")
        if twists is None:
            twists = (0,) * len(edges)
        twists = tuple(int(t) for t in twists)
        if len(twists) != len(edges) or any(t not in (0, 1) for t in twists):
            raise GraphError("need one twist bit (0 or 1) per edge")

        rot = [0] * h
        rot_inv = [0] * h
        vertex_of = [0] * h
        for v, c in enumerate(cycles):
            for i, x in enumerate(c):
                nxt = c[(i + 1) % len(c)]
                rot[x] = nxt
                rot_inv[nxt] = x
                vertex_of[x] = v
        self.cycles = cycles
        self.edges = edges
        self.twists = twists
        self.half_edge_count = h
        self.rotation = tuple(rot)
        self.rotation_inv = tuple(rot_inv)
        self.partner = tuple(partner)
        self.edge_of = tuple(edge_of)
        self.vertex_of = tuple(vertex_of)
        self.connected = self._is_connected()

    def _is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for x in self.cycles[v]:
                w = self.vertex_of[self.partner[x]]
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.cycles)

    def __repr__(self) -> str:
        return (f"MobiusGraph(rotation={[list(c) for c in self.cycles]}, "
                f"matching={[list(e) for e in self.edges]}, twists={list(self.twists)})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MobiusGraph):
            return NotImplemented
        return (self.cycles, self.edges, self.twists) == (other.cycles, other.edges, other.twists)

    def __hash__(self) -> int:
        return hash((self.cycles, self.edges, self.twists))

    @property
    def vertex_count(self) -> int:
        return len(self.cycles)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_ribbon(self) -> bool:
        return not any(self.twists)

    @property
    def valence_counts(self) -> dict[int, int]:
        """j -> number of j-valent vertices."""
        return dict(sorted(Counter(len(c) for c in self.cycles).items()))

    def half_edge_twist(self, x: int) -> int:
        return self.twists[self.edge_of[x]]

    @cached_property
    def cover(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """Rotation, edge map and deck swap of the orientation double cover."""
        h = self.half_edge_count
        sig = [0] * (2 * h)
        alp = [0] * (2 * h)
        for x in range(h):
            t = self.twists[self.edge_of[x]]
            px = self.partner[x]
            sig[2 * x] = 2 * self.rotation[x]
            sig[2 * x + 1] = 2 * self.rotation_inv[x] + 1
            alp[2 * x] = 2 * px + t
            alp[2 * x + 1] = 2 * px + (1 - t)
        tau = tuple(d ^ 1 for d in range(2 * h))
        return tuple(sig), tuple(alp), tau

    def to_json(self) -> dict:
        return {"rotation": [list(c) for c in self.cycles],
                "matching": [list(e) for e in self.edges],
                "twists": list(self.twists)}

    @classmethod
    def from_json(cls, obj: dict | str) -> MobiusGraph:
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(obj["rotation"], obj["matching"], obj.get("twists"))
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad graph JSON: {exc}") from None


def build_mobius_graph(rotation: Sequence[Sequence[int]], matching: Sequence[Sequence[int]],
                       twists: Sequence[int] | None = None) -> MobiusGraph:
    return MobiusGraph(rotation, matching, twists)


def _require_connected(graph: MobiusGraph) -> None:
    if not graph.connected:
        raise GraphError("graph is disconnected")


def _cycle_count(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    n = 0
    for s in range(len(perm)):
        if not seen[s]:
            n += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return n


def _orbit_count(perms: Sequence[Sequence[int]]) -> int:
    size = len(perms[0])
    seen = [False] * size
    n = 0
    for s in range(size):
        if seen[s]:
            continue
        n += 1
        seen[s] = True
        stack = [s]
        while stack:
            d = stack.pop()
            for p in perms:
                e = p[d]
                if not seen[e]:
                    seen[e] = True
                    stack.append(e)
    return n


@dataclass(frozen=True)
class GraphSurfaceReport:
    face_count: int
    orientable: bool
    euler_characteristic: int
    surface: SurfaceType


def surface_of_graph(graph: MobiusGraph) -> GraphSurfaceReport:
    _require_connected(graph)
    sig, alp, _ = graph.cover
    faces = [sig[alp[d]] for d in range(len(sig))]
    cover_faces = _cycle_count(faces)
    if cover_faces % 2:
        raise GraphError("double-cover faces do not pair up")
    f = cover_faces // 2
    orientable = _orbit_count((sig, alp)) == 2
    chi = graph.vertex_count - graph.edge_count + f
    return GraphSurfaceReport(f, orientable, chi, SurfaceType.from_euler(orientable, chi))


def standard_graph(g: int, f: int) -> MobiusGraph:
    """One vertex with ``f-1`` tadpole loops followed by ``g`` interleaved petal pairs."""
    if g < 0 or f < 1:
        raise GraphError("standard graph needs g >= 0 and f >= 1")
    if (g, f) == (0, 1):
        raise GraphError("the sphere with one face has no standard graph with an edge")
    edges = []
    pos = 0
    for _ in range(f - 1):
        edges.append((pos, pos + 1))
        pos += 2
    for _ in range(g):
        # a b a^-1 b^-1
        edges.append((pos, pos + 2))
        edges.append((pos + 1, pos + 3))
        pos += 4
    return MobiusGraph([list(range(pos))], edges)


def crosscap_graph(k: int, f: int = 1) -> MobiusGraph:
    """One vertex with ``f-1`` tadpoles followed by ``k`` adjacent twisted loops."""
    if k < 1 or f < 1:
        raise GraphError("cross-cap graph needs k >= 1 and f >= 1")
    edges, twists = [], []
    pos = 0
    for _ in range(f - 1):
        edges.append((pos, pos + 1))
        twists.append(0)
        pos += 2
    for _ in range(k):
        edges.append((pos, pos + 1))
        twists.append(1)
        pos += 2
    return MobiusGraph([list(range(pos))], edges, twists)


def mu_gamma(graph: MobiusGraph, G: FiniteGroup, work: int | None = None) -> int:
    """Number of admissible labelings of half-edges by group elements.

    Untwisted edges carry mutually inverse labels, twisted edges equal labels,
    and the labels around each vertex multiply to the identity in rotation
    order.  One label is enumerated per edge.
    """
    _require_connected(graph)
    e = graph.edge_count
    needed = G.order ** e
    limit = work_bound(work)
    if needed > limit:
        raise WorkBoundExceeded(needed, limit, "edge labelling", label="fatgraph")
    order = []
    placed = set()
    for c in graph.cycles:
        for x in c:
            i = graph.edge_of[x]
            if i not in placed:
                placed.add(i)
                order.append(i)
    remaining = [len({graph.edge_of[x] for x in c}) for c in graph.cycles]
    completes: list[list[tuple[int, ...]]] = []
    for i in order:
        done = []
        for v in sorted({graph.vertex_of[x] for x in graph.edges[i]}):
            remaining[v] -= 1
            if remaining[v] == 0:
                done.append(graph.cycles[v])
        completes.append(done)
    steps = [(graph.edges[i][0], graph.edges[i][1], graph.twists[i], completes[n])
             for n, i in enumerate(order)]
    mul, inv = G.mul, G.inv
    labels = [0] * graph.half_edge_count
    elements = range(G.order)

    def closes(cycle: tuple[int, ...]) -> bool:
        p = 0
        for x in cycle:
            p = mul[p][labels[x]]
        return p == 0

    def rec(pos: int) -> int:
        if pos == len(steps):
            return 1
        a, b, tw, done = steps[pos]
        total = 0
        for x in elements:
            labels[a] = x
            labels[b] = x if tw else inv[x]
            if all(closes(c) for c in done):
                total += rec(pos + 1)
        return total

    return rec(0)


# -- symmetry ----------------------------------------------------------------

def _structure(graph: MobiusGraph, mode: str) -> tuple[tuple[int, ...], ...]:
    if mode == ORIENTED:
        if not graph.is_ribbon:
            raise GraphError("oriented mode needs an untwisted (ribbon) graph")
        return graph.rotation, graph.partner
    if mode == MOBIUS:
        return graph.cover
    raise GraphError(f"unknown mode {mode!r}")


def automorphism_count(graph: MobiusGraph, mode: str = ORIENTED) -> int:
    """Number of automorphisms, by propagating every possible image of one dart.

    Oriented mode counts half-edge bijections commuting with rotation and
    matching.  Möbius mode counts pairs (bijection, set of reflected vertices),
    realised as deck-commuting automorphisms of the double cover.
    """
    if graph.half_edge_count > MAX_AUT_HALF_EDGES:
        raise GraphError(f"automorphism count supports at most {MAX_AUT_HALF_EDGES} half-edges")
    _require_connected(graph)
    perms = _structure(graph, mode)
    n = len(perms[0])
    count = 0
    for target in range(n):
        img = [-1] * n
        img[0] = target
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for p in perms:
                a, b = p[d], p[img[d]]
                if img[a] == -1:
                    img[a] = b
                    stack.append(a)
                elif img[a] != b:
                    ok = False
                    break
        if ok and -1 not in img and len(set(img)) == n:
            count += 1
    return count


def _relabel_code(perms: tuple[tuple[int, ...], ...], start: int) -> tuple[int, ...] | None:
    n = len(perms[0])
    label = [-1] * n
    label[start] = 0
    order = [start]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for p in perms:
            e = p[d]
            if label[e] < 0:
                label[e] = len(order)
                order.append(e)
    if len(order) != n:
        return None
    return tuple(label[p[d]] for d in order for p in perms)


def _canonical_starts(graph: MobiusGraph, mode: str) -> list[int]:
    # darts at the vertices of the least populous valence; an isomorphism invariant choice
    by_valence = Counter(len(c) for c in graph.cycles)
    j = min(by_valence, key=lambda v: (v * by_valence[v], v))
    halves = [x for c in graph.cycles if len(c) == j for x in c]
    if mode == ORIENTED:
        return halves
    return [2 * x + s for x in halves for s in (0, 1)]


def canonical_form(graph: MobiusGraph, mode: str = ORIENTED) -> tuple[tuple[int, ...], int]:
    """Relabelling-invariant code and the number of start darts realising it.

    Two connected graphs are isomorphic (in the given mode) exactly when
    their codes agree; the start count equals the automorphism count.
    """
    _require_connected(graph)
    perms = _structure(graph, mode)
    best = None
    hits = 0
    for s in _canonical_starts(graph, mode):
        code = _relabel_code(perms, s)
        if best is None or code < best:
            best, hits = code, 1
        elif code == best:
            hits += 1
    key = (graph.half_edge_count, tuple(sorted(len(c) for c in graph.cycles))) + best
    return key, hits


# -- enumeration -------------------------------------------------------------

def perfect_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All pairings of ``items``; the first item is always paired first."""
    items = list(items)
    if not items:
        yield []
        return
    first = items[0]
    rest = items[1:]
    for i, other in enumerate(rest):
        for tail in perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + tail


def _partitions(n: int, largest: int, smallest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), smallest - 1, -1):
        for tail in _partitions(n - part, part, smallest):
            yield [part] + tail


def slot_cycles(valences: Sequence[int]) -> list[list[int]]:
    """Consecutive half-edge blocks, one per vertex."""
    cycles, pos = [], 0
    for j in valences:
        cycles.append(list(range(pos, pos + j)))
        pos += j
    return cycles


def connected_graphs(edge_count: int, mode: str = MOBIUS, min_valence: int = 1) -> list[MobiusGraph]:
    """One representative per isomorphism class of connected graphs with this many edges."""
    h = 2 * edge_count
    reps: dict[tuple, MobiusGraph] = {}
    for valences in _partitions(h, h, min_valence):
        cycles = slot_cycles(sorted(valences))
        for matching in perfect_matchings(range(h)):
            twist_choices = [(0,) * edge_count] if mode == ORIENTED else \
                itertools.product((0, 1), repeat=edge_count)
            for tw in twist_choices:
                graph = MobiusGraph(cycles, matching, tw)
                if not graph.connected:
                    continue
                key, _ = canonical_form(graph, mode)
                reps.setdefault(key, graph)
    return [reps[k] for k in sorted(reps)]
