from __future__ import annotations

import itertools
import random

import pytest

from homcount.errors import GraphError, WorkBoundExceeded
from homcount.fatgraph import (MOBIUS, ORIENTED, MobiusGraph, automorphism_count, canonical_form,
                               connected_graphs, crosscap_graph, mu_gamma, perfect_matchings,
                               slot_cycles, standard_graph, surface_of_graph)
from homcount.groups import preset
from homcount.surfaces import SurfaceType, brute_force_hom_count

import oracles

THETA = MobiusGraph([[0, 1, 2], [3, 5, 4]], [[0, 3], [1, 4], [2, 5]])


def _iso_maps(g1: MobiusGraph, g2: MobiusGraph, mode: str):
    """Every (bijection, flip bits) carrying g1 onto g2, by trying all bijections."""
    h = g1.half_edge_count
    if h != g2.half_edge_count or g1.vertex_count != g2.vertex_count:
        return
    flips = [(0,) * g1.vertex_count] if mode == ORIENTED else \
        list(itertools.product((0, 1), repeat=g1.vertex_count))
    for phi in itertools.permutations(range(h)):
        if any(phi[g1.partner[x]] != g2.partner[phi[x]] for x in range(h)):
            continue
        for s in flips:
            ok = True
            for x in range(h):
                step = g2.rotation_inv if s[g1.vertex_of[x]] else g2.rotation
                if phi[g1.rotation[x]] != step[phi[x]]:
                    ok = False
                    break
                a, b = x, g1.partner[x]
                want = g1.half_edge_twist(a) ^ s[g1.vertex_of[a]] ^ s[g1.vertex_of[b]]
                if g2.half_edge_twist(phi[a]) != want:
                    ok = False
                    break
            if ok:
                yield phi, s


def literal_aut(graph: MobiusGraph, mode: str) -> int:
    return sum(1 for _ in _iso_maps(graph, graph, mode))


def test_validation():
    with pytest.raises(GraphError):
        MobiusGraph([[0, 1]], [[0, 0]])
    with pytest.raises(GraphError):
        MobiusGraph([[0, 1], [1, 2]], [[0, 1]])
    with pytest.raises(GraphError):
        MobiusGraph([[0, 1, 2, 3]], [[0, 1], [1, 2]])
    with pytest.raises(GraphError):
        MobiusGraph([[0, 1]], [[0, 1]], [2])
    with pytest.raises(GraphError):
        MobiusGraph([[0, 1, 2]], [[0, 1]])
    with pytest.raises(GraphError):
        surface_of_graph(MobiusGraph([[0, 1], [2, 3]], [[0, 1], [2, 3]]))


def test_json_round_trip():
    g = MobiusGraph([[0, 1, 2], [3, 4, 5]], [[0, 3], [1, 4], [2, 5]], [0, 1, 0])
    assert MobiusGraph.from_json(g.to_json()) == g
    with pytest.raises(GraphError):
        MobiusGraph.from_json({"rotation": [[0, 1]]})


def test_theta_is_sphere():
    rep = surface_of_graph(THETA)
    assert (rep.face_count, rep.orientable, rep.euler_characteristic) == (3, True, 2)
    twisted_theta = MobiusGraph([[0, 1, 2], [3, 4, 5]], [[0, 3], [1, 4], [2, 5]])
    rep = surface_of_graph(twisted_theta)
    assert rep.surface == SurfaceType(True, 1)


def test_loops():
    loop = MobiusGraph([[0, 1]], [[0, 1]])
    assert (surface_of_graph(loop).face_count, surface_of_graph(loop).surface) == (2, SurfaceType(True, 0))
    twisted = MobiusGraph([[0, 1]], [[0, 1]], [1])
    rep = surface_of_graph(twisted)
    assert (rep.face_count, rep.orientable, rep.euler_characteristic) == (1, False, 1)
    S3 = preset("S3")
    assert mu_gamma(loop, S3) == 6
    assert mu_gamma(twisted, S3) == 4


@pytest.mark.parametrize("g,f", [(0, 2), (0, 3), (1, 1), (1, 2), (2, 1), (1, 3)])
def test_standard_graph_surface(g, f):
    rep = surface_of_graph(standard_graph(g, f))
    assert rep.surface == SurfaceType(True, g)
    assert rep.face_count == f


def test_standard_graph_unsupported():
    with pytest.raises(GraphError):
        standard_graph(0, 1)


@pytest.mark.parametrize("k,f", [(1, 1), (2, 1), (3, 1), (1, 2), (2, 3)])
def test_crosscap_graph_surface(k, f):
    rep = surface_of_graph(crosscap_graph(k, f))
    assert rep.surface == SurfaceType(False, k)
    assert rep.face_count == f


def test_mu_fixtures():
    S3 = preset("S3")
    assert mu_gamma(standard_graph(1, 1), S3) == 18
    assert mu_gamma(standard_graph(2, 1), S3) == 486
    assert mu_gamma(THETA, S3) == 36


@pytest.mark.parametrize("profile", [{3: 2}, {4: 1}, {2: 1, 4: 1}, {1: 2, 2: 2}])
def test_mu_matches_literal_oracle(profile):
    valences = [j for j in sorted(profile) for _ in range(profile[j])]
    cycles = slot_cycles(valences)
    h = sum(valences)
    for name, og in [("S3", oracles.symmetric_group(3)), ("C3", oracles.cyclic_group(3))]:
        G = preset(name)
        for m in list(perfect_matchings(range(h)))[:8]:
            graph = MobiusGraph(cycles, m)
            if graph.connected:
                assert mu_gamma(graph, G) == oracles.mu_literal(og, valences, m)


def test_mu_work_bound():
    with pytest.raises(WorkBoundExceeded):
        mu_gamma(standard_graph(2, 1), preset("S3"), work=100)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_mu_equals_scaled_hom_count(e):
    for G in (preset("C2"), preset("S3"), preset("Q8")):
        for graph in connected_graphs(e):
            rep = surface_of_graph(graph)
            assert mu_gamma(graph, G) == G.order ** (rep.face_count - 1) * brute_force_hom_count(G, rep.surface)


def test_class_counts():
    assert [len(connected_graphs(e)) for e in (1, 2, 3)] == [3, 11, 63]
    assert [len(connected_graphs(e, ORIENTED)) for e in (1, 2)] == [2, 5]


def _literal_classes(e: int, mode: str) -> int:
    h = 2 * e
    graphs = []
    for valences in sorted({tuple(sorted(p)) for p in _compositions(h)}):
        cycles = slot_cycles(valences)
        twists = [(0,) * e] if mode == ORIENTED else list(itertools.product((0, 1), repeat=e))
        for m in perfect_matchings(range(h)):
            for t in twists:
                g = MobiusGraph(cycles, m, t)
                if g.connected:
                    graphs.append(g)
    reps: list[MobiusGraph] = []
    for g in graphs:
        if not any(next(_iso_maps(g, r, mode), None) for r in reps):
            reps.append(g)
    return len(reps)


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


@pytest.mark.parametrize("mode", [ORIENTED, MOBIUS])
def test_class_counts_against_literal_isomorphism(mode):
    for e in (1, 2):
        assert len(connected_graphs(e, mode)) == _literal_classes(e, mode)


def test_automorphism_fixtures():
    loop = MobiusGraph([[0, 1]], [[0, 1]])
    assert automorphism_count(loop, ORIENTED) == 2
    assert automorphism_count(loop, MOBIUS) == 4
    assert automorphism_count(THETA, ORIENTED) == 6
    assert automorphism_count(standard_graph(1, 1), ORIENTED) == 4
    with pytest.raises(GraphError):
        automorphism_count(crosscap_graph(1), ORIENTED)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_automorphisms_match_literal_search(e):
    for graph in connected_graphs(e, ORIENTED):
        assert automorphism_count(graph, ORIENTED) == literal_aut(graph, ORIENTED)
    for graph in connected_graphs(e, MOBIUS):
        if e < 3 or graph.vertex_count <= 3:
            assert automorphism_count(graph, MOBIUS) == literal_aut(graph, MOBIUS)


def _relabel(graph: MobiusGraph, rng: random.Random, flip: bool) -> MobiusGraph:
    h = graph.half_edge_count
    perm = list(range(h))
    rng.shuffle(perm)
    flipped = [flip and rng.random() < 0.5 for _ in graph.cycles]
    cycles = []
    for v, c in enumerate(graph.cycles):
        c = list(reversed(c)) if flipped[v] else list(c)
        r = rng.randrange(len(c))
        cycles.append([perm[x] for x in c[r:] + c[:r]])
    rng.shuffle(cycles)
    edges, twists = [], []
    for (a, b), t in zip(graph.edges, graph.twists):
        edges.append([perm[b], perm[a]] if rng.random() < 0.5 else [perm[a], perm[b]])
        twists.append(t ^ flipped[graph.vertex_of[a]] ^ flipped[graph.vertex_of[b]])
    order = list(range(len(edges)))
    rng.shuffle(order)
    return MobiusGraph(cycles, [edges[i] for i in order], [twists[i] for i in order])


@pytest.mark.parametrize("mode", [ORIENTED, MOBIUS])
def test_canonical_form_is_relabelling_invariant(mode):
    rng = random.Random(7)
    for graph in connected_graphs(3, mode):
        key, hits = canonical_form(graph, mode)
        assert hits == automorphism_count(graph, mode)
        for _ in range(3):
            other = _relabel(graph, rng, flip=mode == MOBIUS)
            assert canonical_form(other, mode)[0] == key


def _bridges(graph: MobiusGraph) -> list[int]:
    out = []
    for i in range(graph.edge_count):
        rest = [e for j, e in enumerate(graph.edges) if j != i]
        seen, stack = {0}, [0]
        while stack:
            v = stack.pop()
            for a, b in rest:
                for x, y in ((a, b), (b, a)):
                    if graph.vertex_of[x] == v and graph.vertex_of[y] not in seen:
                        seen.add(graph.vertex_of[y])
                        stack.append(graph.vertex_of[y])
        if len(seen) < graph.vertex_count:
            out.append(i)
    return out


def _flip_vertex(graph: MobiusGraph, v: int) -> MobiusGraph:
    cycles = [list(reversed(c)) if i == v else list(c) for i, c in enumerate(graph.cycles)]
    tw = [t ^ ((graph.vertex_of[a] == v) != (graph.vertex_of[b] == v))
          for (a, b), t in zip(graph.edges, graph.twists)]
    return MobiusGraph(cycles, graph.edges, tw)


@pytest.mark.parametrize("e", [1, 2, 3])
def test_surface_invariants(e):
    for graph in connected_graphs(e):
        rep = surface_of_graph(graph)
        key = (rep.surface, rep.face_count)
        if graph.is_ribbon:
            assert rep.orientable
        if rep.orientable:
            assert rep.euler_characteristic % 2 == 0
        # a twist on a bridge, or a vertex flip, changes nothing
        for i in _bridges(graph):
            tw = list(graph.twists)
            tw[i] ^= 1
            other = surface_of_graph(MobiusGraph(graph.cycles, graph.edges, tw))
            assert (other.surface, other.face_count) == key
        for v in range(graph.vertex_count):
            other = surface_of_graph(_flip_vertex(graph, v))
            assert (other.surface, other.face_count) == key


def test_twist_on_cycle_edge_changes_surface():
    annulus = MobiusGraph([[0, 1], [2, 3]], [[0, 2], [1, 3]])
    band = MobiusGraph([[0, 1], [2, 3]], [[0, 2], [1, 3]], [1, 0])
    assert surface_of_graph(annulus).surface == SurfaceType(True, 0)
    assert surface_of_graph(band).surface == SurfaceType(False, 1)
