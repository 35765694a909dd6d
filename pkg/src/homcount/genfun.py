"""Coefficients of the ribbon / Möbius graph expansions by Wick-pairing enumeration.

A valence profile fixes labeled vertices with slots in cyclic order.  Every
perfect matching of the slots (and, in Möbius mode, every twist assignment)
is a labeled configuration; the connected ones are grouped into isomorphism
classes by canonical form.  Coefficients are sums over configurations divided
by the slot symmetry order, which by orbit-stabilizer equals the sum over
isomorphism classes weighted by ``1/|Aut|``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .chartable import CharacterTableModP, FSPartition, character_table_mod_p, fs_partition
from .errors import GenfunError
from .fatgraph import (MOBIUS, ORIENTED, MobiusGraph, automorphism_count, canonical_form,
                       mu_gamma, perfect_matchings, slot_cycles, surface_of_graph)
from .groups import FiniteGroup

MAX_EDGES = 5
# trace conventions: the regular character, or the regular character over |G|
REGULAR = "regular"
NORMALIZED = "normalized"
NORMALIZATIONS = (REGULAR, NORMALIZED)


@dataclass(frozen=True)
class ValenceProfile:
    """Vertex counts by valence, ``j -> v_j`` with every ``j >= 3``."""

    counts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cleaned = tuple(sorted((int(j), int(v)) for j, v in self.counts if int(v)))
        object.__setattr__(self, "counts", cleaned)
        if not cleaned:
            raise GenfunError("profile needs at least one vertex")
        for j, v in cleaned:
            if j < 3:
                raise GenfunError(f"valence {j} < 3 is not allowed")
            if v < 0:
                raise GenfunError("vertex counts must be non-negative")
        if len({j for j, _ in cleaned}) != len(cleaned):
            raise GenfunError("valence listed twice")
        if self.half_edges % 2:
            raise GenfunError(f"profile has an odd number ({self.half_edges}) of half-edges")

    @classmethod
    def of(cls, mapping: dict[int, int]) -> ValenceProfile:
        return cls(tuple(mapping.items()))

    @classmethod
    def parse(cls, text: str) -> ValenceProfile:
        """``"3:2,4:1"`` means two trivalent vertices and one 4-valent vertex."""
        pairs = []
        for part in text.split(","):
            m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", part)
            if not m:
                raise GenfunError(f"bad profile entry {part!r}: expected j:v")
            pairs.append((int(m.group(1)), int(m.group(2))))
        return cls(tuple(pairs))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    @property
    def half_edges(self) -> int:
        return sum(j * v for j, v in self.counts)

    @property
    def edges(self) -> int:
        return self.half_edges // 2

    @property
    def vertices(self) -> int:
        return sum(v for _, v in self.counts)

    @property
    def valences(self) -> list[int]:
        return [j for j, v in self.counts for _ in range(v)]

    def symmetry_order(self, oriented: bool = True) -> int:
        """prod v_j! j^v_j (cyclic slots) or prod v_j! (2j)^v_j (dihedral slots)."""
        out = 1
        for j, v in self.counts:
            out *= math.factorial(v) * (j if oriented else 2 * j) ** v
        return out

    def __str__(self) -> str:
        return ",".join(f"{j}:{v}" for j, v in self.counts)


@dataclass(frozen=True)
class GraphClass:
    graph: MobiusGraph
    labeled_count: int
    face_count: int
    euler_characteristic: int
    orientable: bool


@dataclass(frozen=True)
class CoefficientEntry:
    profile: ValenceProfile
    oriented: bool
    group: str
    value: Fraction
    graph_classes: int


def _check_size(profile: ValenceProfile) -> None:
    if profile.edges > MAX_EDGES:
        raise GenfunError(f"profile has {profile.edges} edges; at most {MAX_EDGES} are supported")


def labeled_configurations(profile: ValenceProfile, oriented: bool = True):
    """Every labeled configuration, connected or not, as a MobiusGraph."""
    cycles = slot_cycles(profile.valences)
    e = profile.edges
    twist_choices = [(0,) * e] if oriented else list(itertools.product((0, 1), repeat=e))
    for matching in perfect_matchings(range(profile.half_edges)):
        for tw in twist_choices:
            graph = MobiusGraph(cycles, matching, tw)
            yield graph


@lru_cache(maxsize=None)
def graph_classes(profile: ValenceProfile, oriented: bool = True) -> tuple[GraphClass, ...]:
    """Isomorphism classes of connected configurations with their labeled multiplicities."""
    _check_size(profile)
    mode = ORIENTED if oriented else MOBIUS
    found: dict[tuple, list] = {}
    for graph in labeled_configurations(profile, oriented):
        if not graph.connected:
            continue
        key, _ = canonical_form(graph, mode)
        slot = found.get(key)
        if slot is None:
            found[key] = [graph, 1]
        else:
            slot[1] += 1
    out = []
    for key in sorted(found):
        graph, n = found[key]
        rep = surface_of_graph(graph)
        out.append(GraphClass(graph, n, rep.face_count, rep.euler_characteristic, rep.orientable))
    return tuple(out)


def connected_configuration_count(profile: ValenceProfile, oriented: bool = True) -> int:
    return sum(c.labeled_count for c in graph_classes(profile, oriented))


def _check_normalization(normalization: str) -> None:
    if normalization not in NORMALIZATIONS:
        raise GenfunError(f"unknown normalization {normalization!r}; use one of {NORMALIZATIONS}")


def coefficient_group_side(profile: ValenceProfile, G: FiniteGroup, oriented: bool = True,
                           normalization: str = REGULAR, work: int | None = None) -> Fraction:
    """Sum of mu over connected labeled configurations, over the slot symmetry order.

    With the regular trace each configuration is weighted ``mu * |G|^(v-e)``,
    i.e. ``|G|^(chi-1) |Hom|``; with the normalized trace it is ``mu`` itself,
    i.e. ``|G|^(f-1) |Hom|``.  mu is computed once per isomorphism class and
    multiplied by the number of labeled configurations in that class.
    """
    _check_normalization(normalization)
    total = sum(c.labeled_count * mu_gamma(c.graph, G, work) for c in graph_classes(profile, oriented))
    value = Fraction(total, profile.symmetry_order(oriented))
    if normalization == REGULAR:
        value *= _power(G.order, profile.vertices - profile.edges)
    return value


def _power(base: int, exponent: int) -> Fraction:
    return Fraction(base) ** exponent


def degree_sum(table: CharacterTableModP, fs: FSPartition, chi: int, orientable: bool) -> Fraction:
    """sum d^chi over all irreducibles (orientable), or over the real ones plus
    ``(-d)^chi`` over the quaternionic ones (non-orientable)."""
    if orientable:
        return sum((_power(d, chi) for d in table.degrees), Fraction(0))
    s = sum((_power(table.degrees[i], chi) for i in fs.g1), Fraction(0))
    return s + sum((_power(-table.degrees[i], chi) for i in fs.g3), Fraction(0))


def character_weight(G: FiniteGroup, table: CharacterTableModP, fs: FSPartition,
                     face_count: int, chi: int, orientable: bool,
                     normalization: str = REGULAR) -> Fraction:
    w = degree_sum(table, fs, chi, orientable)
    if normalization == NORMALIZED:
        w *= G.order ** (face_count - 1) * _power(G.order, 1 - chi)
    return w


def coefficient_character_side(profile: ValenceProfile, G: FiniteGroup,
                               table: CharacterTableModP | None = None,
                               fs: FSPartition | None = None,
                               oriented: bool = True, normalization: str = REGULAR) -> Fraction:
    _check_normalization(normalization)
    if table is None:
        table = character_table_mod_p(G)
    if fs is None:
        fs = fs_partition(table)
    total = Fraction(0)
    for c in graph_classes(profile, oriented):
        w = character_weight(G, table, fs, c.face_count, c.euler_characteristic, c.orientable,
                             normalization)
        total += c.labeled_count * w
    return total / profile.symmetry_order(oriented)


def coefficient(profile: ValenceProfile, G: FiniteGroup, oriented: bool = True,
                normalization: str = REGULAR) -> CoefficientEntry:
    value = coefficient_group_side(profile, G, oriented, normalization)
    return CoefficientEntry(profile, oriented, G.name or "?", value,
                            len(graph_classes(profile, oriented)))


@dataclass(frozen=True)
class OrbitStabilizerReport:
    profile: ValenceProfile
    oriented: bool
    labeled_count: int
    symmetry_order: int
    class_count: int
    inverse_aut_sum: Fraction

    @property
    def passed(self) -> bool:
        return self.labeled_count == self.symmetry_order * self.inverse_aut_sum

    def __bool__(self) -> bool:
        return self.passed


def verify_orbit_stabilizer(profile: ValenceProfile, oriented: bool = True) -> OrbitStabilizerReport:
    """Labeled connected configurations against symmetry order times sum of 1/|Aut|."""
    if profile.half_edges > 10:
        raise GenfunError("orbit-stabilizer check supports at most 10 half-edges")
    mode = ORIENTED if oriented else MOBIUS
    classes = graph_classes(profile, oriented)
    inv_sum = sum((Fraction(1, automorphism_count(c.graph, mode)) for c in classes), Fraction(0))
    labeled = sum(1 for g in labeled_configurations(profile, oriented) if g.connected)
    return OrbitStabilizerReport(profile, oriented, labeled, profile.symmetry_order(oriented),
                                 len(classes), inv_sum)
