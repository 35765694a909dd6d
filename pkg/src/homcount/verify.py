"""Cross-checks between the formula, convolution and brute-force routes for one group."""

from __future__ import annotations

from dataclasses import dataclass, field

from .chartable import character_table_mod_p, choose_prime, fs_partition, verify_character_identities
from .errors import WorkBoundExceeded
from .fatgraph import connected_graphs, mu_gamma, surface_of_graph
from .groups import FiniteGroup, convolve, involution_count
from .surfaces import (NONORIENTED, ORIENTED, SurfaceType, brute_force_class_function,
                       brute_force_hom_count, character_expansion_mod_p, count_hom_formula,
                       hom_class_function)


@dataclass
class Check:
    name: str
    passed: bool | None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.passed is None:
            out["skipped"] = True
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerifyReport:
    group: str
    order: int
    prime: int
    fs: dict[str, list[int]]
    checks: list[Check] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def add(self, name: str, passed: bool | None, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    def to_json(self) -> dict:
        return {"group": self.group, "order": self.order, "prime": self.prime, "fs": self.fs,
                "checks": [c.to_json() for c in self.checks], "all_passed": self.all_passed}


def verify_all(G: FiniteGroup, max_genus: int = 2, max_crosscaps: int = 3, max_edges: int = 2,
               work: int | None = None) -> VerifyReport:
    table = character_table_mod_p(G)
    fs = fs_partition(table)
    deg = table.degrees
    report = VerifyReport(G.name or "?", G.order, table.prime,
                          {"g1": list(fs.g1), "g2": list(fs.g2), "g3": list(fs.g3)})

    ident = verify_character_identities(table, G)
    report.add("character_identities", all(ident.values()),
               ",".join(k for k, v in ident.items() if not v))
    other = character_table_mod_p(G, choose_prime(G, above=table.prime))
    report.add("degrees_prime_independent", other.degrees == table.degrees,
               f"primes {table.prime}, {other.prime}")
    inv = involution_count(G)
    fs_sum = sum(deg[i] for i in fs.g1) - sum(deg[i] for i in fs.g3)
    report.add("fs_involution_identity", fs_sum == inv, f"{fs_sum} vs {inv}")

    brute_fns: dict[tuple[str, int], object] = {}

    def brute_fn(kind, n):
        key = (kind, n)
        if key not in brute_fns:
            try:
                brute_fns[key] = brute_force_class_function(G, kind, n, work)
            except WorkBoundExceeded:
                brute_fns[key] = None
        return brute_fns[key]

    surfaces = [SurfaceType(True, g) for g in range(max_genus + 1)]
    surfaces += [SurfaceType(False, k) for k in range(1, max_crosscaps + 1)]
    for s in surfaces:
        formula = count_hom_formula(G, s, table, fs)
        n = s.genus_or_crosscaps
        conv = hom_class_function(G, s.kind, n).at_identity() if n else 1
        try:
            brute = brute_force_hom_count(G, s, work)
        except WorkBoundExceeded:
            report.add(f"three_way[{s}]", formula == conv, f"formula={formula} brute skipped")
            continue
        report.add(f"three_way[{s}]", formula == conv == brute, f"{formula}/{conv}/{brute}")
        if s.orientable and n >= 1:
            report.add(f"integrality[{s}]", formula % G.order == 0)

    report.add("rp2_involutions", count_hom_formula(G, SurfaceType(False, 1), table, fs) == inv)

    for kind, top in ((ORIENTED, max_genus), (NONORIENTED, max_crosscaps)):
        for total in range(2, top + 1):
            whole = brute_fn(kind, total)
            for a in range(1, total):
                left, right = brute_fn(kind, a), brute_fn(kind, total - a)
                name = f"semigroup[{kind}:{a}+{total - a}]"
                if whole is None or left is None or right is None:
                    report.add(name, None, "work bound")
                    continue
                report.add(name, convolve(left, right) == whole)
        for n in range(1, top + 1):
            values = hom_class_function(G, kind, n)
            rhs = character_expansion_mod_p(G, kind, n, table, fs)
            lhs = tuple(v % table.prime for v in values.values)
            report.add(f"expansion[{kind}:{n}]", lhs == rhs)

    for e in range(1, max_edges + 1):
        ok = True
        try:
            for graph in connected_graphs(e):
                rep = surface_of_graph(graph)
                expected = G.order ** (rep.face_count - 1) * brute_force_hom_count(G, rep.surface, work)
                ok &= mu_gamma(graph, G, work) == expected
        except WorkBoundExceeded:
            report.add(f"mu_invariance[edges={e}]", None, "work bound")
            continue
        report.add(f"mu_invariance[edges={e}]", ok)
    return report
