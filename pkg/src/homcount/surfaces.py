"""Counting homomorphisms from closed surface groups into a finite group.

Three independent routes are provided: the character formulas (exact
integers), convolution powers of the genus-one class functions, and brute
force over tuples of group elements.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .chartable import CharacterTableModP, FSPartition, character_table_mod_p, fs_partition
from .errors import SurfaceError, WorkBoundExceeded
from .groups import ClassFunction, FiniteGroup, convolve
from .limits import work_bound

ORIENTED = "oriented"
NONORIENTED = "nonoriented"
_KIND_ALIASES = {"oriented": ORIENTED, "f": ORIENTED, "orientable": ORIENTED,
                 "nonoriented": NONORIENTED, "r": NONORIENTED, "nonorientable": NONORIENTED}

_SURFACE_RE = re.compile(r"(orientable):g=(\d+)|(nonorientable):k=(\d+)")


@dataclass(frozen=True)
class SurfaceType:
    """Closed surface: genus ``g >= 0`` if orientable, ``k >= 1`` cross-caps if not."""

    orientable: bool
    genus_or_crosscaps: int

    def __post_init__(self):
        n = self.genus_or_crosscaps
        if self.orientable and n < 0:
            raise SurfaceError("genus must be non-negative")
        if not self.orientable and n < 1:
            raise SurfaceError("a non-orientable surface needs k >= 1 cross-caps")

    @property
    def euler_characteristic(self) -> int:
        n = self.genus_or_crosscaps
        return 2 - 2 * n if self.orientable else 2 - n

    @property
    def kind(self) -> str:
        return ORIENTED if self.orientable else NONORIENTED

    @classmethod
    def orientable_genus(cls, g: int) -> SurfaceType:
        return cls(True, g)

    @classmethod
    def crosscaps(cls, k: int) -> SurfaceType:
        return cls(False, k)

    @classmethod
    def from_euler(cls, orientable: bool, chi: int) -> SurfaceType:
        if orientable:
            if chi > 2 or chi % 2:
                raise SurfaceError(f"no orientable closed surface has Euler characteristic {chi}")
            return cls(True, (2 - chi) // 2)
        if chi > 1:
            raise SurfaceError(f"no non-orientable closed surface has Euler characteristic {chi}")
        return cls(False, 2 - chi)

    @classmethod
    def parse(cls, text: str) -> SurfaceType:
        """``orientable:g=<uint>`` or ``nonorientable:k=<uint>``."""
        m = _SURFACE_RE.fullmatch(text.strip())
        if not m:
            raise SurfaceError(f"bad surface {text!r}: expected orientable:g=N or nonorientable:k=N")
        if m.group(1):
            return cls(True, int(m.group(2)))
        return cls(False, int(m.group(4)))

    def __str__(self) -> str:
        if self.orientable:
            return f"orientable:g={self.genus_or_crosscaps}"
        return f"nonorientable:k={self.genus_or_crosscaps}"


def _kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind]
    except KeyError:
        raise SurfaceError(f"unknown class function kind {kind!r}") from None


def _tables(G, table, fs):
    if table is None:
        table = character_table_mod_p(G)
    if fs is None:
        fs = fs_partition(table)
    return table, fs


def count_hom_formula(G: FiniteGroup, surface: SurfaceType,
                      table: CharacterTableModP | None = None,
                      fs: FSPartition | None = None) -> int:
    """|Hom(pi_1(S), G)| from character degrees, in exact integers.

    Uses the identity-evaluated class-function expansions, which avoid the
    rational powers ``d^chi`` for negative Euler characteristic.
    """
    n = surface.genus_or_crosscaps
    if surface.orientable:
        if n == 0:
            return 1
        table, _ = _tables(G, table, fs)
        return sum((G.order // d) ** (2 * n - 1) * d for d in table.degrees)
    table, fs = _tables(G, table, fs)
    deg = table.degrees
    real = sum((G.order // deg[i]) ** (n - 1) * deg[i] for i in fs.g1)
    quat = sum((-(G.order // deg[i])) ** (n - 1) * deg[i] for i in fs.g3)
    return real - quat


def _relator_values(G: FiniteGroup, kind: str) -> list[int]:
    """Relator value of every single block: a b a^-1 b^-1 over pairs, or a^2."""
    mul, inv = G.mul, G.inv
    if kind == ORIENTED:
        return [mul[mul[mul[a][b]][inv[a]]][inv[b]] for a in G.elements() for b in G.elements()]
    return [mul[a][a] for a in G.elements()]


def _check_work(G: FiniteGroup, kind: str, n: int, bound: int | None) -> None:
    width = 2 if kind == ORIENTED else 1
    needed = G.order ** (width * n)
    limit = work_bound(bound)
    if needed > limit:
        raise WorkBoundExceeded(needed, limit, "tuple enumeration", label="surface-count")


def brute_force_hom_count(G: FiniteGroup, surface: SurfaceType, work: int | None = None) -> int:
    """Enumerate every 2g-tuple (or k-tuple) and count those with trivial relator."""
    n = surface.genus_or_crosscaps
    if n == 0:
        return 1
    kind = surface.kind
    _check_work(G, kind, n, work)
    blocks = _relator_values(G, kind)
    mul, inv = G.mul, G.inv

    def walk(prefix: int, depth: int) -> int:
        if depth == 1:
            # last block: scan all candidates for the one closing the relator
            return blocks.count(inv[prefix])
        row = mul[prefix]
        return sum(walk(row[b], depth - 1) for b in blocks)

    return walk(0, n)


def brute_force_class_function(G: FiniteGroup, kind: str, n: int, work: int | None = None) -> ClassFunction:
    """Tabulate the relator value of every tuple: f_n(w) or r_n(w) by enumeration."""
    kind = _kind(kind)
    if n < 1:
        raise SurfaceError("class function index must be >= 1")
    _check_work(G, kind, n, work)
    blocks = _relator_values(G, kind)
    mul = G.mul
    hist: Counter[int] = Counter()

    def walk(prefix: int, depth: int) -> None:
        row = mul[prefix]
        if depth == 1:
            hist.update(map(row.__getitem__, blocks))
            return
        for b in blocks:
            walk(row[b], depth - 1)

    walk(0, n)
    return ClassFunction.from_element_values(G, [hist[x] for x in G.elements()])


def hom_class_function(G: FiniteGroup, kind: str, n: int, base: ClassFunction | None = None,
                       method: str = "elements") -> ClassFunction:
    """f_n (oriented) or r_n (non-oriented) as the n-fold convolution power of f_1 / r_1.

    ``base`` defaults to the brute-force tabulation of f_1 or r_1.
    """
    kind = _kind(kind)
    if n < 1:
        raise SurfaceError("class function index must be >= 1")
    if base is None:
        base = brute_force_class_function(G, kind, 1)
    out = base
    for _ in range(n - 1):
        out = convolve(out, base, method)
    return out


def character_expansion_mod_p(G: FiniteGroup, kind: str, n: int, table: CharacterTableModP,
                              fs: FSPartition) -> tuple[int, ...]:
    """Right-hand side of the character expansion of f_n / r_n, per class, mod p."""
    kind = _kind(kind)
    p = table.prime
    out = [0] * len(table.classes.sizes)
    if kind == ORIENTED:
        terms = [(lam, (G.order // d) ** (2 * n - 1)) for lam, d in enumerate(table.degrees)]
    else:
        terms = [(lam, (G.order // table.degrees[lam]) ** (n - 1)) for lam in fs.g1]
        terms += [(lam, -((-(G.order // table.degrees[lam])) ** (n - 1))) for lam in fs.g3]
    for lam, coeff in terms:
        chi = table.chi_mod_p[lam]
        for i, v in enumerate(chi):
            out[i] = (out[i] + coeff * v) % p
    return tuple(out)


@dataclass(frozen=True)
class ExpansionCheck:
    kind: str
    n: int
    w_class: int
    prime: int
    group_side: int
    character_side: int

    @property
    def passed(self) -> bool:
        return self.group_side == self.character_side

    def __bool__(self) -> bool:
        return self.passed


def check_character_expansion(G: FiniteGroup, kind: str, n: int, w_class: int,
                              table: CharacterTableModP | None = None,
                              fs: FSPartition | None = None,
                              values: ClassFunction | None = None) -> ExpansionCheck:
    """Compare f_n(w) / r_n(w) with its character expansion modulo the table's prime."""
    kind = _kind(kind)
    table, fs = _tables(G, table, fs)
    if values is None:
        values = hom_class_function(G, kind, n)
    rhs = character_expansion_mod_p(G, kind, n, table, fs)
    return ExpansionCheck(kind, n, w_class, table.prime,
                          values[w_class] % table.prime, rhs[w_class])
