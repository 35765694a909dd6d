"""Finite groups as multiplication tables, conjugacy classes and class functions.

Elements are dense ids ``0..|G|-1`` and id 0 is always the identity.  Groups
come from presets, from permutation generators (closure, then lexicographic
numbering of the permutation images) or from a user supplied Cayley table.

Permutations are image tuples, ``p[i]`` being the image of ``i``; the product
``a * b`` is the composite "apply ``b`` first, then ``a``".
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import GroupError
from .limits import MAX_GROUP_ORDER


class FiniteGroup:
    """A finite group on element ids ``0..order-1``.

    Treat instances as immutable; derived data is computed once and cached.
    """

    def __init__(self, mul: Sequence[Sequence[int]], name: str | None = None,
                 labels: Sequence[Any] | None = None, *, check: bool = True,
                 max_order: int = MAX_GROUP_ORDER):
        table = tuple(tuple(int(c) for c in row) for row in mul)
        if not table:
            raise GroupError("empty multiplication table")
        if len(table) > max_order:
            raise GroupError(f"group order {len(table)} exceeds bound {max_order}")
        if check:
            _check_table(table)
        self.mul = table
        self.order = len(table)
        self.inv = tuple(row.index(0) for row in table)
        self.identity = 0
        self.name = name
        self.labels = tuple(labels) if labels is not None else None

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.mul == other.mul

    def __hash__(self) -> int:
        return hash(self.mul)

    def elements(self) -> range:
        return range(self.order)

    def power(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inv[x], -n
        r = 0
        for _ in range(n):
            r = self.mul[r][x]
        return r

    def element_order(self, x: int) -> int:
        n, y = 1, x
        while y != 0:
            y = self.mul[y][x]
            n += 1
        return n

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(x) for x in self.elements()))

    @cached_property
    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in self.elements() for b in range(a))

    @cached_property
    def classes(self) -> ConjugacyClassData:
        return _conjugacy_classes(self)

    @cached_property
    def structure_constants(self) -> list[list[list[int]]]:
        return class_structure_constants(self)


def _check_table(table: tuple[tuple[int, ...], ...]) -> None:
    n = len(table)
    ids = list(range(n))
    if any(len(row) != n for row in table):
        raise GroupError("multiplication table is not square")
    if list(table[0]) != ids or [row[0] for row in table] != ids:
        raise GroupError("row and column 0 must realize a two-sided identity")
    if any(sorted(row) != ids for row in table):
        raise GroupError("table rows are not permutations of the element ids")
    if any(sorted(col) != ids for col in zip(*table)):
        raise GroupError("table columns are not permutations of the element ids")
    m = np.asarray(table, dtype=np.int64)
    for a in range(n):
        # (a b) c against a (b c), for all b, c at once
        if not np.array_equal(m[m[a]], m[a][m]):
            raise GroupError(f"multiplication table is not associative (left factor {a})")


@dataclass(frozen=True)
class ConjugacyClassData:
    """Conjugacy classes ordered by (size, smallest member id); class 0 is {identity}."""

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    sizes: tuple[int, ...]
    rep: tuple[int, ...]
    inverse_class: tuple[int, ...]
    square_class: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.classes)


def _conjugacy_classes(G: FiniteGroup) -> ConjugacyClassData:
    mul, inv = G.mul, G.inv
    seen = [False] * G.order
    found = []
    for x in G.elements():
        if seen[x]:
            continue
        orbit = sorted({mul[mul[g][x]][inv[g]] for g in G.elements()})
        for y in orbit:
            seen[y] = True
        found.append(tuple(orbit))
    found.sort(key=lambda c: (len(c), c[0]))
    class_of = [0] * G.order
    for i, members in enumerate(found):
        for y in members:
            class_of[y] = i
    reps = tuple(c[0] for c in found)
    inverse_class = tuple(class_of[inv[r]] for r in reps)
    square_class = []
    for members in found:
        targets = {class_of[mul[y][y]] for y in members}
        if len(targets) != 1:
            raise GroupError("squares of a conjugacy class span several classes")
        square_class.append(targets.pop())
    return ConjugacyClassData(
        class_of=tuple(class_of),
        classes=tuple(found),
        sizes=tuple(len(c) for c in found),
        rep=reps,
        inverse_class=inverse_class,
        square_class=tuple(square_class),
    )


def conjugacy_data(G: FiniteGroup) -> ConjugacyClassData:
    return G.classes


def involution_count(G: FiniteGroup) -> int:
    """Number of elements squaring to the identity, the identity included."""
    return sum(1 for x in G.elements() if G.mul[x][x] == 0)


def class_structure_constants(G: FiniteGroup) -> list[list[list[int]]]:
    """``a[i][j][k]`` = #{(x, y) : x in C_i, y in C_j, x y = rep(C_k)}."""
    ccd = G.classes
    k = ccd.count
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    cls, mul, inv = ccd.class_of, G.mul, G.inv
    for t, z in enumerate(ccd.rep):
        for x in G.elements():
            a[cls[x]][cls[mul[inv[x]][z]]][t] += 1
    return a


# -- class functions ---------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """Integer values indexed by conjugacy class."""

    group: FiniteGroup
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.group.classes.count:
            raise GroupError(
                f"class function has {len(self.values)} values, group has "
                f"{self.group.classes.count} classes")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def at_identity(self) -> int:
        return self.values[0]

    def element_values(self) -> list[int]:
        return [self.values[c] for c in self.group.classes.class_of]

    def total(self) -> int:
        """Sum over all group elements (class values weighted by class size)."""
        return sum(s * v for s, v in zip(self.group.classes.sizes, self.values))

    @classmethod
    def from_element_values(cls, G: FiniteGroup, values: Sequence[int]) -> ClassFunction:
        ccd = G.classes
        out = []
        for members in ccd.classes:
            vals = {values[x] for x in members}
            if len(vals) != 1:
                raise GroupError("function is not constant on conjugacy classes")
            out.append(vals.pop())
        return cls(G, tuple(out))


def delta_identity(G: FiniteGroup) -> ClassFunction:
    return ClassFunction(G, (1,) + (0,) * (G.classes.count - 1))


def convolve(x: ClassFunction, y: ClassFunction, method: str = "elements") -> ClassFunction:
    """``(x * y)(w) = sum_g x(w g^-1) y(g)``, exactly.

    ``method="elements"`` runs the double loop over group elements and
    projects back to classes; ``method="structure"`` uses the class structure
    constants.  Both give identical results.
    """
    if x.group != y.group:
        raise GroupError("convolution of class functions on different groups")
    G = x.group
    if method == "elements":
        xe, ye = x.element_values(), y.element_values()
        acc = [0] * G.order
        for a in G.elements():
            xa = xe[a]
            if not xa:
                continue
            row = G.mul[a]
            for b, yb in enumerate(ye):
                if yb:
                    acc[row[b]] += xa * yb
        return ClassFunction.from_element_values(G, acc)
    if method == "structure":
        a = G.structure_constants
        k = G.classes.count
        out = [0] * k
        for i, xi in enumerate(x.values):
            if not xi:
                continue
            for j, yj in enumerate(y.values):
                if yj:
                    row = a[i][j]
                    p = xi * yj
                    for t in range(k):
                        if row[t]:
                            out[t] += p * row[t]
        return ClassFunction(G, tuple(out))
    raise GroupError(f"unknown convolution method {method!r}")


def convolution_power(x: ClassFunction, n: int, method: str = "elements") -> ClassFunction:
    if n < 1:
        raise GroupError("convolution power needs n >= 1")
    out = x
    for _ in range(n - 1):
        out = convolve(out, x, method)
    return out


# -- construction ------------------------------------------------------------

def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(a[i] for i in b)


def permutation_group(degree: int, generators: Iterable[Sequence[int]], name: str | None = None,
                      max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Closure of the generators; elements numbered by lexicographic image order."""
    if degree < 0:
        raise GroupError("negative permutation degree")
    points = list(range(degree))
    gens = []
    for g in generators:
        g = tuple(int(i) for i in g)
        if sorted(g) != points:
            raise GroupError(f"generator {list(g)} is not a bijection on 0..{degree - 1}")
        gens.append(g)
    ident = tuple(points)
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(g, p)
                if q not in elems:
                    elems.add(q)
                    if len(elems) > max_order:
                        raise GroupError(f"closure exceeds {max_order} elements")
                    nxt.append(q)
        frontier = nxt
    perms = sorted(elems)
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[_compose(a, b)] for b in perms] for a in perms]
    return FiniteGroup(mul, name=name, labels=perms, check=False, max_order=max_order)


def cyclic(n: int) -> FiniteGroup:
    if not 1 <= n <= 64:
        raise GroupError("cyclic preset supports 1 <= n <= 64")
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)],
                       name=f"C{n}", labels=range(n), check=False)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; id ``i + n*e`` is r^i s^e."""
    if n < 1 or 2 * n > MAX_GROUP_ORDER:
        raise GroupError("dihedral preset needs 1 <= n and 2n within the order bound")
    mul = []
    for i, e in ((i, e) for e in (0, 1) for i in range(n)):
        row = []
        for j, f in ((j, f) for f in (0, 1) for j in range(n)):
            r = (i + (-j if e else j)) % n
            row.append(r + n * (e ^ f))
        mul.append(row)
    labels = [f"r{i}" if e == 0 else f"r{i}s" for e in (0, 1) for i in range(n)]
    return FiniteGroup(mul, name=f"D{n}", labels=labels, check=False)


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("symmetric preset supports 1 <= n <= 6")
    gens = []
    if n >= 2:
        gens.append((1, 0) + tuple(range(2, n)))
        gens.append(tuple(range(1, n)) + (0,))
    return permutation_group(n, gens, name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise GroupError("alternating preset supports 1 <= n <= 6")
    gens = []
    for i in range(2, n):
        p = list(range(n))
        p[0], p[1], p[i] = 1, i, 0
        gens.append(p)
    return permutation_group(n, gens, name=f"A{n}")


_QUAT_UNITS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
# basis products: (sign, unit) for e_a * e_b with units 1, i, j, k
_QUAT_BASIS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion8() -> FiniteGroup:
    def split(u):
        return (-1, u[1:]) if u.startswith("-") else (1, u)

    mul = []
    for a in _QUAT_UNITS:
        sa, ua = split(a)
        row = []
        for b in _QUAT_UNITS:
            sb, ub = split(b)
            s, u = _QUAT_BASIS[(ua, ub)]
            s *= sa * sb
            row.append(_QUAT_UNITS.index(u if s > 0 else "-" + u))
        mul.append(row)
    return FiniteGroup(mul, name="Q8", labels=_QUAT_UNITS, check=False)


def direct_product(G: FiniteGroup, H: FiniteGroup, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    """Pairs (g, h) numbered ``g*|H| + h``."""
    n = G.order * H.order
    if n > max_order:
        raise GroupError(f"group order {n} exceeds bound {max_order}")
    m = H.order
    mul = [[G.mul[a // m][b // m] * m + H.mul[a % m][b % m] for b in range(n)] for a in range(n)]
    name = f"{G.name}x{H.name}" if G.name and H.name else None
    return FiniteGroup(mul, name=name, check=False, max_order=max_order)


_PRESET_WORDS = {
    "cyclic": cyclic, "c": cyclic, "z": cyclic,
    "dihedral": dihedral, "d": dihedral,
    "symmetric": symmetric, "s": symmetric,
    "alternating": alternating, "a": alternating,
}


def preset(name: str) -> FiniteGroup:
    """Named preset: ``S3``, ``cyclic:4``, ``D5``, ``Q8``/``quaternion8``, ``trivial``,
    ``klein``/``V4``, and ``x``-separated direct products such as ``C2xC2``."""
    text = name.strip()
    low = text.lower()
    if low in ("q8", "quaternion8", "quaternion"):
        return quaternion8()
    if low == "trivial":
        return cyclic(1)
    if low in ("klein", "v4"):
        return direct_product(cyclic(2), cyclic(2))
    parts = re.split(r"(?<=\d)x(?=[a-zA-Z])", text)
    if len(parts) > 1:
        G = preset(parts[0])
        for p in parts[1:]:
            G = direct_product(G, preset(p))
        return G
    m = re.fullmatch(r"([a-zA-Z]+)\s*[:_]?\s*(\d+)", text)
    if m and m.group(1).lower() in _PRESET_WORDS:
        return _PRESET_WORDS[m.group(1).lower()](int(m.group(2)))
    raise GroupError(f"unknown group preset {name!r}")


@dataclass(frozen=True)
class GroupSpec:
    """Parsed form of the group JSON schema."""

    kind: str
    name: str | None = None
    degree: int | None = None
    generators: tuple[tuple[int, ...], ...] = ()
    table: tuple[tuple[int, ...], ...] = ()
    left: GroupSpec | None = None
    right: GroupSpec | None = None

    @classmethod
    def from_json(cls, obj: dict) -> GroupSpec:
        if not isinstance(obj, dict) or "kind" not in obj:
            raise GroupError("group spec must be an object with a 'kind' field")
        kind = obj["kind"]
        if kind == "preset":
            name = str(obj.get("name", ""))
            if "n" in obj:
                name = f"{name}:{obj['n']}"
            return cls(kind, name=name)
        if kind == "permutation":
            try:
                return cls(kind, degree=int(obj["degree"]),
                           generators=tuple(tuple(g) for g in obj.get("generators", [])))
            except (KeyError, TypeError) as exc:
                raise GroupError(f"bad permutation spec: {exc}") from None
        if kind == "cayley":
            try:
                return cls(kind, table=tuple(tuple(r) for r in obj["table"]))
            except (KeyError, TypeError) as exc:
                raise GroupError(f"bad cayley spec: {exc}") from None
        if kind == "product":
            try:
                return cls(kind, left=cls.from_json(obj["left"]), right=cls.from_json(obj["right"]))
            except KeyError as exc:
                raise GroupError(f"product spec is missing {exc}") from None
        raise GroupError(f"unknown group spec kind {kind!r}")

    def to_json(self) -> dict:
        if self.kind == "preset":
            return {"kind": "preset", "name": self.name}
        if self.kind == "permutation":
            return {"kind": "permutation", "degree": self.degree,
                    "generators": [list(g) for g in self.generators]}
        if self.kind == "cayley":
            return {"kind": "cayley", "table": [list(r) for r in self.table]}
        return {"kind": "product", "left": self.left.to_json(), "right": self.right.to_json()}


def build_group(spec: GroupSpec | dict, max_order: int = MAX_GROUP_ORDER) -> FiniteGroup:
    if isinstance(spec, dict):
        spec = GroupSpec.from_json(spec)
    if spec.kind == "preset":
        G = preset(spec.name or "")
        if G.order > max_order:
            raise GroupError(f"group order {G.order} exceeds bound {max_order}")
        return G
    if spec.kind == "permutation":
        return permutation_group(spec.degree, spec.generators, max_order=max_order)
    if spec.kind == "cayley":
        return FiniteGroup(spec.table, name="cayley", max_order=max_order)
    if spec.kind == "product":
        return direct_product(build_group(spec.left, max_order), build_group(spec.right, max_order),
                              max_order=max_order)
    raise GroupError(f"unknown group spec kind {spec.kind!r}")


def parse_group_arg(text: str) -> FiniteGroup:
    """Command-line form: ``preset:<name>[:<n>]`` or ``file:<path>``."""
    if text.startswith("preset:"):
        return preset(text[len("preset:"):])
    if text.startswith("file:"):
        path = Path(text[len("file:"):])
        try:
            obj = json.loads(path.read_text())
        except OSError as exc:
            raise GroupError(f"cannot read group file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise GroupError(f"group file is not valid JSON: {exc}") from None
        return build_group(obj)
    # bare preset names are accepted as a convenience
    return preset(text)
