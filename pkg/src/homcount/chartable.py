"""Irreducible characters modulo a prime, computed from the multiplication table.

The central characters ``omega(C_i) = |C_i| chi(C_i) / d`` are the common
eigenvectors of the class-sum matrices; over GF(p) with ``p = 1 mod exponent``
the eigenvalues all lie in the prime field, so the commuting matrices can be
diagonalised by splitting eigenspaces one matrix at a time.  Degrees and
Frobenius-Schur indicators are small integers and are lifted exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _modp
from .errors import CharTableError
from .groups import ConjugacyClassData, FiniteGroup

PRIME_SEARCH_LIMIT = 10**13


@dataclass(frozen=True)
class CharacterTableModP:
    prime: int
    classes: ConjugacyClassData
    order: int
    degrees: tuple[int, ...]
    chi_mod_p: tuple[tuple[int, ...], ...]
    omega_mod_p: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.degrees)

    def symmetric(self, value: int) -> int:
        """Lift a residue to the range (-p/2, p/2]."""
        value %= self.prime
        return value - self.prime if value > self.prime // 2 else value


@dataclass(frozen=True)
class FSPartition:
    """Irreducible indices split by Frobenius-Schur indicator (+1, 0, -1)."""

    g1: tuple[int, ...]
    g2: tuple[int, ...]
    g3: tuple[int, ...]
    indicator: tuple[int, ...]


def valid_prime(G: FiniteGroup, p: int) -> bool:
    return _modp.is_prime(p) and p % G.exponent == 1 % G.exponent and p > 2 * G.order ** 2


def choose_prime(G: FiniteGroup, above: int | None = None, limit: int = PRIME_SEARCH_LIMIT) -> int:
    """Smallest valid prime for G, optionally strictly above ``above``."""
    floor = 2 * G.order ** 2
    if above is not None:
        floor = max(floor, above)
    p = _modp.first_prime(G.exponent, floor, limit)
    if p is None:
        raise CharTableError(f"no prime = 1 mod {G.exponent} found below {limit}")
    return p


def _split_eigenspaces(mats: list[list[list[int]]], k: int, p: int) -> list[list[int]]:
    """Common 1-dimensional eigenspaces of commuting k x k matrices over GF(p).

    Each space is kept as a basis in reduced row echelon form, so the
    coordinates of a vector of the space are its entries at the pivot columns.
    """
    spaces = [_modp.rref([[int(i == j) for j in range(k)] for i in range(k)], p)]
    for m in mats:
        if all(len(b) == 1 for b, _ in spaces):
            break
        nxt = []
        for basis, pivots in spaces:
            d = len(basis)
            if d == 1:
                nxt.append((basis, pivots))
                continue
            images = [[sum(m[r][c] * v[c] for c in range(k)) % p for r in range(k)] for v in basis]
            # restricted matrix: column j holds the coordinates of M b_j
            a = [[images[j][pivots[i]] for j in range(d)] for i in range(d)]
            roots = _modp.roots_mod_p(_modp.charpoly(a, p), p)
            split = []
            for r in roots:
                shifted = [[(a[i][j] - (r if i == j else 0)) % p for j in range(d)] for i in range(d)]
                vecs = [[sum(c * basis[i][col] for i, c in enumerate(coeffs)) % p for col in range(k)]
                        for coeffs in _modp.nullspace(shifted, p)]
                split.append(_modp.rref(vecs, p))
            if sum(len(b) for b, _ in split) != d:
                raise CharTableError("class matrix is not diagonalisable over GF(p)")
            nxt.extend(split)
        spaces = nxt
    if any(len(b) != 1 for b, _ in spaces):
        raise CharTableError("eigenspace splitting did not separate all characters")
    return [b[0] for b, _ in spaces]


def character_table_mod_p(G: FiniteGroup, prime_hint: int | None = None) -> CharacterTableModP:
    ccd = G.classes
    k, n = ccd.count, G.order
    if prime_hint is None:
        p = choose_prime(G)
    else:
        p = int(prime_hint)
        if not valid_prime(G, p):
            raise CharTableError(
                f"prime {p} is not valid for this group (need prime, = 1 mod {G.exponent}, "
                f"> {2 * n * n})")
    a = G.structure_constants
    # (M_i)[j][t] = a[i][j][t]; right eigenvectors are the central characters
    mats = [a[i] for i in range(1, k)]
    vectors = _split_eigenspaces(mats, k, p)
    rows = []
    inv_n = pow(n, -1, p)
    root_bound = math.isqrt(n)
    for v in vectors:
        if v[0] == 0:
            raise CharTableError("central character vanishes on the identity class")
        s = pow(v[0], -1, p)
        omega = [x * s % p for x in v]
        norm = sum(omega[i] * omega[ccd.inverse_class[i]] * pow(ccd.sizes[i], -1, p)
                   for i in range(k)) * inv_n % p
        if norm == 0:
            raise CharTableError("degenerate central character")
        d2 = pow(norm, -1, p)
        d = next((d for d in range(1, root_bound + 1) if d * d % p == d2), None)
        if d is None:
            raise CharTableError(f"degree square {d2} has no integer root <= sqrt(|G|)")
        chi = [d * omega[i] * pow(ccd.sizes[i], -1, p) % p for i in range(k)]
        rows.append((d, tuple(chi), tuple(omega)))
    rows.sort(key=lambda r: (r[0], r[1]))
    return CharacterTableModP(
        prime=p,
        classes=ccd,
        order=n,
        degrees=tuple(r[0] for r in rows),
        chi_mod_p=tuple(r[1] for r in rows),
        omega_mod_p=tuple(r[2] for r in rows),
    )


def fs_partition(table: CharacterTableModP, ccd: ConjugacyClassData | None = None) -> FSPartition:
    ccd = ccd or table.classes
    p = table.prime
    inv_n = pow(table.order, -1, p)
    indicator = []
    for chi in table.chi_mod_p:
        s = sum(size * chi[ccd.square_class[i]] for i, size in enumerate(ccd.sizes)) * inv_n
        nu = table.symmetric(s)
        if nu not in (-1, 0, 1):
            raise CharTableError(f"Frobenius-Schur indicator lifted to {nu}")
        indicator.append(nu)
    return FSPartition(
        g1=tuple(i for i, v in enumerate(indicator) if v == 1),
        g2=tuple(i for i, v in enumerate(indicator) if v == 0),
        g3=tuple(i for i, v in enumerate(indicator) if v == -1),
        indicator=tuple(indicator),
    )


def character_convolution_mod_p(G: FiniteGroup, x: tuple[int, ...], y: tuple[int, ...],
                                p: int) -> tuple[int, ...]:
    """Convolution of two class functions given by residues, via structure constants."""
    a = G.structure_constants
    k = len(x)
    out = [0] * k
    for i in range(k):
        if not x[i]:
            continue
        for j in range(k):
            if not y[j]:
                continue
            c = x[i] * y[j]
            row = a[i][j]
            for t in range(k):
                if row[t]:
                    out[t] += c * row[t]
    return tuple(v % p for v in out)


def verify_character_identities(table: CharacterTableModP, G: FiniteGroup,
                                ccd: ConjugacyClassData | None = None) -> dict[str, bool]:
    """Check the standard character identities; failures are reported, not raised."""
    ccd = ccd or table.classes
    p, n, k = table.prime, table.order, ccd.count
    chi = table.chi_mod_p
    inv = ccd.inverse_class
    report = {}
    report["count"] = len(chi) == k
    report["degree_squares"] = sum(d * d for d in table.degrees) == n
    report["degrees_divide_order"] = all(n % d == 0 for d in table.degrees)
    report["degree_column"] = all(row[0] == d % p for row, d in zip(chi, table.degrees))
    report["row_orthogonality"] = all(
        sum(ccd.sizes[i] * chi[l][i] * chi[m][inv[i]] for i in range(k)) % p
        == (n % p if l == m else 0)
        for l in range(len(chi)) for m in range(len(chi)))
    report["column_orthogonality"] = all(
        (sum(row[i] * row[inv[j]] for row in chi) * ccd.sizes[i]) % p
        == (n % p if i == j else 0)
        for i in range(k) for j in range(k))
    ok = True
    for l in range(len(chi)):
        for m in range(len(chi)):
            lhs = character_convolution_mod_p(G, chi[l], chi[m], p)
            scale = (n // table.degrees[m]) if l == m else 0
            rhs = tuple(scale * v % p for v in chi[l])
            ok &= lhs == rhs
    report["convolution"] = ok
    return report
