"""Dense linear algebra and univariate polynomials over GF(p).

Polynomials are coefficient lists, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  Matrices are lists of rows.
"""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    return all(n % d for d in range(17, math.isqrt(n) + 1, 2))


def first_prime(modulus: int, above: int, limit: int) -> int | None:
    """Smallest prime ``p > above`` with ``p % modulus == 1``, or None past ``limit``."""
    p = above + 1
    p += (1 - p) % modulus
    while p <= limit:
        if is_prime(p):
            return p
        p += modulus
    return None


# -- polynomials -------------------------------------------------------------

def _trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def poly_divmod(f: list[int], g: list[int], p: int) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], -1, p)
    q = [0] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        _trim(r)
    return _trim(q), r


def poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = _trim(list(f)), _trim(list(g))
    while b:
        a, b = b, poly_divmod(a, b, p)[1]
    if not a:
        return a
    inv_lead = pow(a[-1], -1, p)
    return [c * inv_lead % p for c in a]


def poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = poly_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = poly_divmod(poly_mul(result, base, p), mod, p)[1]
        base = poly_divmod(poly_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def poly_eval(f: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def poly_sub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    return _trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def roots_mod_p(f: list[int], p: int) -> list[int]:
    """Distinct roots of ``f`` in GF(p), ascending.

    Keeps the part of ``f`` that splits into distinct linear factors,
    ``gcd(f, x^p - x)``, then splits it by ``gcd(h, (x + a)^((p-1)/2) - 1)``
    for ``a = 0, 1, 2, ...`` (deterministic equal-degree splitting).
    """
    f = _trim([c % p for c in f])
    if len(f) <= 1:
        return []
    if p == 2:
        return [x for x in (0, 1) if poly_eval(f, x, p) == 0]
    xp = poly_powmod([0, 1], p, f, p)
    h = poly_gcd(f, poly_sub(xp, [0, 1], p), p)
    roots: list[int] = []
    stack = [h]
    a = 0
    while stack:
        h = stack.pop()
        deg = len(h) - 1
        if deg < 1:
            continue
        if deg == 1:
            roots.append(-h[0] * pow(h[1], -1, p) % p)
            continue
        while True:
            t = poly_powmod([a % p, 1], (p - 1) // 2, h, p)
            d = poly_gcd(h, poly_sub(t, [1], p), p)
            a += 1
            if 1 <= len(d) - 1 < deg:
                stack.append(d)
                stack.append(poly_divmod(h, d, p)[0])
                break
            if a > p:
                raise ArithmeticError("equal-degree splitting did not terminate")
    return sorted(roots)


# -- matrices ----------------------------------------------------------------

def charpoly(a: list[list[int]], p: int) -> list[int]:
    """Characteristic polynomial det(xI - A), via reduction to Hessenberg form."""
    n = len(a)
    h = [[x % p for x in row] for row in a]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for row in h:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(h[m][m - 1], -1, p)
        for i in range(m + 1, n):
            u = h[i][m - 1] * inv % p
            if not u:
                continue
            ri, rm = h[i], h[m]
            for j in range(n):
                ri[j] = (ri[j] - u * rm[j]) % p
            for row in h:
                row[m] = (row[m] + u * row[i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        pm = poly_mul([(-h[m - 1][m - 1]) % p, 1], polys[m - 1], p)
        t = 1
        for i in range(m - 1, 0, -1):
            t = t * h[i][i - 1] % p
            c = h[i - 1][m - 1] * t % p
            if c:
                pm = poly_sub(pm, [c * x % p for x in polys[i - 1]], p)
        polys.append(pm)
    return polys[n]


def rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of the row span, and its pivot columns."""
    m = [[x % p for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(a: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : A v = 0} for a square or rectangular A."""
    ncols = len(a[0]) if a else 0
    red, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[fcol] % p
        basis.append(v)
    return basis
