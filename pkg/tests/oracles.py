"""Brute-force reference implementations used only by the tests.

None of these share code with the package: characters are built from explicit
tableaux, decompositions are done by peeling off leading terms, and Weyl
group lengths come from bubble-sorting with simple reflections.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import prod


def tableaux(shape, letters, row_min=None):
    """Semistandard fillings of ``shape`` with entries ``0 .. letters-1``.

    ``row_min(r)`` optionally bounds the entries of row ``r`` from below.
    """
    shape = [p for p in shape if p > 0]

    def rows(r, above):
        if r == len(shape):
            yield []
            return
        lo = row_min(r) if row_min else 0

        def fill(c, prev, acc):
            if c == shape[r]:
                yield list(acc)
                return
            start = max(prev, lo, above[c] + 1 if above is not None else lo)
            for x in range(start, letters):
                acc.append(x)
                yield from fill(c + 1, x, acc)
                acc.pop()

        for row in fill(0, 0, []):
            for rest in rows(r + 1, row):
                yield [row] + rest

    yield from rows(0, None)


def schur_poly(shape, k):
    """``s_shape(x_1, ..., x_k)`` as a Counter of exponent vectors."""
    poly = Counter()
    for t in tableaux(shape, k):
        exp = [0] * k
        for row in t:
            for x in row:
                exp[x] += 1
        poly[tuple(exp)] += 1
    return poly


def poly_mul(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def decompose(poly, char_of):
    """Peel off irreducible characters by their lexicographically largest weight."""
    poly = Counter({e: c for e, c in poly.items() if c})
    out = {}
    while poly:
        top = max(poly)
        c = poly[top]
        out[top] = c
        for e, m in char_of(top).items():
            poly[e] -= c * m
            if poly[e] == 0:
                del poly[e]
    return out


def lr_product_oracle(lam, mu, k):
    """``{nu: c^nu_{lam,mu}}`` over ``GL(k)`` via Schur polynomial products."""
    prod_ = poly_mul(schur_poly(lam, k), schur_poly(mu, k))
    return decompose(prod_, lambda top: schur_poly(top, k))


def ssyt_count(shape, k):
    return sum(1 for _ in tableaux(shape, k))


def sp_character(shape, n):
    """Character of ``Sp<shape>`` from King's symplectic tableaux.

    Alphabet ``1 < 1bar < 2 < 2bar < ...`` encoded as ``0, 1, 2, 3, ...``;
    entries in row ``r`` (from 0) must be at least ``r + 1`` unbarred.
    """
    char = Counter()
    for t in tableaux(shape, 2 * n, row_min=lambda r: 2 * r):
        exp = [0] * n
        for row in t:
            for x in row:
                exp[x // 2] += -1 if x % 2 else 1
        char[tuple(exp)] += 1
    return char


def sp_tensor_oracle(lam, mu, n):
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    return decompose(poly_mul(sp_character(lam, n), sp_character(mu, n)), lambda top: sp_character(top, n))


def type_c_length(tau):
    """Number of simple reflections needed to make ``tau`` positive and decreasing.

    Simple reflections are adjacent swaps and negation of the last entry; each
    move fixes one descent, so the count is the length of the sorting element.
    Returns ``None`` for singular ``tau``.
    """
    tau = list(tau)
    if 0 in tau or len({abs(x) for x in tau}) != len(tau):
        return None
    steps = 0
    while True:
        for i in range(len(tau) - 1):
            if tau[i] < tau[i + 1]:
                tau[i], tau[i + 1] = tau[i + 1], tau[i]
                steps += 1
                break
        else:
            if tau and tau[-1] < 0:
                tau[-1] = -tau[-1]
                steps += 1
                continue
            return steps


def type_a_length(seq):
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None
    steps = 0
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] < seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                steps += 1
                changed = True
    return steps


def weyl_c(gamma):
    """Type C Weyl dimension polynomial, as an exact fraction, at any integer weight."""
    n = len(gamma)
    rho = [n - i for i in range(n)]
    l = [g + r for g, r in zip(gamma, rho)]
    num = Fraction(1)
    for i in range(n):
        num *= Fraction(l[i], rho[i])
        for j in range(i + 1, n):
            num *= Fraction((l[i] - l[j]) * (l[i] + l[j]), (rho[i] - rho[j]) * (rho[i] + rho[j]))
    return num


def gl_character(weight, n):
    """Character of an arbitrary dominant ``GL(n)`` weight via a determinant twist."""
    low = min(weight) if weight else 0
    base = schur_poly([p - low for p in weight], n)
    return Counter({tuple(e + low for e in exp): c for exp, c in base.items()})


def euler_oracle(lam, mu, t, n):
    """``chi(LGr(n, 2n), Sigma^lam U (x) Sigma^mu U*(t))`` by summing over torus weights.

    Pulls the bundle back to the full flag variety, where it is filtered by
    line bundles, one per torus weight.
    """
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    dual = Counter({tuple(-e for e in exp): c for exp, c in gl_character(lam, n).items()})
    total = Fraction(0)
    for exp, c in poly_mul(dual, gl_character(mu, n)).items():
        total += c * weyl_c(tuple(e + t for e in exp))
    assert total.denominator == 1
    return int(total)


def column_transpose(lam):
    """Conjugate partition by counting boxes in each column of a drawn diagram."""
    cells = {(r, c) for r, part in enumerate(lam) for c in range(part)}
    width = max((c for _, c in cells), default=-1) + 1
    return tuple(sum(1 for r, cc in cells if cc == c) for c in range(width))


def all_diagrams(max_rows, max_width):
    out = []
    for parts in product(range(max_width + 1), repeat=max_rows):
        if all(a >= b for a, b in zip(parts, parts[1:])):
            out.append(tuple(p for p in parts if p))
    return sorted(set(out))
