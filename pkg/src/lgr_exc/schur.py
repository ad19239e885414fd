"""Littlewood-Richardson calculus and Weyl dimensions for GL(k) and Sp(2n).

The only tensor-product kernel is an enumerator of Littlewood-Richardson
tableaux.  Mixed-sign GL weights are reduced to it by twisting with powers of
the determinant; symplectic products (stable range only) go through the
Newell-Littlewood formula, again built on the same kernel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod
from typing import Iterator, Mapping, Sequence

from .diagrams import Weight, includes, is_diagram, is_dominant, pad, size, strip, subdiagrams


@dataclass(frozen=True)
class VirtualModule:
    """Integer combination of irreducibles of ``GL(rank)`` or ``Sp(2 rank)``."""

    group: str  # "GL" or "Sp"
    rank: int
    terms: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.group not in ("GL", "Sp"):
            raise ValueError(f"unknown group {self.group!r}")
        clean = {}
        for lam, mult in self.terms.items():
            if mult == 0:
                continue
            lam = tuple(lam)
            if len(lam) != self.rank or not is_dominant(lam):
                raise ValueError(f"{lam} is not a dominant {self.group}({self.rank}) weight")
            if self.group == "Sp" and not is_diagram(lam):
                raise ValueError(f"{lam} is not a Young diagram")
            clean[lam] = clean.get(lam, 0) + mult
        object.__setattr__(self, "terms", {k: v for k, v in sorted(clean.items(), reverse=True) if v})

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, lam: Weight) -> int:
        return self.terms.get(tuple(lam), 0)

    def __add__(self, other: "VirtualModule") -> "VirtualModule":
        if (self.group, self.rank) != (other.group, other.rank):
            raise ValueError("cannot add modules over different groups")
        total = Counter(self.terms)
        total.update(other.terms)
        return VirtualModule(self.group, self.rank, dict(total))

    def dim(self) -> int:
        dim = dim_gl if self.group == "GL" else dim_sp
        return sum(mult * dim(lam, self.rank) for lam, mult in self.terms.items())


# -- Littlewood-Richardson kernel -----------------------------------------


def _compositions(total: int, caps: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - first, caps[1:]):
            yield (first,) + rest


def _lr_fillings(inner: Weight, content: Weight, outer: Weight | None, max_rows: int) -> Counter:
    """Count LR tableaux of shape ``outer/inner`` and weight ``content``.

    When ``outer`` is None every admissible outer shape with at most
    ``max_rows`` rows is produced.  A filling is semistandard and its reverse
    reading word (rows right to left, top to bottom) is a lattice word; it is
    built one row at a time, each row being a multiset of letters.
    """
    m = len(content)
    n_rows = min(max_rows, len(inner) + m)
    if len(inner) > n_rows:
        return Counter()
    if outer is not None:
        if len(outer) > n_rows:
            return Counter()
        outer = pad(outer, n_rows)
    lam = pad(inner, n_rows)
    remaining = list(content)
    used = [0] * (m + 2)  # used[i] = letters i placed so far, 1-based
    result: Counter = Counter()

    def rec(r: int, prev_len: int | None, prev_row: dict[int, int], shape: list[int]) -> None:
        if r == n_rows:
            if not any(remaining):
                result[tuple(shape)] += 1
            return
        letters = min(r + 1, m)
        # a letter i can never sit above row i-1, so anything left over must fit below
        if any(remaining[i] for i in range(letters, m)) and r + 1 >= n_rows:
            return
        cap_len = None if prev_len is None else prev_len - lam[r]
        if outer is not None:
            lengths = [outer[r] - lam[r]]
            if lengths[0] < 0 or (cap_len is not None and lengths[0] > cap_len):
                return
        else:
            hi = sum(remaining[:letters])
            if cap_len is not None:
                hi = min(hi, cap_len)
            lengths = range(hi, -1, -1)
        for length in lengths:
            for counts in _compositions(length, remaining[:letters]):
                # lattice condition for the reversed reading of this row
                if any(used[i] < used[i + 1] + counts[i] for i in range(1, letters)):
                    continue
                start = lam[r]
                row: dict[int, int] = {}
                col = start
                for letter, cnt in enumerate(counts, start=1):
                    for _ in range(cnt):
                        row[col] = letter
                        col += 1
                if any(c in prev_row and row[c] <= prev_row[c] for c in row):
                    continue
                for letter, cnt in enumerate(counts, start=1):
                    used[letter] += cnt
                    remaining[letter - 1] -= cnt
                shape.append(start + length)
                rec(r + 1, start + length, row, shape)
                shape.pop()
                for letter, cnt in enumerate(counts, start=1):
                    used[letter] -= cnt
                    remaining[letter - 1] += cnt

    rec(0, None, {}, [])
    return result


@lru_cache(maxsize=None)
def _lr_product(lam: Weight, mu: Weight, max_rows: int) -> dict[Weight, int]:
    # content should be the smaller diagram; the coefficient is symmetric
    if size(mu) > size(lam):
        lam, mu = mu, lam
    return {strip(nu): c for nu, c in _lr_fillings(lam, mu, None, max_rows).items()}


def lr_product(lam: Sequence[int], mu: Sequence[int], max_rows: int | None = None) -> dict[Weight, int]:
    """``{nu: c^nu_{lam,mu}}`` restricted to ``nu`` with at most ``max_rows`` rows."""
    lam, mu = strip(lam), strip(mu)
    if max_rows is None:
        max_rows = len(lam) + len(mu)
    return dict(_lr_product(lam, mu, max_rows))


@lru_cache(maxsize=None)
def _lr_coeff(lam: Weight, mu: Weight, nu: Weight) -> int:
    if size(nu) != size(lam) + size(mu) or not includes(lam, nu) or not includes(mu, nu):
        return 0
    if size(mu) > size(lam):
        lam, mu = mu, lam
    return sum(_lr_fillings(lam, mu, nu, len(nu)).values())


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Littlewood-Richardson coefficient ``c^nu_{lam,mu}``."""
    return _lr_coeff(strip(lam), strip(mu), strip(nu))


def tensor_gl(lam: Sequence[int], mu: Sequence[int], k: int) -> VirtualModule:
    """Decompose ``Sigma^lam (x) Sigma^mu`` of a rank ``k`` space."""
    lam, mu = pad(lam, k) if is_diagram(lam) else tuple(lam), pad(mu, k) if is_diagram(mu) else tuple(mu)
    if len(lam) != k or len(mu) != k or not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError(f"need dominant GL({k}) weights, got {lam}, {mu}")
    if k == 0:
        return VirtualModule("GL", 0, {(): 1})
    a, b = lam[-1], mu[-1]
    prod_ = _lr_product(strip(tuple(p - a for p in lam)), strip(tuple(p - b for p in mu)), k)
    terms = {tuple(p + a + b for p in pad(nu, k)): c for nu, c in prod_.items()}
    return VirtualModule("GL", k, terms)


def skew(lam: Sequence[int], mu: Sequence[int], k: int) -> VirtualModule:
    """Expand ``Sigma^{lam/mu}`` of a rank ``k`` space into irreducibles."""
    if not includes(mu, lam):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    lam_s, mu_s = strip(lam), strip(mu)
    target = size(lam_s) - size(mu_s)
    terms = {}
    for nu in subdiagrams(lam_s):
        if size(nu) != target or len(strip(nu)) > k:
            continue
        c = lr_coeff(nu, mu_s, lam_s)
        if c:
            terms[pad(strip(nu), k)] = c
    return VirtualModule("GL", k, terms)


# -- dimensions -----------------------------------------------------------


def dim_gl(lam: Sequence[int], k: int) -> int:
    """Weyl dimension of the irreducible ``GL(k)`` module of highest weight ``lam``."""
    lam = pad(lam, k) if is_diagram(lam) else tuple(lam)
    if len(lam) != k or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant GL({k}) weight")
    num = prod(lam[i] - lam[j] + j - i for i in range(k) for j in range(i + 1, k))
    den = prod(j - i for i in range(k) for j in range(i + 1, k))
    return num // den


def sp_dimension_polynomial(lam: Sequence[int], n: int) -> int:
    """Weyl's type C dimension polynomial at an arbitrary integral weight.

    Equals ``dim Sp<lam>`` for dominant ``lam``; for other weights it is the
    Euler characteristic of the corresponding line bundle on the flag variety,
    which is zero off the regular locus.
    """
    lam = tuple(lam)
    if len(lam) != n:
        raise ValueError(f"need {n} entries, got {lam}")
    l = [lam[i] + n - i for i in range(n)]
    r = [n - i for i in range(n)]
    num = prod((l[i] - l[j]) * (l[i] + l[j]) for i in range(n) for j in range(i + 1, n)) * prod(l)
    den = prod((r[i] - r[j]) * (r[i] + r[j]) for i in range(n) for j in range(i + 1, n)) * prod(r)
    return num // den


def dim_sp(lam: Sequence[int], n: int) -> int:
    """Dimension of the irreducible ``Sp(2n)`` module labelled by the diagram ``lam``."""
    if len(strip(lam)) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} rows")
    lam = pad(lam, n)
    if not is_diagram(lam):
        raise ValueError(f"{lam} is not a Young diagram")
    return sp_dimension_polynomial(lam, n)


def fundamental_sp(i: int, n: int) -> Weight:
    """Highest weight of ``V^[i]``, the column of height ``i`` padded to ``n`` rows."""
    if not 0 <= i <= n:
        raise ValueError(f"fundamental index {i} out of range 0..{n}")
    return (1,) * i + (0,) * (n - i)


def tensor_sp_stable(lam: Sequence[int], mu: Sequence[int], n: int) -> VirtualModule:
    """``Sp<lam> (x) Sp<mu>`` for ``Sp(2n)`` via Newell-Littlewood coefficients.

    Refuses inputs with ``l(lam) + l(mu) > n``; outside that range the formula
    needs modification rules which are not implemented.
    """
    lam, mu = strip(lam), strip(mu)
    if not (is_diagram(lam) and is_diagram(mu)):
        raise ValueError("symplectic labels must be Young diagrams")
    if len(lam) + len(mu) > n:
        raise ValueError(
            f"outside the stable range: l({lam}) + l({mu}) > {n}; no modification rules"
        )
    total: Counter = Counter()
    for alpha in subdiagrams(lam):
        if not includes(alpha, mu):
            continue
        betas = skew(lam, alpha, n)
        gammas = skew(mu, alpha, n)
        for beta, cb in betas:
            for gamma, cg in gammas:
                for nu, c in lr_product(beta, gamma, n).items():
                    total[pad(nu, n)] += cb * cg * c
    return VirtualModule("Sp", n, dict(total))
