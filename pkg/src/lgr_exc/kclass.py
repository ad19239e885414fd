"""Euler pairings on LGr(n, 2n) and K-classes of the objects E^lam and F^lam.

A K-class is a finite integer combination of labels ``mu`` standing for
``[Sigma^mu U*]``.  No relations between labels are imposed, so two classes
are only ever compared through pairings.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .bbw import coh_lgr_bundle, euler_characteristic
from .diagrams import (
    Weight,
    _check_block,
    enumerate_block,
    format_weight,
    includes,
    is_diagram,
    is_dominant,
    negate,
    pad,
    size,
    subdiagrams,
    twist,
)
from .schur import dim_gl


@dataclass(frozen=True)
class KClass:
    n: int
    terms: Mapping[Weight, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean: Counter = Counter()
        for lam, c in self.terms.items():
            lam = pad(lam, self.n) if is_diagram(lam) else tuple(lam)
            if len(lam) != self.n or not is_dominant(lam):
                raise ValueError(f"{lam} is not a dominant GL({self.n}) label")
            clean[lam] += c
        object.__setattr__(self, "terms", {k: v for k, v in sorted(clean.items(), reverse=True) if v})

    @classmethod
    def of(cls, lam: Sequence[int], n: int) -> "KClass":
        return cls(n, {tuple(pad(lam, n) if is_diagram(lam) else lam): 1})

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same(self, other: "KClass") -> None:
        if self.n != other.n:
            raise ValueError("K-classes over different n")

    def __add__(self, other: "KClass") -> "KClass":
        self._same(other)
        total = Counter(self.terms)
        total.update(other.terms)
        return KClass(self.n, dict(total))

    def __neg__(self) -> "KClass":
        return KClass(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, c: int) -> "KClass":
        return KClass(self.n, {k: c * v for k, v in self.terms.items()})

    def to_dict(self) -> dict[str, int]:
        return {format_weight(k): v for k, v in self.terms.items()}


# -- pairings ---------------------------------------------------------------


def euler_pairing(mu: Sequence[int], nu: Sequence[int], t: int, n: int) -> int:
    """``chi(Sigma^mu U*(t), Sigma^nu U*)`` on ``LGr(n, 2n)``."""
    return euler_characteristic(coh_lgr_bundle(mu, nu, -t, n))


def euler_pairing_equivariant(mu: Sequence[int], nu: Sequence[int], n: int) -> int:
    """``Sp(2n)``-equivariant Euler pairing ``chi_G(Sigma^mu U*, Sigma^nu U*)``.

    Only cohomology cells carrying the trivial representation contribute.
    """
    total = 0
    for degree, module in coh_lgr_bundle(mu, nu, 0, n).items():
        total += (-1) ** degree * module[(0,) * n]
    return total


def chi(x: KClass, y: KClass) -> int:
    """Bilinear extension of :func:`euler_pairing` (``chi(x, y)``, no twist)."""
    x._same(y)
    return sum(a * b * euler_pairing(p, q, 0, x.n) for p, a in x for q, b in y)


def chi_equivariant(x: KClass, y: KClass) -> int:
    x._same(y)
    return sum(a * b * euler_pairing_equivariant(p, q, x.n) for p, a in x for q, b in y)


def _check_admissible(h: int, w: int, n: int) -> None:
    if h < 0 or w < 0 or h + w > n + 1 or h > n:
        raise ValueError(f"block Y_{{{h},{w}}} is not admissible for n={n} (need h+w <= n+1)")


def gram_matrix(h: int, w: int, n: int) -> tuple[list[Weight], list[list[int]]]:
    """Equivariant pairings ``M[i][j] = chi_G(labels[i], labels[j])`` on the block ``Y_{h,w}``.

    Labels are ordered by size, then lexicographically.
    """
    _check_admissible(h, w, n)
    labels = [pad(lam, n) for lam in enumerate_block(h, w)]
    matrix = [[euler_pairing_equivariant(a, b, n) for b in labels] for a in labels]
    return labels, matrix


# -- classes of the exceptional objects ------------------------------------------


@lru_cache(maxsize=None)
def _solve_E(lam: Weight, n: int) -> tuple[tuple[Weight, int], ...]:
    labels = sorted((pad(mu, n) for mu in subdiagrams(lam)), key=lambda mu: (size(mu), mu), reverse=True)
    coeff: dict[Weight, int] = {}
    for mu in labels:
        diag = euler_pairing_equivariant(mu, mu, n)
        if diag != 1:
            raise ArithmeticError(f"Gram matrix not unitriangular: chi_G({mu}, {mu}) = {diag}")
        acc = sum(c * euler_pairing_equivariant(nu, mu, n) for nu, c in coeff.items() if includes(mu, nu))
        target = 1 if mu == lam else 0
        coeff[mu] = target - acc
    return tuple((mu, c) for mu, c in coeff.items() if c)


def kclass_E(lam: Sequence[int], h: int, w: int, n: int) -> KClass:
    """Class of ``E^lam`` for ``lam`` in the block ``Y_{h,w}``.

    The unique combination ``sum_{mu in lam} a_mu [Sigma^mu U*]`` with
    ``chi_G(E^lam, Sigma^mu U*) = delta_{mu, lam}`` for every ``mu`` in ``lam``.
    """
    _check_admissible(h, w, n)
    lam = pad(_check_block(lam, h, w), n)
    return KClass(n, dict(_solve_E(lam, n)))


def kclass_F(lam: Sequence[int], h: int, w: int, n: int) -> KClass:
    """Class of the dual ``F^lam = (E^lam)*``: every label negated."""
    return dualize(kclass_E(lam, h, w, n))


def dualize(x: KClass) -> KClass:
    return KClass(x.n, {negate(k): v for k, v in x})


def twist_kclass(x: KClass, t: int) -> KClass:
    """Tensor with ``O(t)``."""
    return KClass(x.n, {twist(k, t): v for k, v in x})


def rank(x: KClass) -> int:
    return sum(c * dim_gl(k, x.n) for k, c in x)
