"""Borel-Bott-Weil on Grassmannians, isotropic and Lagrangian Grassmannians.

Every engine has the same shape: add ``rho = (n, n-1, ..., 1)``, test
regularity, sort (with signs in type C) and report the length of the sorting
Weyl group element.  A vanishing result is represented by ``None``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .diagrams import Weight, is_diagram, is_dominant, negate, pad, twist
from .schur import VirtualModule, dim_gl, dim_sp, tensor_gl


@dataclass(frozen=True)
class CohomCell:
    """A single irreducible ``weight`` sitting in cohomological ``degree``."""

    degree: int
    weight: Weight


@dataclass(frozen=True)
class RhoContext:
    n: int

    @property
    def rho(self) -> Weight:
        return tuple(range(self.n, 0, -1))

    def shift(self, lam: Sequence[int]) -> Weight:
        if len(lam) != self.n:
            raise ValueError(f"expected {self.n} entries, got {tuple(lam)}")
        return tuple(a + b for a, b in zip(lam, self.rho))


def rho(n: int) -> Weight:
    return RhoContext(n).rho


def dotted_sort_A(seq: Sequence[int]) -> CohomCell | None:
    """Type A: sort ``seq`` (already shifted by rho) decreasingly.

    ``None`` if an entry repeats; otherwise the degree is the number of
    inversions and the weight is the sorted sequence minus rho.
    """
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        return None
    k = len(seq)
    inversions = sum(1 for i in range(k) for j in range(i + 1, k) if seq[i] < seq[j])
    ordered = sorted(seq, reverse=True)
    return CohomCell(inversions, tuple(a - r for a, r in zip(ordered, rho(k))))


def dotted_sort_C(seq: Sequence[int]) -> CohomCell | None:
    """Type C: signed sort of ``seq`` (already shifted by rho).

    ``None`` if an entry is zero or two entries share an absolute value.
    Otherwise the degree counts pairs ``i < j`` with ``s_i < s_j``, pairs with
    ``s_i + s_j < 0`` and negative entries; the weight is the decreasing sort
    of the absolute values minus rho.
    """
    seq = tuple(seq)
    absolute = [abs(a) for a in seq]
    if 0 in absolute or len(set(absolute)) != len(absolute):
        return None
    k = len(seq)
    length = sum(
        (seq[i] < seq[j]) + (seq[i] + seq[j] < 0) for i in range(k) for j in range(i + 1, k)
    ) + sum(1 for a in seq if a < 0)
    ordered = sorted(absolute, reverse=True)
    return CohomCell(length, tuple(a - r for a, r in zip(ordered, rho(k))))


def coh_gr_relative(lam: Sequence[int], mu: Sequence[int], n: int) -> CohomCell | None:
    """Direct image of ``Sigma^lam(V/U) (x) Sigma^mu U`` along ``Gr(k, V) -> pt``.

    ``lam`` has ``n - k`` entries and ``mu`` has ``k``; the output is a
    ``GL(n)`` weight.
    """
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) + len(mu) != n:
        raise ValueError(f"lengths {len(lam)} + {len(mu)} do not add up to {n}")
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError(f"{lam}, {mu} must be dominant")
    return dotted_sort_A(RhoContext(n).shift(lam + mu))


def coh_igr(alpha: Sequence[int], beta: Sequence[int], w: int, n: int) -> CohomCell | None:
    """Cohomology of ``Sigma^alpha W* (x) Sp<beta>(W^perp / W)`` on ``IGr(w, 2n)``.

    ``alpha`` is a dominant weight with ``w`` entries and ``beta`` a diagram
    with ``n - w`` rows.  ``w = n`` (the Lagrangian case) is allowed.
    """
    alpha = tuple(alpha)
    beta = pad(beta, n - w) if is_diagram(beta) else tuple(beta)
    if not 0 < w <= n:
        raise ValueError(f"need 0 < w <= n, got w={w}, n={n}")
    if len(alpha) != w or not is_dominant(alpha):
        raise ValueError(f"{alpha} is not a dominant GL({w}) weight")
    if len(beta) != n - w or not is_diagram(beta):
        raise ValueError(f"{beta} is not a diagram with {n - w} rows")
    return dotted_sort_C(RhoContext(n).shift(alpha + beta))


def coh_lgr(lam: Sequence[int], n: int) -> CohomCell | None:
    """Cohomology of ``Sigma^lam U*`` on ``LGr(n, 2n)`` as an ``Sp(2n)`` cell."""
    lam = tuple(lam)
    if len(lam) != n or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant GL({n}) weight")
    return dotted_sort_C(RhoContext(n).shift(lam))


def _as_weight(lam: Sequence[int], n: int) -> Weight:
    lam = pad(lam, n) if is_diagram(lam) else tuple(lam)
    if len(lam) != n or not is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant GL({n}) weight")
    return lam


@lru_cache(maxsize=None)
def _bundle(lam: Weight, mu: Weight, t: int, n: int) -> tuple[tuple[int, Weight, int], ...]:
    cells: dict[tuple[int, Weight], int] = defaultdict(int)
    for gamma, mult in tensor_gl(mu, negate(lam), n):
        cell = coh_lgr(twist(gamma, t), n)
        if cell is not None:
            cells[(cell.degree, cell.weight)] += mult
    return tuple(sorted((d, wt, m) for (d, wt), m in cells.items()))


def coh_lgr_bundle(lam: Sequence[int], mu: Sequence[int], t: int, n: int) -> dict[int, VirtualModule]:
    """Cohomology of ``Sigma^lam U (x) Sigma^mu U* (t)`` on ``LGr(n, 2n)``.

    Returned as ``{degree: Sp(2n)-module}``; degrees with nothing are absent.
    ``lam`` and ``mu`` may be arbitrary dominant ``GL(n)`` weights.
    """
    lam, mu = _as_weight(lam, n), _as_weight(mu, n)
    # twisting both sides by the same amount changes nothing; normalize for the cache
    a, b = lam[-1], mu[-1]
    lam, mu, t = twist(lam, -a), twist(mu, -b), t + b - a
    graded: dict[int, dict[Weight, int]] = defaultdict(dict)
    for degree, wt, mult in _bundle(lam, mu, t, n):
        graded[degree][wt] = mult
    return {d: VirtualModule("Sp", n, terms) for d, terms in sorted(graded.items())}


def graded_dim(graded: dict[int, VirtualModule]) -> dict[int, int]:
    return {d: mod.dim() for d, mod in graded.items()}


def euler_characteristic(graded: dict[int, VirtualModule]) -> int:
    return sum((-1) ** d * mod.dim() for d, mod in graded.items())


def cell_dim(cell: CohomCell | None, group: str, n: int) -> int:
    """Dimension of the module in a cell (0 for a vanishing cell)."""
    if cell is None:
        return 0
    return dim_sp(cell.weight, n) if group == "Sp" else dim_gl(cell.weight, n)
