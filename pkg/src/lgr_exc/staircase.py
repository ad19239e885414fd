"""Lagrangian staircase complexes and their K-theoretic exactness check.

Only the terms of a complex are modelled, never the differentials.  A complex
is "Euler-exact" if its alternating class pairs to zero with every probe
label; this is a necessary condition for exactness.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .certificate import FAIL, NECESSARY, Certificate, Timer
from .diagrams import Weight, enumerate_block, format_weight, pad, staircase_truncations, strip
from .kclass import KClass, euler_pairing, kclass_E, twist_kclass
from .parallel import pmap
from .schur import dim_sp, fundamental_sp


@dataclass(frozen=True)
class StairTerm:
    position: int
    multiplicity: int  # dimension of the Sp(2n) multiplicity space
    kclass: KClass
    description: str
    obj: tuple[Weight, int] | None = None  # (lam, t) for a term V (x) E^lam(t)
    nu: int = 0  # V^[nu] multiplicity label, 0 for the trivial one


@dataclass(frozen=True)
class StairComplex:
    n: int
    terms: tuple[StairTerm, ...]

    def __post_init__(self) -> None:
        pos = [t.position for t in self.terms]
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions must increase strictly: {pos}")
        if any(t.multiplicity <= 0 for t in self.terms):
            raise ValueError("multiplicities must be positive")
        if any(t.kclass.n != self.n for t in self.terms):
            raise ValueError("term classes over the wrong n")

    def __len__(self) -> int:
        return len(self.terms)

    def describe(self) -> str:
        return " -> ".join(t.description for t in self.terms)

    def objects(self) -> list[tuple[Weight, int]]:
        return [t.obj for t in self.terms if t.obj is not None]


def _e_name(lam: Weight, t: int) -> str:
    body = "O" if not strip(lam) else "E^{" + format_weight(strip(lam)) + "}"
    return body if t == 0 else f"{body}({t})"


def build_staircase(lam: Sequence[int], h: int, w: int, n: int, twist: int = 0) -> StairComplex:
    """The staircase complex of ``lam`` in ``Y_{h,w}``, ``h + w = n + 1``, tensored with ``O(twist)``.

    Terms, left to right: ``E^{lam'}(twist - 1)``, then
    ``V^[nu_i] (x) E^{lam^(i)}(twist)`` for ``i = w, ..., 1``, then
    ``E^lam(twist)``; positions run from ``-(w + 1)`` to 0.
    """
    if h + w != n + 1:
        raise ValueError(f"staircase needs h + w = n + 1, got h={h}, w={w}, n={n}")
    data = staircase_truncations(lam, h, w)
    lp = strip(data.lambda_prime)
    terms = [
        StairTerm(
            position=-(w + 1),
            multiplicity=1,
            kclass=twist_kclass(kclass_E(lp, h - 1, w + 1, n), twist - 1),
            description=_e_name(lp, twist - 1),
            obj=(lp, twist - 1),
        )
    ]
    for i in range(w, 0, -1):
        trunc, nu = strip(data.truncations[i - 1]), data.nus[i - 1]
        terms.append(
            StairTerm(
                position=-i,
                multiplicity=dim_sp(fundamental_sp(nu, n), n),
                kclass=twist_kclass(kclass_E(trunc, h, w, n), twist),
                description=f"V^[{nu}] (x) {_e_name(trunc, twist)}",
                obj=(trunc, twist),
                nu=nu,
            )
        )
    top = strip(data.lam)
    terms.append(
        StairTerm(
            position=0,
            multiplicity=1,
            kclass=twist_kclass(kclass_E(top, h, w, n), twist),
            description=_e_name(top, twist),
            obj=(top, twist),
        )
    )
    return StairComplex(n, tuple(terms))


def admissible_staircases(n: int) -> list[tuple[Weight, int, int]]:
    """Every ``(lam, h, w)`` with ``h + w = n + 1``, ``h, w >= 1`` and ``lam_1 = w``."""
    out = []
    for w in range(1, n + 1):
        h = n + 1 - w
        for lam in enumerate_block(h, w):
            if lam[0] == w:
                out.append((strip(lam), h, w))
    return out


def euler_class(c: StairComplex) -> KClass:
    """Alternating sum ``sum (-1)^position * multiplicity * [term]``."""
    total = KClass(c.n, {})
    for t in c.terms:
        total = total + t.kclass.scale((-1 if t.position % 2 else 1) * t.multiplicity)
    return total


def splice(left: StairComplex, right: StairComplex) -> StairComplex:
    """Yoneda splice along the last term of ``left`` and the first of ``right``.

    The shared term disappears; positions are renumbered so the result ends
    at 0.
    """
    if left.n != right.n:
        raise ValueError("cannot splice complexes over different n")
    if not left.terms or not right.terms:
        raise ValueError("cannot splice an empty complex")
    a, b = left.terms[-1], right.terms[0]
    if a.kclass != b.kclass or a.multiplicity != b.multiplicity:
        raise ValueError(f"interface mismatch: {a.description} vs {b.description}")
    kept = left.terms[:-1] + right.terms[1:]
    top = len(kept) - 1
    terms = tuple(replace(t, position=i - top) for i, t in enumerate(kept))
    return StairComplex(left.n, terms)


def replace_multiplicity(c: StairComplex, index: int, multiplicity: int) -> StairComplex:
    """Copy of ``c`` with one multiplicity changed (used to corrupt complexes)."""
    terms = list(c.terms)
    terms[index] = replace(terms[index], multiplicity=multiplicity)
    return StairComplex(c.n, tuple(terms))


def default_probes(n: int) -> list[Weight]:
    return [pad(k, n) for k in enumerate_block(n, n)]


def _probe_value(args: tuple[Weight, KClass]) -> int:
    kappa, cls = args
    return sum(c * euler_pairing(kappa, lab, 0, cls.n) for lab, c in cls)


def probe_values(cls: KClass, probes: Sequence[Sequence[int]], jobs: int | None = None) -> list[int]:
    """``chi(Sigma^kappa U*, cls)`` for every probe label ``kappa``."""
    return pmap(_probe_value, [(tuple(k), cls) for k in probes], jobs)


def verify_exactness_probe(
    c: StairComplex, probes: Sequence[Sequence[int]] | None = None, jobs: int | None = None
) -> Certificate:
    """Pair the Euler class of ``c`` against every probe; all values must vanish.

    Probe vanishing is necessary for exactness but only sufficient if the
    probes span the Grothendieck group, so success is reported as
    NECESSARY-CONDITION PASS.
    """
    with Timer() as timer:
        if probes is None:
            probes = default_probes(c.n)
        probes = [pad(k, c.n) for k in probes]
        cls = euler_class(c)
        values = probe_values(cls, probes, jobs)
        witnesses = [
            {"probe": format_weight(k), "chi": v} for k, v in zip(probes, values) if v != 0
        ]
    return Certificate(
        claim="staircase-euler-exactness",
        parameters={"n": c.n, "complex": c.describe(), "probes": len(probes)},
        status=FAIL if witnesses else NECESSARY,
        witnesses=witnesses,
        elapsed_ms=timer.ms,
    )
