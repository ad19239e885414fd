"""Weights, Young diagrams and the staircase combinatorics on them.

Weights are plain tuples of integers in weakly decreasing order.  A Young
diagram is a weight with nonnegative parts; diagrams of different lengths are
identified after padding with zeros (use :func:`pad` / :func:`strip`).

Binary words are strings over ``"01"`` and are indexed from 1, so a word with
zeros in positions ``l_1 < ... < l_h`` corresponds to the diagram
``(l_h - h, ..., l_2 - 2, l_1 - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Weight = tuple[int, ...]


def weight(parts: Iterable[int]) -> Weight:
    """Validate and freeze a weakly decreasing integer sequence."""
    w = tuple(int(p) for p in parts)
    if any(a < b for a, b in zip(w, w[1:])):
        raise ValueError(f"not weakly decreasing: {w}")
    return w


def is_dominant(parts: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(parts, parts[1:]))


def is_diagram(parts: Sequence[int]) -> bool:
    return is_dominant(parts) and (not parts or parts[-1] >= 0)


def pad(lam: Sequence[int], k: int) -> Weight:
    """Right-pad a diagram with zeros to length ``k``."""
    if len(lam) > k:
        if any(lam[k:]):
            raise ValueError(f"{tuple(lam)} has more than {k} nonzero rows")
        return tuple(lam[:k])
    return tuple(lam) + (0,) * (k - len(lam))


def strip(lam: Sequence[int]) -> Weight:
    """Drop trailing zero rows."""
    k = len(lam)
    while k and lam[k - 1] == 0:
        k -= 1
    return tuple(lam[:k])


def same_diagram(a: Sequence[int], b: Sequence[int]) -> bool:
    return strip(a) == strip(b)


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def transpose(lam: Sequence[int]) -> Weight:
    """Conjugate partition; ``transpose((3, 3, 1)) == (3, 2, 2)``."""
    lam = strip(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= i) for i in range(1, lam[0] + 1))


def includes(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` is contained in ``lam`` (componentwise, zero-padded)."""
    k = max(len(mu), len(lam))
    mu = tuple(mu) + (0,) * (k - len(mu))
    lam = tuple(lam) + (0,) * (k - len(lam))
    return all(a <= b for a, b in zip(mu, lam))


def negate(lam: Sequence[int]) -> Weight:
    """``(l_1, ..., l_k) -> (-l_k, ..., -l_1)``, the weight of the dual."""
    return tuple(-p for p in reversed(lam))


def twist(lam: Sequence[int], t: int) -> Weight:
    """Add ``t`` to every part (tensoring with the ``t``-th power of the determinant)."""
    return tuple(p + t for p in lam)


# -- binary words ---------------------------------------------------------


def word_to_diagram(word: str) -> Weight:
    """Diagram in ``Y_{h,w}`` (length ``h`` = number of zeros) of a binary word."""
    if not word or set(word) - {"0", "1"}:
        raise ValueError(f"not a binary word: {word!r}")
    zeros = [pos for pos, bit in enumerate(word, start=1) if bit == "0"]
    return tuple(l - j for j, l in reversed(list(enumerate(zeros, start=1))))


def diagram_to_word(lam: Sequence[int], h: int, w: int) -> str:
    """Inverse of :func:`word_to_diagram` on ``Y_{h,w}``."""
    lam = pad(lam, h)
    if lam and (lam[0] > w or lam[-1] < 0):
        raise ValueError(f"{lam} does not fit in a {h}x{w} box")
    zeros = {lam[h - j] + j for j in range(1, h + 1)}
    return "".join("0" if pos in zeros else "1" for pos in range(1, h + w + 1))


def cyclic_step(word: str) -> str:
    """``a_0 a_1 ... a_n -> (1 - a_n) a_0 ... a_{n-1}``; has order dividing ``2 len(word)``."""
    if not word:
        return word
    return ("1" if word[-1] == "0" else "0") + word[:-1]


# -- staircase data -------------------------------------------------------


def _check_block(lam: Sequence[int], h: int, w: int) -> Weight:
    if len(strip(lam)) > h:
        raise ValueError(f"{tuple(lam)} has more than {h} rows")
    lam = pad(lam, h)
    if not is_diagram(lam) or (h and lam[0] > w):
        raise ValueError(f"{lam} is not in Y_{{{h},{w}}}")
    return lam


def lambda_prime(lam: Sequence[int], h: int, w: int) -> Weight:
    """Image of ``lam`` in ``Y_{h,w}`` under the generator of the cyclic action.

    Lands in ``Y_{h+1,w-1}`` when ``lam_1 < w`` and in ``Y_{h-1,w+1}`` when
    ``lam_1 == w``.
    """
    lam = _check_block(lam, h, w)
    if h == 0 or lam[0] < w:
        return lam + (0,)
    return tuple(p + 1 for p in lam[1:])


@dataclass(frozen=True)
class StairData:
    lam: Weight
    h: int
    w: int
    lambda_prime: Weight
    truncations: tuple[Weight, ...]  # lam^(1), ..., lam^(w)
    nus: tuple[int, ...]  # nu_1 < ... < nu_w


def staircase_truncations(lam: Sequence[int], h: int, w: int) -> StairData:
    """Compute ``lam'``, the truncations ``lam^(i)`` and ``nu_i = |lam| - |lam^(i)|``."""
    lam = _check_block(lam, h, w)
    if h == 0 or lam[0] != w:
        raise ValueError(f"need lam_1 == w for staircase data, got {lam} with w={w}")
    truncs = []
    for i in range(1, w + 1):
        j = max(idx for idx in range(1, h + 1) if lam[idx - 1] > w - i)
        trunc = tuple(p - 1 for p in lam[1:j]) + (w - i,) + lam[j:]
        truncs.append(trunc)
    total = size(lam)
    return StairData(
        lam=lam,
        h=h,
        w=w,
        lambda_prime=lambda_prime(lam, h, w),
        truncations=tuple(truncs),
        nus=tuple(total - size(t) for t in truncs),
    )


# -- blocks ---------------------------------------------------------------


def enumerate_block(h: int, w: int) -> list[Weight]:
    """All diagrams with ``h`` rows (zero rows allowed) and width at most ``w``.

    Ordered by size, then lexicographically, which is a linear extension of
    inclusion.
    """
    out = []
    for zeros in combinations(range(1, h + w + 1), h):
        out.append(tuple(l - j for j, l in reversed(list(enumerate(zeros, start=1)))))
    out.sort(key=lambda lam: (size(lam), lam))
    return out


def subdiagrams(lam: Sequence[int]) -> Iterator[Weight]:
    """Every diagram ``mu`` with ``mu`` contained in ``lam``, same length as ``lam``."""
    lam = tuple(lam)

    def rec(i: int, cap: int) -> Iterator[Weight]:
        if i == len(lam):
            yield ()
            return
        for part in range(min(cap, lam[i]), -1, -1):
            for rest in rec(i + 1, part):
                yield (part,) + rest

    yield from rec(0, lam[0] if lam else 0)


def diagram_stats(lam: Sequence[int]) -> tuple[int, int, int]:
    """``(h, w, t)``: nonzero rows, first row length, rows of maximal length."""
    lam = strip(lam)
    if not lam:
        return (0, 0, 0)
    return (len(lam), lam[0], sum(1 for p in lam if p == lam[0]))


# -- text format ----------------------------------------------------------


def parse_weight(text: str) -> Weight:
    """Parse ``"3,3,1"``; ``"0"`` or the empty string is the empty diagram."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed weight {text!r}") from None
    return weight(parts)


def format_weight(lam: Sequence[int]) -> str:
    if not lam:
        return "0"
    return ",".join(str(p) for p in lam)
