"""Pythagorean-triple edges of the Babylonian graph."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numthy import factorize, is_square

__all__ = [
    "Triple",
    "primitive_triples_up_to",
    "edge_arrays",
    "edges_up_to",
    "neighbors_unbounded",
    "is_edge",
]


@dataclass(frozen=True, order=True)
class Triple:
    a: int
    b: int
    c: int
    primitive: bool

    def __post_init__(self):
        if not 0 < self.a < self.b:
            raise ValueError(f"legs must satisfy 0 < a < b, got ({self.a}, {self.b})")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"({self.a}, {self.b}, {self.c}) is not Pythagorean")


def _primitive_legs(n: int) -> list[tuple[int, int]]:
    """Primitive leg pairs ``(a, b)``, ``a < b <= n``, from Euclid's generators."""
    legs = []
    # u^2 - v^2 <= n and 2uv <= n force u^2 <= n (1 + sqrt 2) / 2
    u_max = math.isqrt(n + n // 2 + 1) + 1
    for u in range(2, u_max + 1):
        excess = u * u - n
        v_lo = max(1, math.isqrt(excess - 1) + 1 if excess > 0 else 1)
        v_hi = min(u - 1, n // (2 * u))
        if v_lo > v_hi:
            continue
        if (u - v_lo) % 2 == 0:
            v_lo += 1
        for v in range(v_lo, v_hi + 1, 2):
            if math.gcd(u, v) != 1:
                continue
            odd, even = u * u - v * v, 2 * u * v
            legs.append((odd, even) if odd < even else (even, odd))
    legs.sort()
    return legs


def primitive_triples_up_to(n: int) -> list[Triple]:
    """Primitive triples with both legs at most ``n``, sorted by ``(a, b)``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [Triple(a, b, math.isqrt(a * a + b * b), True) for a, b in _primitive_legs(n)]


def edge_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All edges of ``B_n`` as two sorted int64 arrays ``(a, b)`` with ``a < b``.

    Each primitive pair is scaled by ``k = 1 .. n // b``; every edge has a
    unique primitive reduction so no duplicates arise.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    legs = _primitive_legs(n)
    if not legs:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy()
    prim = np.asarray(legs, dtype=np.int64)
    pa, pb = prim[:, 0], prim[:, 1]
    reps = n // pb
    total = int(reps.sum())
    # k runs 1..reps[i] for each primitive i
    starts = np.repeat(np.cumsum(reps) - reps, reps)
    k = np.arange(total, dtype=np.int64) - starts + 1
    a = np.repeat(pa, reps) * k
    b = np.repeat(pb, reps) * k
    order = np.lexsort((b, a))
    return a[order], b[order]


def edges_up_to(n: int) -> list[tuple[int, int]]:
    a, b = edge_arrays(n)
    return list(zip(a.tolist(), b.tolist()))


def _square_divisors(x: int) -> list[int]:
    """Divisors of ``x*x`` in ascending order, via the factorization of ``x``."""
    divs = [1]
    for p, e in factorize(x).items():
        divs = [d * p**i for d in divs for i in range(2 * e + 1)]
    divs.sort()
    return divs


def neighbors_unbounded(x: int) -> list[int]:
    """Every ``a >= 1`` with ``x^2 + a^2`` a square, ascending.

    Uses ``x^2 = (c - a)(c + a)``: each factor pair ``d < x^2 / d`` of equal
    parity gives ``a = (x^2 / d - d) / 2``.
    """
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    sq = x * x
    out = []
    for d in _square_divisors(x):
        e = sq // d
        if d >= e:
            break
        if (e - d) % 2 == 0:
            out.append((e - d) // 2)
    out.sort()
    return out


def is_edge(a: int, b: int) -> bool:
    if a < 1 or b < 1:
        raise ValueError(f"vertices are positive integers, got ({a}, {b})")
    return a != b and is_square(a * a + b * b)
