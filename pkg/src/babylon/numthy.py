"""Exact integer primitives shared across the package.

Every squareness decision goes through :func:`isqrt`; floats are only used
for screening quantities such as nearest-integer distances.
"""

from __future__ import annotations

import math

__all__ = [
    "isqrt",
    "is_square",
    "sqrt_dist",
    "divisor_pairs",
    "factorize",
    "lambert_w",
    "nearest_int_dist",
]

# quadratic residues mod 64; rejects ~80% of non-squares without a root
_SQ64 = frozenset((i * i) % 64 for i in range(64))


def isqrt(k: int) -> int:
    """Largest ``r`` with ``r*r <= k``."""
    if k < 0:
        raise ValueError(f"isqrt of negative number {k}")
    return math.isqrt(k)


def is_square(k: int) -> bool:
    if k < 0:
        return False
    if (k & 63) not in _SQ64:
        return False
    r = math.isqrt(k)
    return r * r == k


def sqrt_dist(k: int) -> float:
    """Distance from ``sqrt(k)`` to the nearest integer.

    The integer part is found exactly, and only the fractional part
    ``(k - r^2) / (sqrt(k) + r)`` is evaluated in floating point, so the
    result stays accurate for arbitrarily large ``k``. Returns exactly 0.0
    iff ``k`` is a perfect square.
    """
    r = math.isqrt(k)
    rem = k - r * r
    if rem == 0:
        return 0.0
    frac = rem / (math.sqrt(k) + r)
    return min(frac, 1.0 - frac)


def factorize(k: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if k < 1:
        raise ValueError(f"cannot factor {k}")
    out: dict[int, int] = {}
    while k % 2 == 0:
        out[2] = out.get(2, 0) + 1
        k //= 2
    d = 3
    while d * d <= k:
        while k % d == 0:
            out[d] = out.get(d, 0) + 1
            k //= d
        d += 2
    if k > 1:
        out[k] = out.get(k, 0) + 1
    return out


def divisor_pairs(k: int) -> list[tuple[int, int]]:
    """All ``(d, k // d)`` with ``d <= k // d``, ascending in ``d``."""
    if k < 1:
        raise ValueError(f"divisor_pairs needs k >= 1, got {k}")
    pairs = []
    for d in range(1, math.isqrt(k) + 1):
        if k % d == 0:
            pairs.append((d, k // d))
    return pairs


def lambert_w(x: float, tol: float = 1e-15, max_iter: int = 64) -> float:
    """Principal branch of the product log on ``[0, inf)``.

    Solves ``w * exp(w) = x`` by Halley iteration. Steps that would leave
    the domain ``w >= 0`` are damped by halving.
    """
    x = float(x)
    if x < 0 or math.isnan(x):
        raise ValueError(f"lambert_w is defined here only for x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if x < math.e:
        w = math.log1p(x) * (1.0 - math.log1p(math.log1p(x)) / (2.0 + math.log1p(x)))
    else:
        l1 = math.log(x)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = w - step
        if w_new < 0.0:
            w_new = w / 2.0
        if abs(w_new - w) <= tol * (1.0 + w_new):
            return w_new
        w = w_new
    return w


def nearest_int_dist(t: float) -> float:
    if t < 0:
        raise ValueError(f"nearest_int_dist expects t >= 0, got {t}")
    return abs(t - math.floor(t + 0.5))
