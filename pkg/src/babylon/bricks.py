"""Euler bricks: enumeration, parametrized families and impossibility checks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .numthy import is_square, isqrt

__all__ = [
    "Brick",
    "ParamPoint",
    "FAMILIES",
    "DIVISIBILITY_MODULI",
    "PERFECT_CUBOID_LEAST_EDGE_BOUND",
    "PERFECT_CUBOID_MIN_SIDE_BOUND",
    "enumerate_bricks",
    "saunderson",
    "euler_mn",
    "composed_st",
    "family_point",
    "space_diagonal_factor",
    "divisibility_theorem_check",
    "pocklington_scan",
    "spohn_scan",
    "is_perfect",
    "check_record_consistency",
    "six_square_check",
    "SIX_SQUARE_KEYS",
    "brick_csv_rows",
    "BRICK_CSV_HEADER",
]

Family = Literal["saunderson", "euler_mn", "composed_st"]
FAMILIES: tuple[str, ...] = ("saunderson", "euler_mn", "composed_st")
DIVISIBILITY_MODULI = (2, 3, 5, 11, 4, 9, 16)
# published lower limits for any perfect cuboid
PERFECT_CUBOID_LEAST_EDGE_BOUND = 333_750_000
PERFECT_CUBOID_MIN_SIDE_BOUND = 500_000_000_000
BRICK_CSV_HEADER = ("x", "y", "z", "dxy", "dxz", "dyz", "primitive", "perfect")
SIX_SQUARE_KEYS = ("x+y", "y+z", "x+z", "y-x", "z-y", "z-x")


@dataclass(frozen=True, order=True)
class Brick:
    x: int
    y: int
    z: int
    d_xy: int
    d_xz: int
    d_yz: int
    space_diag_square: int
    perfect: bool
    primitive: bool

    @classmethod
    def from_sides(cls, a: int, b: int, c: int) -> "Brick":
        """Canonical brick from three sides; raises if a face diagonal is irrational."""
        x, y, z = sorted((abs(a), abs(b), abs(c)))
        if x == 0:
            raise ValueError(f"degenerate brick with a zero side: {(a, b, c)}")
        diags = []
        for p, q in ((x, y), (x, z), (y, z)):
            s = p * p + q * q
            d = isqrt(s)
            if d * d != s:
                raise ValueError(f"{(x, y, z)} is not an Euler brick: {p}^2 + {q}^2 = {s} is not a square")
            diags.append(d)
        total = x * x + y * y + z * z
        return cls(x, y, z, *diags, total, is_square(total), math.gcd(x, y, z) == 1)

    @property
    def sides(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def scaled(self, k: int) -> "Brick":
        return Brick.from_sides(k * self.x, k * self.y, k * self.z)


@dataclass(frozen=True)
class ParamPoint:
    family: str
    parameters: tuple[int, int]
    raw_sides: tuple[int, int, int]
    brick: Brick


def enumerate_bricks(limit: int, primitive_only: bool = False) -> list[Brick]:
    """Every Euler brick with sides at most ``limit``: the triangles of ``B_limit``."""
    from .complex import enumerate_triangles
    from .graph import build

    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    bricks = [Brick.from_sides(*t) for t in enumerate_triangles(build(limit))]
    if primitive_only:
        bricks = [b for b in bricks if b.primitive]
    return bricks


def saunderson(u: int, v: int) -> ParamPoint:
    """Brick ``(u(4v^2 - w^2), v(4u^2 - w^2), 4uvw)`` from a Pythagorean pair ``u^2 + v^2 = w^2``."""
    w2 = u * u + v * v
    w = isqrt(w2)
    if w * w != w2:
        raise ValueError(f"u^2 + v^2 = {w2} is not a perfect square for (u, v) = ({u}, {v})")
    raw = (u * (4 * v * v - w2), v * (4 * u * u - w2), 4 * u * v * w)
    brick = Brick.from_sides(*raw)
    if brick.space_diag_square != w2 * (u**4 + 18 * u * u * v * v + v**4):
        raise ArithmeticError(f"space-diagonal identity failed at {(u, v)}")
    return ParamPoint("saunderson", (u, v), raw, brick)


def euler_mn(m: int, n: int) -> ParamPoint:
    """Euler's two-parameter family; the face-diagonal identities are re-checked."""
    if not m > n >= 1:
        raise ValueError(f"euler_mn needs m > n >= 1, got ({m}, {n})")
    m2, n2 = m * m, n * n
    a = 2 * m * n * (3 * m2 - n2) * (3 * n2 - m2)
    b = 8 * m * n * (m2 * m2 - n2 * n2)
    c = (m2 - n2) * (m2 - 4 * m * n + n2) * (m2 + 4 * m * n + n2)
    if 0 in (a, b, c):
        raise ValueError(f"euler_mn({m}, {n}) has a zero side")
    checks = (
        a * a + b * b == 4 * m2 * n2 * (5 * m2 * m2 - 6 * m2 * n2 + 5 * n2 * n2) ** 2,
        a * a + c * c == (m2 + n2) ** 6,
        b * b + c * c == (m - n) ** 2 * (m + n) ** 2 * (m2 * m2 + 18 * m2 * n2 + n2 * n2) ** 2,
        a * a + b * b + c * c == (m2 + n2) ** 2 * _octic(m, n),
    )
    if not all(checks):
        raise ArithmeticError(f"euler_mn identities failed at {(m, n)}")
    return ParamPoint("euler_mn", (m, n), (a, b, c), Brick.from_sides(a, b, c))


def _octic(s: int, t: int) -> int:
    s2, t2 = s * s, t * t
    return s2**4 + 68 * s2**3 * t2 - 122 * s2**2 * t2**2 + 68 * s2 * t2**3 + t2**4


def composed_st(s: int, t: int) -> ParamPoint:
    """Saunderson surface in ``(s, t)``: the family with ``u = 2st``, ``v = s^2 - t^2``."""
    if not s > t >= 1:
        raise ValueError(f"composed_st needs s > t >= 1, got ({s}, {t})")
    a = 6 * t * s**5 - 20 * t**3 * s**3 + 6 * t**5 * s
    b = -(s**6) + 15 * t**2 * s**4 - 15 * t**4 * s**2 + t**6
    c = 8 * s**5 * t - 8 * s * t**5
    if 0 in (a, b, c):
        raise ValueError(f"composed_st({s}, {t}) has a zero side")
    checks = (
        a * a + b * b == (s * s + t * t) ** 6,
        a * a + c * c == 4 * (5 * s**5 * t - 6 * s**3 * t**3 + 5 * s * t**5) ** 2,
        b * b + c * c == (s**6 + 17 * s**4 * t**2 - 17 * s**2 * t**4 - t**6) ** 2,
        a * a + b * b + c * c == (s * s + t * t) ** 2 * _octic(s, t),
    )
    if not all(checks):
        raise ArithmeticError(f"composed_st identities failed at {(s, t)}")
    return ParamPoint("composed_st", (s, t), (a, b, c), Brick.from_sides(a, b, c))


def family_point(family: str, p: int, q: int) -> ParamPoint | None:
    """Point of a family at ``(p, q)``, or ``None`` if the parameters are invalid there."""
    try:
        if family == "saunderson":
            return saunderson(p, q)
        if family == "euler_mn":
            return euler_mn(p, q)
        if family == "composed_st":
            return composed_st(p, q)
    except ValueError:
        return None
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def space_diagonal_factor(family: str, p: int, q: int) -> int:
    """The factor of ``x^2 + y^2 + z^2`` left after removing a known square.

    Saunderson: ``u^4 + 18u^2v^2 + v^4`` (the sum is ``w^2`` times it).
    The two octic families: ``s^8 + 68 s^6 t^2 - 122 s^4 t^4 + 68 s^2 t^6 + t^8``.
    The brick is perfect iff this factor is a square.
    """
    if family == "saunderson":
        return p**4 + 18 * p * p * q * q + q**4
    if family in ("euler_mn", "composed_st"):
        return _octic(p, q)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def divisibility_theorem_check(b: Brick) -> dict[int, bool]:
    """For each modulus in {2, 3, 5, 11, 4, 9, 16}: does it divide some side?"""
    if not b.primitive:
        raise ValueError(f"divisibility check needs a primitive brick, got {b.sides}")
    return {m: any(side % m == 0 for side in b.sides) for m in DIVISIBILITY_MODULI}


def pocklington_scan(x_max: int, y_max: int) -> list[tuple[int, int, int]]:
    """Solutions of ``x^4 + 18x^2y^2 + y^4 = z^2`` with ``1 <= x <= x_max``, ``1 <= y <= y_max``."""
    if x_max < 1 or y_max < 1:
        raise ValueError("scan bounds must be >= 1")
    found = []
    for x in range(1, x_max + 1):
        x2 = x * x
        x4 = x2 * x2
        for y in range(1, y_max + 1):
            y2 = y * y
            val = x4 + 18 * x2 * y2 + y2 * y2
            if is_square(val):
                found.append((x, y, isqrt(val)))
    return found


def spohn_scan(s_max: int, t_max: int) -> list[ParamPoint]:
    """Perfect bricks among the points of the ``(s, t)`` Saunderson surface, ``s > t``."""
    if s_max < 1 or t_max < 1:
        raise ValueError("scan bounds must be >= 1")
    found = []
    for s in range(2, s_max + 1):
        for t in range(1, min(s - 1, t_max) + 1):
            pt = composed_st(s, t)
            if pt.brick.perfect:
                check_record_consistency(pt.brick)
                found.append(pt)
    return found


def is_perfect(b: Brick) -> bool:
    return is_square(b.x * b.x + b.y * b.y + b.z * b.z)


def check_record_consistency(b: Brick) -> None:
    """Raise if a perfect brick lies below the published search limits.

    Those ranges have been searched exhaustively, so such a find means a bug
    here rather than a discovery.
    """
    if b.perfect and (b.x < PERFECT_CUBOID_MIN_SIDE_BOUND or b.x <= PERFECT_CUBOID_LEAST_EDGE_BOUND):
        raise ArithmeticError(f"perfect brick {b.sides} is inside the exhaustively searched range")


def six_square_check(x: int, y: int, z: int) -> dict[str, bool]:
    """Squareness of the pairwise sums and differences of ``x <= y <= z``."""
    if not x <= y <= z:
        raise ValueError(f"six_square_check needs x <= y <= z, got ({x}, {y}, {z})")
    values = (x + y, y + z, x + z, y - x, z - y, z - x)
    return {k: is_square(v) for k, v in zip(SIX_SQUARE_KEYS, values)}


def brick_csv_rows(bricks: list[Brick]) -> list[tuple]:
    return [
        (b.x, b.y, b.z, b.d_xy, b.d_xz, b.d_yz, str(b.primitive).lower(), str(b.perfect).lower())
        for b in bricks
    ]
