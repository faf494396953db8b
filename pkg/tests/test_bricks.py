from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from babylon.bricks import (
    BRICK_CSV_HEADER,
    DIVISIBILITY_MODULI,
    FAMILIES,
    Brick,
    brick_csv_rows,
    check_record_consistency,
    composed_st,
    divisibility_theorem_check,
    enumerate_bricks,
    euler_mn,
    family_point,
    is_perfect,
    pocklington_scan,
    saunderson,
    six_square_check,
    space_diagonal_factor,
    spohn_scan,
)
from babylon.complex import enumerate_triangles
from babylon.graph import build
from babylon.numthy import is_square
from babylon.reference_data import OZANAM_TRIPLE, PUBLISHED_BRICKS_1000, PUBLISHED_BRICKS_300


@pytest.fixture(scope="module")
def bricks8000():
    return enumerate_bricks(8000)


def _assert_brick(b: Brick):
    assert b.x * b.x + b.y * b.y == b.d_xy**2
    assert b.x * b.x + b.z * b.z == b.d_xz**2
    assert b.y * b.y + b.z * b.z == b.d_yz**2
    assert b.perfect == is_square(b.x * b.x + b.y * b.y + b.z * b.z)
    assert b.primitive == (math.gcd(b.x, b.y, b.z) == 1)
    assert b.x <= b.y <= b.z


def test_enumeration_small_tables():
    assert [b.sides for b in enumerate_bricks(300)] == list(PUBLISHED_BRICKS_300)
    assert [b.sides for b in enumerate_bricks(1000)] == list(PUBLISHED_BRICKS_1000)
    assert enumerate_bricks(100) == []


def test_enumeration_counts(bricks8000):
    counts = {m: sum(b.z <= m for b in bricks8000) for m in (2000, 4000, 8000)}
    # the printed total for 2000 is 25, but two of its rows repeat the 1000 table
    assert counts == {2000: 23, 4000: 54, 8000: 120}
    assert sum(b.primitive for b in bricks8000) == 16


def test_enumeration_is_triangle_set(bricks8000):
    assert [b.sides for b in bricks8000] == enumerate_triangles(build(8000))
    for b in bricks8000:
        _assert_brick(b)
        assert not b.perfect


def test_scaling_closure(bricks8000):
    have = {b.sides for b in bricks8000}
    prim = [b for b in bricks8000 if b.primitive]
    generated = {b.scaled(k).sides for b in prim for k in range(1, 8000 // b.z + 1)}
    assert generated == have


def test_from_sides_validation():
    b = Brick.from_sides(240, -117, 44)
    assert b.sides == (44, 117, 240)
    with pytest.raises(ValueError):
        Brick.from_sides(0, 3, 4)
    with pytest.raises(ValueError):
        Brick.from_sides(1, 2, 3)


def test_saunderson_examples():
    pt = saunderson(3, 4)
    assert pt.brick.sides == (44, 117, 240)
    assert set(map(abs, pt.raw_sides)) == {117, 44, 240}
    assert saunderson(6, 8).brick.sides == tuple(8 * s for s in (44, 117, 240))
    with pytest.raises(ValueError):
        saunderson(2, 3)


def test_euler_mn_examples():
    pt = euler_mn(2, 1)
    assert set(map(abs, pt.raw_sides)) == {44, 240, 117}
    assert pt.brick.sides == (44, 117, 240)
    a, b, c = pt.raw_sides
    assert a * a + c * c == 5**6 == 15625
    _assert_brick(euler_mn(3, 1).brick)
    with pytest.raises(ValueError):
        euler_mn(1, 1)


def test_composed_examples():
    pt = composed_st(2, 1)
    assert pt.raw_sides == (44, 117, 240)
    assert 44**2 + 117**2 == 15625
    assert space_diagonal_factor("composed_st", 2, 1) == 2929
    assert not is_square(2929)
    assert pt.brick.space_diag_square == 25 * 2929
    with pytest.raises(ValueError):
        composed_st(1, 1)


def test_family_grids():
    for p in range(1, 101):
        for q in range(1, 101):
            for fam in FAMILIES:
                pt = family_point(fam, p, q)
                if pt is None:
                    continue
                _assert_brick(pt.brick)
                assert not pt.brick.perfect
                factor = space_diagonal_factor(fam, p, q)
                total = pt.brick.space_diag_square
                assert total % factor == 0 and is_square(total // factor)


@given(st.integers(min_value=2, max_value=400), st.integers(min_value=1, max_value=399))
def test_composed_is_saunderson_of_a_pythagorean_pair(s, t):
    if t >= s:
        return
    u, v = 2 * s * t, s * s - t * t
    assert composed_st(s, t).brick.sides == saunderson(u, v).brick.sides


def test_family_point_unknown():
    with pytest.raises(ValueError):
        family_point("halcke", 2, 1)
    with pytest.raises(ValueError):
        space_diagonal_factor("halcke", 2, 1)


def test_divisibility_examples():
    assert all(divisibility_theorem_check(Brick.from_sides(44, 117, 240)).values())
    assert all(divisibility_theorem_check(Brick.from_sides(85, 132, 720)).values())
    with pytest.raises(ValueError):
        divisibility_theorem_check(Brick.from_sides(88, 234, 480))


def test_divisibility_all_primitive(bricks8000):
    for b in bricks8000:
        if b.primitive:
            res = divisibility_theorem_check(b)
            assert set(res) == set(DIVISIBILITY_MODULI)
            assert all(res.values()), b.sides


def test_pocklington():
    assert pocklington_scan(1, 1) == []
    assert pocklington_scan(500, 500) == []
    with pytest.raises(ValueError):
        pocklington_scan(0, 5)


def test_spohn():
    assert not composed_st(2, 1).brick.perfect
    assert spohn_scan(200, 200) == []
    assert spohn_scan(1, 1) == []


def test_is_perfect():
    assert not is_perfect(Brick.from_sides(44, 117, 240))
    assert not is_perfect(Brick.from_sides(240, 252, 275))
    b = Brick.from_sides(44, 117, 240)
    assert all(is_perfect(b.scaled(k)) == is_perfect(b) for k in range(1, 20))


def test_record_consistency_guard():
    fake = Brick(1, 2, 3, 0, 0, 0, 14, True, True)
    with pytest.raises(ArithmeticError):
        check_record_consistency(fake)
    check_record_consistency(Brick.from_sides(44, 117, 240))


def test_six_square():
    assert all(six_square_check(*OZANAM_TRIPLE).values())
    assert all(six_square_check(0, 0, 0).values())
    res = six_square_check(1, 2, 3)
    assert not res["x+y"]
    with pytest.raises(ValueError):
        six_square_check(3, 2, 1)


def test_csv_rows():
    rows = brick_csv_rows(enumerate_bricks(300))
    assert len(BRICK_CSV_HEADER) == len(rows[0])
    assert rows[0] == (44, 117, 240, 125, 244, 267, "true", "false")
