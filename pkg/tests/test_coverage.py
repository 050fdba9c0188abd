"""Unit tests for tiling classification, common indices, and generator search."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algseeds.algebraic import AlgebraicNumber, irrational_real_roots, same_number
from algseeds.coverage import (
    EXCLUDED_INDICES,
    GOLDEN_PLUS,
    GOLDEN_REFL,
    InvalidTarget,
    NotQuadratic,
    TileIndex,
    WrongSignature,
    common_index_witnesses,
    find_common_index,
    find_generator,
    quad_layer_report,
    tile_locate,
    trace_obstruction_demo,
    verify_tiling,
)
from algseeds.families import SetSpec, bc_root, build_set
from algseeds.polynomials import MonicIntPoly, is_perfect_square

SQRT2 = AlgebraicNumber.sqrt_of(2)


def test_tile_of_sqrt2():
    assert tile_locate(SQRT2) == TileIndex(1, 1, "S2r")


def test_tile_of_one_minus_sqrt2():
    a = SQRT2.reflected()  # 1 - sqrt(2) = -0.41421
    assert tile_locate(a) == TileIndex(-1, 0, "S2r")


def test_tile_of_negated_element_mirrors():
    # sqrt(2) in S + 1 forces -sqrt(2) in -S - 1
    assert tile_locate(SQRT2.negated()) == TileIndex(-1, -1, "S2r")


def test_imaginary_tiles():
    upper = bc_root(2, 5, 1)   # -1 + 2i
    lower = bc_root(2, 5, -1)  # -1 - 2i
    assert tile_locate(upper) == TileIndex(1, -1, "S2i-hat")
    assert tile_locate(lower) == TileIndex(-1, -1, "S2i-hat")

    odd = bc_root(1, 1, 1)     # (-1 + sqrt(-3))/2
    assert tile_locate(odd) == TileIndex(1, -1, "S2i-hat")


def test_tile_locate_rejects_cubics():
    theta = irrational_real_roots(MonicIntPoly.cubic(0, 0, -2))[0]
    with pytest.raises(NotQuadratic):
        tile_locate(theta)


REAL_B = st.integers(min_value=-20, max_value=20)
REAL_C = st.integers(min_value=-20, max_value=20)


@given(b=REAL_B, c=REAL_C, sign=st.sampled_from((1, -1)))
def test_real_tile_puts_fractional_part_in_unit_interval(b, c, sign):
    p = MonicIntPoly.quadratic(b, c)
    disc = p.discriminant()
    if disc <= 0 or is_perfect_square(disc):
        return
    a = bc_root(b, c, sign)
    tile = tile_locate(a)
    assert tile.eps in (1, -1)
    v = a.plus_int(-tile.n) if tile.eps == 1 else a.negated().plus_int(tile.n)
    assert v.cmp_rational(Fraction(0)) == 1
    assert v.cmp_rational(Fraction(1)) == -1


def test_real_tiling_exhaustive_small_bound():
    report = verify_tiling(5, "real")
    assert report.ok
    assert report.violations == ()
    assert report.checked > 0
    assert report.domain == "real"


def test_imaginary_tiling_exhaustive_small_bound():
    hatted = verify_tiling(5, "imaginary")
    assert hatted.ok
    assert hatted.qi_excluded == 16

    unhatted = verify_tiling(5, "imaginary-except-qi")
    assert unhatted.ok
    assert unhatted.qi_excluded == 16
    assert unhatted.checked == hatted.checked


def test_verify_tiling_argument_validation():
    with pytest.raises(ValueError):
        verify_tiling(0)
    with pytest.raises(ValueError):
        verify_tiling(3, "diagonal")


def test_tiling_report_json():
    js = verify_tiling(2, "real").to_json()
    assert js["ok"] is True
    assert js["domain"] == "real"
    assert js["violations"] == []


def _brute_least_common_index(targets):
    n = 1
    while True:
        if all(
            any(n * n < m * m * j < (n + 1) * (n + 1) for m in range(1, n + 2))
            for j in targets
        ):
            return n
        n += 1


def test_common_index_anchors():
    assert find_common_index([2, 3]).n == 1
    assert find_common_index([5]).n == 2
    res = find_common_index([2, 5, 6, 7])
    assert res.n == 2
    assert res.certificate == ((2, 2, 8), (5, 1, 5), (6, 1, 6), (7, 1, 7))


@given(
    targets=st.lists(
        st.sampled_from([2, 3, 5, 6, 7, 10, 11, 13, 14, 15]),
        min_size=1, max_size=4, unique=True,
    )
)
def test_common_index_is_minimal(targets):
    res = find_common_index(targets)
    assert res.n == _brute_least_common_index(targets)
    for j, m, c in res.certificate:
        assert c == m * m * j
        assert res.n**2 < c < (res.n + 1) ** 2


def test_common_index_witnesses_are_set_elements():
    res = find_common_index([2, 3])
    witnesses = common_index_witnesses(res)
    inst = build_set(SetSpec("2r", (2,)))
    for w in witnesses:
        assert any(same_number(w, e.number) for e in inst.elements)
    assert [w.decimal(5) for w in witnesses] == ["0.41421", "0.73205"]

    imag = find_common_index([2, 3], domain="imaginary")
    iw = common_index_witnesses(imag)
    imag_inst = build_set(SetSpec("2i", (2,)))
    for w in iw:
        assert any(
            e.number.minpoly == w.minpoly and e.number.half_plane == w.half_plane
            for e in imag_inst.elements
        )


def test_common_index_input_validation():
    for bad in ([], [4], [1], [2, 2], [12]):
        with pytest.raises(InvalidTarget):
            find_common_index(bad)
    with pytest.raises(ValueError):
        find_common_index([2], domain="fancy")


def test_common_index_json_names_the_instance():
    js = find_common_index([5]).to_json()
    assert js["n"] == 2
    assert js["instance"] == {"family": "2r", "params": [4]}


def test_generator_search_pure_cubic():
    res = find_generator(MonicIntPoly.cubic(0, 0, -2), "3ntr")
    assert res.found
    w = res.witness
    assert w.coords == (0, -1, 1)          # theta^2 - theta = 0.32748
    assert w.minpoly == MonicIntPoly.cubic(0, 6, -2)
    assert w.spec == SetSpec("3ntr", (0, 6))
    assert w.free_coeff == -2
    assert w.element.decimal(5) == "0.32748"
    assert w.certificate.verify_root_of(w.minpoly)


def test_generator_search_totally_real():
    res = find_generator(MonicIntPoly.cubic(0, -3, 1), "3tr")
    assert res.found
    w = res.witness
    assert w.coords == (2, -1, -1)
    assert w.minpoly == MonicIntPoly.cubic(0, -3, 1)
    assert w.spec == SetSpec("3tr", (0, -3))
    assert w.element.decimal(5) == "0.34730"


def test_generator_search_can_fail_within_bound():
    res = find_generator(MonicIntPoly.cubic(0, -1, -1), "3ntr", coord_bound=1)
    assert not res.found
    assert res.witness is None
    assert res.to_json() == {"found": False, "coord_bound": 1, "witness": None}


def test_generator_search_signature_mismatch():
    with pytest.raises(WrongSignature):
        find_generator(MonicIntPoly.cubic(0, -3, 1), "3ntr")
    with pytest.raises(WrongSignature):
        find_generator(MonicIntPoly.cubic(0, 0, -2), "3tr")


def test_generator_search_rejects_reducible_targets():
    with pytest.raises(InvalidTarget):
        find_generator(MonicIntPoly.cubic(0, -7, 6), "3tr")
    with pytest.raises(ValueError):
        find_generator(MonicIntPoly.cubic(0, 0, -2), "2r")


def test_excluded_index_table():
    assert EXCLUDED_INDICES == {
        0: (-2, -1, 0, 1),
        -1: (-2, -1, 0),
        -2: (-2, -1, 0),
        -3: (-3, -2, -1, 0),
    }
    assert GOLDEN_PLUS == MonicIntPoly.quadratic(1, -1)
    assert GOLDEN_REFL == MonicIntPoly.quadratic(-3, 1)


def test_quad_layer_m0():
    rep = quad_layer_report(0, 20)
    assert rep.ok
    assert not rep.golden_plus_seen       # I_1 is invisible to the m = 0 layer
    assert rep.golden_refl_seen           # x^2 - 3x + 1 shows up at c = -8
    assert 1 not in rep.indices_seen
    assert 2 in rep.indices_seen          # c = -6 lands in I_2
    for n in rep.indices_seen:
        assert n not in EXCLUDED_INDICES[0]


def test_quad_layer_m_minus3():
    rep = quad_layer_report(-3, 20)
    assert rep.ok
    assert not rep.golden_refl_seen       # I_-3 is invisible to the m = -3 layer
    assert rep.golden_plus_seen           # golden element appears at c = -5
    for n in rep.indices_seen:
        assert n not in EXCLUDED_INDICES[-3]


def test_quad_layer_m_minus1_sees_both_goldens():
    rep = quad_layer_report(-1, 20)
    assert rep.ok
    assert rep.golden_plus_seen
    assert rep.golden_refl_seen


def test_quad_layer_validation():
    with pytest.raises(ValueError):
        quad_layer_report(1, 20)
    with pytest.raises(ValueError):
        quad_layer_report(0, 2)


def test_trace_obstruction_small():
    rep = trace_obstruction_demo(c_max=8)
    assert rep.ok
    assert rep.hits == ()
    # instances I_{-1,c} for c = 2..8 carry c - 1 elements each
    assert rep.elements_checked == sum(c - 1 for c in range(2, 9))
    js = rep.to_json()
    assert js["ok"] is True
    assert js["elements_checked"] == rep.elements_checked
