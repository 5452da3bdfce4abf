import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import small_curves
from cyclic_covers.curves import (
    CyclicCurve,
    RamificationProfile,
    base_genus,
    curve_from_json,
    curve_to_dict,
    expected_branch_count,
    genus_from_profile,
    ramification_profile,
    standard_curve,
    validate_curve,
)
from cyclic_covers.errors import (
    CurveFormatError,
    CyclicCoverError,
    DuplicateBranchPoints,
    InvalidProfile,
    LengthMismatch,
    NonPrimeDegree,
    RamifiedAtInfinity,
    TooFewBranchPoints,
    ZeroExponent,
)
from cyclic_covers.ff_linear import ExponentVector
from cyclic_covers.rationals import format_rational, parse_rational


def test_anchor_curve_is_valid(cubic):
    assert cubic.r == 4
    assert cubic.branch_points[3] == Fraction(5, 2)
    assert base_genus(cubic) == 2


@pytest.mark.parametrize(
    "args, error",
    [
        ((3, [0, 1, 2, 3], [1, 1, 1, 1]), RamifiedAtInfinity),
        ((4, [0, 1, 2, 3], [1, 1, 1, 1]), NonPrimeDegree),
        ((3, [0, 1, 1, 3], [1, 1, 2, 2]), DuplicateBranchPoints),
        ((3, [0, 1, 2, 3], [1, 0, 2, 0]), ZeroExponent),
        ((3, [0, 1, 2, 3], [1, 3, 2, 0]), ZeroExponent),
        ((2, [0, 1], [1, 1]), TooFewBranchPoints),
        ((3, [0, 1, 2], [1, 2]), LengthMismatch),
    ],
)
def test_validate_curve_errors(args, error):
    with pytest.raises(error):
        validate_curve(*args)


def test_validate_curve_reduces_raw_exponents():
    c = validate_curve(3, [0, 1, -1, 2], [4, -2, 5, 2])
    assert c.alpha.entries == (1, 1, 2, 2)


def test_direct_construction_enforces_invariants():
    with pytest.raises(RamifiedAtInfinity):
        CyclicCurve(3, (0, 1, 2), ExponentVector((1, 1, 2), 3))


def profile_fibres(profile):
    return [list(f) for f in profile.finite], list(profile.infinity)


def test_ramification_profile_examples():
    p = ramification_profile(3, ExponentVector((1, 1, 2, 2), 3))
    assert profile_fibres(p) == ([[(1, 3)]] * 4, [(3, 1)])
    p = ramification_profile(2, ExponentVector((1, 1, 0, 0), 2))
    assert profile_fibres(p) == ([[(1, 2)], [(1, 2)], [(2, 1)], [(2, 1)]], [(2, 1)])
    p = ramification_profile(5, ExponentVector((1, 4, 0), 5))
    assert profile_fibres(p) == ([[(1, 5)], [(1, 5)], [(5, 1)]], [(5, 1)])
    with pytest.raises(RamifiedAtInfinity):
        ramification_profile(3, ExponentVector((1, 0, 0), 3))


def test_genus_from_profile_examples():
    assert genus_from_profile(ramification_profile(2, ExponentVector((1,) * 6, 2))) == 2
    assert genus_from_profile(ramification_profile(3, ExponentVector((1, 1, 2, 2), 3))) == 2
    assert genus_from_profile(ramification_profile(2, ExponentVector((1, 1, 0, 0), 2))) == 0


def test_invalid_profiles():
    with pytest.raises(InvalidProfile):
        RamificationProfile(3, (((1, 2),),), ((3, 1),))
    # the identity map of P^1 relabelled as degree 2 with no ramification
    with pytest.raises(InvalidProfile):
        genus_from_profile(RamificationProfile(2, (((2, 1),),), ((2, 1),)))


@pytest.mark.parametrize("d, r, g", [(2, 6, 2), (3, 4, 2), (5, 4, 4), (7, 3, 3), (2, 8, 3)])
def test_base_genus(d, r, g):
    assert base_genus(standard_curve(d, r)) == g


def test_expected_branch_count():
    assert expected_branch_count(2, 2) == 6
    assert expected_branch_count(2, 3) == 4
    assert expected_branch_count(0, 2) == 2
    with pytest.raises(ValueError):
        expected_branch_count(1, 5)


def test_standard_curve_balancing():
    assert standard_curve(3, 4).alpha.entries == (1, 1, 2, 2)
    assert standard_curve(7, 3).alpha.entries == (1, 1, 5)
    with pytest.raises(RamifiedAtInfinity):
        standard_curve(2, 5)


@pytest.mark.parametrize("d", [2, 3, 5, 7])
@pytest.mark.parametrize("r", range(3, 13))
def test_lemma_closed_form_matches_riemann_hurwitz(d, r):
    if d == 2 and r % 2:
        pytest.skip("no full-support vector mod 2 with odd r")
    curve = standard_curve(d, r)
    g = base_genus(curve)
    assert g == genus_from_profile(ramification_profile(d, curve.alpha))
    assert expected_branch_count(g, d) == r
    profile = ramification_profile(d, curve.alpha)
    assert all(sum(c * e for c, e in fibre) == d for fibre in profile.fibres())


@given(small_curves())
def test_random_curves_genus_and_branch_count(curve):
    assert expected_branch_count(base_genus(curve), curve.d) == curve.r


# -- curve JSON ---------------------------------------------------------------

ANCHOR_JSON = '{"d": 3, "branch_points": ["0", "1", "-1", "5/2"], "exponents": [1, 1, 2, 2]}'


def test_curve_json_round_trip(cubic):
    assert curve_from_json(ANCHOR_JSON) == cubic
    assert curve_to_dict(cubic) == json.loads(ANCHOR_JSON)


@given(small_curves())
def test_curve_json_round_trip_random(curve):
    assert curve_from_json(json.dumps(curve_to_dict(curve))) == curve


@pytest.mark.parametrize(
    "doc, error",
    [
        ({"d": 3, "branch_points": ["0", "1", "2"], "exponents": [1, 1, 1], "x": 1}, CurveFormatError),
        ({"d": 3, "branch_points": ["0", "1", "2"]}, CurveFormatError),
        ({"d": 3, "branch_points": ["0", "1", "2/4"], "exponents": [1, 1, 1]}, CurveFormatError),
        ({"d": 3, "branch_points": ["0", "1", "1.5"], "exponents": [1, 1, 1]}, CurveFormatError),
        ({"d": 3, "branch_points": ["0", "1", "2"], "exponents": [1, 1, 4]}, CurveFormatError),
        ({"d": 3, "branch_points": ["0", "1", "2"], "exponents": [1, 1, 3]}, ZeroExponent),
        ({"d": 3, "branch_points": ["0", "1", "2"], "exponents": [1, 1, True]}, CurveFormatError),
        ({"d": 6, "branch_points": ["0", "1", "2"], "exponents": [1, 1, 4]}, NonPrimeDegree),
        ({"d": "3", "branch_points": ["0", "1", "2"], "exponents": [1, 1, 1]}, CurveFormatError),
        ({"d": 3, "branch_points": [0, 1, 2], "exponents": [1, 1, 1]}, CurveFormatError),
    ],
)
def test_curve_json_rejections(doc, error):
    with pytest.raises(error):
        curve_from_json(json.dumps(doc))


def test_malformed_json():
    with pytest.raises(CurveFormatError):
        curve_from_json("{not json")


@pytest.mark.parametrize("text, value", [("0", 0), ("-7", -7), ("5/2", Fraction(5, 2)), ("-1/3", Fraction(-1, 3))])
def test_rational_literals(text, value):
    assert parse_rational(text) == value
    assert format_rational(value) == text


@pytest.mark.parametrize("text", ["1/0", "+1", "1 /2", "-2/-3", "", "0x10"])
def test_bad_rational_literals(text):
    with pytest.raises(CyclicCoverError):
        parse_rational(text)
