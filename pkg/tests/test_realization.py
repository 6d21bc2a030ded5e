"""Hyperplane arrangements: validation, feasibility, chamber enumeration."""

from fractions import Fraction
from itertools import product

import pytest

from topecom import (
    BadDimension,
    ScalarMultiple,
    SizeBoundExceeded,
    Tope,
    ZeroNormal,
    chambers,
    feasible,
    format_arrangement_text,
    is_acyclic,
    parse_arrangement_text,
    read_arrangement_file,
    validate_arrangement,
    write_arrangement_file,
)
from conftest import random_generic_d3_arrangement

CUBE = ((1, 0), (0, 1))
HEXAGON = ((1, 0), (0, 1), (1, 1))


class TestValidation:
    def test_accepts_cube_and_hexagon(self):
        assert validate_arrangement(2, CUBE).t == 2
        assert validate_arrangement(2, HEXAGON).t == 3

    def test_bad_dimension(self):
        with pytest.raises(BadDimension):
            validate_arrangement(1, ((1,), (2,)))
        with pytest.raises(BadDimension):
            validate_arrangement(3, CUBE)

    def test_too_few_normals(self):
        with pytest.raises(BadDimension):
            validate_arrangement(2, ((1, 0),))

    def test_zero_normal(self):
        with pytest.raises(ZeroNormal) as exc:
            validate_arrangement(2, ((1, 0), (0, 0)))
        assert exc.value.element == 2

    def test_parallel_normals(self):
        with pytest.raises(ScalarMultiple) as exc:
            validate_arrangement(2, ((1, 2), (2, 4)))
        assert exc.value.elements == (1, 2)
        assert exc.value.kind == "parallel"

    def test_antiparallel_normals(self):
        with pytest.raises(ScalarMultiple) as exc:
            validate_arrangement(2, ((1, 2), (-1, -2)))
        assert exc.value.kind == "antiparallel"

    def test_fractions_are_normalized_for_comparison(self):
        with pytest.raises(ScalarMultiple):
            validate_arrangement(2, ((Fraction(1, 2), Fraction(1, 3)), (3, 2)))


class TestFeasibility:
    def test_hexagon_signs(self):
        arr = validate_arrangement(2, HEXAGON)
        assert feasible(arr, Tope.from_string("+++"))
        assert not feasible(arr, Tope.from_string("++-"))

    def test_antipodal_symmetry(self):
        arr = validate_arrangement(2, HEXAGON)
        for entries in product((1, -1), repeat=3):
            sigma = Tope(entries)
            assert feasible(arr, sigma) == feasible(arr, -sigma)

    def test_matches_chamber_listing(self):
        for normals in (CUBE, HEXAGON):
            arr = validate_arrangement(2, normals)
            listed = chambers(arr)
            for entries in product((1, -1), repeat=arr.t):
                sigma = Tope(entries)
                assert feasible(arr, sigma) == (sigma in listed)

    def test_wrong_length(self):
        arr = validate_arrangement(2, CUBE)
        with pytest.raises(ValueError):
            feasible(arr, Tope.from_string("+++"))


class TestChambers:
    def test_cube_and_hexagon_counts(self):
        assert len(chambers(validate_arrangement(2, CUBE))) == 4
        assert len(chambers(validate_arrangement(2, HEXAGON))) == 6

    def test_hexagon_members(self):
        ts = chambers(validate_arrangement(2, HEXAGON))
        want = {"+++", "+-+", "+--", "---", "-+-", "-++"}
        assert {str(T) for T in ts} == want

    def test_generic_plane_counts(self):
        # a generic rank-3 arrangement of t planes cuts t*(t-1) + 2 chambers
        for t in (4, 5, 6):
            arr = random_generic_d3_arrangement(t, seed=400 + t)
            assert len(chambers(arr)) == t * (t - 1) + 2

    def test_demo_chambers_match_fixture(self, demo):
        assert chambers(demo.arrangement) == demo.carrier

    def test_result_is_acyclic_for_first_orthant_arrangements(self):
        # all-positive interior points exist for these normals
        assert is_acyclic(chambers(validate_arrangement(2, HEXAGON)))

    def test_size_bound(self):
        arr = random_generic_d3_arrangement(4, seed=7)
        with pytest.raises(SizeBoundExceeded):
            chambers(arr, bound=3)


class TestArrangementIO:
    def test_roundtrip(self, demo):
        text = format_arrangement_text(demo.arrangement)
        assert parse_arrangement_text(text) == demo.arrangement

    def test_fraction_tokens(self):
        arr = parse_arrangement_text("d 2 t 2\n1 3/2\n-1/3 2\n")
        assert arr.normals[0] == (Fraction(1), Fraction(3, 2))
        assert arr.normals[1] == (Fraction(-1, 3), Fraction(2))
        assert "3/2" in format_arrangement_text(arr)

    def test_comments_and_blanks(self):
        text = "# demo\nd 2 t 2\n\n1 0  # x axis\n0 1\n"
        assert parse_arrangement_text(text).t == 2

    def test_header_errors(self):
        with pytest.raises(ValueError):
            parse_arrangement_text("1 0\n0 1\n")
        with pytest.raises(ValueError):
            parse_arrangement_text("d 2 t 3\n1 0\n0 1\n")

    def test_file_io(self, tmp_path, demo):
        path = tmp_path / "demo.arr"
        write_arrangement_file(path, demo.arrangement)
        assert read_arrangement_file(path) == demo.arrangement
