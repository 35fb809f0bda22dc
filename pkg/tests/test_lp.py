import itertools

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from shadowlp.errors import DimensionMismatch, ParseError, TooLarge
from shadowlp.instances import cube_instance
from shadowlp.lp import LinearProgram, all_dsets, check_general_position, make_basis, read_lp, write_lp
from shadowlp.rng import PerturbationSpec, RngStream, perturb

SIMPLEX_TEXT = "3 3\n1 0 0 1\n0 1 0 1\n0 0 1 1\n1 1 1\n"


def random_lp(gen, n, d):
    return LinearProgram(gen.standard_normal((n, d)), gen.standard_normal(n), gen.standard_normal(d))


class TestModel:
    def test_dimensions(self, simplex_lp):
        assert (simplex_lp.n, simplex_lp.d) == (3, 3)
        assert simplex_lp.scale == pytest.approx(np.sqrt(2))

    def test_rejects_bad_shapes(self):
        with pytest.raises(DimensionMismatch):
            LinearProgram(np.eye(3), np.ones(2), np.ones(3))
        with pytest.raises(DimensionMismatch):
            LinearProgram(np.ones((3, 1)), np.ones(3), np.ones(1))
        with pytest.raises(ValueError):
            LinearProgram(np.eye(2), np.ones(2), np.zeros(2))
        with pytest.raises(ValueError):
            LinearProgram(np.eye(2), [1.0, np.nan], np.ones(2))

    def test_immutable(self, simplex_lp):
        with pytest.raises(ValueError):
            simplex_lp.a[0, 0] = 5.0

    def test_make_basis(self):
        assert make_basis([2, 0, 1], 4, 3) == (0, 1, 2)
        with pytest.raises(ValueError):
            make_basis([0, 0, 1], 4, 3)
        with pytest.raises(ValueError):
            make_basis([0, 1, 4], 4, 3)

    def test_enumeration_guard(self):
        assert len(all_dsets(6, 3)) == 20
        with pytest.raises(TooLarge):
            all_dsets(60, 10)


class TestFormat:
    def test_read_simplex(self, simplex_lp):
        assert read_lp(SIMPLEX_TEXT) == simplex_lp

    def test_comments_and_crlf(self, simplex_lp):
        text = "# the unit simplex corner\r\n" + SIMPLEX_TEXT.replace("\n", "\r\n")
        assert read_lp(text) == simplex_lp

    def test_scientific_notation(self):
        lp = read_lp("2 2\n1e0 0 2.5E-1\n0 1 -3e+2\n1 0\n")
        assert_array_equal(lp.y, [0.25, -300.0])

    def test_round_trip_bitwise(self, gen):
        for _ in range(1000):
            d = int(gen.integers(2, 6))
            n = int(gen.integers(1, 12))
            lp = random_lp(gen, n, d)
            back = read_lp(write_lp(lp))
            assert back == lp
            assert back.a.tobytes() == lp.a.tobytes()
            assert back.y.tobytes() == lp.y.tobytes()

    def test_bad_row_width_names_line(self):
        text = "3 3\n1 0 0 1\n0 1 1\n0 0 1 1\n1 1 1\n"
        with pytest.raises(ParseError, match="line 3"):
            read_lp(text)

    def test_bad_number(self):
        with pytest.raises(ParseError, match="line 2"):
            read_lp("2 2\n1 x 1\n0 1 1\n1 1\n")

    def test_wrong_line_count(self):
        with pytest.raises(DimensionMismatch):
            read_lp("3 3\n1 0 0 1\n1 1 1\n")

    def test_bad_header(self):
        with pytest.raises(ParseError, match="line 1"):
            read_lp("3\n")


class TestGeneralPosition:
    def test_simplex_clean(self, simplex_lp):
        report = check_general_position(simplex_lp)
        assert report.ok
        assert report.min_subset_smin == pytest.approx(1.0)

    def test_duplicate_row_flagged(self):
        lp = LinearProgram([[1.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]], np.ones(4), [1.0, 2.0, 3.0])
        report = check_general_position(lp)
        assert (0, 1, 2) in report.degenerate_flags
        assert report.min_subset_smin == 0.0

    def test_cube_objective_on_face(self):
        lp = cube_instance(3, z=[1.0, 0.0, 0.0])
        report = check_general_position(lp)
        # independent enumeration: pairs whose span contains z, by matrix rank
        expected = {
            pair
            for pair in itertools.combinations(range(6), 2)
            if np.linalg.matrix_rank(np.vstack([lp.a[list(pair)], lp.z])) < 3
        }
        assert expected
        flagged_pairs = {f for f in report.degenerate_flags if len(f) == 2}
        assert flagged_pairs == expected
        assert all(p in expected for p in itertools.combinations(range(6), 2) if 0 in p or 3 in p)

    def test_perturbed_instances_mostly_clean(self, gen):
        clean = 0
        for k in range(500):
            d = int(gen.integers(2, 5))
            n = int(gen.integers(d + 1, 11))
            base = LinearProgram(
                gen.integers(-1, 2, size=(n, d)).astype(float),
                gen.integers(1, 3, size=n).astype(float),
                np.ones(d),
            )
            lp = perturb(base, PerturbationSpec(1e-3, base.scale), RngStream(5, k))
            clean += check_general_position(lp).ok
        assert clean >= 495
