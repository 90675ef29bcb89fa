import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qutaxi import (
    IndivisibleLength,
    InvalidPattern,
    NotASingleRun,
    OriginNotAtFront,
    PreconditionError,
    QuString,
    TransformPattern,
    angle_pattern,
    arc_length,
    atom,
    blank,
    dilate,
    normalize,
    parse,
    parse_digit,
    rotate,
    rotate_by_angle,
    scalar_mul,
    shape_transform,
    taxicab_length,
    translate,
    trace,
)
from strategies import digits, qustrings

P1, M1, P2, M2 = atom(1, 1), atom(1, -1), atom(2, 1), atom(2, -1)
TWO_SQUARES = "2+1-2-1+1+o1+2+1-2-"


def run(tok, p, dot=True):
    return parse(f"{'.' if dot else ''}({tok}){{{p}}}")


class TestTranslate:
    def test_blank_prefix(self):
        assert translate(parse(".1+"), 1, 1, 2) == parse(".1+o1+o1+")

    def test_zero_distance(self):
        a = parse(".1+2-")
        assert translate(a, 1, 1, 0) == a

    def test_without_origin(self):
        assert translate(parse("2+"), 2, -1, 1) == parse("2-o2+")

    def test_errors(self):
        with pytest.raises(PreconditionError):
            translate(parse(".1+"), 3, 1, 1)
        with pytest.raises(OriginNotAtFront):
            translate(parse("1+.1+"), 1, 1, 1)

    @given(qustrings(dim=3, origin=False), st.integers(1, 3), st.sampled_from([1, -1]), st.integers(0, 9))
    def test_length_invariant(self, a, axis, sign, l):
        assert taxicab_length(translate(a, axis, sign, l)) == taxicab_length(a)

    @given(qustrings(origin=False), st.integers(0, 6), st.integers(0, 6))
    def test_composition(self, a, l1, l2):
        a = a.with_origin(0)
        twice = translate(translate(a, 1, 1, l1), 1, 1, l2)
        assert normalize(twice) == normalize(translate(a, 1, 1, l1 + l2))

    @given(qustrings(origin=False), st.integers(0, 6))
    def test_moves_the_drawing(self, a, l):
        t0, t1 = trace(a.with_origin(0)), trace(translate(a.with_origin(0), 2, -1, l))
        assert t1.end == (t0.end[0], t0.end[1] - l)


class TestRotate:
    @pytest.mark.parametrize("p", [1, 2, 3, 5])
    def test_paper_examples(self, p):
        assert rotate(run("1+", 2 * p), P1, 1, P2, 1) == run("1+2+", p)
        assert rotate(run("1+", p), P2, 1) == run("2+", p)
        assert rotate(run("1+", 2 * p), M1, 1, P2, 1) == run("1-2+", p)

    def test_indivisible(self):
        with pytest.raises(IndivisibleLength):
            rotate(run("1+", 3), P1, 1, P2, 1)

    @pytest.mark.parametrize("text", [".", ".1+2+", ".1+o{2}", "1+.1+"])
    def test_needs_a_single_run(self, text):
        with pytest.raises((NotASingleRun, OriginNotAtFront)):
            rotate(parse(text), P2, 1)

    def test_input_is_normalized_first(self):
        assert rotate(parse(".1+1+1-0 1+"), P2, 1, P1, 1) == parse(".2+1+")

    def test_zero_period(self):
        with pytest.raises(InvalidPattern):
            rotate(run("1+", 2), P1, 0, P2, 0)

    def test_blank_target_rejected(self):
        with pytest.raises(InvalidPattern):
            rotate(run("1+", 2), blank(1, 1), 1)

    @pytest.mark.parametrize(
        "k, angle, expected",
        [
            ("1+", 45, "(1+2+)"),
            ("1+", 90, "(2+)"),
            ("1+", 135, "(1-2+)"),
            ("1+", 180, "(1-)"),
            ("1+", 225, "(1-2-)"),
            ("1+", 270, "(2-)"),
            ("1+", 315, "(1+2-)"),
            ("1+", 360, "(1+)"),
            ("2+", 90, "(1-)"),
            ("2+", 45, "(2+1-)"),
            ("1-", 90, "(2-)"),
        ],
    )
    def test_angle_shortcuts(self, k, angle, expected):
        p = 2 if angle % 90 else 1
        got = rotate_by_angle(run(k, 4), angle)
        assert got == parse(f".{expected}{{{4 // p}}}")

    def test_angle_must_be_multiple_of_45(self):
        with pytest.raises(InvalidPattern):
            angle_pattern(P1, 30)

    @given(st.sampled_from([P1, M1, P2, M2]), st.integers(0, 7), st.integers(1, 6))
    def test_angle_rotation_preserves_length(self, k, step, p):
        a = QuString((k,) * (2 * p), 2, 0)
        out = rotate_by_angle(a, 45 * step)
        assert len(out) == len(a)
        # i and j never oppose each other, so no step is undone
        assert taxicab_length(out) == taxicab_length(a)


def valid_runs():
    return st.tuples(
        st.sampled_from(["1+", "1-", "2+", "2-", "1+o"]),
        st.lists(st.tuples(digits(2, zeros=False), st.integers(0, 3)), min_size=1, max_size=5)
        .filter(lambda parts: sum(q for _, q in parts) >= 1),
        st.integers(1, 4),
    )


class TestShapeTransform:
    def test_two_squares(self):
        pat = TransformPattern.from_string(parse(TWO_SQUARES))
        assert len(pat.parts) == 9 and pat.period == 9
        assert str(shape_transform(run("1+", 9), pat)) == "." + TWO_SQUARES

    @pytest.mark.parametrize("p", [1, 4, 7])
    def test_identity_pattern(self, p):
        assert shape_transform(run("1+", p), TransformPattern(((P1, 1),))) == run("1+", p)

    def test_pattern_from_runs(self):
        pat = TransformPattern.from_string(parse("1+{3}2+{2}"))
        assert pat.parts == ((P1, 3), (P2, 2))

    def test_pattern_validation(self):
        from qutaxi import ZERO

        with pytest.raises(InvalidPattern):
            TransformPattern(((ZERO, 1),))
        with pytest.raises(InvalidPattern):
            TransformPattern(((P1, 0),))
        with pytest.raises(InvalidPattern):
            TransformPattern(((P1, -1),))
        with pytest.raises(InvalidPattern):
            TransformPattern.from_string(parse(".1+"))

    def test_blank_run_input(self):
        pat = TransformPattern(((P1, 1), (blank(1, 1), 1)))
        assert str(shape_transform(run("1+o", 4), pat)) == ".1+1+o1+1+o"

    def test_no_origin_stays_without(self):
        out = shape_transform(run("1+", 2, dot=False), TransformPattern(((P2, 1),)))
        assert out.origin is None

    @given(valid_runs())
    def test_digit_count_and_divisibility(self, args):
        tok, parts, mult = args
        pat = TransformPattern(tuple(parts))
        for p in range(1, 3 * pat.period + 1):
            a = run(tok, p)
            if p % pat.period:
                with pytest.raises(IndivisibleLength):
                    shape_transform(a, pat)
            else:
                out = shape_transform(a, pat)
                assert len(out) == p
                if not any(d.is_blank for d, _ in parts) and not tok.endswith("o"):
                    assert arc_length(out) == arc_length(a)

    @given(
        st.sampled_from([P1, M1, P2, M2]),
        st.sampled_from([P1, M1, P2, M2]),
        st.sampled_from([P1, M1, P2, M2]),
        st.integers(0, 4),
        st.integers(0, 4),
        st.integers(1, 5),
    )
    def test_rotate_is_a_two_part_transform(self, k, i, j, q, r, mult):
        assume(q + r >= 1)
        a = QuString((k,) * ((q + r) * mult), 2, 0)
        assert rotate(a, i, q, j, r) == shape_transform(a, TransformPattern(((i, q), (j, r))))


class TestDilate:
    def test_unit_square(self):
        assert dilate(2, parse(".1+2+1-2-")) == parse(".1+{2}2+{2}1-{2}2-{2}")

    def test_identity(self):
        a = parse("1+.2-o0")
        assert dilate(1, a) == a

    @given(qustrings(dim=3), st.integers(1, 5))
    def test_scales_bounding_box(self, a, l):
        lo, hi = trace(a).bounds()
        lo2, hi2 = trace(dilate(l, a)).bounds()
        assert lo2 == tuple(l * c for c in lo)
        assert hi2 == tuple(l * c for c in hi)
