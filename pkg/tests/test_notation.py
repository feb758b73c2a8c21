import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from contfrac import (
    CFSyntaxError,
    ContfracError,
    FiniteCF,
    InvariantError,
    PeriodicCF,
    format_cf,
    parse_cf,
)


class TestParse:
    def test_finite_semicolon(self):
        assert parse_cf("[2;1,3,4]") == FiniteCF((2, 1, 3, 4))

    def test_finite_commas_only(self):
        assert parse_cf("[2,1,3,4]") == FiniteCF((2, 1, 3, 4))

    def test_single(self):
        assert parse_cf("[5]") == FiniteCF((5,))

    def test_negative_head(self):
        assert parse_cf("[-3;4,4]") == FiniteCF((-3, 4, 4))

    def test_periodic(self):
        assert parse_cf("[1;(2)]") == PeriodicCF((1,), (2,))

    def test_purely_periodic(self):
        assert parse_cf("[(1)]") == PeriodicCF((), (1,))

    def test_mixed(self):
        assert parse_cf("[3;1,(1,6)]") == PeriodicCF((3, 1), (1, 6))

    def test_whitespace_insensitive(self):
        assert parse_cf(" [ 2 ; 1 , 3 , 4 ] ") == FiniteCF((2, 1, 3, 4))
        assert parse_cf("[ 1 ; ( 2 ) ]") == PeriodicCF((1,), (2,))

    def test_non_minimal_period_canonicalized(self):
        assert parse_cf("[1;(2,2)]") == PeriodicCF((1,), (2,))
        assert parse_cf("[1;2,(2)]") == PeriodicCF((1,), (2,))


class TestParseErrors:
    @pytest.mark.parametrize(
        "text",
        [
            "",
            "[",
            "]",
            "[]",
            "[1;2",
            "[1;;2]",
            "[1;2,]",
            "[1;(2),3]",
            "[(1),(2)]",
            "[()]",
            "[1;()]",
            "[a]",
            "[1.5]",
            "[1 2]",
            "[1;2]]",
            "(1)",
            "[--3]",
            "[-]",
        ],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(CFSyntaxError):
            parse_cf(text)

    @pytest.mark.parametrize("text", ["[2;0,3]", "[2;-1]", "[1;(0)]", "[1;(-2)]", "[1,0,(2)]"])
    def test_invariant_errors(self, text):
        with pytest.raises(InvariantError):
            parse_cf(text)

    def test_error_position_points_into_input(self):
        text = "[2;1,x]"
        with pytest.raises(CFSyntaxError) as excinfo:
            parse_cf(text)
        assert 0 <= excinfo.value.position < len(text)
        assert text[excinfo.value.position] == "x"

    @given(st.text(max_size=30))
    @settings(max_examples=500)
    def test_never_crashes_on_arbitrary_text(self, text):
        try:
            parse_cf(text)
        except ContfracError:
            pass  # CFSyntaxError or InvariantError are the only permitted failures


class TestFormat:
    def test_finite(self):
        assert format_cf(FiniteCF((2, 1, 3, 4))) == "[2;1,3,4]"

    def test_single(self):
        assert format_cf(FiniteCF((5,))) == "[5]"

    def test_purely_periodic(self):
        assert format_cf(PeriodicCF((), (1,))) == "[(1)]"

    def test_periodic(self):
        assert format_cf(PeriodicCF((1,), (2,))) == "[1;(2)]"

    def test_mixed(self):
        assert format_cf(PeriodicCF((3, 1), (1, 6))) == "[3;1,(1,6)]"


finite_cfs = st.builds(
    lambda a0, tail: FiniteCF((a0, *tail)),
    st.integers(-999, 999),
    st.lists(st.integers(1, 999), max_size=8),
)

periodic_cfs = st.builds(
    lambda pre, period: PeriodicCF(tuple(pre), tuple(period)),
    st.one_of(
        st.just([]),
        st.builds(
            lambda a0, tail: [a0, *tail],
            st.integers(-999, 999),
            st.lists(st.integers(1, 999), max_size=4),
        ),
    ),
    st.lists(st.integers(1, 999), min_size=1, max_size=6),
)


class TestRoundTrip:
    @given(finite_cfs)
    @settings(max_examples=300)
    def test_finite(self, cf):
        assert parse_cf(format_cf(cf)) == cf

    @given(periodic_cfs)
    @settings(max_examples=300)
    def test_periodic(self, cf):
        assert parse_cf(format_cf(cf)) == cf
