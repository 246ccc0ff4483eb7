"""Set-expression grammar, errors with byte offsets, print round trips."""

import math

import pytest

from meanmeasure import InvalidInterval, ParseError, parse_interval_set, parse_set
from meanmeasure.setparse import evaluate


def test_counterexample_expression():
    got = parse_interval_set("[1, e^2] U [e^4, e^8]")
    want = ((1.0, math.e ** 2), (math.e ** 4, math.e ** 8))
    for (glo, ghi), (wlo, whi) in zip(got.intervals, want):
        assert glo == pytest.approx(wlo, rel=1e-15)
        assert ghi == pytest.approx(whi, rel=1e-15)


def test_shifted_union():
    got = parse_interval_set("([1,2] U [3,4]) + 10")
    assert got.intervals == ((11.0, 12.0), (13.0, 14.0))


def test_reversed_interval_rejected():
    with pytest.raises(InvalidInterval):
        parse_set("[2,1]")


def test_arithmetic_inside_endpoints():
    got = parse_interval_set("[1 + 2*3, 2^3^2 / 8]")
    assert got.intervals == ((7.0, 64.0),)  # right-associative power
    got = parse_interval_set("[-pi, sqrt(4) * exp(0) + log(1)]")
    assert got.intervals == ((-math.pi, 2.0),)
    got = parse_interval_set("[2^-1, 1]")
    assert got.intervals == ((0.5, 1.0),)


def test_union_normalizes():
    got = parse_interval_set("[1,2] U [2,3] U [0.5, 1.5]")
    assert got.intervals == ((0.5, 3.0),)


def test_nested_shifts():
    got = parse_interval_set("(([1,2]) + 1) + 0.5")
    assert got.intervals == ((2.5, 3.5),)


@pytest.mark.parametrize("text,offset", [
    ("[1,2] U", 7),
    ("[1 2]", 3),
    ("[1,2] extra", 6),
    ("([1,2])", 7),       # a shifted set needs "+ num"
    ("[zzz, 2]", 1),
])
def test_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as err:
        parse_set(text)
    assert err.value.offset == offset


def test_empty_input_rejected():
    with pytest.raises(ParseError):
        parse_set("   ")


def test_division_by_zero_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_set("[1/0, 2]")


@pytest.mark.parametrize("text", [
    "[1, e^2] U [e^4, e^8]",
    "([1,2] U [3,4]) + 10",
    "[0.1, sqrt(2)]",
    "(([1,2]) + -pi) + 1e-3",
    "[1,2] U [4, 8] U [16, 32]",
])
def test_print_reparse_round_trip(text):
    node = parse_set(text)
    printed = node.to_text()
    assert evaluate(parse_set(printed)) == evaluate(node)
