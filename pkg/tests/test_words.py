import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramonoid.errors import BudgetExceeded
from ramonoid.words import format_word, parse_word, shortlex_closure, shortlex_key


@pytest.mark.parametrize(
    "text, word",
    [("1", ""), ("", ""), ("a^2r", "aar"), ("(ra^2)^2", "raaraa"), ("rar", "rar"), ("a^0r", "r"), ("((r))", "r")],
)
def test_parse(text, word):
    assert parse_word(text) == word


@pytest.mark.parametrize("text", ["a^", "(ra", "ra)", "r^x", "^2"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_word(text)


def test_alphabet_enforced():
    with pytest.raises(ValueError):
        parse_word("rx", "ra")


@given(st.text(alphabet="rad", max_size=12))
def test_format_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_format_collapses_runs():
    assert format_word("raar") == "ra^2r"
    assert format_word("") == "1"


def test_shortlex_key():
    assert shortlex_key("r", "ar") > shortlex_key("a", "ar")
    assert shortlex_key("aa", "ar") > shortlex_key("r", "ar")


def test_closure_cyclic_group():
    elems = shortlex_closure(0, "a", lambda c, x: (x + 1) % 5, budget=10)
    assert [w for w, _ in elems] == ["", "a", "aa", "aaa", "aaaa"]


def test_closure_budget():
    with pytest.raises(BudgetExceeded):
        shortlex_closure(0, "a", lambda c, x: x + 1, budget=10)
