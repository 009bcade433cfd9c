"""Presentation parsing, rendering, and structural validation."""

import pytest

from diffalg.presentation import (AlgebraPresentation, PresentationError,
                                  load_presentation, parse_presentation,
                                  validate_presentation)
from diffalg.scalars import rational

from conftest import FIXTURES, build


def test_parse_minimal():
    P = parse_presentation("n = 3\ng 1 2 = 1\ng 1 3 = 1\ng 2 3 = 1\n")
    assert P.n == 3
    assert P.g(1, 2) == 1
    assert P.g(2, 1) == 0
    assert P.x(1) == 0


def test_parse_comments_whitespace_and_rationals():
    text = """
    # leading commentary
    n = 3

    g 1 2 = -3/2   # trailing commentary
    g 2 1 = 5
    g 1 3 = 1
    g 2 3 = 1
    x 2 = 7/3
    """
    P = parse_presentation(text)
    assert P.g(1, 2) == rational(-3, 2)
    assert P.g(2, 1) == 5
    assert P.x(2) == rational(7, 3)


def test_load_matches_inline_table(p1):
    assert load_presentation(FIXTURES / "p1.dalg") == p1


def test_render_parse_round_trip(p1, p2, p3, p4, b1, c4, b4x, d4):
    for P in (p1, p2, p3, p4, b1, c4, b4x, d4):
        assert parse_presentation(P.render()) == P


def test_render_omits_defaults(p2):
    text = p2.render()
    # one-sided pairs: the zero trailing slots of written one-sided pairs
    # stay (leading slots must always be printed), unset x's disappear
    assert "x 4" not in text
    assert text.endswith("\n")


def test_equality_and_hash(p1, p1m):
    twin = build(4, {(1, 2): 1, (2, 1): 1, (1, 3): 1, (3, 1): 1,
                     (2, 3): 1, (3, 2): 1, (1, 4): 2, (4, 1): 2,
                     (2, 4): 2, (4, 2): 2, (3, 4): 2, (4, 3): 2},
                 {1: 1, 2: 1, 3: 1})
    assert twin == p1
    assert hash(twin) == hash(p1)
    assert p1 != p1m


@pytest.mark.parametrize("text, line, fragment", [
    ("g 1 2 = 1\n", 1, "'n = INT' must precede"),
    ("n = 3\ng 1 2 =\n", 2, "expected 'g I J = RATIONAL'"),
    ("n = 3\ng 1 1 = 2\n", 2, "two distinct indices"),
    ("n = 3\ng 1 4 = 2\n", 2, "index out of range 1..3"),
    ("n = 3\ng 1 2 = 0\n", 2, "zero leading coefficient"),
    ("n = 3\ng 1 2 = 1\ng 1 2 = 2\n", 3, "duplicate assignment of g(1, 2)"),
    ("n = 3\nx 1 = 1\nx 1 = 2\n", 3, "duplicate assignment of x(1)"),
    ("n = 3\nn = 4\n", 2, "duplicate assignment of n"),
    ("n = 3\ng 1 2 = 1/0\n", 2, "invalid rational"),
    ("n = 3\nfoo 1 2\n", 2, "unrecognized statement 'foo'"),
    ("# nothing\n", None, "no 'n = INT' declaration"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(PresentationError) as exc:
        parse_presentation(text)
    assert fragment in str(exc.value)
    assert exc.value.line == line


def test_error_column_points_at_value():
    with pytest.raises(PresentationError) as exc:
        parse_presentation("n = 3\ng 1 2 = abc\n")
    assert exc.value.line == 2
    assert exc.value.col == 9


def test_validate_flags_zero_leading():
    # bypass the parser so the zero lead reaches the validator
    P = AlgebraPresentation(3, {(1, 2): rational(1), (1, 3): rational(1)}, {})
    assert validate_presentation(P) == ["zero leading coefficient g(2, 3)"]


def test_validate_accepts_fixtures(p1, p2, p3, p4, b1):
    for P in (p1, p2, p3, p4, b1):
        assert validate_presentation(P) == []
