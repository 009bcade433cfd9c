"""Text grammar for algebra elements and the canonical rendering of results.

Grammar (whitespace-insensitive between tokens)::

    poly   := term (("+" | "-") term)*
    term   := RATIONAL | [RATIONAL "*"] factor+
    factor := "D" INT ["^" INT]

Input words keep their written (noncommutative) order, so ``D1 D2`` and
``D2 D1`` parse to different free words; reduction to the basis is the
engine's job.  Rendering always emits normal-form terms: exponents grouped
with ``^``, generator indices strictly decreasing inside each word, terms
ordered by total degree (descending) and then by word (descending), constants
last.
"""

from __future__ import annotations

import re

from .engine import Poly, monomial_word
from .scalars import format_rational, rational

__all__ = ["ExpressionError", "parse_poly", "format_poly", "format_word"]


class ExpressionError(ValueError):
    """Raised when a polynomial expression does not match the grammar."""

    def __init__(self, message: str, col: int | None = None):
        if col is not None:
            message = f"{message} (column {col})"
        super().__init__(message)
        self.col = col


_TOKEN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<gen>D(?P<gi>\d+))"
    r"|(?P<num>\d+(?:/\d+)?)"
    r"|(?P<op>[*^+-])"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos + 1)
        if m.lastgroup != "ws" and not (m.lastgroup == "gi"):
            if m.group("gen"):
                tokens.append(("gen", int(m.group("gi")), pos + 1))
            elif m.group("num"):
                tokens.append(("num", m.group("num"), pos + 1))
            else:
                tokens.append(("op", m.group("op"), pos + 1))
        pos = m.end()
    return tokens


def parse_poly(text: str, n: int) -> dict:
    """Parse a polynomial expression into a ``{word: coefficient}`` combination.

    The result maps free words (tuples of generator indices, written order
    preserved) to nonzero rational coefficients; repeated words accumulate.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise ExpressionError("empty expression")
    combination: dict = {}
    idx = 0
    sign = 1
    # optional leading sign
    if tokens[idx][0] == "op" and tokens[idx][1] in "+-":
        sign = -1 if tokens[idx][1] == "-" else 1
        idx += 1

    while True:
        coeff = rational(1)
        word: list = []
        saw_coeff = False
        saw_factor = False
        if idx < len(tokens) and tokens[idx][0] == "num":
            coeff = rational(tokens[idx][1])
            saw_coeff = True
            idx += 1
            if idx < len(tokens) and tokens[idx][0] == "op" and tokens[idx][1] == "*":
                idx += 1
        while idx < len(tokens) and tokens[idx][0] == "gen":
            g = tokens[idx][1]
            col = tokens[idx][2]
            if not 1 <= g <= n:
                raise ExpressionError(f"generator D{g} out of range 1..{n}", col)
            saw_factor = True
            idx += 1
            k = 1
            if idx < len(tokens) and tokens[idx][0] == "op" and tokens[idx][1] == "^":
                idx += 1
                if idx >= len(tokens) or tokens[idx][0] != "num" or "/" in tokens[idx][1]:
                    raise ExpressionError("exponent must be a nonnegative integer",
                                          tokens[idx - 1][2])
                k = int(tokens[idx][1])
                idx += 1
            word.extend([g] * k)
        if not saw_factor and not saw_coeff:
            col = tokens[idx][2] if idx < len(tokens) else None
            raise ExpressionError("expected a rational or a generator factor", col)
        key = tuple(word)
        total = combination.get(key, rational(0)) + sign * coeff
        if total == 0:
            combination.pop(key, None)
        else:
            combination[key] = total

        if idx >= len(tokens):
            break
        kind, val, col = tokens[idx]
        if kind != "op" or val not in "+-":
            raise ExpressionError(f"expected '+' or '-' between terms, got {val!r}", col)
        sign = -1 if val == "-" else 1
        idx += 1
        if idx >= len(tokens):
            raise ExpressionError("dangling sign at end of expression", col)
    return combination


def format_word(word: tuple) -> str:
    """Render a basis word with grouped exponents, e.g. ``D3^2 D1``."""
    if not word:
        return ""
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        k = j - i
        parts.append(f"D{word[i]}" if k == 1 else f"D{word[i]}^{k}")
        i = j
    return " ".join(parts)


def format_poly(p: Poly) -> str:
    """Canonical one-line rendering of a normal-form polynomial."""
    if p.is_zero():
        return "0"
    keys = sorted(p.terms, key=lambda m: (sum(m), monomial_word(m)), reverse=True)
    pieces = []
    for m in keys:
        c = p.terms[m]
        word = monomial_word(m)
        neg = c < 0
        mag = -c if neg else c
        if not word:
            body = format_rational(mag)
        elif mag == 1:
            body = format_word(word)
        else:
            body = f"{format_rational(mag)} * {format_word(word)}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(pieces)
