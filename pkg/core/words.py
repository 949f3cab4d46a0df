"""Word syntax: whitespace-separated tokens, inverse letters marked `^-1`."""

from __future__ import annotations

from core.errors import ParseError
from core.monoid import Monoid

INVERSE_SUFFIX = "^-1"


def parse_signed_word(monoid: Monoid, text: str, max_len: int | None = None) -> list[tuple[int, int]]:
    """Parse `s1 s3^-1` into signed letters [(0, 1), (2, -1)].

    A token standing for several letters (Klein `D`) is inverted as a whole.
    """
    letters: list[tuple[int, int]] = []
    for token in text.split():
        exponent = 1
        if token.endswith(INVERSE_SUFFIX):
            token, exponent = token[: -len(INVERSE_SUFFIX)], -1
        if not token:
            raise ParseError("dangling inverse marker")
        word = monoid.parse_token(token)
        if exponent < 0:
            word = tuple(reversed(word))
        letters.extend((letter, exponent) for letter in word)
    if max_len is not None and len(letters) > max_len:
        raise ParseError(f"word has {len(letters)} letters, more than the limit {max_len}")
    return letters


def parse_positive_word(monoid: Monoid, text: str, max_len: int | None = None) -> list[int]:
    letters = parse_signed_word(monoid, text, max_len)
    if any(exponent < 0 for _, exponent in letters):
        raise ParseError(f"inverse letter in positive word {text!r}")
    return [letter for letter, _ in letters]


def render_signed_word(monoid: Monoid, letters: list[tuple[int, int]]) -> str:
    if not letters:
        return "1"
    return " ".join(monoid.token(i) + (INVERSE_SUFFIX if e < 0 else "") for i, e in letters)
