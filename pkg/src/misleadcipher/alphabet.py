"""The 40-symbol message alphabet and text normalization."""

from __future__ import annotations

from .errors import AlphabetError

SYMBOLS = "?_.,ABCDEFGHIJKLMNOPQRSTUVWXYZ1234567890"
SIZE = len(SYMBOLS)

_INDEX = {ch: i for i, ch in enumerate(SYMBOLS, start=1)}


def symbol_to_index(ch: str) -> int:
    """Return the 1-based alphabet position of ``ch``."""
    try:
        return _INDEX[ch]
    except (KeyError, TypeError):
        raise AlphabetError([(1, ch)]) from None


def index_to_symbol(i: int) -> str:
    if not 1 <= i <= SIZE:
        raise ValueError(f"alphabet index must be in 1..{SIZE}, got {i}")
    return SYMBOLS[i - 1]


def invalid_positions(text: str) -> list[tuple[int, str]]:
    return [(pos, ch) for pos, ch in enumerate(text, start=1) if ch not in _INDEX]


def validate_text(text: str) -> str:
    """Return ``text`` unchanged if every character is in the alphabet."""
    bad = invalid_positions(text)
    if bad:
        raise AlphabetError(bad)
    return text


def normalize_text(raw: str, strict: bool = False) -> str:
    """Turn ``raw`` into alphabet text.

    Outside strict mode ASCII letters are uppercased and spaces become
    underscores. Nothing else is rewritten or dropped, so any remaining
    foreign character raises :class:`AlphabetError` listing all of them.
    """
    if not strict:
        raw = "".join(
            "_" if ch == " " else ch.upper() if ch.isascii() and ch.isalpha() else ch
            for ch in raw
        )
    return validate_text(raw)
