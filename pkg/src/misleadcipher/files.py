"""Readers and writers for the code, message and ciphertext files."""

from __future__ import annotations

from pathlib import Path

from .alphabet import normalize_text
from .cipher import check_ciphertext
from .errors import AlphabetError
from .keyschedule import SecretCode, parse_code

WRAP_COLUMNS = 96


def format_ciphertext(ct: str, width: int = WRAP_COLUMNS) -> str:
    lines = [ct[i : i + width] for i in range(0, len(ct), width)]
    return "\n".join(lines) + "\n"


def parse_ciphertext(text: str) -> str:
    """Strip all whitespace, then require pure digits."""
    return check_ciphertext("".join(text.split()))


def read_code(path: str | Path) -> SecretCode:
    return parse_code(Path(path).read_text(encoding="ascii"))


def read_ciphertext(path: str | Path) -> str:
    return parse_ciphertext(Path(path).read_text(encoding="ascii"))


def write_ciphertext(path: str | Path, ct: str) -> None:
    Path(path).write_text(format_ciphertext(ct), encoding="ascii")


def parse_message(text: str, strict: bool = False) -> str:
    """Message text from a file's contents.

    Only the first line is the message. Extra lines are an error in strict
    mode and are otherwise joined onto it with ``_``.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if strict and len(lines) > 1:
        raise AlphabetError([(len(lines[0]) + 1, "\n")])
    return normalize_text("_".join(lines), strict=strict)


def read_message(path: str | Path, strict: bool = False) -> str:
    return parse_message(Path(path).read_text(encoding="ascii"), strict=strict)
