"""Secret code handling and the slice schedule.

The schedule is a Fibonacci-like sequence reduced mod 10 and folded into
``[5, 9]``. Odd terms give payload lengths, even terms the number of
misleading digits that follow each payload.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterator, Union

from .errors import CodeFormatError

CODE_LENGTH = 10
CODE_SCALE = 10**CODE_LENGTH
MAX_CODE = CODE_SCALE - 1


@dataclass(frozen=True)
class SecretCode:
    """Ten-digit key; kept as a string so leading zeros survive."""

    digits: str

    def __post_init__(self):
        if len(self.digits) != CODE_LENGTH:
            raise CodeFormatError(
                f"secret code must have {CODE_LENGTH} digits, got {len(self.digits)}"
            )
        for pos, ch in enumerate(self.digits, start=1):
            if ch not in "0123456789":
                raise CodeFormatError(f"non-digit {ch!r} at position {pos} of secret code")

    @property
    def value(self) -> int:
        return int(self.digits)

    @classmethod
    def from_int(cls, value: int) -> "SecretCode":
        if not 0 <= value <= MAX_CODE:
            raise CodeFormatError(f"code value {value} does not fit in {CODE_LENGTH} digits")
        return cls(f"{value:0{CODE_LENGTH}d}")

    def __str__(self) -> str:
        return self.digits


@dataclass(frozen=True)
class NormalizedCode:
    """Code whose integer value lies in [1000000000, 9000000000]."""

    digits: str

    def __post_init__(self):
        if len(self.digits) != CODE_LENGTH or not self.digits.isdigit() or self.digits[0] == "0":
            raise CodeFormatError(f"not a normalized code: {self.digits!r}")
        if not 10**9 <= int(self.digits) <= 9 * 10**9:
            raise CodeFormatError(f"normalized code out of range: {self.digits}")

    @property
    def value(self) -> int:
        return int(self.digits)


CodeLike = Union[SecretCode, str]


def as_code(code: CodeLike) -> SecretCode:
    return code if isinstance(code, SecretCode) else parse_code(code)


def parse_code(raw: str) -> SecretCode:
    """Parse the contents of a code file (surrounding whitespace is ignored)."""
    return SecretCode(raw.strip())


def normalize_code(code: CodeLike) -> NormalizedCode:
    digits = code.digits if isinstance(code, (SecretCode, NormalizedCode)) else parse_code(code).digits
    head, rest = digits[0], digits[1:]
    if head == "0":
        head = "1"
    elif head == "9" and rest.strip("0"):
        head = "8"
    return NormalizedCode(head + rest)


def base_value(nc: NormalizedCode) -> Decimal:
    """Exact ``1 + code / 10**10`` with ten fractional digits."""
    return Decimal(CODE_SCALE + nc.value).scaleb(-CODE_LENGTH)


def digit_sum(code: CodeLike) -> int:
    """Sum of the digits of the original (not normalized) code."""
    return sum(int(ch) for ch in as_code(code).digits)


def seed_pair(s: int) -> tuple[int, int]:
    if not 0 <= s <= 9 * CODE_LENGTH:
        raise ValueError(f"digit sum out of range: {s}")
    return (s % 100) // 10, s % 10


def fold(b: int) -> int:
    """Map a sequence digit onto a slice length in [5, 9]."""
    return b if b >= 5 else 9 - b


def iter_b_sequence(b1: int, b2: int) -> Iterator[int]:
    while True:
        yield b1
        b1, b2 = b2, (b1 + b2) % 10


def iter_schedule(code: CodeLike) -> Iterator[int]:
    """Unbounded C_1, C_2, ... for ``code``."""
    b1, b2 = seed_pair(digit_sum(code))
    return map(fold, iter_b_sequence(b1, b2))


def slice_schedule(code: CodeLike, count: int) -> list[int]:
    if count < 0:
        raise ValueError("count must be non-negative")
    return list(itertools.islice(iter_schedule(code), count))
