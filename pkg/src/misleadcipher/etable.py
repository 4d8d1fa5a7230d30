"""Keyed substitution table: 40 entries of 15 significant digits.

Entry ``n`` is the leading digits of ``a**n / sum(a**i for i in 1..40)``.
Everything is done with integers so the sender and receiver always
derive the same table; a float can already disagree in the 15th digit.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import lru_cache

from .alphabet import SIZE
from .keyschedule import CODE_SCALE, CodeLike, NormalizedCode, base_value, normalize_code

ENTRY_DIGITS = 15


def _check_index(n: int) -> None:
    if not 1 <= n <= SIZE:
        raise ValueError(f"table index must be in 1..{SIZE}, got {n}")


def _power_sum(p: int, q: int) -> int:
    # sum of a**i scaled by q**SIZE, with a = p/q
    return sum(p**i * q ** (SIZE - i) for i in range(1, SIZE + 1))


def ratio(a: Decimal, n: int) -> Fraction:
    """Exact ``a**n / sum_{i=1..40} a**i``."""
    _check_index(n)
    p, q = a.as_integer_ratio()
    return Fraction(p**n * q ** (SIZE - n), _power_sum(p, q))


def leading_digits(num: int, den: int, count: int = ENTRY_DIGITS) -> str:
    """First ``count`` significant decimal digits of ``num/den``, truncated."""
    if num <= 0 or den <= 0:
        raise ValueError("leading_digits needs a positive fraction")
    shift = len(str(den)) - len(str(num)) + count
    while True:
        if shift >= 0:
            q = num * 10**shift // den
        else:
            q = num // (den * 10**-shift)
        if q >= 10**count:
            shift -= 1
        elif q < 10 ** (count - 1):
            shift += 1
        else:
            return str(q)


def e_entry(a: Decimal, n: int) -> str:
    r = ratio(a, n)
    return leading_digits(r.numerator, r.denominator)


@dataclass(frozen=True)
class ETable:
    entries: tuple[str, ...]
    base: Decimal

    def entry(self, n: int) -> str:
        """Entry for 1-based alphabet index ``n``."""
        _check_index(n)
        return self.entries[n - 1]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


@lru_cache(maxsize=256)
def _entries(code_value: int) -> tuple[str, ...]:
    p, q = CODE_SCALE + code_value, CODE_SCALE
    total = _power_sum(p, q)
    return tuple(
        leading_digits(p**n * q ** (SIZE - n), total) for n in range(1, SIZE + 1)
    )


def build_table(nc: NormalizedCode) -> ETable:
    return ETable(_entries(nc.value), base_value(nc))


def table_for_code(code: CodeLike) -> ETable:
    return build_table(normalize_code(code))
