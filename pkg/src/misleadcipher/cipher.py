"""Encryption and decryption.

Each plaintext symbol becomes a payload (a slice of its table entry,
length C_{2k-1}, starting at a random position 1..7) followed by C_{2k}
random misleading digits. Decryption walks the same schedule, pulls the
payloads back out and looks each one up by substring search.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

from .alphabet import index_to_symbol, symbol_to_index, validate_text
from .errors import AmbiguityError, CiphertextFormatError, TrailingDigitsWarning
from .etable import ENTRY_DIGITS, ETable, table_for_code
from .keyschedule import CodeLike, as_code, iter_schedule
from .rng import MAX_START, RandomSource


class Status(enum.Enum):
    OK = "ok"
    WRONG_CODE = "wrong_code"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class EncryptedGroup:
    """One payload plus its misleading digits, as produced by the encryptor."""

    symbol: str
    index: int
    start: int
    payload: str
    mislead: str


@dataclass(frozen=True)
class DecryptOutcome:
    status: Status
    plaintext: Optional[str]
    match_counts: tuple[int, ...]
    trailing_digits: int = 0

    @property
    def ok(self) -> bool:
        return self.status is Status.OK


def check_ciphertext(ct: str) -> str:
    for pos, ch in enumerate(ct, start=1):
        if ch not in "0123456789":
            raise CiphertextFormatError(f"non-digit {ch!r} at position {pos} of ciphertext")
    return ct


def encrypt_groups(
    plaintext: str, code: CodeLike, rng: RandomSource
) -> Iterator[EncryptedGroup]:
    validate_text(plaintext)
    table = table_for_code(code)
    schedule = iter_schedule(code)
    for symbol in plaintext:
        keep, mislead = next(schedule), next(schedule)
        index = symbol_to_index(symbol)
        start = rng.start_position()
        assert 1 <= start <= MAX_START and start + keep - 1 <= ENTRY_DIGITS
        payload = table.entry(index)[start - 1 : start - 1 + keep]
        noise = "".join(str(rng.mislead_digit()) for _ in range(mislead))
        yield EncryptedGroup(symbol, index, start, payload, noise)


def encrypt(plaintext: str, code: CodeLike, rng: RandomSource) -> str:
    return "".join(g.payload + g.mislead for g in encrypt_groups(plaintext, code, rng))


def _split(ct: str, code: CodeLike) -> tuple[list[str], int]:
    """Payloads plus the count of digits past the last complete group."""
    payloads = []
    pos = 0
    schedule = iter_schedule(code)
    while True:
        keep, mislead = next(schedule), next(schedule)
        if pos + keep > len(ct):
            return payloads, len(ct) - pos
        payloads.append(ct[pos : pos + keep])
        if pos + keep + mislead > len(ct):
            return payloads, len(ct) - pos - keep
        pos += keep + mislead


def split_payloads(ct: str, code: CodeLike) -> list[str]:
    """Cut the payloads out of ``ct`` following the code's schedule.

    A ciphertext produced by :func:`encrypt` ends exactly on a group
    boundary. Anything else (an unfinished payload, or a payload whose
    misleading digits are cut short) still decrypts, but raises a
    :class:`TrailingDigitsWarning` naming how many digits are left over.
    """
    payloads, trailing = _split(check_ciphertext(ct), code)
    if trailing:
        warnings.warn(
            f"{trailing} trailing ciphertext digits do not complete a group",
            TrailingDigitsWarning,
            stacklevel=2,
        )
    return payloads


def match_payload(payload: str, table: ETable) -> tuple[int, Optional[int]]:
    """Count table entries containing ``payload``; the last match wins the index."""
    if not payload.isdigit() or len(payload) > ENTRY_DIGITS:
        raise ValueError(f"payload must be 1..{ENTRY_DIGITS} digits, got {payload!r}")
    count, index = 0, None
    for n, entry in enumerate(table, start=1):
        if payload in entry:
            count += 1
            index = n
    return count, index


def decrypt(ct: str, code: CodeLike) -> DecryptOutcome:
    code = as_code(code)
    check_ciphertext(ct)
    table = table_for_code(code)
    payloads, trailing = _split(ct, code)
    matches = [match_payload(p, table) for p in payloads]
    counts = tuple(c for c, _ in matches)

    # zero matches outranks double matches
    if any(c == 0 for c in counts):
        return DecryptOutcome(Status.WRONG_CODE, None, counts, trailing)
    text = "".join(index_to_symbol(i) for _, i in matches)
    status = Status.AMBIGUOUS if any(c > 1 for c in counts) else Status.OK
    return DecryptOutcome(status, text, counts, trailing)


def encrypt_verified(
    plaintext: str, code: CodeLike, rng: RandomSource, max_retries: int = 5
) -> str:
    """Encrypt until the ciphertext decrypts unambiguously under ``code``."""
    if max_retries < 1:
        raise ValueError("max_retries must be at least 1")
    ct = ""
    for _ in range(max_retries):
        ct = encrypt(plaintext, code, rng)
        if decrypt(ct, code).ok:
            return ct
    raise AmbiguityError(
        f"no unambiguous ciphertext after {max_retries} attempts", ciphertext=ct
    )
