"""Exception types raised by the cipher package."""

from __future__ import annotations


class CipherError(Exception):
    """Base class for every error raised by misleadcipher."""


class AlphabetError(CipherError, ValueError):
    """Text contains characters outside the 40-symbol alphabet.

    ``positions`` holds ``(position, character)`` pairs, 1-based.
    """

    def __init__(self, positions: list[tuple[int, str]]):
        self.positions = list(positions)
        shown = ", ".join(f"{ch!r} at position {pos}" for pos, ch in self.positions)
        super().__init__(f"characters outside the alphabet: {shown}")


class CodeFormatError(CipherError, ValueError):
    """A secret code is not exactly ten ASCII digits."""


class CiphertextFormatError(CipherError, ValueError):
    """Ciphertext contains something other than decimal digits."""


class AmbiguityError(CipherError):
    """Every verified encryption attempt self-decrypted as ambiguous."""

    def __init__(self, message: str, ciphertext: str):
        super().__init__(message)
        self.ciphertext = ciphertext


class TrailingDigitsWarning(UserWarning):
    """Ciphertext ends with digits that do not complete a payload."""
