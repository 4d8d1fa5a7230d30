"""Command-line front end.

    misleadcipher encrypt  [--code-file F] [--in F] [--out F] [--seed N] [--verify] [--strict]
    misleadcipher decrypt  [--code-file F] [--in F] [--out F] [--force]
    misleadcipher crack    --start CODE --count N [--in F] [--out F] [--workers N]
    misleadcipher dump-table [--code-file F] [--out F]

Exit codes: 0 success, 2 ambiguous, 3 wrong code, 4 bad input, 5 code not found.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import files
from .cipher import Status, decrypt, encrypt, encrypt_verified
from .cracker import DEFAULT_UNIT_SIZE, CrackStatus, crack
from .errors import AmbiguityError, CipherError
from .etable import table_for_code
from .rng import make_source

EXIT_OK = 0
EXIT_AMBIGUOUS = 2
EXIT_WRONG_CODE = 3
EXIT_BAD_INPUT = 4
EXIT_NOT_FOUND = 5

VERIFY_RETRIES = 5

MSG_NO_ISSUES = "The printed message has no known issues."
MSG_WRONG_CODE = "An incorrect code was used for decoding."
MSG_RESEND = "The initial encoded message needs to be resent."


class InputError(Exception):
    """Unreadable or malformed input file."""


def _load(path: str, what: str, reader: Callable):
    try:
        return reader(path)
    except FileNotFoundError:
        raise InputError(f"{what} file {path!r} does not exist") from None
    except UnicodeDecodeError as exc:
        raise InputError(f"{what} file {path!r} is not ASCII: {exc.reason} at byte {exc.start}") from None
    except (OSError, CipherError) as exc:
        raise InputError(f"{what} file {path!r}: {exc}") from None


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="ascii")


def cmd_encrypt(args) -> int:
    code = _load(args.code_file, "code", files.read_code)
    message = _load(args.infile, "message", lambda p: files.read_message(p, strict=args.strict))
    rng = make_source(args.seed)
    try:
        if args.verify:
            ct = encrypt_verified(message, code, rng, max_retries=VERIFY_RETRIES)
        else:
            ct = encrypt(message, code, rng)
    except AmbiguityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_AMBIGUOUS
    _write(args.outfile, files.format_ciphertext(ct))
    return EXIT_OK


def cmd_decrypt(args) -> int:
    code = _load(args.code_file, "code", files.read_code)
    ct = _load(args.infile, "ciphertext", files.read_ciphertext)
    outcome = decrypt(ct, code)
    if outcome.trailing_digits:
        print(
            f"warning: ignored {outcome.trailing_digits} trailing digits that do not form a payload",
            file=sys.stderr,
        )
    print(f"status={outcome.status.value}")
    if outcome.status is Status.OK:
        _write(args.outfile, f"{outcome.plaintext}\n\n{MSG_NO_ISSUES}\n")
        return EXIT_OK
    if outcome.status is Status.WRONG_CODE:
        _write(args.outfile, MSG_WRONG_CODE + "\n")
        return EXIT_WRONG_CODE
    text = MSG_RESEND + "\n"
    if args.force:
        text = f"{outcome.plaintext}\n\n" + text
    _write(args.outfile, text)
    return EXIT_AMBIGUOUS


def _progress(done: int, total: int) -> None:
    print(f"\rtried {done}/{total}", end="", file=sys.stderr, flush=True)


def cmd_crack(args) -> int:
    ct = _load(args.infile, "ciphertext", files.read_ciphertext)
    try:
        outcome = crack(
            ct,
            args.start,
            args.count,
            workers=args.workers,
            unit_size=args.unit_size,
            progress=_progress if args.progress else None,
        )
    except (CipherError, ValueError) as exc:
        raise InputError(f"bad search range: {exc}") from None
    if args.progress:
        print(file=sys.stderr)

    status_line = f"status={outcome.status.value} tried={outcome.tried}"
    if outcome.status is CrackStatus.NOT_FOUND:
        lines = ["The secret code was not determined.", "Try a different range."]
        code = EXIT_NOT_FOUND
    elif outcome.status is CrackStatus.FOUND:
        lines = [
            outcome.plaintext,
            "",
            "The secret code was determined successfully.",
            MSG_NO_ISSUES,
            f"The secret code is: {outcome.code}",
        ]
        status_line += f" code={outcome.code}"
        code = EXIT_OK
    else:
        lines = [
            outcome.plaintext,
            "",
            "The secret code was determined.",
            "However, the printed message might have some issues.",
            f"The hypothetical secret code is: {outcome.code}",
        ]
        status_line += f" code={outcome.code}"
        code = EXIT_AMBIGUOUS
    _write(args.outfile, "\n".join(lines + [status_line]) + "\n")
    print(status_line)
    return code


def cmd_dump_table(args) -> int:
    code = _load(args.code_file, "code", files.read_code)
    table = table_for_code(code)
    _write(args.outfile, "".join(f"{n}\t{e}\n" for n, e in enumerate(table, start=1)))
    return EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _unsigned(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="misleadcipher", description="Digit-table cipher with misleading digits.")
    sub = parser.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encrypt", help="encrypt a one-line message")
    enc.add_argument("--code-file", default="Code.txt")
    enc.add_argument("--in", dest="infile", default="Initial_Message.txt")
    enc.add_argument("--out", dest="outfile", default="Final_Coded_Message.txt")
    enc.add_argument("--seed", type=_unsigned, help="seed for reproducible output")
    enc.add_argument("--verify", action="store_true", help="re-encrypt until the result decrypts unambiguously")
    enc.add_argument("--strict", action="store_true", help="reject input that is not already alphabet text")
    enc.set_defaults(func=cmd_encrypt)

    dec = sub.add_parser("decrypt", help="decrypt a ciphertext file")
    dec.add_argument("--code-file", default="Code.txt")
    dec.add_argument("--in", dest="infile", default="Initial_Coded_Message.txt")
    dec.add_argument("--out", dest="outfile", default="Final_Decoded_Message.txt")
    dec.add_argument("--force", action="store_true", help="write the best-effort text of an ambiguous decryption")
    dec.set_defaults(func=cmd_decrypt)

    crk = sub.add_parser("crack", help="search a range of codes for one that decrypts")
    crk.add_argument("--in", dest="infile", default="Initial_Coded_Message.txt")
    crk.add_argument("--out", dest="outfile", default="Final_Decoded_Message.txt")
    crk.add_argument("--start", required=True, help="first candidate code (10 digits)")
    crk.add_argument("--count", type=_positive, required=True, help="number of candidates")
    crk.add_argument("--workers", type=_positive, default=1)
    crk.add_argument("--unit-size", type=_positive, default=DEFAULT_UNIT_SIZE)
    crk.add_argument("--progress", action="store_true")
    crk.set_defaults(func=cmd_crack)

    dump = sub.add_parser("dump-table", help="print the 40-entry table for a code")
    dump.add_argument("--code-file", default="Code.txt")
    dump.add_argument("--out", dest="outfile", default="-")
    dump.set_defaults(func=cmd_dump_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
