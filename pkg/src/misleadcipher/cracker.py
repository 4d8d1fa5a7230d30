"""Brute-force key search over a contiguous range of codes.

The range is cut into work units that can run in worker processes. The
answer is always the lowest candidate that does not decrypt as a wrong
code, so sequential and parallel runs agree.
"""

from __future__ import annotations

import enum
import logging
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Callable, Optional

from .cipher import Status, check_ciphertext, decrypt
from .errors import CodeFormatError
from .keyschedule import MAX_CODE, CodeLike, SecretCode, as_code

log = logging.getLogger(__name__)

DEFAULT_UNIT_SIZE = 100

ProgressCallback = Callable[[int, int], None]


class CrackStatus(enum.Enum):
    FOUND = "found"
    FOUND_WITH_ISSUES = "found_with_issues"
    NOT_FOUND = "not_found"


@dataclass(frozen=True)
class CrackRequest:
    ciphertext: str
    start: SecretCode
    count: int

    def __post_init__(self):
        check_ciphertext(self.ciphertext)
        if self.count < 1:
            raise ValueError("count must be positive")
        if self.start.value + self.count - 1 > MAX_CODE:
            raise CodeFormatError("search range runs past 9999999999")


@dataclass(frozen=True)
class CrackOutcome:
    status: CrackStatus
    code: Optional[SecretCode]
    plaintext: Optional[str]
    tried: int


@dataclass(frozen=True)
class _UnitResult:
    start: int
    tried: int
    hit: Optional[int] = None
    status: Optional[Status] = None
    plaintext: Optional[str] = None


def _scan_unit(ciphertext: str, start: int, count: int) -> _UnitResult:
    for offset in range(count):
        candidate = start + offset
        outcome = decrypt(ciphertext, SecretCode.from_int(candidate))
        if outcome.status is not Status.WRONG_CODE:
            return _UnitResult(start, offset + 1, candidate, outcome.status, outcome.plaintext)
    return _UnitResult(start, count)


def _units(start: int, count: int, size: int) -> list[tuple[int, int]]:
    return [(s, min(size, start + count - s)) for s in range(start, start + count, size)]


def _outcome(best: Optional[_UnitResult], tried: int) -> CrackOutcome:
    if best is None:
        return CrackOutcome(CrackStatus.NOT_FOUND, None, None, tried)
    status = CrackStatus.FOUND if best.status is Status.OK else CrackStatus.FOUND_WITH_ISSUES
    return CrackOutcome(status, SecretCode.from_int(best.hit), best.plaintext, tried)


def crack_range(
    req: CrackRequest,
    workers: int = 1,
    unit_size: int = DEFAULT_UNIT_SIZE,
    progress: Optional[ProgressCallback] = None,
) -> CrackOutcome:
    """Try every code in ``[req.start, req.start + req.count)``.

    With ``workers > 1`` units run in a process pool. Units lying wholly
    above the best hit seen so far are cancelled if not yet started, which
    cannot change the answer. ``tried`` counts candidates actually decrypted
    and may differ between runs in parallel mode.
    """
    if unit_size < 1:
        raise ValueError("unit_size must be positive")
    units = _units(req.start.value, req.count, unit_size)
    if workers <= 1:
        return _crack_sequential(req, units, progress)
    return _crack_parallel(req, units, workers, progress)


def _crack_sequential(req, units, progress) -> CrackOutcome:
    tried = 0
    for start, count in units:
        res = _scan_unit(req.ciphertext, start, count)
        tried += res.tried
        if progress:
            progress(tried, req.count)
        if res.hit is not None:
            return _outcome(res, tried)
    return _outcome(None, tried)


def _crack_parallel(req, units, workers, progress) -> CrackOutcome:
    tried = 0
    best: Optional[_UnitResult] = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        pending = {pool.submit(_scan_unit, req.ciphertext, s, c): s for s, c in units}
        while pending:
            done, _ = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                pending.pop(fut)
                res = fut.result()
                tried += res.tried
                if res.hit is not None and (best is None or res.hit < best.hit):
                    best = res
                if progress:
                    progress(tried, req.count)
            if best is not None:
                for fut, s in list(pending.items()):
                    if s > best.hit and fut.cancel():
                        pending.pop(fut)
    log.debug("parallel crack evaluated %d of %d candidates", tried, req.count)
    return _outcome(best, tried)


def crack(
    ciphertext: str,
    start: CodeLike,
    count: int,
    workers: int = 1,
    unit_size: int = DEFAULT_UNIT_SIZE,
    progress: Optional[ProgressCallback] = None,
) -> CrackOutcome:
    req = CrackRequest(ciphertext, as_code(start), count)
    return crack_range(req, workers=workers, unit_size=unit_size, progress=progress)
