"""Keyed digit-table cipher with randomized misleading digits."""

from .alphabet import SYMBOLS, index_to_symbol, normalize_text, symbol_to_index
from .cipher import (
    DecryptOutcome,
    Status,
    decrypt,
    encrypt,
    encrypt_verified,
    match_payload,
    split_payloads,
)
from .cracker import CrackOutcome, CrackRequest, CrackStatus, crack, crack_range
from .errors import (
    AlphabetError,
    AmbiguityError,
    CiphertextFormatError,
    CipherError,
    CodeFormatError,
    TrailingDigitsWarning,
)
from .etable import ETable, build_table, e_entry, ratio, table_for_code
from .keyschedule import (
    NormalizedCode,
    SecretCode,
    base_value,
    digit_sum,
    normalize_code,
    parse_code,
    seed_pair,
    slice_schedule,
)
from .rng import PhiloxSource, ScriptedSource

__version__ = "0.1.0"
