import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from misleadcipher.alphabet import SYMBOLS
from misleadcipher.cipher import (
    Status,
    decrypt,
    encrypt,
    encrypt_groups,
    encrypt_verified,
    match_payload,
    split_payloads,
)
from misleadcipher.errors import (
    AlphabetError,
    AmbiguityError,
    CiphertextFormatError,
    TrailingDigitsWarning,
)
from misleadcipher.etable import table_for_code
from misleadcipher.keyschedule import slice_schedule
from misleadcipher.rng import PhiloxSource, ScriptedSource

from oracles import reference_schedule

codes = st.integers(0, 10**10 - 1).map(lambda v: f"{v:010d}")
messages = st.text(alphabet=SYMBOLS, max_size=60)


def test_walkthrough_o_b(code):
    rng = ScriptedSource([3, 5, 7], "95916" "33613" "3427975")
    assert encrypt("O_B", code, rng) == "7981295916159844612336136802423427975"


def test_walkthrough_groups(code):
    rng = ScriptedSource([3, 5, 7], "95916" "33613" "3427975")
    groups = list(encrypt_groups("O_B", code, rng))
    assert [g.payload for g in groups] == ["79812", "159844612", "680242"]
    assert [g.index for g in groups] == [19, 2, 6]


def test_empty_plaintext(code):
    assert encrypt("", code, PhiloxSource(1)) == ""
    out = decrypt("", code)
    assert out.status is Status.OK and out.plaintext == ""


def test_encrypt_rejects_bad_plaintext(code):
    with pytest.raises(AlphabetError):
        encrypt("hello", code, PhiloxSource(1))


def test_reference_length(code, anthem):
    assert len(anthem) == 57
    assert len(encrypt(anthem, code, PhiloxSource(0))) == 800
    assert sum(reference_schedule(code, 114)) == 800


def test_split_reference_payloads(code, reference_ct):
    payloads = split_payloads(reference_ct, code)
    assert payloads[3:6] == ["245141846", "7077049", "88836061"]
    assert len(payloads) == 57


def test_split_empty(code):
    assert split_payloads("", code) == []


def test_split_partial_group_warns():
    # schedule 5,5,... for code 0135792468
    with pytest.warns(TrailingDigitsWarning, match="4 trailing"):
        assert split_payloads("123456789", "0135792468") == ["12345"]


def test_split_unfinished_payload_warns(code):
    # 5 + 5 complete, then 3 digits of a 9-digit payload
    with pytest.warns(TrailingDigitsWarning, match="3 trailing"):
        assert split_payloads("1234567890123", code) == ["12345"]


def test_split_exact_boundary_is_silent(code):
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert split_payloads("1234567890", code) == ["12345"]


def test_split_rejects_non_digits(code):
    with pytest.raises(CiphertextFormatError):
        split_payloads("12a45", code)


@pytest.mark.parametrize("payload, expected", [("245141846", (1, 9)), ("7077049", (1, 5)), ("88836061", (1, 25))])
def test_match_payload(code, payload, expected):
    assert match_payload(payload, table_for_code(code)) == expected


def test_match_whole_entry(code):
    table = table_for_code(code)
    count, index = match_payload(table.entry(12), table)
    assert count >= 1 and index == 12


def test_match_none(code):
    table = table_for_code(code)
    missing = next(
        f"{v:05d}" for v in range(10**5) if not any(f"{v:05d}" in e for e in table)
    )
    assert match_payload(missing, table) == (0, None)


def test_match_last_index_wins(code):
    table = table_for_code(code)
    # "1" occurs in many entries; the highest-numbered one should be reported
    hits = [n for n, e in enumerate(table, start=1) if "1" in e]
    assert match_payload("1", table) == (len(hits), hits[-1])


def test_decrypt_reference(code, reference_ct, anthem):
    out = decrypt(reference_ct, code)
    assert out.status is Status.OK
    assert out.plaintext == anthem
    assert out.match_counts == (1,) * 57
    assert out.trailing_digits == 0


def test_decrypt_wrong_code(reference_ct):
    out = decrypt(reference_ct, "1234567890")
    assert out.status is Status.WRONG_CODE
    assert out.plaintext is None


def test_decrypt_rejects_non_digits(code):
    with pytest.raises(CiphertextFormatError):
        decrypt("12 34", code)


def shared_window():
    """First (code, window) whose table has a C_1-digit window in two entries."""
    for v in range(0, 10**10, 7919 * 1000003):
        code = f"{v:010d}"
        size = slice_schedule(code, 1)[0]
        owner = {}
        for n, entry in enumerate(table_for_code(code), start=1):
            for i in range(16 - size):
                w = entry[i : i + size]
                if owner.setdefault(w, n) != n:
                    return code, w
    raise AssertionError("no code with a shared window found")


def test_ambiguous_status_and_precedence():
    code, window = shared_window()
    c1, c2, c3, c4 = slice_schedule(code, 4)
    ct = window + "0" * c2
    out = decrypt(ct, code)
    assert out.status is Status.AMBIGUOUS
    assert out.match_counts[0] >= 2
    assert out.plaintext is not None and len(out.plaintext) == 1

    table = table_for_code(code)
    missing = next(
        s for s in (f"{v:0{c3}d}" for v in range(10**c3)) if not any(s in e for e in table)
    )
    out = decrypt(ct + missing + "0" * c4, code)
    assert out.status is Status.WRONG_CODE
    assert out.match_counts[0] >= 2 and out.match_counts[1] == 0


@settings(max_examples=200, deadline=None)
@given(messages, codes, st.integers(0, 2**32))
def test_roundtrip(m, c, seed):
    ct = encrypt(m, c, PhiloxSource(seed))
    out = decrypt(ct, c)
    assert out.status is not Status.WRONG_CODE
    if out.status is Status.OK:
        assert out.plaintext == m
    assert len(ct) == sum(reference_schedule(c, 2 * len(m)))


@settings(max_examples=100, deadline=None)
@given(messages, codes, st.integers(0, 2**32))
def test_payload_containment(m, c, seed):
    table = table_for_code(c)
    for g in encrypt_groups(m, c, PhiloxSource(seed)):
        assert g.payload in table.entry(g.index)
        assert 1 <= g.start <= 7
        assert set(g.mislead) <= set("0123456789")


@settings(max_examples=50, deadline=None)
@given(messages, codes, st.integers(0, 2**32))
def test_seed_determinism(m, c, seed):
    assert encrypt(m, c, PhiloxSource(seed)) == encrypt(m, c, PhiloxSource(seed))


def test_different_seeds_differ(code, anthem):
    cts = {encrypt(anthem, code, PhiloxSource(s)) for s in range(100)}
    assert len(cts) == 100


def test_encrypt_verified(code, anthem):
    ct = encrypt_verified(anthem, code, PhiloxSource(3), max_retries=5)
    assert decrypt(ct, code).plaintext == anthem


def test_encrypt_verified_empty(code):
    assert encrypt_verified("", code, PhiloxSource(3)) == ""


def test_encrypt_verified_zero_retries(code):
    with pytest.raises(ValueError):
        encrypt_verified("A", code, PhiloxSource(3), max_retries=0)


def test_encrypt_verified_exhausts(monkeypatch, code):
    import misleadcipher.cipher as cipher_mod

    real = cipher_mod.decrypt

    def always_ambiguous(ct, c):
        out = real(ct, c)
        return type(out)(Status.AMBIGUOUS, out.plaintext, out.match_counts)

    monkeypatch.setattr(cipher_mod, "decrypt", always_ambiguous)
    with pytest.raises(AmbiguityError) as info:
        encrypt_verified("AB", code, PhiloxSource(3), max_retries=2)
    assert real(info.value.ciphertext, code).plaintext == "AB"
