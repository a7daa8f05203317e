"""Data compression with helper and the compressor-family description-length
estimator.

Every codec is a pair (compress, decompress) over bit strings such that
(data, helper) -> (compress(data, helper), helper) is injective, i.e.
decompress(compress(data, helper), helper) == data for all inputs.  Any
such codec yields a work-value lower bound; the estimator takes the best
over a family and is always an upper bound on true description length.

Registered codecs:

  identity   output = input.  Baseline; 1-bit family header.
  lz78       dictionary parse into (index, next-bit) tokens; the helper
             pre-seeds the dictionary (the decompressor replays the same
             warm-up, so injectivity is preserved).
  xor        bitwise XOR with the helper prefix; an all-zero payload
             collapses to a run-length record of O(log n) bits.  This is
             the codec realization of "the helper is a copy of the data".
  bookmark8  demo codec: the 8-bit tiling of the helper compresses to a
             single bit, everything else is passed through with a 1-bit
             flag.  Exists to exercise the compressed branch of block
             encodings at desk scale.

Token format (lz78): gamma header for the data length, then tokens of
(index, next bit) with the index field exactly ceil(log2(D+1)) bits where
D is the current dictionary size; a trailing index-only token encodes a
final partial phrase.  The format is bit-exact and documented so other
implementations can reproduce it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .bitstring import (
    BitString,
    decode_self_delimiting,
    decode_uint,
    encode_self_delimiting,
    encode_uint,
)
from .errors import CompressorOverflow, MalformedCode


@dataclass(frozen=True)
class CompressionCodec:
    """Named compression-with-helper pair.

    id_bits is a short unique tag charged by the estimator so that every
    estimate is the length of a genuine self-contained description.
    fixed_code_width, when set, marks a codec whose output length is a
    known constant (no self-delimiting wrapper is needed around it).
    """

    name: str
    id_bits: str
    _compress: Callable[[str, str], str]
    _decompress: Callable[[str, str], str]
    fixed_code_width: int | None = None

    def compress(self, data: BitString, helper: BitString) -> BitString:
        return BitString(self._compress(str(data), str(helper)))

    def decompress(self, code: BitString, helper: BitString) -> BitString:
        return BitString(self._decompress(str(code), str(helper)))


# --- identity -----------------------------------------------------------------


def _identity_compress(data: str, helper: str) -> str:
    return data


def _identity_decompress(code: str, helper: str) -> str:
    return code


# --- LZ78 with dictionary warm-up ---------------------------------------------


def _lz78_warmup(helper: str) -> dict[str, int]:
    phrases: dict[str, int] = {}
    cur = ""
    for ch in helper:
        cur += ch
        if cur not in phrases:
            phrases[cur] = len(phrases) + 1
            cur = ""
    return phrases


def _index_width(dict_size: int) -> int:
    # indices run 0..dict_size; 0 is the empty phrase
    return dict_size.bit_length()


def _lz78_compress(data: str, helper: str) -> str:
    phrases = _lz78_warmup(helper)
    out = [str(encode_uint(len(data)))]
    cur = ""
    for ch in data:
        cand = cur + ch
        if cand in phrases:
            cur = cand
            continue
        w = _index_width(len(phrases))
        idx = phrases[cur] if cur else 0
        if w:
            out.append(format(idx, f"0{w}b"))
        out.append(ch)
        phrases[cand] = len(phrases) + 1
        cur = ""
    if cur:  # final partial phrase: index only, no next bit
        w = _index_width(len(phrases))
        idx = phrases[cur]
        if w:
            out.append(format(idx, f"0{w}b"))
    return "".join(out)


def _lz78_decompress(code: str, helper: str) -> str:
    bits = BitString(code)
    try:
        n, pos = decode_uint(bits)
    except MalformedCode:
        raise MalformedCode("lz78: bad length header")
    warm = _lz78_warmup(helper)
    table = [""] * (len(warm) + 1)
    for phrase, idx in warm.items():
        table[idx] = phrase
    text = str(bits)
    produced: list[str] = []
    produced_len = 0
    while produced_len < n:
        w = _index_width(len(table) - 1)
        if pos + w > len(text):
            raise MalformedCode("lz78: truncated token index")
        idx = int(text[pos : pos + w], 2) if w else 0
        pos += w
        if idx >= len(table):
            raise MalformedCode(f"lz78: index {idx} out of range")
        phrase = table[idx]
        remaining = n - produced_len
        if len(phrase) == remaining:
            produced.append(phrase)  # final partial phrase
            produced_len = n
            break
        if len(phrase) > remaining:
            raise MalformedCode("lz78: phrase overruns declared length")
        if pos >= len(text):
            raise MalformedCode("lz78: truncated token symbol")
        sym = text[pos]
        pos += 1
        produced.append(phrase + sym)
        produced_len += len(phrase) + 1
        table.append(phrase + sym)
    if pos != len(text):
        raise MalformedCode("lz78: trailing bits after token stream")
    return "".join(produced)


# --- XOR with helper prefix ---------------------------------------------------


def _xor_payload(data: str, helper: str) -> str:
    k = min(len(data), len(helper))
    head = "".join("1" if a != b else "0" for a, b in zip(data[:k], helper[:k]))
    return head + data[k:]


def _xor_compress(data: str, helper: str) -> str:
    payload = _xor_payload(data, helper)
    if "1" not in payload:
        # run-length branch: the whole payload is zeros
        return "0" + str(encode_uint(len(data)))
    return "1" + payload


def _xor_decompress(code: str, helper: str) -> str:
    if not code:
        raise MalformedCode("xor: empty code")
    if code[0] == "0":
        n, used = decode_uint(BitString(code), 1)
        if 1 + used != len(code):
            raise MalformedCode("xor: trailing bits after run-length record")
        payload = "0" * n
    else:
        payload = code[1:]
    return _xor_payload(payload, helper)  # xor is an involution


# --- bookmark8 ----------------------------------------------------------------

_BOOKMARK_LEN = 8


def _tile(helper: str, n: int) -> str:
    return (helper * (n // len(helper) + 1))[:n]


def _bookmark_compress(data: str, helper: str) -> str:
    if helper and data == _tile(helper, _BOOKMARK_LEN):
        return "0"
    return "1" + data


def _bookmark_decompress(code: str, helper: str) -> str:
    if code == "0":
        if not helper:
            raise MalformedCode("bookmark8: bookmark code with empty helper")
        return _tile(helper, _BOOKMARK_LEN)
    if not code or code[0] != "1":
        raise MalformedCode("bookmark8: bad mode bit")
    return code[1:]


# --- registry -----------------------------------------------------------------

IDENTITY = CompressionCodec("identity", "", _identity_compress, _identity_decompress)
LZ78 = CompressionCodec("lz78", "0", _lz78_compress, _lz78_decompress)
XOR = CompressionCodec("xor", "1", _xor_compress, _xor_decompress)
BOOKMARK8 = CompressionCodec("bookmark8", "00", _bookmark_compress, _bookmark_decompress)

REGISTRY: dict[str, CompressionCodec] = {
    c.name: c for c in (IDENTITY, LZ78, XOR, BOOKMARK8)
}


def get_codec(name: str) -> CompressionCodec:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown codec {name!r}; registered: {sorted(REGISTRY)}")


def default_family() -> tuple[CompressionCodec, ...]:
    return (IDENTITY, LZ78, XOR, BOOKMARK8)


def raw_block_codec(width: int) -> CompressionCodec:
    """Fixed-width pass-through codec (not registered): output == input.

    Useful as the degenerate block codec whose block encoding is the
    identity; rejects inputs of any other length.
    """

    def comp(data: str, helper: str) -> str:
        if len(data) != width:
            raise CompressorOverflow(f"raw block codec expects exactly {width} bits")
        return data

    def decomp(code: str, helper: str) -> str:
        if len(code) != width:
            raise MalformedCode(f"raw block code must be {width} bits")
        return code

    return CompressionCodec(f"raw{width}", "01", comp, decomp, fixed_code_width=width)


# --- public single-codec entry points ------------------------------------------


def lz78_compress(data: BitString, helper: BitString = BitString()) -> BitString:
    return LZ78.compress(data, helper)


def lz78_decompress(code: BitString, helper: BitString = BitString()) -> BitString:
    return LZ78.decompress(code, helper)


def xor_helper_compress(data: BitString, helper: BitString = BitString()) -> BitString:
    return XOR.compress(data, helper)


def xor_helper_decompress(code: BitString, helper: BitString = BitString()) -> BitString:
    return XOR.decompress(code, helper)


def identity_codec(data: BitString, helper: BitString = BitString()) -> BitString:
    return IDENTITY.compress(data, helper)


# --- description-length estimator ----------------------------------------------


@dataclass(frozen=True)
class ComplexityEstimate:
    """Upper estimate of conditional description length, in bits.

    bits = min over the family of len(self-delimited codec tag || code).
    This is an upper bound on the true value; it can never certify a
    lower bound.
    """

    bits: int
    codec_name: str
    is_upper_bound: bool = True


def estimate_complexity(
    data: BitString,
    helper: BitString = BitString(),
    family: Sequence[CompressionCodec] | None = None,
) -> ComplexityEstimate:
    codecs = tuple(family) if family is not None else default_family()
    if not any(c.name == IDENTITY.name for c in codecs):
        raise ValueError("estimator family must include the identity codec")
    best_bits = None
    best_name = ""
    for codec in codecs:
        cost = len(encode_self_delimiting(BitString(codec.id_bits))) + len(
            codec.compress(data, helper)
        )
        if best_bits is None or cost < best_bits:
            best_bits = cost
            best_name = codec.name
    return ComplexityEstimate(best_bits, best_name)


# --- block encoding with raw escape ---------------------------------------------


def encode_with_escape(
    codec: CompressionCodec,
    data: BitString,
    helper: BitString,
    budget: int | None = None,
    raw_escape: bool = True,
) -> BitString:
    """Encode `data` into at most budget+1 bits, mode bit first.

    budget defaults to len(data).  The compressed branch is
    "0" || self_delimited(codec output) and is taken when it fits the
    budget after the mode bit; otherwise the raw branch "1" || data is
    used (or CompressorOverflow is raised when the escape is disabled).
    Fixed-width codecs are emitted bare: their length is known, so
    neither mode bit nor wrapper is needed.

    The branch structure keeps data -> code injective for every codec
    that satisfies the round-trip contract.
    """
    n = len(data) if budget is None else budget
    if codec.fixed_code_width is not None:
        code = codec.compress(data, helper)
        if len(code) != codec.fixed_code_width:
            raise CompressorOverflow(
                f"{codec.name} emitted {len(code)} bits, declared {codec.fixed_code_width}"
            )
        if len(code) > n:
            raise CompressorOverflow(f"{codec.name} code exceeds budget {n}")
        return code
    wrapped = encode_self_delimiting(codec.compress(data, helper))
    if len(wrapped) <= n:
        return BitString("0") + wrapped
    if not raw_escape:
        raise CompressorOverflow(
            f"{codec.name} code needs {len(wrapped)} bits, budget {n}, raw escape off"
        )
    return BitString("1") + data


def decode_with_escape(
    codec: CompressionCodec,
    coded: BitString,
    data_len: int,
    helper: BitString,
) -> BitString:
    """Invert encode_with_escape; `coded` may carry zero padding at the end."""
    if codec.fixed_code_width is not None:
        return codec.decompress(coded[: codec.fixed_code_width], helper)
    if len(coded) == 0:
        raise MalformedCode("empty block code")
    if coded[0] == 1:
        if len(coded) < 1 + data_len:
            raise MalformedCode("raw block code cut short")
        return coded[1 : 1 + data_len]
    payload, _ = decode_self_delimiting(coded, 1)
    return codec.decompress(payload, helper)
