"""Construction of the Golay family and the explicit optimal codes.

The extended code is built from a fixed quadratic-residue style
generator in [I | A] form and then *verified*: dimension, minimum
distance, self-duality and 4-divisible weights are all recomputed at
build time, so a corrupt constant cannot go unnoticed.  Coordinate
order is part of the contract here; shortenings always remove leading
coordinates of the embedded generator's order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import f2
from .f2 import Code, LinearCode, Word

__all__ = [
    "GolayFamily",
    "build_extended_golay",
    "build_punctured23",
    "build_shortened",
    "golay_family",
    "build_optimal_cw",
    "build_prefix_replacement_code",
    "PREFIX_SPECS",
    "PREFIX_REPLACEMENTS",
]


class ConstructionError(RuntimeError):
    """A built code failed its own verification."""


# Generator polynomial of the length-23 quadratic-residue cyclic code,
# coefficient of x^k at bit k: x^11+x^10+x^6+x^5+x^4+x^2+1.
_QR23_GEN = 0b110001110101


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstructionError(msg)


@lru_cache(maxsize=None)
def build_extended_golay() -> LinearCode:
    """The (24,8) linear code of dimension 12, built and verified.

    Rows are the cyclic shifts x^i g(x) of the quadratic-residue
    generator, each extended by an overall parity bit at the last
    coordinate (coefficient of x^j sits at coordinate j).
    """
    rows = []
    for i in range(12):
        poly = _QR23_GEN << i
        bits23 = 0
        for j in range(23):
            if (poly >> j) & 1:
                bits23 |= 1 << (23 - 1 - j)
        parity = bits23.bit_count() & 1
        rows.append((bits23 << 1) | parity)
    code = LinearCode.from_span_ints(24, rows)
    _check(code.dimension == 12, "generator rows are dependent")
    words = code.word_ints()
    weights = {v.bit_count() for v in words}
    _check(weights == {0, 8, 12, 16, 24}, "weights are not {0,8,12,16,24}")
    _check(min(w for w in weights if w) == 8, "minimum distance is not 8")
    _check(f2.dual(code) == code, "code is not self-dual")
    return code


@lru_cache(maxsize=None)
def build_punctured23() -> LinearCode:
    """The (23,7) code of dimension 12: last coordinate deleted."""
    ext = build_extended_golay()
    code = LinearCode.from_span_ints(23, (v >> 1 for v in ext.basis_ints))
    _check(code.dimension == 12, "puncturing dropped the dimension")
    _check(min(v.bit_count() for v in code.word_ints() if v) == 7,
           "punctured minimum distance is not 7")
    return code


@lru_cache(maxsize=None)
def build_shortened(i: int) -> LinearCode:
    """The i-times shortened extended code (leading coordinates)."""
    if not 1 <= i <= 4:
        raise ValueError("shortening count must be in 1..4")
    ext = build_extended_golay()
    mask = ((1 << i) - 1) << (24 - i)
    kept = [v for v in ext.word_ints() if v & mask == 0]
    code = LinearCode.from_span_ints(24 - i, kept)
    _check(code.size() == len(kept) == 1 << (12 - i), "wrong shortened size")
    _check(min(v.bit_count() for v in code.word_ints() if v) == 8,
           "shortened minimum distance is not 8")
    return code


@dataclass(frozen=True)
class GolayFamily:
    extended24: LinearCode
    punctured23: LinearCode
    shortened: dict[int, LinearCode]


def golay_family() -> GolayFamily:
    return GolayFamily(
        extended24=build_extended_golay(),
        punctured23=build_punctured23(),
        shortened={i: build_shortened(i) for i in range(1, 5)},
    )


_CW_SIZES = {(24, 8, 12): 2576, (23, 8, 11): 1288, (22, 8, 11): 672, (22, 8, 10): 616}


@lru_cache(maxsize=None)
def build_optimal_cw(n: int, d: int, w: int) -> Code:
    """The known maximum constant-weight codes tied to the Golay family.

    (24,8,12) and (23,8,11) are weight slices; the two length-22 codes
    take the weight-12 words of the extended code with leading pattern
    10 (resp. 11) and delete those two coordinates.
    """
    if (n, d, w) not in _CW_SIZES:
        raise ValueError("unsupported (n,d,w) triple: %r" % ((n, d, w),))
    if (n, d, w) == (24, 8, 12):
        out = f2.slice_weight(build_extended_golay().to_code(), 12)
    elif (n, d, w) == (23, 8, 11):
        out = f2.slice_weight(build_punctured23().to_code(), 11)
    else:
        lead = 0b10 if w == 11 else 0b11
        sel = [v & ((1 << 22) - 1)
               for v in build_extended_golay().word_ints()
               if v.bit_count() == 12 and v >> 22 == lead]
        out = Code.from_ints(22, sel)
    _check(len(out) == _CW_SIZES[(n, d, w)], "wrong constant-weight code size")
    _check(all(v.bit_count() == w for v in out.ints), "weight is not constant")
    _check(f2.min_distance(out) >= d, "minimum distance below %d" % d)
    return out


# The eight leading-byte specifications and the four-bit strings that
# replace them.  Each spec selects a 32-word subcode of the extended
# code (after moving a weight-8 codeword onto the first 8 positions).
PREFIX_SPECS = [
    "00000000", "11000000", "10100000", "10010000",
    "10001000", "10000100", "10000010", "10000001",
]
PREFIX_REPLACEMENTS = [
    "0000", "1100", "1010", "1001", "0110", "0101", "0011", "1111",
]


@lru_cache(maxsize=None)
def _octad_first_golay() -> LinearCode:
    """Extended code with coordinates permuted so that some weight-8
    codeword occupies the first eight positions."""
    ext = build_extended_golay()
    oct8 = min(v for v in ext.word_ints() if v.bit_count() == 8)
    support = [i for i in range(24) if (oct8 >> (23 - i)) & 1]
    rest = [i for i in range(24) if not (oct8 >> (23 - i)) & 1]
    order = support + rest  # new position j holds old coordinate order[j]
    def permute(v: int) -> int:
        out = 0
        for j, old in enumerate(order):
            out |= ((v >> (23 - old)) & 1) << (23 - j)
        return out
    code = LinearCode.from_span_ints(24, (permute(v) for v in ext.basis_ints))
    _check((1 << 24) - (1 << 16) in set(code.word_ints()),
           "octad did not land on the first eight coordinates")
    return code


@lru_cache(maxsize=None)
def build_prefix_replacement_code() -> Code:
    """The (20,8)-code of size 256 with distances 10 and 14 present.

    Eight 32-word subcodes of the extended code are selected by their
    first-eight-bit patterns; the eight-bit prefix of each is then
    replaced by a four-bit string.
    """
    code = _octad_first_golay()
    by_prefix: dict[int, list[int]] = {}
    for v in code.word_ints():
        by_prefix.setdefault(v >> 16, []).append(v & 0xFFFF)
    out: list[int] = []
    for spec, repl in zip(PREFIX_SPECS, PREFIX_REPLACEMENTS):
        suffixes = by_prefix.get(int(spec, 2), [])
        _check(len(suffixes) == 32, "prefix %s does not select 32 words" % spec)
        sub = Code.from_ints(16, suffixes)
        _check(f2.min_distance(sub) >= 8, "subcode for prefix %s too close" % spec)
        r = int(repl, 2) << 16
        out.extend(r | s for s in suffixes)
    result = Code.from_ints(20, out)
    _check(len(result) == 256, "prefix replacement lost words")
    _check(f2.min_distance(result) >= 8, "prefix replacement broke the distance")
    return result
