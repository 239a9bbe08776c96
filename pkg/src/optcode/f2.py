"""Exact algebra for binary words and codes.

Words are fixed-length bit vectors over F2, packed into Python ints with
coordinate 0 at the most significant position.  With that packing,
integer order coincides with lexicographic order of the bit strings, so
sorting and "lexicographically smallest" tie-breaks are plain int
comparisons.  Everything here is exact: distance distributions are
`Fraction`s, never floats.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Word",
    "Code",
    "LinearCode",
    "DistanceDistribution",
    "WeightEnumerator",
    "weight",
    "hamming_distance",
    "intersection_weight",
    "parity_distance_check",
    "min_distance",
    "distance_distribution",
    "weight_enumerator",
    "span",
    "dual",
    "self_orthogonality",
    "greedy_orthogonal_subcode",
    "shorten",
    "puncture",
    "translate",
    "slice_weight",
    "extend_with_bit",
    "complement_code",
    "read_code",
    "write_code",
]


class Word:
    """A length-n bit vector over F2.

    `bits` holds coordinate i at bit position n-1-i.  Lengths of operands
    must match; mixing lengths raises ValueError.
    """

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int):
        if n <= 0:
            raise ValueError("word length must be positive")
        if not 0 <= bits < (1 << n):
            raise ValueError("bits out of range for length %d" % n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *a):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_string(cls, s: str) -> "Word":
        s = s.strip()
        if not s or any(c not in "01" for c in s):
            raise ValueError("word string must be nonempty over {0,1}: %r" % s)
        return cls(len(s), int(s, 2))

    @classmethod
    def from_support(cls, n: int, positions: Iterable[int]) -> "Word":
        bits = 0
        for i in positions:
            if not 0 <= i < n:
                raise ValueError("position %d out of range" % i)
            bits |= 1 << (n - 1 - i)
        return cls(n, bits)

    @classmethod
    def zero(cls, n: int) -> "Word":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "Word":
        return cls(n, (1 << n) - 1)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise ValueError("position %d out of range" % i)
        return (self.bits >> (self.n - 1 - i)) & 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.bit(i))

    def weight(self) -> int:
        return self.bits.bit_count()

    def complement(self) -> "Word":
        return Word(self.n, self.bits ^ ((1 << self.n) - 1))

    def _check(self, other: "Word") -> None:
        if not isinstance(other, Word):
            raise TypeError("expected Word")
        if other.n != self.n:
            raise ValueError("length mismatch: %d vs %d" % (self.n, other.n))

    def __xor__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.n, self.bits ^ other.bits)

    __add__ = __xor__  # F2 addition

    def __and__(self, other: "Word") -> "Word":
        self._check(other)
        return Word(self.n, self.bits & other.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and other.n == self.n and other.bits == self.bits

    def __hash__(self):
        return hash((self.n, self.bits))

    def __lt__(self, other: "Word") -> bool:
        self._check(other)
        return self.bits < other.bits

    def __le__(self, other: "Word") -> bool:
        self._check(other)
        return self.bits <= other.bits

    def __str__(self) -> str:
        return format(self.bits, "0%db" % self.n)

    def __repr__(self) -> str:
        return "Word(%s)" % str(self)


class Code:
    """A finite set of distinct equal-length words.

    Words are deduplicated on construction and kept sorted; iteration
    order is ascending lexicographic.
    """

    __slots__ = ("n", "_ints")

    def __init__(self, words: Iterable[Word]):
        words = list(words)
        if not words:
            raise ValueError("code must contain at least one word")
        n = words[0].n
        for w in words:
            if w.n != n:
                raise ValueError("all words must share one length")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_ints", tuple(sorted({w.bits for w in words})))

    def __setattr__(self, *a):
        raise AttributeError("Code is immutable")

    @classmethod
    def from_ints(cls, n: int, ints: Iterable[int]) -> "Code":
        c = cls.__new__(cls)
        vals = sorted(set(ints))
        if not vals:
            raise ValueError("code must contain at least one word")
        if vals[0] < 0 or vals[-1] >= (1 << n):
            raise ValueError("word value out of range for length %d" % n)
        object.__setattr__(c, "n", n)
        object.__setattr__(c, "_ints", tuple(vals))
        return c

    @classmethod
    def from_strings(cls, strings: Iterable[str]) -> "Code":
        return cls([Word.from_string(s) for s in strings])

    @property
    def ints(self) -> tuple[int, ...]:
        return self._ints

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(Word(self.n, v) for v in self._ints)

    def __len__(self) -> int:
        return len(self._ints)

    def __iter__(self) -> Iterator[Word]:
        n = self.n
        return (Word(n, v) for v in self._ints)

    def __contains__(self, w: Word) -> bool:
        return w.n == self.n and self.contains_int(w.bits)

    def contains_int(self, v: int) -> bool:
        lo, hi = 0, len(self._ints)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._ints[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self._ints) and self._ints[lo] == v

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Code) and other.n == self.n and other._ints == self._ints
        )

    def __hash__(self):
        return hash((self.n, self._ints))

    def __repr__(self) -> str:
        return "Code(n=%d, size=%d)" % (self.n, len(self._ints))


def _rref(n: int, vectors: Iterable[int]) -> list[int]:
    """Reduced row echelon form over F2.

    Rows are returned sorted by pivot coordinate (pivot = highest set
    bit = lowest coordinate index), fully reduced, so the result is a
    canonical basis of the span.
    """
    piv: dict[int, int] = {}
    for v in vectors:
        while v:
            p = v.bit_length() - 1
            if p in piv:
                v ^= piv[p]
            else:
                for q in piv:
                    if (piv[q] >> p) & 1:
                        piv[q] ^= v
                piv[p] = v
                break
    return [piv[p] for p in sorted(piv, reverse=True)]


class LinearCode:
    """A binary linear code given by a canonical (RREF) basis."""

    __slots__ = ("n", "_basis")

    def __init__(self, n: int, basis: Iterable[Word]):
        rows = []
        for w in basis:
            if w.n != n:
                raise ValueError("basis word length mismatch")
            rows.append(w.bits)
        reduced = _rref(n, rows)
        if len(reduced) != len(rows):
            raise ValueError("basis rows are linearly dependent")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_basis", tuple(reduced))

    def __setattr__(self, *a):
        raise AttributeError("LinearCode is immutable")

    @classmethod
    def from_span_ints(cls, n: int, vectors: Iterable[int]) -> "LinearCode":
        lc = cls.__new__(cls)
        object.__setattr__(lc, "n", n)
        object.__setattr__(lc, "_basis", tuple(_rref(n, vectors)))
        return lc

    @property
    def basis(self) -> tuple[Word, ...]:
        return tuple(Word(self.n, v) for v in self._basis)

    @property
    def basis_ints(self) -> tuple[int, ...]:
        return self._basis

    @property
    def dimension(self) -> int:
        return len(self._basis)

    def size(self) -> int:
        return 1 << len(self._basis)

    def word_ints(self) -> list[int]:
        """All 2^dim codewords, via Gray-code accumulation."""
        k = len(self._basis)
        out = [0] * (1 << k)
        cur = 0
        for i in range(1, 1 << k):
            cur ^= self._basis[(i & -i).bit_length() - 1]
            out[i] = cur
        return out

    def reduce(self, v: int) -> int:
        """Reduce an int word modulo the basis; 0 iff v is a codeword."""
        for b in self._basis:
            p = b.bit_length() - 1
            if (v >> p) & 1:
                v ^= b
        return v

    def __contains__(self, w: Word) -> bool:
        return w.n == self.n and self.reduce(w.bits) == 0

    def contains_int(self, v: int) -> bool:
        return self.reduce(v) == 0

    def to_code(self) -> Code:
        return Code.from_ints(self.n, self.word_ints())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.n == self.n
            and other._basis == self._basis
        )

    def __hash__(self):
        return hash((self.n, self._basis))

    def __repr__(self) -> str:
        return "LinearCode(n=%d, dim=%d)" % (self.n, self.dimension)


class DistanceDistribution:
    """The exact (a_i) sequence of a code.

    a_i = |C|^-1 * #{(u,v) in C x C : d(u,v) = i}, stored as Fractions.
    """

    __slots__ = ("size", "a")

    def __init__(self, size: int, a: dict[int, Fraction]):
        if size < 1:
            raise ValueError("code size must be >= 1")
        clean = {i: Fraction(v) for i, v in a.items() if v != 0}
        if clean.get(0) != 1:
            raise ValueError("a_0 must equal 1")
        total = sum(clean.values())
        if total != size:
            raise ValueError("sum of a_i must equal |C| (%s != %d)" % (total, size))
        step = Fraction(2, size)
        for i, v in clean.items():
            if v < 0:
                raise ValueError("a_%d negative" % i)
            if i >= 1 and (v / step).denominator != 1:
                raise ValueError("a_%d = %s is not a multiple of 2/|C|" % (i, v))
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "a", dict(sorted(clean.items())))

    def __setattr__(self, *a):
        raise AttributeError("DistanceDistribution is immutable")

    def __getitem__(self, i: int) -> Fraction:
        return self.a.get(i, Fraction(0))

    def support(self) -> tuple[int, ...]:
        return tuple(self.a)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DistanceDistribution)
            and other.size == self.size
            and other.a == self.a
        )

    def __repr__(self) -> str:
        inner = ", ".join("a_%d=%s" % (i, v) for i, v in self.a.items())
        return "DistanceDistribution(size=%d, %s)" % (self.size, inner)


class WeightEnumerator:
    """Counts A_i of codewords per weight."""

    __slots__ = ("A",)

    def __init__(self, counts: dict[int, int]):
        clean = {i: int(v) for i, v in counts.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("weight counts must be nonnegative")
        object.__setattr__(self, "A", dict(sorted(clean.items())))

    def __setattr__(self, *a):
        raise AttributeError("WeightEnumerator is immutable")

    def __getitem__(self, i: int) -> int:
        return self.A.get(i, 0)

    def total(self) -> int:
        return sum(self.A.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightEnumerator) and other.A == self.A

    def __repr__(self) -> str:
        inner = ", ".join("A_%d=%d" % (i, v) for i, v in self.A.items())
        return "WeightEnumerator(%s)" % inner


# ---------------------------------------------------------------------------
# word-level operations
# ---------------------------------------------------------------------------

def weight(w: Word) -> int:
    """Number of 1 bits."""
    return w.bits.bit_count()


def hamming_distance(u: Word, v: Word) -> int:
    """Number of coordinates where u and v differ."""
    u._check(v)
    return (u.bits ^ v.bits).bit_count()


def intersection_weight(u: Word, v: Word) -> tuple[int, int]:
    """wt(u & v) together with its parity (the bilinear form value)."""
    u._check(v)
    c = (u.bits & v.bits).bit_count()
    return c, c & 1


def parity_distance_check(u: Word, v: Word, w: int) -> int:
    """Check the equal-weight parity equivalence between d mod 4 and
    intersection parity.

    For words of common weight w, d(u,v) = 2 (mod 4) holds exactly when
    wt(u & v) differs from w mod 2.  Returns 1 when the two sides agree
    (they always do; this is exposed as a test oracle), 0 otherwise.
    """
    if u.weight() != w or v.weight() != w:
        raise ValueError("both words must have weight %d" % w)
    d = hamming_distance(u, v)
    lhs = d % 4 == 2
    rhs = (u.bits & v.bits).bit_count() % 2 != w % 2
    return 1 if lhs == rhs else 0


# ---------------------------------------------------------------------------
# popcount kernels (vectorized paths for large codes)
# ---------------------------------------------------------------------------

_POP16 = None


def _pop16() -> np.ndarray:
    global _POP16
    if _POP16 is None:
        t = np.arange(1 << 16, dtype=np.uint16)
        _POP16 = (
            np.bitwise_count(t).astype(np.uint8)
            if hasattr(np, "bitwise_count")
            else np.unpackbits(t.view(np.uint8)).reshape(-1, 16).sum(axis=1).astype(np.uint8)
        )
    return _POP16


def pack_ints(ints: Sequence[int], n: int) -> np.ndarray:
    """Words as rows of 16-bit chunks, low chunk first; n <= 64."""
    if n > 64:
        raise ValueError("vectorized kernels support n <= 64")
    k = (n + 15) // 16
    arr = np.empty((len(ints), k), dtype=np.uint16)
    for j in range(k):
        shift = 16 * j
        arr[:, j] = [(v >> shift) & 0xFFFF for v in ints]
    return arr


def pairwise_distance_counts(ints: Sequence[int], n: int) -> np.ndarray:
    """Counts of ordered pairs (u,v), u != v, at each distance 0..n."""
    m = len(ints)
    counts = np.zeros(n + 1, dtype=np.int64)
    if m < 2:
        return counts
    pop = _pop16()
    chunks = pack_ints(ints, n)
    block = max(1, (1 << 22) // max(m, 1))
    for lo in range(0, m, block):
        hi = min(m, lo + block)
        d = np.zeros((hi - lo, m), dtype=np.uint8)
        for j in range(chunks.shape[1]):
            d += pop[np.bitwise_xor.outer(chunks[lo:hi, j], chunks[:, j])]
        counts += np.bincount(d.ravel(), minlength=n + 1)
    counts[0] -= m  # drop the diagonal
    return counts


def min_distance(c: Code) -> int | float:
    """Minimum pairwise distance; +inf for codes with a single word."""
    if len(c) <= 1:
        return math.inf
    counts = pairwise_distance_counts(c.ints, c.n)
    nz = np.nonzero(counts[1:])[0]
    return int(nz[0]) + 1


def distance_distribution(c: Code) -> DistanceDistribution:
    """Exact distance distribution (a_i) of a code."""
    m = len(c)
    counts = pairwise_distance_counts(c.ints, c.n)
    a = {0: Fraction(1)}
    for i in range(1, c.n + 1):
        if counts[i]:
            a[i] = Fraction(int(counts[i]), m)
    return DistanceDistribution(m, a)


def weight_enumerator(c: Code | LinearCode) -> WeightEnumerator:
    ints = c.ints if isinstance(c, Code) else c.word_ints()
    return WeightEnumerator(Counter(v.bit_count() for v in ints))


# ---------------------------------------------------------------------------
# span / duality / orthogonality
# ---------------------------------------------------------------------------

def span(c: Code | Iterable[Word]) -> LinearCode:
    """F2-linear span, as a canonical LinearCode."""
    if isinstance(c, Code):
        return LinearCode.from_span_ints(c.n, c.ints)
    words = list(c)
    if not words:
        raise ValueError("cannot span an empty collection")
    return LinearCode.from_span_ints(words[0].n, (w.bits for w in words))


def dual(l: LinearCode) -> LinearCode:
    """Dual code: all words orthogonal to every basis row."""
    n = l.n
    pivots = [b.bit_length() - 1 for b in l.basis_ints]  # bit positions
    pivot_set = set(pivots)
    free = [p for p in range(n - 1, -1, -1) if p not in pivot_set]  # bit positions
    out = []
    for f in free:
        v = 1 << f
        for b in l.basis_ints:
            if (b >> f) & 1:
                v |= 1 << (b.bit_length() - 1)
        out.append(v)
    return LinearCode.from_span_ints(n, out)


def self_orthogonality(c: Code) -> tuple[bool, set[tuple[Word, Word]]]:
    """Whether every pair (including u with itself) has even intersection.

    Returns the flag plus the set of offending unordered pairs.
    """
    odd = set()
    ints = c.ints
    n = c.n
    for i, u in enumerate(ints):
        if u.bit_count() & 1:
            odd.add((Word(n, u), Word(n, u)))
        for v in ints[i + 1:]:
            if (u & v).bit_count() & 1:
                odd.add((Word(n, u), Word(n, v)))
    return (not odd), odd


def greedy_orthogonal_subcode(c: Code, seed: Word, target_parity: int) -> Code:
    """Greedy subcode whose distinct pairs all have the target
    intersection parity.

    Scans candidates in ascending lexicographic order starting from the
    seed, keeping a word iff its parity with every already-chosen word
    equals `target_parity`.  Deterministic given the seed.
    """
    if seed not in c:
        raise ValueError("seed must belong to the code")
    if target_parity not in (0, 1):
        raise ValueError("target parity must be 0 or 1")
    chosen = [seed.bits]
    for v in c.ints:
        if v == seed.bits:
            continue
        if all((v & x).bit_count() & 1 == target_parity for x in chosen):
            chosen.append(v)
    return Code.from_ints(c.n, chosen)


# ---------------------------------------------------------------------------
# code transforms
# ---------------------------------------------------------------------------

def _delete_positions(n: int, v: int, positions: frozenset[int]) -> int:
    out = 0
    for i in range(n):
        if i in positions:
            continue
        out = (out << 1) | ((v >> (n - 1 - i)) & 1)
    return out


def _check_positions(n: int, positions: Iterable[int]) -> frozenset[int]:
    ps = frozenset(positions)
    if not ps:
        raise ValueError("need at least one position")
    if any(not 0 <= p < n for p in ps):
        raise ValueError("position out of range")
    return ps


def shorten(c: Code, positions: Iterable[int]) -> Code:
    """Keep words that are zero on the given coordinates, then delete
    those coordinates."""
    ps = _check_positions(c.n, positions)
    mask = sum(1 << (c.n - 1 - p) for p in ps)
    kept = [v for v in c.ints if v & mask == 0]
    if not kept:
        raise ValueError("shortening leaves an empty code")
    return Code.from_ints(c.n - len(ps), [_delete_positions(c.n, v, ps) for v in kept])


def puncture(c: Code, positions: Iterable[int]) -> Code:
    """Delete the given coordinates (duplicates collapse)."""
    ps = _check_positions(c.n, positions)
    return Code.from_ints(c.n - len(ps), [_delete_positions(c.n, v, ps) for v in c.ints])


def translate(c: Code, w: Word) -> Code:
    """Add w to every codeword."""
    if w.n != c.n:
        raise ValueError("translation word length mismatch")
    return Code.from_ints(c.n, [v ^ w.bits for v in c.ints])


def slice_weight(c: Code, w: int) -> Code:
    """Keep only the words of weight w."""
    kept = [v for v in c.ints if v.bit_count() == w]
    if not kept:
        raise ValueError("no words of weight %d" % w)
    return Code.from_ints(c.n, kept)


def extend_with_bit(c: Code, b: int) -> Code:
    """Append a constant bit to every codeword."""
    if b not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    return Code.from_ints(c.n + 1, [(v << 1) | b for v in c.ints])


def complement_code(c: Code) -> Code:
    """Add the all-ones word to every codeword."""
    ones = (1 << c.n) - 1
    return Code.from_ints(c.n, [v ^ ones for v in c.ints])


# ---------------------------------------------------------------------------
# text format: "n=<int>" header, one binary string per line, '#' comments
# ---------------------------------------------------------------------------

class CodeFormatError(ValueError):
    pass


def read_code(path) -> Code:
    n = None
    seen: set[int] = set()
    order: list[int] = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if n is None:
                if not line.startswith("n="):
                    raise CodeFormatError("%s:%d: expected 'n=<int>' header" % (path, lineno))
                try:
                    n = int(line[2:])
                except ValueError:
                    raise CodeFormatError("%s:%d: bad length" % (path, lineno)) from None
                if n <= 0:
                    raise CodeFormatError("%s:%d: length must be positive" % (path, lineno))
                continue
            if len(line) != n or any(ch not in "01" for ch in line):
                raise CodeFormatError("%s:%d: expected a binary string of length %d" % (path, lineno, n))
            v = int(line, 2)
            if v in seen:
                raise CodeFormatError("%s:%d: duplicate word %s" % (path, lineno, line))
            seen.add(v)
            order.append(v)
    if n is None:
        raise CodeFormatError("%s: missing 'n=' header" % path)
    if not order:
        raise CodeFormatError("%s: no words" % path)
    return Code.from_ints(n, order)


def write_code(c: Code, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write("n=%d\n" % c.n)
        for v in c.ints:  # ascending lexicographic
            fh.write(format(v, "0%db" % c.n) + "\n")
