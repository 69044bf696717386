"""Prefix-free codes over an arbitrary digit alphabet.

Two constructions live here.  The enumeration code grows a code tree one
symbol at a time for equiprobable symbols: it first completes any
partially split node, and otherwise splits the numerically largest
codeword of minimal length into two children.  The second is standard
r-ary Huffman coding for arbitrary nonnegative weights, padded with
zero-weight dummy symbols so the merge tree comes out full.

Length accounting is exact (fractions.Fraction); conversion to bits
happens only at the reporting boundary via to_bits().
"""

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True, order=True)
class Codeword:
    """One codeword: a nonempty digit string over a radix-sized alphabet."""

    radix: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.radix < 2:
            raise ValueError(f"radix must be >= 2, got {self.radix}")
        if not self.digits:
            raise ValueError("codeword must be nonempty")
        if any(not 0 <= d < self.radix for d in self.digits):
            raise ValueError(f"digits {self.digits} out of range for radix {self.radix}")

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return "".join(_ALPHABET[d] for d in self.digits)

    def is_prefix_of(self, other: "Codeword") -> bool:
        n = len(self.digits)
        return n <= len(other.digits) and other.digits[:n] == self.digits


@dataclass(frozen=True)
class CodeTable:
    """An ordered list of codewords over one radix, one per symbol."""

    radix: int
    codewords: tuple[Codeword, ...]

    def __post_init__(self):
        if any(c.radix != self.radix for c in self.codewords):
            raise ValueError("all codewords must share the table radix")

    def __len__(self) -> int:
        return len(self.codewords)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.codewords]


def _word(radix: int, digits: tuple[int, ...]) -> Codeword:
    return Codeword(radix=radix, digits=digits)


def enumeration_code(num_symbols: int, radix: int) -> CodeTable:
    """Incrementally grown prefix code for `num_symbols` equiprobable symbols.

    Growth rule: if some internal node has fewer than `radix` children,
    give it its next child digit; otherwise split the numerically largest
    codeword among those of minimal length into children 0 and 1.  For
    radix 2 a split is immediately complete; for radix >= 3 it leaves an
    incomplete node that later additions fill.  When num_symbols is a
    power of the radix every codeword has the same length.

    Codewords are returned in lexicographic order.
    """
    if radix < 2:
        raise ValueError(f"radix must be >= 2, got {radix}")
    if num_symbols < 2:
        raise ValueError(f"need at least 2 symbols, got {num_symbols}")
    words: list[tuple[int, ...]] = [(0,), (1,)]
    children = {(): 2}  # internal node prefix -> number of children so far
    while len(words) < num_symbols:
        incomplete = [p for p, c in children.items() if c < radix]
        if incomplete:
            assert len(incomplete) == 1, "growth keeps at most one open node"
            prefix = incomplete[0]
            words.append(prefix + (children[prefix],))
            children[prefix] += 1
        else:
            shortest = min(len(w) for w in words)
            target = max(w for w in words if len(w) == shortest)
            words.remove(target)
            words.append(target + (0,))
            words.append(target + (1,))
            children[target] = 2
    words.sort()
    return CodeTable(radix=radix, codewords=tuple(_word(radix, w) for w in words))


def is_prefix_free(table: CodeTable) -> bool:
    """True when no codeword is a prefix of another (or a duplicate)."""
    words = sorted(table.codewords)
    # in sorted order a prefix relation always shows up between neighbours
    return all(not a.is_prefix_of(b) for a, b in zip(words, words[1:]))


def kraft_sum(table: CodeTable) -> Fraction:
    """Exact Kraft sum: sum of radix^(-len) over the codewords."""
    return sum(
        (Fraction(1, table.radix ** len(c)) for c in table.codewords),
        start=Fraction(0),
    )


def average_length(table: CodeTable) -> Fraction:
    """Mean codeword length under equiprobable symbols, as an exact rational."""
    if not table.codewords:
        raise ValueError("table must be nonempty")
    return Fraction(sum(table.lengths()), len(table))


def to_bits(length: float, radix: int) -> float:
    """Convert a symbol count in radix units to bits: length * log2(radix)."""
    if radix < 2:
        raise ValueError(f"radix must be >= 2, got {radix}")
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    return float(length) * math.log2(radix)


def _check_weights(weights: Sequence[float]) -> None:
    if len(weights) < 2:
        raise ValueError(f"need at least 2 symbols, got {len(weights)}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative")
    if not sum(weights) > 0:
        raise ValueError("weights must not all be zero")


def huffman(weights: Sequence[float], radix: int) -> CodeTable:
    """Optimal radix-ary prefix code for the given symbol weights.

    Zero-weight dummy symbols are appended until (m-1) is divisible by
    (radix-1), which lets every merge take exactly `radix` nodes; the
    dummies are stripped from the returned table.  Weight ties are broken
    by merging the node holding the smallest original symbol index first,
    so the table is deterministic.  Codewords come back in input-symbol
    order.  Zero-weight real symbols are allowed and end up deepest.
    """
    if radix < 2:
        raise ValueError(f"radix must be >= 2, got {radix}")
    _check_weights(weights)
    m = len(weights)
    ndummy = (radix - 1 - ((m - 1) % (radix - 1))) % (radix - 1)

    # heap entries: (weight, tie key = sorted original indices, subtree)
    # subtree is either a symbol index or a list of child subtrees
    heap: list[tuple[float, tuple[int, ...], object]] = [
        (float(w), (i,), i) for i, w in enumerate(weights)
    ]
    heap.extend((0.0, (m + j,), m + j) for j in range(ndummy))
    heapq.heapify(heap)
    while len(heap) > 1:
        picked = [heapq.heappop(heap) for _ in range(radix)]
        weight = sum(p[0] for p in picked)
        key = min(p[1] for p in picked)
        heapq.heappush(heap, (weight, key, [p[2] for p in picked]))
    root = heap[0][2]

    codes: dict[int, tuple[int, ...]] = {}

    def assign(node, prefix: tuple[int, ...]) -> None:
        if isinstance(node, list):
            for digit, child in enumerate(node):
                assign(child, prefix + (digit,))
        elif node < m:  # dummies (index >= m) get no codeword
            codes[node] = prefix

    if isinstance(root, list):
        assign(root, ())
    else:  # single real symbol cannot happen (m >= 2), defensive
        codes[root] = (0,)
    return CodeTable(
        radix=radix, codewords=tuple(_word(radix, codes[i]) for i in range(m))
    )


def expected_length(table: CodeTable, weights: Sequence[float]) -> float:
    """Expected codeword length sum(p_i * len_i) with normalized weights."""
    if len(table) != len(weights):
        raise ValueError(
            f"table has {len(table)} codewords but {len(weights)} weights given"
        )
    _check_weights(weights)
    total = float(sum(weights))
    return sum(w * len(c) for w, c in zip(weights, table.codewords)) / total


@dataclass(frozen=True)
class CodeLengthComparison:
    """Average code lengths for one symbol count: binary vs ternary."""

    num_symbols: int
    binary_bits: Fraction
    ternary_trits: Fraction
    ternary_bits: float


def table4_report(min_symbols: int = 3, max_symbols: int = 10) -> list[CodeLengthComparison]:
    """Enumeration-code average lengths for each symbol count, both radices.

    The ternary column is also converted to bits so the two radices can
    be compared in a common unit.
    """
    rows = []
    for m in range(min_symbols, max_symbols + 1):
        binary = average_length(enumeration_code(m, 2))
        ternary = average_length(enumeration_code(m, 3))
        rows.append(
            CodeLengthComparison(
                num_symbols=m,
                binary_bits=binary,
                ternary_trits=ternary,
                ternary_bits=to_bits(ternary, 3),
            )
        )
    return rows


def parse_weights(lines: Iterable[str]) -> list[float]:
    """Parse a weights file: one nonnegative decimal per line, '#' comments.

    Blank lines are skipped.  Raises ValueError with the 1-based line
    number for anything that does not parse or is negative.
    """
    weights = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            w = float(line)
        except ValueError:
            raise ValueError(f"line {lineno}: not a number: {line!r}") from None
        if w < 0 or not math.isfinite(w):
            raise ValueError(f"line {lineno}: weight must be finite and >= 0, got {line}")
        weights.append(w)
    return weights
