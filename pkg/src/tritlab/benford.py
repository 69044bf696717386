"""First-digit (Newcomb-Benford) distributions in arbitrary bases.

The leading digit d of naturally occurring numbers written in base r
follows P(d) = log_r(1 + 1/d) for d = 1..r-1.  The telescoping product
of the (1 + 1/d) factors is what drives both the normalization and the
digit-sum identities such as P(1) = P(2) + P(3).
"""

import math
from dataclasses import dataclass

from .codes import expected_length, huffman, to_bits


@dataclass(frozen=True)
class FirstDigitDistribution:
    """P(d) for d = 1..base-1; probabilities[0] is P(1)."""

    base: int
    probabilities: tuple[float, ...]

    def p(self, digit: int) -> float:
        if not 1 <= digit <= self.base - 1:
            raise ValueError(f"digit must be in 1..{self.base - 1}, got {digit}")
        return self.probabilities[digit - 1]


@dataclass(frozen=True)
class DigitIdentity:
    """One verified identity P(lhs) = sum of P(d) over rhs digits."""

    base: int
    lhs: int
    rhs: tuple[int, ...]
    lhs_value: float
    rhs_value: float

    @property
    def residual(self) -> float:
        return abs(self.lhs_value - self.rhs_value)


def first_digit_probs(base: int) -> FirstDigitDistribution:
    """First-digit distribution for base >= 3.

    Base 2 is rejected: its only leading digit is 1, so the distribution
    degenerates to {1}.  Logs are taken as ln ratios for uniform
    precision across bases.
    """
    if base < 3:
        raise ValueError(
            f"base must be >= 3, got {base} (base 2 degenerates to the "
            "single-digit distribution {1})"
        )
    ln_base = math.log(base)
    probs = tuple(math.log(1 + 1 / d) / ln_base for d in range(1, base))
    return FirstDigitDistribution(base=base, probabilities=probs)


# (lhs, rhs) pairs that hold in any base where all the digits exist,
# plus three that are stated for base 10 specifically
_GENERAL_IDENTITIES = [(1, (2, 3)), (2, (4, 5)), (3, (6, 7))]
_BASE10_IDENTITIES = [(1, (5, 6, 7, 8, 9)), (2, (5, 8, 9)), (4, (8, 9))]


def digit_identities(base: int) -> list[DigitIdentity]:
    """Evaluate every applicable logarithmic digit identity for this base.

    Identities whose digits do not exist in the base are omitted rather
    than failed.
    """
    dist = first_digit_probs(base)
    pairs = list(_GENERAL_IDENTITIES)
    if base == 10:
        pairs += _BASE10_IDENTITIES
    out = []
    for lhs, rhs in pairs:
        if max(rhs) > base - 1:
            continue
        out.append(
            DigitIdentity(
                base=base,
                lhs=lhs,
                rhs=rhs,
                lhs_value=dist.p(lhs),
                rhs_value=sum(dist.p(d) for d in rhs),
            )
        )
    return out


@dataclass(frozen=True)
class CodingCost:
    """Huffman cost of coding first digits: binary vs ternary."""

    base: int
    binary_bits: float
    ternary_trits: float
    ternary_bits: float


def coding_cost_comparison(base: int) -> CodingCost:
    """Expected Huffman codeword length for the first-digit distribution.

    Needs base >= 4 so there are at least 3 symbols and both a binary
    and a ternary code are meaningful.  Both the trit and the bit value
    of the ternary cost are reported; only bits compare across radices.
    """
    if base < 4:
        raise ValueError(f"base must be >= 4, got {base}")
    probs = first_digit_probs(base).probabilities
    binary_bits = expected_length(huffman(probs, 2), probs)
    ternary_trits = expected_length(huffman(probs, 3), probs)
    return CodingCost(
        base=base,
        binary_bits=binary_bits,
        ternary_trits=ternary_trits,
        ternary_bits=to_bits(ternary_trits, 3),
    )
