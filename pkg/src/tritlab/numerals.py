"""Compact positional numerals and digit-count bookkeeping.

"Compact" means no leading zeros: 001 is written as 1.  The interesting
quantity is S_b(N), the total number of digits spent writing 1..N in
base b, and the range count R = S*b that puts different bases on a
comparable footing (a wider alphabet must pay for its extra symbols).

All arithmetic here is exact integer arithmetic; Python integers are
unbounded, so the closed forms cannot overflow or wrap.
"""

from dataclasses import dataclass


def _check_base(base: int) -> None:
    if base < 2:
        raise ValueError(f"base must be >= 2, got {base}")


@dataclass(frozen=True)
class Numeral:
    """A compact base-`base` numeral, most-significant digit first."""

    base: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        v = 0
        for d in self.digits:
            v = v * self.base + d
        return v

    def __str__(self) -> str:
        alphabet = "0123456789abcdefghijklmnopqrstuvwxyz"
        if self.base <= len(alphabet):
            return "".join(alphabet[d] for d in self.digits)
        return ".".join(str(d) for d in self.digits)

    def __len__(self) -> int:
        return len(self.digits)


@dataclass(frozen=True)
class DigitTally:
    """Digit accounting for the range 1..N in one base.

    total_digits is S_b(N); range_count is R = S*b.
    """

    N: int
    base: int
    total_digits: int
    range_count: int

    def __post_init__(self):
        if self.range_count != self.total_digits * self.base:
            raise ValueError("range_count must equal total_digits * base")


def to_numeral(n: int, base: int) -> Numeral:
    """Compact positional representation of n >= 1 in base >= 2."""
    _check_base(base)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    return Numeral(base, tuple(reversed(digits)))


def digit_count(n: int, base: int) -> int:
    """Number of digits of n >= 1 in compact base-b form."""
    _check_base(base)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    c = 0
    while n:
        n //= base
        c += 1
    return c


def total_digits(N: int, base: int) -> int:
    """Total digits S_b(N) spent writing 1..N, summed per digit-length block.

    Numbers of length k occupy [base^(k-1), base^k - 1]; summing
    k * block_size over the blocks clipped to N gives the tally in
    O(log N) exact integer steps.
    """
    _check_base(base)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    total = 0
    k = 1
    low = 1  # base^(k-1)
    while low <= N:
        high = low * base - 1
        total += k * (min(N, high) - low + 1)
        k += 1
        low *= base
    return total


def total_digits_enumerated(N: int, base: int) -> int:
    """S_b(N) by brute-force per-number tallying. Slow; cross-check route."""
    return sum(digit_count(j, base) for j in range(1, N + 1))


def total_digits_closed(n: int, base: int) -> int:
    """Closed form for S_b at N = base^n - 1.

    Equals (1/(b-1)) * [n(b^(n+1) - b^n) - b^n + 1], rearranged to stay
    in integer arithmetic: n*b^n - (b^n - 1)/(b - 1), where the division
    is exact.  At base 2 this reduces to (n-1)*2^n + 1.
    """
    _check_base(base)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = base**n
    return n * p - (p - 1) // (base - 1)


def range_count(N: int, base: int) -> DigitTally:
    """Digit tally for 1..N with the range count R = S*b filled in."""
    s = total_digits(N, base)
    return DigitTally(N=N, base=base, total_digits=s, range_count=s * base)


def best_base(N: int, bases: list[int]) -> list[DigitTally]:
    """Rank bases by range count at N, cheapest first.

    Ties are broken in favor of the smaller base so the ranking is
    deterministic.  The winner is the first element.
    """
    if not bases:
        raise ValueError("bases must be nonempty")
    tallies = [range_count(N, b) for b in bases]
    return sorted(tallies, key=lambda t: (t.range_count, t.base))
