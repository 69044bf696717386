"""Published reference values the library cross-checks itself against.

These are verbatim transcriptions of the printed tables this workbench
reproduces: per-base coding efficiencies, range counts, enumeration
codes, binary/ternary code-length comparisons, first-digit frequencies,
and the three-valued truth tables.  They are data, not computation; the
report module compares them against the library's own results and flags
every cell that disagrees.
"""

import math

# --- reference table 1: efficiency of coding for certain bases -------------

TABLE1_BASES: tuple[float, ...] = (2, math.e, 3, 4, 5, 8, 10, 12, 20, 100)

TABLE1_NATS: tuple[float, ...] = (
    0.347, 0.368, 0.366, 0.347, 0.322, 0.260, 0.230, 0.207, 0.150, 0.046,
)

TABLE1_BITS: tuple[float, ...] = (
    0.500, 0.531, 0.528, 0.500, 0.465, 0.375, 0.331, 0.298, 0.216, 0.066,
)

# --- reference table 2: range counts R = S*b for bases 2, 3, 4 -------------

TABLE2_N: tuple[int, ...] = (1, 2, 3, 4, 7, 8, 9, 15, 16, 26, 27, 31, 63, 64, 80, 100)

TABLE2_RANGE_COUNTS: dict[int, tuple[int, ...]] = {
    2: (2, 6, 10, 16, 34, 42, 50, 98, 108, 208, 218, 258, 642, 656, 880, 1160),
    3: (3, 6, 12, 18, 36, 42, 51, 105, 114, 204, 216, 264, 648, 660, 852, 1152),
    4: (4, 8, 12, 20, 44, 52, 60, 108, 120, 220, 232, 280, 684, 700, 956, 1276),
}

# --- reference table 3: enumeration codes for 3..9 symbols -----------------

TABLE3_CODES: dict[tuple[int, int], tuple[str, ...]] = {
    # (radix, num_symbols) -> codewords in printed order
    (2, 3): ("0", "10", "11"),
    (2, 4): ("00", "01", "10", "11"),
    (2, 5): ("00", "01", "10", "110", "111"),
    (2, 6): ("00", "01", "100", "101", "110", "111"),
    (2, 7): ("00", "010", "011", "100", "101", "110", "111"),
    (2, 8): ("000", "001", "010", "011", "100", "101", "110", "111"),
    (2, 9): ("000", "001", "010", "011", "100", "101", "110", "1110", "1111"),
    (3, 3): ("0", "1", "2"),
    (3, 4): ("0", "1", "20", "21"),
    (3, 5): ("0", "1", "20", "21", "22"),
    (3, 6): ("0", "10", "11", "20", "21", "22"),
    (3, 7): ("0", "10", "11", "12", "20", "21", "22"),
    (3, 8): ("00", "01", "10", "11", "12", "20", "21", "22"),
    (3, 9): ("00", "01", "02", "10", "11", "12", "20", "21", "22"),
}

# --- reference table 4: binary vs ternary average code lengths -------------

TABLE4_SYMBOLS: tuple[int, ...] = (3, 4, 5, 6, 7, 8, 9, 10)

TABLE4_BINARY_BITS: tuple[float, ...] = (1.66, 2, 2.4, 2.7, 2.86, 3, 3.2, 3.4)

TABLE4_TERNARY_TRITS: tuple[float, ...] = (1, 1.5, 1.6, 1.83, 1.86, 2, 2, 2.2)

TABLE4_TERNARY_BITS: tuple[float, ...] = (1.59, 2.38, 2.54, 2.91, 2.93, 3.17, 3.17, 3.48)

# --- reference table 5: first digit frequencies in bases 3..10 -------------

TABLE5_PROBS: dict[int, tuple[float, ...]] = {
    3: (0.631, 0.369),
    4: (0.500, 0.292, 0.207),
    5: (0.431, 0.252, 0.179, 0.139),
    6: (0.387, 0.226, 0.161, 0.125, 0.102),
    7: (0.356, 0.208, 0.148, 0.115, 0.094, 0.079),
    8: (0.333, 0.195, 0.138, 0.107, 0.088, 0.074, 0.064),
    9: (0.315, 0.185, 0.131, 0.102, 0.083, 0.070, 0.061, 0.054),
    10: (0.301, 0.176, 0.125, 0.097, 0.079, 0.067, 0.058, 0.051, 0.046),
}

# --- reference table 6: NOT / OR(max) / AND(min) over (-1, 0, +1) ----------

TABLE6_NOT: tuple[int, ...] = (1, 0, -1)  # NOT a for a = -1, 0, +1

TABLE6_OR: tuple[tuple[int, ...], ...] = (
    (-1, 0, 1),
    (0, 0, 1),
    (1, 1, 1),
)

TABLE6_AND: tuple[tuple[int, ...], ...] = (
    (-1, -1, -1),
    (-1, 0, 0),
    (-1, 0, 1),
)
