"""tritlab: a workbench for number-base economy and three-valued logic.

The library computes per-symbol coding efficiency of arbitrary bases,
exact digit tallies and range counts for compact numerals, prefix-free
enumeration and r-ary Huffman codes, first-digit (Newcomb-Benford)
distributions, and Kleene three-valued logic with a small SQL-flavored
expression language.  A report module recomputes a set of published
reference tables and flags every cell where independent computation
disagrees with the printed value.
"""

from .benford import (
    CodingCost,
    DigitIdentity,
    FirstDigitDistribution,
    coding_cost_comparison,
    digit_identities,
    first_digit_probs,
)
from .codes import (
    CodeLengthComparison,
    CodeTable,
    Codeword,
    average_length,
    enumeration_code,
    expected_length,
    huffman,
    is_prefix_free,
    kraft_sum,
    parse_weights,
    table4_report,
    to_bits,
)
from .logic import (
    And,
    Bindings,
    Compare,
    Const,
    DataVar,
    EvaluationError,
    ExprError,
    ExprSyntaxError,
    LexicalError,
    Not,
    Or,
    Trit,
    TruthTable,
    Var,
    eval_text,
    evaluate,
    format_expr,
    k3_and,
    k3_not,
    k3_or,
    parse,
    quantum_measure,
    truth_table,
)
from .numerals import (
    DigitTally,
    Numeral,
    best_base,
    digit_count,
    range_count,
    to_numeral,
    total_digits,
    total_digits_closed,
    total_digits_enumerated,
)
from .radix import (
    BITS,
    NATS,
    EfficiencyPoint,
    capacity,
    capacity_shortfall,
    efficiency,
    efficiency_curve,
    optimal_base,
)
from .report import Discrepancy, Report, ReportSection, build_report

__version__ = "0.1.0"
