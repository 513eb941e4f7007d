"""Sign and zero counts over full character tables of S_n.

These statistics weight all p_n^2 table entries equally (character and
class both uniform), which is a different measure from the class-size
weighting used for P_n; both get reported so the distinction stays
visible. No limiting value is asserted anywhere: the series exists for
inspection, with reference distances to 1/e and 1/3 included.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import characters as ch
from . import partitions as pt


@dataclass(frozen=True)
class TableStats:
    """Entry counts of the p_n x p_n character table.

    sign_ratio is positives/negatives, or None when there are no negative
    entries (n <= 2); exact reports carry no sentinel numerics.
    """
    n: int
    zero_entries: int
    positive_entries: int
    negative_entries: int
    zero_density: Fraction
    sign_ratio: Fraction | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "zeros": self.zero_entries,
            "positives": self.positive_entries,
            "negatives": self.negative_entries,
            "zero_density": {
                "num": str(self.zero_density.numerator),
                "den": str(self.zero_density.denominator),
            },
            "sign_ratio": (
                None if self.sign_ratio is None else {
                    "num": str(self.sign_ratio.numerator),
                    "den": str(self.sign_ratio.denominator),
                }
            ),
        }


def table_stats(n: int, cap: int | None = None) -> TableStats:
    """Exact zero/positive/negative counts for the table of S_n."""
    tbl = ch.cached_table(n, cap)
    zeros = positives = negatives = 0
    for row in tbl.values:
        for v in row:
            if v == 0:
                zeros += 1
            elif v > 0:
                positives += 1
            else:
                negatives += 1
    pn = len(tbl.classes)
    total = pn * pn
    if zeros + positives + negatives != total:
        raise AssertionError(f"entry counts do not cover the table at n={n}")
    return TableStats(
        n=n,
        zero_entries=zeros,
        positive_entries=positives,
        negative_entries=negatives,
        zero_density=Fraction(zeros, total),
        sign_ratio=None if negatives == 0 else Fraction(positives, negatives),
    )


def stats_series(n_min: int, n_max: int, cap: int | None = None) -> list[TableStats]:
    """table_stats for each n in [n_min, n_max]; empty when n_min > n_max."""
    return [table_stats(n, cap) for n in range(n_min, n_max + 1)]


SERIES_CSV_HEADER = (
    "n,p_n,zeros,positives,negatives,"
    "zero_density,zero_density_fraction,sign_ratio,"
    "abs_diff_inv_e,abs_diff_one_third"
)


def series_csv(series) -> str:
    """CSV rendering of a TableStats sequence.

    zero_density appears both as a 10-place decimal and as the exact
    fraction; the last two columns are |density - 1/e| and |density - 1/3|
    (reference distances only, nothing is asserted about them).
    """
    lines = [SERIES_CSV_HEADER]
    for s in series:
        d = float(s.zero_density)
        ratio = "undefined" if s.sign_ratio is None else str(s.sign_ratio)
        lines.append(
            f"{s.n},{pt.partition_count(s.n)},{s.zero_entries},"
            f"{s.positive_entries},{s.negative_entries},"
            f"{d:.10f},{s.zero_density},{ratio},"
            f"{abs(d - 1.0 / math.e):.10f},{abs(d - 1.0 / 3.0):.10f}"
        )
    return "\n".join(lines) + "\n"
