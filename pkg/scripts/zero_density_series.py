#!/usr/bin/env python3
"""Emit the zero-density and sign-ratio series over exact character
tables, the data behind the open questions about where the density of
zeros heads (1/e? 1/3? neither?). Nothing is asserted; the columns give
the running distance to both reference values.

Example:
    python3 scripts/zero_density_series.py --n-min 2 --n-max 18
"""

import argparse
import sys

from snchar.table_stats import series_csv, stats_series


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=18)
    ap.add_argument("--out", help="output CSV path (default stdout)")
    a = ap.parse_args(argv)
    text = series_csv(stats_series(a.n_min, a.n_max))
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
