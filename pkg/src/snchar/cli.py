"""Command-line surface: every operation reachable as a subcommand,
with text output for humans and JSON/CSV for machines.

Exit codes: 0 success, 2 argument or input validation failure,
3 enumeration cap exceeded. Machine-readable output is deterministic:
identical flags (and seed) produce byte-identical bytes. Every JSON
report embeds the resolved run configuration.
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import characters as ch
from . import groups as gr
from . import partitions as pt
from . import sampling as sp
from . import vanishing as vn
from .partitions import CapExceededError
from .table_stats import series_csv, stats_series


@dataclass(frozen=True)
class RunConfig:
    """Resolved flags for one invocation; embedded in JSON reports."""
    subcommand: str
    n: int | None = None
    n_min: int | None = None
    n_max: int | None = None
    samples: int | None = None
    seed: int | None = None
    c: float | None = None
    f_mode: str | None = None
    f_const: float | None = None
    strict: bool | None = None
    exact: bool | None = None
    fmt: str = "text"
    output: str | None = None
    cap: int | None = None
    threads: int | None = None
    input_file: str | None = None
    exhaustive_omega: bool | None = None


def _fmt_frac(x: Fraction) -> str:
    """Human form: exact fraction plus 15-significant-digit decimal."""
    return f"{x} ({float(x):.15g})"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(cfg: RunConfig, body: dict) -> str:
    return json.dumps({"config": asdict(cfg), **body}, indent=2) + "\n"


def _require_format(cfg: RunConfig, allowed: tuple[str, ...]) -> None:
    if cfg.fmt not in allowed:
        raise ValueError(
            f"format {cfg.fmt!r} not supported by {cfg.subcommand!r};"
            f" choose from {', '.join(allowed)}"
        )


def _check_table_cap(n: int, cap: int | None) -> None:
    """Fail before any table allocation, quoting the p_n^2 entry count."""
    limit = pt.enumeration_cap(cap)
    pn = pt.partition_count(n)
    if pn > limit:
        raise CapExceededError(
            f"a table for n={n} needs p_n^2 = {pn * pn} entries"
            f" (p_n = {pn} exceeds cap {limit})"
        )


def _omega_spec(cfg: RunConfig) -> vn.OmegaSpec:
    return vn.OmegaSpec(
        c=cfg.c, f_mode=cfg.f_mode, f_const=cfg.f_const, strict=cfg.strict
    )


# -- subcommand bodies ---------------------------------------------------------

def _cmd_table(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "csv", "json"))
    _check_table_cap(cfg.n, cfg.cap)
    tbl = ch.character_table(cfg.n, cfg.cap, threads=cfg.threads or 1)
    if cfg.fmt == "csv":
        return tbl.to_csv()
    if cfg.fmt == "json":
        return _json_report(cfg, {"table": tbl.to_json_dict()})
    labels = [pt.format_partition(s) for s in tbl.characters]
    heads = [pt.format_partition(c) for c in tbl.classes]
    cells = [[str(v) for v in row] for row in tbl.values]
    wl = max(len(s) for s in labels + ["shape"])
    widths = [
        max(len(heads[j]), max(len(cells[i][j]) for i in range(len(cells))))
        for j in range(len(heads))
    ]
    lines = [
        "shape".rjust(wl) + " | "
        + "  ".join(h.rjust(w) for h, w in zip(heads, widths))
    ]
    for lab, row in zip(labels, cells):
        lines.append(
            lab.rjust(wl) + " | "
            + "  ".join(v.rjust(w) for v, w in zip(row, widths))
        )
    return "\n".join(lines) + "\n"


def _cmd_pzero(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json"))
    _check_table_cap(cfg.n, cfg.cap)
    p = vn.exact_pzero(cfg.n, cfg.cap)
    if cfg.fmt == "json":
        return _json_report(cfg, {
            "n": cfg.n,
            "p": {"num": str(p.numerator), "den": str(p.denominator)},
        })
    return f"P_{cfg.n} = {_fmt_frac(p)}\n"


def _cmd_bound(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json"))
    if cfg.exact:
        _check_table_cap(cfg.n, cfg.cap)
    rep = vn.lemma_bound(cfg.n, _omega_spec(cfg), cfg.exact, cfg.cap)
    if cfg.fmt == "json":
        return _json_report(cfg, {"bound": rep.to_json_dict()})
    lines = [
        f"n = {rep.n}",
        f"p_n = {rep.p_n}",
        f"|Omega| = {rep.omega_count}",
        f"Q_n = {_fmt_frac(rep.q_n)}",
        f"R_n = |Omega|/p_n = {_fmt_frac(rep.r_n)}",
        f"lower bound Q_n - R_n = {_fmt_frac(rep.lower_bound)}",
    ]
    if rep.exact_p is not None:
        lines.append(f"exact P_n = {_fmt_frac(rep.exact_p)}")
        lines.append("bound check 1 >= P_n >= Q_n - R_n: OK")
    return "\n".join(lines) + "\n"


def _cmd_mc_pzero(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json"))
    s = vn.montecarlo_pzero(cfg.n, cfg.samples, cfg.seed)
    if cfg.fmt == "json":
        return _json_report(cfg, {"summary": s.to_json_dict()})
    return (
        f"P_{cfg.n} estimate = {s.estimate!r} +/- {s.std_error!r}"
        f" ({s.samples} samples, seed {s.seed})\n"
    )


def _cmd_goncharov(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json", "csv"))
    g = vn.goncharov_experiment(cfg.n, cfg.samples, cfg.seed)
    if cfg.fmt == "csv":
        lines = ["normalized_value"]
        lines.extend(repr(v) for v in g.normalized_values)
        return "\n".join(lines) + "\n"
    if cfg.fmt == "json":
        return _json_report(cfg, {
            "n": g.n,
            "sample_count": g.sample_count,
            "seed": g.seed,
            "ks_distance": g.ks_distance,
        })
    return (
        f"cycle counts at n={g.n}: {g.sample_count} samples, seed {g.seed}\n"
        f"KS distance to limit law = {g.ks_distance!r}\n"
    )


def _cmd_long_cycle(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json"))
    s = vn.long_cycle_frequency(cfg.n, cfg.samples, cfg.seed)
    if cfg.fmt == "json":
        return _json_report(cfg, {"summary": s.to_json_dict()})
    return (
        f"freq(cycle >= n/(2 log n)) at n={cfg.n}:"
        f" {s.estimate!r} +/- {s.std_error!r}"
        f" ({s.samples} samples, seed {s.seed})\n"
    )


def _cmd_table_stats(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "csv", "json"))
    if cfg.n_min <= cfg.n_max:
        _check_table_cap(cfg.n_max, cfg.cap)
    series = stats_series(cfg.n_min, cfg.n_max, cfg.cap)
    if cfg.fmt == "csv":
        return series_csv(series)
    if cfg.fmt == "json":
        return _json_report(cfg, {"series": [s.to_json_dict() for s in series]})
    lines = []
    for s in series:
        ratio = "undefined" if s.sign_ratio is None else _fmt_frac(s.sign_ratio)
        lines.append(
            f"n={s.n}: zeros {s.zero_entries}, positives {s.positive_entries},"
            f" negatives {s.negative_entries},"
            f" zero density {_fmt_frac(s.zero_density)}, sign ratio {ratio}"
        )
    return "\n".join(lines) + "\n" if lines else "empty range\n"


def _cmd_group(cfg: RunConfig) -> str:
    _require_format(cfg, ("text", "json"))
    try:
        with open(cfg.input_file, "rb") as fh:
            data = gr.load_class_data(fh)
    except OSError as e:
        raise ValueError(f"cannot read {cfg.input_file!r}: {e}") from None
    omega = gr.default_omega(data)
    rep = gr.proposition_bound(data, omega)
    check = gr.best_omega_check(data) if cfg.exhaustive_omega else None
    if cfg.fmt == "json":
        body = {
            "group": data.group_name,
            "num_classes": data.num_classes,
            "report": rep.to_json_dict(),
        }
        if check is not None:
            body["omega_check"] = check.to_json_dict()
        return _json_report(cfg, body)
    lines = [
        f"group {data.group_name!r}: order {data.order}, {data.num_classes} classes",
        f"default Omega ({len(omega)} classes): {', '.join(rep.omega_names)}",
        f"Q = {_fmt_frac(rep.q)}",
        f"R = {_fmt_frac(rep.r)}",
        f"lower bound Q - R = {_fmt_frac(rep.lower_bound)}",
    ]
    if rep.exact_p is not None:
        lines.append(f"exact P = {_fmt_frac(rep.exact_p)}")
        lines.append("bound check 1 >= P >= Q - R: OK")
    if check is not None:
        lines.append(
            f"max of Q - R over subsets ({check.method},"
            f" {check.subsets_checked} checked) = {_fmt_frac(check.max_value)};"
            f" default attains it: {check.default_is_max}"
        )
    return "\n".join(lines) + "\n"


def _cmd_export_group(cfg: RunConfig) -> str:
    _require_format(cfg, ("json",))
    _check_table_cap(cfg.n, cfg.cap)
    doc = gr.symmetric_group_json(cfg.n, cfg.cap)
    doc["config"] = asdict(cfg)
    return json.dumps(doc, indent=2) + "\n"


# -- argument parsing ----------------------------------------------------------

class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        # argparse's default exits with 2, which matches the contract, but
        # raise instead so run() owns the exit-code path.
        raise ValueError(message)


def _build_parser() -> _ArgumentParser:
    top = _ArgumentParser(
        prog="snchar",
        description="Exact character values of symmetric groups and their"
        " vanishing statistics.",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    def common(p, fmt=("text", "json"), default_fmt="text"):
        p.add_argument("--format", choices=fmt, default=default_fmt)
        p.add_argument("--output", help="write the report to this path")
        p.add_argument("--cap", type=int, help="enumeration cap override")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("table", help="export the character table of S_n")
    p.add_argument("n", type=int)
    common(p, fmt=("text", "csv", "json"), default_fmt="csv")

    p = sub.add_parser("pzero", help="exact vanishing probability P_n")
    p.add_argument("n", type=int)
    common(p)

    p = sub.add_parser("bound", help="lower-bound report for P_n")
    p.add_argument("n", type=int)
    p.add_argument("--C", type=float, default=vn.DEFAULT_C,
                   help="threshold constant (default sqrt(6)/(2 pi))")
    p.add_argument("--f", default="log",
                   help="'log' for f(n)=log n, or a constant value")
    p.add_argument("--strict", action="store_true",
                   help="use a strict > threshold comparison")
    p.add_argument("--no-exact", dest="exact", action="store_false",
                   help="skip the exact P_n computation")
    common(p)

    p = sub.add_parser("mc-pzero", help="Monte Carlo estimate of P_n")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=sp.DEFAULT_SEED)
    common(p)

    p = sub.add_parser("goncharov",
                       help="normalized cycle-count sample vs the limit law")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=sp.DEFAULT_SEED)
    common(p, fmt=("text", "json", "csv"))

    p = sub.add_parser("long-cycle",
                       help="frequency of a cycle of length >= n/(2 log n)")
    p.add_argument("n", type=int)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=sp.DEFAULT_SEED)
    common(p)

    p = sub.add_parser("table-stats", help="zero/sign statistics series")
    p.add_argument("n_min", type=int)
    p.add_argument("n_max", type=int)
    common(p, fmt=("text", "csv", "json"), default_fmt="csv")

    p = sub.add_parser("group", help="bound report from a class-data file")
    p.add_argument("file")
    p.add_argument("--exhaustive-omega", action="store_true",
                   help="verify default Omega maximizes Q - R over subsets")
    common(p)

    p = sub.add_parser("export-group",
                       help="emit S_n as generic class-data JSON")
    p.add_argument("n", type=int)
    common(p, fmt=("json",), default_fmt="json")

    return top


def _config_from_args(args) -> RunConfig:
    f_mode, f_const = None, None
    if hasattr(args, "f"):
        if args.f == "log":
            f_mode, f_const = "log", 0.0
        else:
            try:
                f_const = float(args.f)
            except ValueError:
                raise ValueError(
                    f"--f must be 'log' or a number, got {args.f!r}"
                ) from None
            f_mode = "const"
    if getattr(args, "samples", None) is not None and args.samples < 1:
        raise ValueError("--samples must be >= 1")
    if getattr(args, "threads", 1) < 1:
        raise ValueError("--threads must be >= 1")
    if getattr(args, "cap", None) is not None and args.cap < 1:
        raise ValueError("--cap must be >= 1")
    return RunConfig(
        subcommand=args.subcommand,
        n=getattr(args, "n", None),
        n_min=getattr(args, "n_min", None),
        n_max=getattr(args, "n_max", None),
        samples=getattr(args, "samples", None),
        seed=getattr(args, "seed", None),
        c=getattr(args, "C", None),
        f_mode=f_mode,
        f_const=f_const,
        strict=getattr(args, "strict", None),
        exact=getattr(args, "exact", None),
        fmt=args.format,
        output=args.output,
        cap=args.cap,
        threads=args.threads,
        input_file=getattr(args, "file", None),
        exhaustive_omega=getattr(args, "exhaustive_omega", None),
    )


_COMMANDS = {
    "table": _cmd_table,
    "pzero": _cmd_pzero,
    "bound": _cmd_bound,
    "mc-pzero": _cmd_mc_pzero,
    "goncharov": _cmd_goncharov,
    "long-cycle": _cmd_long_cycle,
    "table-stats": _cmd_table_stats,
    "group": _cmd_group,
    "export-group": _cmd_export_group,
}


def run(argv=None) -> int:
    """Parse argv, run the subcommand, emit its report.

    Returns 0 on success, 2 on validation errors, 3 when a computation
    would exceed the enumeration cap.
    """
    parser = _build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            # --help lands here with code 0
            return int(e.code or 0)
        cfg = _config_from_args(args)
        text = _COMMANDS[cfg.subcommand](cfg)
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    _emit(text, cfg)
    return 0


def main() -> None:
    raise SystemExit(run())
