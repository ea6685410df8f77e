"""Command line front end.

Subcommands: ``walk`` (tables and row sums), ``series`` (generating function
coefficients), ``asympt`` (ratio tables and error envelopes), ``tilt`` (tensor
power decompositions), ``bounds`` (root-system envelope constants),
``plotdata`` (normalized ratio columns) and ``verify`` (the check suite).

All output is deterministic; big integers are emitted as decimal strings in
JSON because 64-bit consumers would silently truncate them.  Exit codes:
0 on success, 1 on runtime or verification failure, 2 on usage errors.
A JSON config file may supply defaults for any long flag; explicit flags win.
``TILTWALK_PRECISION`` overrides the quadrature working digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from . import asymptotics as asy
from . import roots, series, tilting, verify, walks

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_ORDER = 256
DEFAULT_PRECISION = 40


@dataclass
class RunConfig:
    """Effective options of one invocation, after merging flag, config-file
    and built-in defaults (in that order of precedence)."""

    subcommand: str
    ell: int | None = None
    order: int | None = None
    k: int | None = None
    n: int | None = None
    fmt: str = "csv"
    output: str | None = None
    precision: int = DEFAULT_PRECISION
    profile: str = "quick"
    extras: dict[str, Any] | None = None


def _load_config(path: str | None) -> dict[str, Any]:
    if path is None:
        return {}
    with open(path) as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def _merge(args: argparse.Namespace, config: dict[str, Any], key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in config:
        return config[key]
    return default


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w") as handle:
            handle.write(text)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _sorted_strmap(d: dict[int, int], reverse: bool = True) -> dict[str, str]:
    return {str(k): str(v) for k, v in sorted(d.items(), reverse=reverse)}


def cmd_walk(args: argparse.Namespace, config: dict[str, Any]) -> int:
    classical = bool(_merge(args, config, "classical", False))
    ell = _merge(args, config, "ell")
    n = _merge(args, config, "n")
    fmt = _merge(args, config, "format", "csv")
    sums_only = bool(_merge(args, config, "sums_only", False))
    if n is None or n < 0:
        raise UsageError("--n must be a nonnegative integer")
    if not classical:
        if ell is None:
            raise UsageError("--ell is required unless --classical is given")
        if ell < 2:
            raise UsageError("--ell must be at least 2")
    if sums_only:
        if classical:
            values = walks.classical_row_sums(n)
            kind, tag = "classical", None
        else:
            values = walks.sequences(ell, n).b
            kind, tag = "modular", ell
        if fmt == "csv":
            text = "".join(f"{i},{v}\n" for i, v in enumerate(values.values))
        else:
            payload = {"kind": kind, "ell": tag, "sums": [str(v) for v in values.values]}
            text = json.dumps(payload, indent=2) + "\n"
    else:
        table = walks.classical_table(n) if classical else walks.modular_table(ell, n)
        text = walks.table_to_csv(table) if fmt == "csv" else walks.table_to_json(table) + "\n"
    _emit(text, _merge(args, config, "output"))
    return EXIT_OK


def cmd_series(args: argparse.Namespace, config: dict[str, Any]) -> int:
    op = _merge(args, config, "op")
    order = _merge(args, config, "order", DEFAULT_ORDER)
    if order is None or order < 0:
        raise UsageError("--order must be nonnegative")
    if op == "gf_a":
        result = series.gf_a_half_line(order)
    elif op == "gf_b":
        ell = _merge(args, config, "ell")
        if ell is None or ell < 3:
            raise UsageError("gf_b requires --ell at least 3 (ell = 2 reduces to the classical walk)")
        c = series.RationalSeries(
            walks.classical_residue_sums(ell, ell - 1, order).values, order
        )
        result = series.gf_b(ell, order, c)
    elif op == "mixed_factor":
        p = _merge(args, config, "p")
        ell = _merge(args, config, "ell")
        if p is None or ell is None or p < 2 or ell < 2:
            raise UsageError("mixed_factor requires --p and --ell, both at least 2")
        result = series.mixed_factor_series(p, ell, order)
    else:
        raise UsageError(f"unknown series operation {op!r}")
    text = json.dumps(result.as_strings()) + "\n"
    _emit(text, _merge(args, config, "output"))
    return EXIT_OK


def cmd_asympt(args: argparse.Namespace, config: dict[str, Any]) -> int:
    ell = _merge(args, config, "ell")
    n_max = _merge(args, config, "n_max")
    if ell is None or ell < 2:
        raise UsageError("--ell must be at least 2")
    if n_max is None or n_max < 1:
        raise UsageError("--n-max must be at least 1")
    seq = walks.sequences(ell, n_max)
    approx = asy.b_approximant(ell)
    rows = []
    for n in range(1, n_max + 1):
        ratio = asy.ratio_to_approx(seq.b[n], n, approx)
        rows.append((n, ratio, n * abs(ratio - 1) * approx.prefactor(n)))
    csv_lines = ["n,ratio,n_times_error"]
    csv_lines += [f"{n},{_fmt_float(r)},{_fmt_float(e)}" for n, r, e in rows]
    _emit("\n".join(csv_lines) + "\n", _merge(args, config, "output"))
    report_path = _merge(args, config, "report")
    if report_path is not None:
        window = (max(1, n_max // 10), n_max)
        envelope = asy.error_envelope(seq.b, approx, window)
        payload = {
            "ell": ell,
            "n_max": n_max,
            "window": list(window),
            "envelope_constant": envelope.constant,
            "envelope_passed": envelope.passed,
            "rows": [
                {"n": n, "ratio": r, "n_times_error": e} for n, r, e in rows
            ],
        }
        with open(report_path, "w") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    return EXIT_OK


def cmd_tilt(args: argparse.Namespace, config: dict[str, Any]) -> int:
    ell = _merge(args, config, "ell")
    k = _merge(args, config, "k")
    n = _merge(args, config, "n")
    fmt = _merge(args, config, "format", "json")
    show = bool(_merge(args, config, "show_decomp", False))
    if ell is None or ell < 2:
        raise UsageError("--ell must be at least 2")
    if k is None or k < 0 or n is None or n < 0:
        raise UsageError("--k and --n must be nonnegative")
    td, raw = tilting.tensor_power(k, n, ell)
    counts = {
        "summands": str(tilting.count_summands(td)),
        "weyl": str(tilting.count_weyl(raw)),
        "wall": str(tilting.wall_summands(td, ell)),
        "dimension": str(tilting.dim_tilting(k, ell) ** n),
    }
    if fmt == "json":
        payload: dict[str, Any] = {"ell": ell, "k": k, "n": n, "counts": counts}
        if show:
            payload["summands"] = _sorted_strmap(td.as_dict())
            payload["weyl"] = _sorted_strmap(raw)
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = ["quantity,value"] + [f"{key},{val}" for key, val in counts.items()]
        if show:
            lines.append("weight,tilting_mult,weyl_mult")
            weights = sorted(set(td.as_dict()) | set(raw), reverse=True)
            for w in weights:
                lines.append(f"{w},{td.multiplicity(w)},{raw.get(w, 0)}")
        text = "\n".join(lines) + "\n"
    _emit(text, _merge(args, config, "output"))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, config: dict[str, Any]) -> int:
    type_name = _merge(args, config, "type")
    ell = _merge(args, config, "ell")
    dim_t = _merge(args, config, "dim")
    char_const = _merge(args, config, "char_const", 1.0)
    if type_name is None:
        raise UsageError("--type is required (e.g. A1, B2, G2)")
    if ell is None or ell < 2:
        raise UsageError("--ell must be at least 2")
    if dim_t is None or dim_t < 1:
        raise UsageError("--dim must be positive")
    try:
        st = roots.parse_type(type_name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    env = roots.theta_envelope(st, dim_t, float(char_const), ell)
    payload: dict[str, Any] = {
        "type": st.name,
        "rank": st.rank,
        "num_positive_roots": st.num_positive_roots,
        "coxeter_number": st.coxeter_number,
        "ell": ell,
        "dim": dim_t,
        "steinberg_dim": str(roots.steinberg_dim(st, ell)),
        "projective_delta_bound": str(roots.projective_delta_bound(st, ell)),
        "tau": str(env.tau),
        "beta": env.beta,
        "char_zero_const": float(char_const),
        "lower_divisor": str(env.lower_divisor),
        "lower_const": env.lower_const,
        "upper_const": env.upper_const,
    }
    if st.name in ("A2", "B2", "C2", "G2"):
        payload["rank2_improved_bound"] = str(roots.rank2_improved_bound(st.name))
    _emit(json.dumps(payload, indent=2) + "\n", _merge(args, config, "output"))
    return EXIT_OK


def cmd_plotdata(args: argparse.Namespace, config: dict[str, Any]) -> int:
    ell = _merge(args, config, "ell")
    n_max = _merge(args, config, "n_max")
    if ell is None or ell < 2:
        raise UsageError("--ell must be at least 2")
    if n_max is None or n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    seq = walks.sequences(ell, n_max)
    lines = ["n,ratio,limit"]
    for n in range(1, n_max + 1):
        ratio = asy.normalized_count(seq.b[n], n) / asy.SQRT_2_OVER_PI
        limit = float(asy.b_prefactor(ell, n))
        lines.append(f"{n},{_fmt_float(ratio)},{_fmt_float(limit)}")
    _emit("\n".join(lines) + "\n", _merge(args, config, "output"))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: dict[str, Any]) -> int:
    profile = _merge(args, config, "profile", "quick")
    golden_dir = _merge(args, config, "golden_dir")
    precision = int(_merge(args, config, "precision", DEFAULT_PRECISION))
    if profile not in ("quick", "full"):
        raise UsageError("--profile must be quick or full")
    try:
        results = verify.run_checks(profile, golden_dir, precision=precision)
    except FileNotFoundError as exc:
        sys.stderr.write(f"missing golden file: {exc}\n")
        return EXIT_FAILURE
    sys.stdout.write(verify.format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILURE


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltwalk",
        description="Exact walk counts, generating functions, asymptotics and "
        "tilting tensor-power decompositions.",
    )
    parser.add_argument("--version", action="version", version=f"tiltwalk {__version__}")
    parser.add_argument("--config", help="JSON file with default option values")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_walk = sub.add_parser("walk", help="emit a count table or its row sums")
    p_walk.add_argument("--ell", type=int)
    p_walk.add_argument("--n", type=int)
    p_walk.add_argument("--classical", action="store_true", default=None)
    p_walk.add_argument("--sums-only", dest="sums_only", action="store_true", default=None)
    p_walk.add_argument("--format", choices=("csv", "json"))
    p_walk.add_argument("--output")

    p_series = sub.add_parser("series", help="emit generating-function coefficients")
    p_series.add_argument("--op", choices=("gf_a", "gf_b", "mixed_factor"))
    p_series.add_argument("--ell", type=int)
    p_series.add_argument("--p", type=int)
    p_series.add_argument("--order", type=int)
    p_series.add_argument("--output")

    p_asympt = sub.add_parser("asympt", help="ratio table against the growth law")
    p_asympt.add_argument("--ell", type=int)
    p_asympt.add_argument("--n-max", dest="n_max", type=int)
    p_asympt.add_argument("--report", help="also write a JSON report here")
    p_asympt.add_argument("--output")

    p_tilt = sub.add_parser("tilt", help="decompose a tilting tensor power")
    p_tilt.add_argument("--ell", type=int)
    p_tilt.add_argument("--k", type=int)
    p_tilt.add_argument("--n", type=int)
    p_tilt.add_argument("--show-decomp", dest="show_decomp", action="store_true", default=None)
    p_tilt.add_argument("--format", choices=("csv", "json"))
    p_tilt.add_argument("--output")

    p_bounds = sub.add_parser("bounds", help="envelope constants for a simple type")
    p_bounds.add_argument("--type")
    p_bounds.add_argument("--ell", type=int)
    p_bounds.add_argument("--dim", type=int)
    p_bounds.add_argument("--char-const", dest="char_const", type=float)
    p_bounds.add_argument("--output")

    p_plot = sub.add_parser("plotdata", help="normalized ratio columns for plotting")
    p_plot.add_argument("--ell", type=int)
    p_plot.add_argument("--n-max", dest="n_max", type=int)
    p_plot.add_argument("--output")

    p_verify = sub.add_parser("verify", help="run the verification checks")
    p_verify.add_argument("--profile", choices=("quick", "full"))
    p_verify.add_argument("--golden-dir", dest="golden_dir")
    p_verify.add_argument("--precision", type=int, help="quadrature working digits")

    return parser


_COMMANDS = {
    "walk": cmd_walk,
    "series": cmd_series,
    "asympt": cmd_asympt,
    "tilt": cmd_tilt,
    "bounds": cmd_bounds,
    "plotdata": cmd_plotdata,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"cannot read config: {exc}\n")
        return EXIT_USAGE
    if "TILTWALK_PRECISION" in os.environ:
        config.setdefault("precision", int(os.environ["TILTWALK_PRECISION"]))
    try:
        return _COMMANDS[args.subcommand](args, config)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (OSError, ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
