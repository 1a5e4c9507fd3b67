"""Command-line front door.

Subcommands: bounds (evaluate the bound set), sweep (emit the random-spectrum
CSV), extremal (verify bound attainment), dqds (run the singular-value
engine). All outputs are machine-parseable key=value lines or CSV with
shortest-round-trip floats.

Exit codes: 0 ok, 1 parse error, 2 infeasible input, 3 I/O failure,
4 verification failure, 5 convergence failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields

import numpy as np

from .bounds import bound_report, gap_upper_bound, laguerre_bound, bailey_bound
from .bounds import householder_bound, newton_bound
from .core import LowerBidiagonal, SymTridiagonal, TracePair, spectrum_to_tracepair
from .dqds import DEFLATION_TOL, run_dqds, strategy
from .errors import (
    ConvergenceError,
    DomainError,
    FormatError,
    NotPositiveDefiniteError,
    SingularMatrixError,
)
from .extremal import figure_ensemble_spectrum, verify_attainability
from .io import KIND_BIDIAGONAL, format_float, load_matrix
from .traces import shifted_traces, traces_fast

SWEEP_SCHEMA_HEADER = "# eigenfloor-sweep v1"
DQDS_LOG_HEADER = "# eigenfloor-dqds-log v1"

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3
EXIT_VERIFY = 4
EXIT_CONVERGENCE = 5


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


@dataclass(frozen=True)
class SweepRow:
    """One sweep sample; laguerre <= lambda_min <= gap_upper by construction."""

    sample_id: int
    alpha: float
    lambda_min: float
    laguerre: float
    gap_upper: float
    newton: float
    bailey: float
    householder: float


SWEEP_COLUMNS = ",".join(f.name for f in fields(SweepRow))


def sweep_rows(m: int, samples: int, seed: int):
    """The sweep samples as SweepRow records, deterministic per seed."""
    for i in range(samples):
        s = figure_ensemble_spectrum(m, i, seed)
        tp = spectrum_to_tracepair(s)
        yield SweepRow(
            sample_id=i,
            alpha=tp.alpha,
            lambda_min=float(s.values[-1]),
            laguerre=laguerre_bound(tp),
            gap_upper=gap_upper_bound(tp),
            newton=newton_bound(tp),
            bailey=bailey_bound(tp),
            householder=householder_bound(tp),
        )


def _format_row(row: SweepRow) -> str:
    parts = [str(row.sample_id)]
    parts += [
        format_float(v)
        for v in (
            row.alpha,
            row.lambda_min,
            row.laguerre,
            row.gap_upper,
            row.newton,
            row.bailey,
            row.householder,
        )
    ]
    return ",".join(parts)


def _tracepair_from_args(args) -> TracePair:
    a, b, m_raw = args.traces
    m = int(m_raw)
    if m != m_raw:
        raise _UsageError(f"dimension must be an integer, got {m_raw}")
    return TracePair(a, b, m)


def _cmd_bounds(args) -> int:
    if args.traces is not None:
        tp = _tracepair_from_args(args)
    else:
        mat = load_matrix(args.input)
        if isinstance(mat, LowerBidiagonal):
            tp = traces_fast(mat)
        else:
            st = shifted_traces(mat, 0.0)
            tp = st.as_tracepair(mat.m)
    rep = bound_report(tp)
    for name in ("newton", "bailey", "householder", "laguerre", "alpha"):
        print(f"{name}={format_float(getattr(rep, name))}")
    print(f"q={rep.q}")
    print(f"gap_upper={format_float(rep.gap_upper)}")
    print(f"gap_ratio={format_float(rep.gap_ratio)}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    lines = [SWEEP_SCHEMA_HEADER, SWEEP_COLUMNS]
    lines += [_format_row(r) for r in sweep_rows(args.m, args.samples, args.seed)]
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_extremal(args) -> int:
    tp = _tracepair_from_args(args)
    rep = verify_attainability(tp, args.tol, args.epsilon)
    print(f"laguerre_bound={format_float(rep.laguerre_bound)}")
    print(f"laguerre_lambda_min={format_float(rep.laguerre_lambda_min)}")
    print(f"laguerre_rel_gap={format_float(rep.laguerre_rel_gap)}")
    print(f"gap_upper={format_float(rep.gap_upper)}")
    print(f"gap_lambda_min={format_float(rep.gap_lambda_min)}")
    print(f"gap_rel_gap={format_float(rep.gap_rel_gap)}")
    print(f"gap_tol={format_float(rep.gap_tol)}")
    print(f"epsilon={format_float(rep.epsilon)}")
    print(f"status={'pass' if rep.passed else 'fail'}")
    return EXIT_OK if rep.passed else EXIT_VERIFY


def _cmd_dqds(args) -> int:
    mat = load_matrix(args.input)
    if not isinstance(mat, LowerBidiagonal):
        raise FormatError(f"dqds needs a {KIND_BIDIAGONAL!r} matrix file")
    log: list | None = [] if args.log else None
    report = run_dqds(mat, strategy(args.strategy), tol=args.tol, sweep_log=log)
    if args.log:
        lines = [DQDS_LOG_HEADER, "sweep_id,shift,smallest_q"]
        lines += [
            f"{i},{format_float(s)},{format_float(qmin)}" for i, s, qmin in log
        ]
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"iterations={report.iterations}")
    print(f"failures={report.failures}")
    for sigma in report.singular_values:
        print(f"sigma={format_float(sigma)}")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="eigenfloor", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_bounds = sub.add_parser("bounds", help="evaluate the bound set for one input")
    p_bounds.add_argument("input", nargs="?", help="matrix file (tri or bidiag)")
    p_bounds.add_argument(
        "--traces",
        nargs=3,
        type=float,
        metavar=("A", "B", "M"),
        help="trace pair Tr(A^-1) Tr(A^-2) and dimension, instead of a file",
    )
    p_bounds.set_defaults(func=_cmd_bounds)

    p_sweep = sub.add_parser("sweep", help="emit the random-spectrum CSV")
    p_sweep.add_argument("--m", type=int, default=5)
    p_sweep.add_argument("--samples", type=int, default=1000)
    p_sweep.add_argument("--seed", type=int, default=0)
    p_sweep.add_argument("--out", required=True)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_ext = sub.add_parser("extremal", help="verify bound attainment for a trace pair")
    p_ext.add_argument("--traces", nargs=3, type=float, metavar=("A", "B", "M"), required=True)
    p_ext.add_argument("--epsilon", type=float, default=1e-8)
    p_ext.add_argument("--tol", type=float, default=1e-10)
    p_ext.set_defaults(func=_cmd_extremal)

    p_dqds = sub.add_parser("dqds", help="compute bidiagonal singular values")
    p_dqds.add_argument("input", help="bidiag matrix file")
    p_dqds.add_argument("--strategy", choices=("zero", "newton2", "laguerre"), default="laguerre")
    p_dqds.add_argument("--log", help="write a per-sweep shift log CSV here")
    p_dqds.add_argument("--tol", type=float, default=DEFLATION_TOL)
    p_dqds.set_defaults(func=_cmd_dqds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, NotPositiveDefiniteError, SingularMatrixError) as exc:
        print(f"infeasible input: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
