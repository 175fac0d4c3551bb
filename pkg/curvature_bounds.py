#!/usr/bin/env python3
"""
Curvature Bounds
Sharp Poincare, p-Poincare and log-Sobolev lower bounds for weighted spaces
under CDD(K, N, D), with monotonicity sweeps, curvature-dimension checks and
profile export.

Exit codes:
- 0 success
- 1 usage, file or solver error
- 2 parameter outside the admissible range (domain, proviso, unsupported range)
- 3 sweep with points outside the regular domain
- 4 curvature-dimension violations

License: MIT
"""

import argparse
import logging
import math
import os
import sys
from typing import Any, Dict, Optional, Sequence

import numpy as np
import pandas as pd

# Repository root on the path when run as a script
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src import __version__
from src.batch.input_parser import InputParser
from src.bounds.dispatcher import BoundDispatcher
from src.bounds.models import BoundRequest, Inequality
from src.bounds.sweeps import diameter_sweep, monotonicity_sweep
from src.core.config import RunConfig
from src.core.exceptions import (
    CurvatureBoundsError,
    DomainError,
    ProvisoError,
    UnsupportedRangeError,
)
from src.density.checkers import cd_differential_check, cd_midpoint_check
from src.density.model_density import sample_density
from src.density.models import ModelMeasure
from src.estimators.distribution import build_distribution
from src.estimators.hardy import bobkov_gotze_estimate, muckenhoupt_estimate, supremand_curve
from src.estimators.isoperimetry import cheeger_constant, isoperimetric_profile_flat, ledoux_constant
from src.languages.config import LanguageConfig
from src.languages.en import TEXTS as EN_TEXTS
from src.languages.zh import TEXTS as ZH_TEXTS
from src.means.dimension import CurvatureDimension, is_inf, parse_extended
from src.solvers.plap_solver import plap_first_eigenvalue
from src.solvers.sl_solver import sl_first_eigenvalue
from src.utils.file_io import ResultFileManager, density_frame, header_from
from src.utils.formatters import format_bound_report, format_cd_report, format_sweep_report

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DOMAIN = 2
EXIT_PARTIAL = 3
EXIT_CD_VIOLATION = 4

RANGE_ERROR_CODES = ("DOMAIN_ERROR", "UNSUPPORTED_RANGE")

EMIT_CHOICES = ['density', 'eigenfunction', 'isoperimetric', 'bg-supremand', 'muckenhoupt-supremand']

logger = logging.getLogger("curvature_bounds")


def _help(key: str) -> str:
    return f'{EN_TEXTS[key]} / {ZH_TEXTS[key]}'


class CommandLineParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1, and out-of-range parameters with 2."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        status = EXIT_DOMAIN if any(f"[{code}]" in message for code in RANGE_ERROR_CODES) else EXIT_ERROR
        self.exit(status, f"{self.prog}: error: {message}\n")


def _extended_real(text: str) -> float:
    try:
        return parse_extended(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a real number or 'inf', got {text!r}")


def _finite_real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a finite real number, got {text!r}")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"expected a finite real number, got {text!r}")
    return value


def _dimension(text: str) -> float:
    value = _extended_real(text)
    if 0.0 < value <= 1.0:
        error = DomainError("N", value, f"N={value:g} lies in (0, 1], outside the curvature-dimension range")
        raise argparse.ArgumentTypeError(str(error))
    return value


def _sharp_bound_dimension(text: str) -> float:
    """Dimension accepted by the bound tables: (-inf, 0] and [2, inf]."""
    value = _dimension(text)
    if 1.0 < value < 2.0:
        error = UnsupportedRangeError("N", value, "the sharp bounds are derived for N in (-inf, 0] and [2, inf]")
        raise argparse.ArgumentTypeError(str(error))
    return value


def _add_global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Global flags; sub-parsers suppress defaults so flags work on both sides of the command."""
    default = (lambda value: argparse.SUPPRESS) if suppress else (lambda value: value)
    parser.add_argument('--lang', default=default('en'), choices=['en', 'zh'], help=_help("help_language"))
    parser.add_argument('--format', default=default(None), choices=['text', 'json', 'csv'], help=_help("help_format"))
    parser.add_argument('--output', default=default(None), metavar='PATH', help=_help("help_output"))
    parser.add_argument('--config', default=default(None), metavar='PATH', help=_help("help_config"))
    parser.add_argument('--workers', default=default(None), type=int, metavar='N', help=_help("help_workers"))
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', '-v', action='store_true', default=default(False), help=_help("help_verbose"))
    verbosity.add_argument('--quiet', '-q', action='store_true', default=default(False), help=_help("help_quiet"))


def _add_cd_options(parser: argparse.ArgumentParser, dimension_type=_dimension) -> None:
    parser.add_argument('--K', required=True, type=_finite_real, help=_help("help_K"))
    parser.add_argument('--N', required=True, type=dimension_type, help=_help("help_N"))


def build_parser() -> argparse.ArgumentParser:
    parser = CommandLineParser(prog='curvature-bounds', description=EN_TEXTS["help_description"])
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}', help=_help("help_version"))
    _add_global_options(parser, suppress=False)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', help=_help("help_commands"))
    commands.required = True

    bound = commands.add_parser('bound', help=_help("help_bound"))
    _add_global_options(bound, suppress=True)
    bound.add_argument('--inequality', required=True, choices=['poincare', 'p-poincare', 'log-sobolev'],
                       help=_help("help_inequality"))
    _add_cd_options(bound, _sharp_bound_dimension)
    bound.add_argument('--D', required=True, type=_extended_real, help=_help("help_D"))
    bound.add_argument('--p', type=_finite_real, default=None, help=_help("help_p"))
    bound.set_defaults(handler=cmd_bound)

    sweep = commands.add_parser('sweep', help=_help("help_sweep"))
    _add_global_options(sweep, suppress=True)
    sweep.add_argument('--param', required=True, choices=['h', 'd'], help=_help("help_param"))
    sweep.add_argument('--range', dest='range_text', metavar='A:B:N', help=_help("help_range"))
    sweep.add_argument('--values', metavar='LIST', help=_help("help_values"))
    sweep.add_argument('--values-file', metavar='FILE', help=_help("help_values_file"))
    _add_cd_options(sweep)
    sweep.add_argument('--d', type=_finite_real, default=None, help=_help("help_fixed_d"))
    sweep.add_argument('--h', type=_finite_real, default=None, help=_help("help_fixed_h"))
    sweep.set_defaults(handler=cmd_sweep)

    check = commands.add_parser('check-cd', help=_help("help_check_cd"))
    _add_global_options(check, suppress=True)
    check.add_argument('--density', required=True, metavar='FILE', help=_help("help_density"))
    _add_cd_options(check)
    check.add_argument('--mode', default='diff', choices=['diff', 'midpoint'], help=_help("help_mode"))
    check.set_defaults(handler=cmd_check_cd)

    profile = commands.add_parser('profile', help=_help("help_profile"))
    _add_global_options(profile, suppress=True)
    _add_cd_options(profile)
    profile.add_argument('--D', required=True, type=_extended_real, help=_help("help_D"))
    profile.add_argument('--h', type=_finite_real, default=0.0, help=_help("help_h"))
    profile.add_argument('--p', type=_finite_real, default=None, help=_help("help_p"))
    profile.add_argument('--emit', required=True, choices=EMIT_CHOICES, help=_help("help_emit"))
    profile.add_argument('--side', default='plus', choices=['plus', 'minus'], help=_help("help_side"))
    profile.add_argument('--points', type=int, default=None, metavar='N', help=_help("help_points"))
    profile.set_defaults(handler=cmd_profile)
    return parser


def configure_logging(verbose: bool, quiet: bool) -> None:
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                        stream=sys.stderr, force=True)


def load_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig.from_file(args.config) if args.config else RunConfig()
    if args.format:
        config.output_format = args.format
    config.language = args.lang
    if args.workers is not None:
        config.sweep.max_workers = args.workers
    if getattr(args, 'points', None) is not None:
        config.profile_points = args.points
    config.validate()
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main function; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else EXIT_ERROR

    configure_logging(args.verbose, args.quiet)
    lang_config = LanguageConfig(args.lang)

    try:
        config = load_config(args)
    except CurvatureBoundsError as e:
        print(lang_config.format("error", str(e)), file=sys.stderr)
        return EXIT_ERROR

    try:
        return args.handler(args, config, lang_config)
    except ProvisoError as e:
        _report_error(e, lang_config, "proviso_hint")
        return EXIT_DOMAIN
    except UnsupportedRangeError as e:
        _report_error(e, lang_config, "unsupported_hint")
        return EXIT_DOMAIN
    except DomainError as e:
        _report_error(e, lang_config)
        return EXIT_DOMAIN
    except CurvatureBoundsError as e:
        _report_error(e, lang_config)
        return EXIT_ERROR
    except Exception as e:
        logger.exception("unexpected failure")
        print(lang_config.format("error", str(e)), file=sys.stderr)
        return EXIT_ERROR


def _report_error(error: Exception, lang_config: LanguageConfig, hint_key: Optional[str] = None) -> None:
    print(lang_config.format("error", str(error)), file=sys.stderr)
    if hint_key:
        print(lang_config.get(hint_key), file=sys.stderr)


def _emit(text: str, args: argparse.Namespace, lang_config: LanguageConfig) -> None:
    """Print or write output; writing is serialized through this single call."""
    if args.output:
        path = ResultFileManager().write_text(text, args.output)
        logger.info(lang_config.format("output_written", path))
    else:
        print(text)


def cmd_bound(args: argparse.Namespace, config: RunConfig, lang_config: LanguageConfig) -> int:
    """Compute one sharp lower bound"""
    request = BoundRequest(Inequality.from_string(args.inequality), args.K, args.N, args.D, args.p)
    logger.info(lang_config.format("computing", args.inequality, args.K, args.N, args.D))
    result = BoundDispatcher(config).evaluate(request)
    data = result.to_dict()
    files = ResultFileManager()

    if config.output_format == 'json':
        text = files.to_json(data, command='bound')
    elif config.output_format == 'csv':
        row = dict(request.to_dict())
        row.update({key: data[key] for key in ('value', 'case_label', 'method', 'exactness')})
        text = files.to_csv(pd.DataFrame([row]), header={"command": "bound"})
    else:
        text = format_bound_report(data, lang_config)
    _emit(text, args, lang_config)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, config: RunConfig, lang_config: LanguageConfig) -> int:
    """Tabulate lambda(h, d) and judge its monotonicity"""
    input_parser = InputParser(lang_config)
    try:
        values = input_parser.parse_input(range_text=args.range_text, values=args.values,
                                          file_path=args.values_file)
    except DomainError as e:
        print(lang_config.format("error", str(e)), file=sys.stderr)
        return EXIT_ERROR

    if args.param == 'h':
        if args.d is None:
            print(lang_config.format("error", lang_config.get("missing_fixed_d")), file=sys.stderr)
            return EXIT_ERROR
        result = monotonicity_sweep(args.K, args.N, args.d, values, config)
    else:
        if args.h is None:
            print(lang_config.format("error", lang_config.get("missing_fixed_h")), file=sys.stderr)
            return EXIT_ERROR
        result = diameter_sweep(args.K, args.N, args.h, values, config)

    data = result.to_dict()
    files = ResultFileManager()
    if config.output_format == 'json':
        text = files.to_json(data, command='sweep')
    elif config.output_format == 'csv':
        header = header_from([("parameter", result.parameter), ("K", result.K), ("N", result.N),
                              ("fixed", result.fixed), ("regime", result.regime.value),
                              ("verdict", result.verdict.value), ("skipped", len(result.skipped))])
        text = files.to_csv(result.table, header=header)
    else:
        text = format_sweep_report(data, lang_config)
    _emit(text, args, lang_config)
    if result.partial:
        message = lang_config.format("partial_sweep", len(result.skipped), len(result.table))
        print(lang_config.format("warning", message), file=sys.stderr)
    return EXIT_PARTIAL if result.partial else EXIT_OK


def cmd_check_cd(args: argparse.Namespace, config: RunConfig, lang_config: LanguageConfig) -> int:
    """Check a sampled density against CD(K, N)"""
    files = ResultFileManager()
    density = files.read_density(args.density)
    if args.mode == 'diff':
        report = cd_differential_check(density, args.K, args.N, tol_constant=config.checker.tol_constant)
    else:
        report = cd_midpoint_check(density, args.K, args.N, n_triples=config.checker.n_triples,
                                   seed=config.seed, rel_tol=config.checker.midpoint_rel_tol)

    data = report.to_dict()
    if config.output_format == 'json':
        text = files.to_json(data, command='check-cd')
    elif config.output_format == 'csv':
        header = header_from([("mode", report.mode), ("K", report.K), ("N", report.N), ("passed", report.passed),
                              ("max_violation", report.max_violation), ("tolerance", report.tolerance)])
        text = files.to_csv(pd.DataFrame(report.violations), header=header)
    else:
        text = format_cd_report(data, lang_config)
    _emit(text, args, lang_config)
    return EXIT_OK if report.passed else EXIT_CD_VIOLATION


def cmd_profile(args: argparse.Namespace, config: RunConfig, lang_config: LanguageConfig) -> int:
    """Export a profile table for plotting"""
    if is_inf(args.D):
        raise DomainError("D", args.D, lang_config.format("emit_requires_finite_d", args.emit))
    if not args.D > 0:
        raise DomainError("D", args.D, f"Diameter must be positive, got {args.D}")
    cd = CurvatureDimension(args.K, args.N)
    half = args.D / 2.0
    measure = ModelMeasure(cd, args.h, -half, half)
    header: Dict[str, Any] = {"emit": args.emit, "K": args.K, "N": args.N, "D": args.D, "h": args.h}

    if args.emit == 'density':
        frame = density_frame(sample_density(measure, config.profile_points))
    elif args.emit == 'eigenfunction':
        if args.p is not None and args.p != 2.0:
            eigen = plap_first_eigenvalue(measure, args.p, config.solver.rel_tol, config.solver)
            header["p"] = args.p
        else:
            eigen = sl_first_eigenvalue(measure, config.solver.rel_tol, config.solver)
        header.update({"lambda": eigen.eigenvalue, "residual": eigen.phase_residual})
        frame = density_frame(eigen.eigenfunction, value_column="u")
    else:
        dist = build_distribution(sample_density(measure, config.estimator.grid_points))
        if args.emit == 'isoperimetric':
            levels = np.linspace(0.0, 1.0, config.profile_points + 2)[1:-1]
            frame = pd.DataFrame({"t": levels,
                                  "I_flat": [isoperimetric_profile_flat(dist, float(t)) for t in levels]})
            header["cheeger_constant"] = cheeger_constant(dist)
            header["ledoux_constant"] = ledoux_constant(dist)
        else:
            logarithmic = args.emit == 'bg-supremand'
            curve = supremand_curve(dist, args.side, logarithmic=logarithmic, refine=config.estimator.refine)
            if logarithmic:
                estimate = bobkov_gotze_estimate(dist, config.estimator)
            else:
                estimate = muckenhoupt_estimate(dist, config.estimator)
            header.update({"side": args.side, "supremum": curve.supremum, "argmax": curve.argmax,
                           "b_plus": estimate.b_plus, "b_minus": estimate.b_minus,
                           "lower": estimate.lower, "upper": estimate.upper})
            frame = pd.DataFrame({"x": curve.x, "value": curve.values})

    logger.info(lang_config.format("profile_rows", len(frame), args.emit))
    files = ResultFileManager()
    if config.output_format == 'json':
        data = {"header": header, "measure": measure.to_dict(), "columns": list(frame.columns),
                "data": {column: frame[column].tolist() for column in frame.columns}}
        text = files.to_json(data, command='profile')
    else:
        text = files.to_csv(frame, header=header)
    _emit(text, args, lang_config)
    return EXIT_OK


if __name__ == "__main__":
    exit(main())
