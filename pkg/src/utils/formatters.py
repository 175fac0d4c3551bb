"""
Utility functions for formatting text reports
"""
import math
from typing import Any, Dict, List

SEPARATOR = '=' * 60


def format_number(value: Any) -> str:
    """Six significant digits; inf and None spelled out."""
    if value is None:
        return "-"
    if isinstance(value, str):
        return value
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.6g}"


def _exactness_text(exactness: str, lang_config) -> str:
    return lang_config.get(f"exactness_{exactness}")


def format_bound_report(result: Dict[str, Any], lang_config) -> str:
    """Format a BoundResult dictionary"""
    request = result.get("request", {})
    diagnostics = result.get("diagnostics", {})

    report = f"""
{SEPARATOR}
           {lang_config.get('bound_report_title')}
{SEPARATOR}

{lang_config.get('inequality')}: {request.get('inequality', '-')}
{lang_config.get('parameters')}: K={format_number(request.get('K'))}, N={format_number(request.get('N'))}, D={format_number(request.get('D'))}"""
    if request.get("p") is not None:
        report += f", p={format_number(request['p'])}"
    report += f"""
{lang_config.get('case_label')}: {result['case_label']}
{lang_config.get('method')}: {result['method']}
{lang_config.get('exactness')}: {_exactness_text(result['exactness'], lang_config)}

{lang_config.get('bound_value')}: {format_number(result['value'])}
"""
    if "residual" in diagnostics:
        report += f"{lang_config.get('residual')}: {format_number(diagnostics['residual'])}\n"
    if "iterations" in diagnostics:
        report += f"{lang_config.get('iterations')}: {diagnostics['iterations']}\n"
    if diagnostics.get("note"):
        report += f"{lang_config.get('note')}: {diagnostics['note']}\n"
    bracket = diagnostics.get("bobkov_gotze")
    if bracket:
        report += lang_config.format('bg_bracket', bracket['lower'], _as_float(bracket['upper'])) + "\n"

    references: List[Dict[str, Any]] = diagnostics.get("reference_bounds", [])
    if "reference_bounds" in diagnostics:
        report += f"\n{SEPARATOR}\n{lang_config.get('reference_title')}\n{SEPARATOR}\n"
        if references:
            for row in references:
                report += lang_config.format('reference_row',
                    row['name'], row['year'], row['value'], row['condition']) + "\n"
        else:
            report += lang_config.get('no_reference') + "\n"

    report += SEPARATOR
    return report


def _as_float(value: Any) -> float:
    return math.inf if value == "inf" else float(value)


def format_sweep_report(result: Dict[str, Any], lang_config) -> str:
    """Format a SweepResult dictionary as a report with an aligned table"""
    fixed_name = "d" if result["parameter"] == "h" else "h"
    rows = result["rows"]

    report = f"""
{SEPARATOR}
           {lang_config.get('sweep_report_title')}
{SEPARATOR}

{lang_config.get('parameters')}: K={format_number(result['K'])}, N={format_number(result['N'])}
{lang_config.get('swept_parameter')}: {result['parameter']}
{lang_config.get('fixed_parameter')}: {fixed_name}={format_number(result['fixed'])}
{lang_config.get('regime')}: {result['regime']}

{result['parameter']:>12}  {'lambda':>16}  {'residual':>12}  flag
"""
    for row in rows:
        report += (f"{format_number(row['h_or_d']):>12}  {format_number(row['lambda']):>16}  "
                   f"{format_number(row['residual']):>12}  {row['verdict_flag']}\n")

    report += f"\n{lang_config.get('verdict')}: {result['verdict']}\n"
    report += f"{lang_config.get('max_violation')}: {format_number(result['max_violation'])}\n"
    if result["skipped"]:
        report += lang_config.format('partial_sweep', len(result["skipped"]), len(rows)) + "\n"
        report += lang_config.format('skipped_points', len(result["skipped"])) + "\n"
        for item in result["skipped"]:
            report += lang_config.format('skipped_row', format_number(item['value']), item['reason']) + "\n"
    report += SEPARATOR
    return report


def format_cd_report(report_data: Dict[str, Any], lang_config) -> str:
    """Format a CDReport dictionary"""
    status = lang_config.get('cd_passed') if report_data["passed"] else lang_config.get('cd_failed')
    report = f"""
{SEPARATOR}
           {lang_config.get('cd_report_title')}
{SEPARATOR}

{lang_config.get('parameters')}: K={format_number(report_data['K'])}, N={format_number(report_data['N'])}
{lang_config.get('cd_mode')}: {report_data['mode']}
{lang_config.get('verdict')}: {status}
{lang_config.get('checked_points')}: {report_data['n_checked']}
{lang_config.get('tolerance')}: {format_number(report_data['tolerance'])}
{lang_config.get('max_violation')}: {format_number(report_data['max_violation'])}
{lang_config.get('violation_count')}: {report_data['n_violations']}
"""
    if report_data.get("max_relative_gap") is not None:
        report += f"{lang_config.get('max_relative_gap')}: {format_number(report_data['max_relative_gap'])}\n"
    for item in report_data["violations"]:
        if "x" in item:
            report += lang_config.format('violation_location', item['x'], item['violation']) + "\n"
        else:
            report += lang_config.format('midpoint_location',
                item['x0'], item['x1'], item['t'], item['lhs'], item['rhs']) + "\n"
    report += SEPARATOR
    return report
