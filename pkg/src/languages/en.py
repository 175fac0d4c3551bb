"""
English language resources for the curvature bounds tool
"""

TEXTS = {
    # General
    "error": "Error: {}",
    "warning": "Warning: {}",
    "computing": "Computing {} bound for K={}, N={}, D={}...",
    "output_written": "Output written to {}",

    # Command line help
    "help_description": "Sharp Poincare, p-Poincare and log-Sobolev lower bounds under CDD(K, N, D)",
    "help_commands": "Sub-command to run",
    "help_bound": "Compute a sharp lower bound",
    "help_sweep": "Tabulate lambda(h, d) along h or d and check monotonicity",
    "help_check_cd": "Check a sampled density against CD(K, N)",
    "help_profile": "Export density, eigenfunction, isoperimetric profile or supremand curve",
    "help_language": "Report language (en/zh)",
    "help_format": "Output format (text/json/csv)",
    "help_output": "Write the result to this file instead of stdout",
    "help_config": "key = value file overriding run configuration defaults",
    "help_verbose": "Enable debug logging",
    "help_version": "Show the version and exit",
    "help_quiet": "Only log errors",
    "help_workers": "Worker threads for sweeps",
    "help_inequality": "Inequality: poincare, p-poincare or log-sobolev",
    "help_K": "Curvature lower bound K (real)",
    "help_N": "Effective dimension N (real or inf)",
    "help_D": "Diameter bound D (positive real or inf)",
    "help_p": "Exponent p > 1 for p-poincare",
    "help_param": "Swept parameter: h or d",
    "help_range": "Sweep range a:b:n",
    "help_values": "Comma separated sweep values",
    "help_values_file": "File with sweep values (.txt or .csv)",
    "help_fixed_d": "Interval length d when sweeping h",
    "help_fixed_h": "Slope h when sweeping d",
    "help_density": "Two-column CSV (x, value) with the sampled density",
    "help_mode": "Check mode: diff (pointwise differential) or midpoint (distorted means)",
    "help_emit": "Quantity to export",
    "help_h": "Slope h of the model density",
    "help_points": "Rows of density and isoperimetric exports",
    "help_side": "Side of the Hardy supremum: plus (right of the median) or minus",

    # Bound report
    "bound_report_title": "SHARP LOWER BOUND REPORT",
    "inequality": "Inequality",
    "parameters": "Parameters",
    "case_label": "Case",
    "method": "Method",
    "exactness": "Exactness",
    "bound_value": "Lower bound",
    "residual": "Shooting residual",
    "iterations": "Iterations",
    "note": "Note",
    "reference_title": "CLASSICAL BOUNDS",
    "reference_row": "{} ({}): {:.6g}  [{}]",
    "no_reference": "No classical bound applies",
    "bg_bracket": "Bobkov-Goetze bracket: [{:.6g}, {:.6g}]",
    "exactness_exact": "exact",
    "exactness_up_to_constants": "equivalent up to universal constants",

    # Sweep report
    "sweep_report_title": "MONOTONICITY SWEEP",
    "swept_parameter": "Swept parameter",
    "fixed_parameter": "Fixed parameter",
    "regime": "Expected direction",
    "verdict": "Verdict",
    "max_violation": "Largest relative violation",
    "skipped_points": "Skipped points ({}):",
    "skipped_row": "  {}: {}",
    "partial_sweep": "Sweep is partial: {} of {} points lie outside the regular domain",

    # CD report
    "cd_report_title": "CURVATURE-DIMENSION CHECK",
    "cd_mode": "Mode",
    "cd_passed": "PASSED",
    "cd_failed": "VIOLATED",
    "checked_points": "Checked",
    "tolerance": "Tolerance",
    "violation_count": "Violations",
    "max_relative_gap": "Largest relative gap",
    "violation_location": "  x={:.6g}: {:.6g}",
    "midpoint_location": "  x0={:.6g}, x1={:.6g}, t={:.3f}: J(x_t)={:.6g} < M={:.6g}",

    # Profile export
    "profile_rows": "{} rows of {}",

    # Errors
    "proviso_hint": "Choose D < l_delta or a different (K, N)",
    "unsupported_hint": "The model-measure reduction does not cover this range",
    "range_format_error": "Range must have the form a:b:n, got '{}'",
    "no_values": "No parameter values given",
    "must_specify_one_input": "Specify exactly one of --range, --values or --values-file",
    "file_not_found": "File does not exist: {}",
    "unsupported_file_format": "Unsupported file format: {}",
    "missing_fixed_d": "--d is required when sweeping h",
    "missing_fixed_h": "--h is required when sweeping d",
    "emit_requires_finite_d": "--emit {} needs a finite diameter",
}
