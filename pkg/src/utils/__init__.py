# Utils package
from .file_io import ResultFileManager, density_frame, header_from
from .formatters import (
    format_bound_report,
    format_cd_report,
    format_number,
    format_sweep_report,
)

__all__ = [
    "ResultFileManager",
    "density_frame",
    "header_from",
    "format_bound_report",
    "format_cd_report",
    "format_number",
    "format_sweep_report",
]
