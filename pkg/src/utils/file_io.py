"""
Result File Management

Handles reading sampled densities and writing results:
- JSON output (indent 2, sorted keys, inf spelled "inf")
- CSV output through pandas with '#'-prefixed header comments
- Density input from two-column CSV (x, value) or JSON {x0, dx, values}
"""

import io
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

import numpy as np
import pandas as pd

from ..core.exceptions import CurvatureBoundsError, FileOperationError
from ..density.models import GridDensity

FORMAT_VERSION = "1.0"


def _json_default(value: Any) -> Any:
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return _plain_float(float(value))
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, tuple):
        return list(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def _plain_float(value: float) -> Any:
    if math.isnan(value):
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


def _plain(value: Any) -> Any:
    """Replace non-finite floats recursively; json.dumps would emit Infinity."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (float, np.floating)):
        return _plain_float(float(value))
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    return value


def density_frame(density: GridDensity, value_column: str = "value") -> pd.DataFrame:
    """Two-column frame (x, value_column) of a sampled function."""
    return pd.DataFrame({"x": density.x, value_column: np.asarray(density.values)})


class ResultFileManager:
    """Writes JSON and CSV results and reads sampled densities."""

    def __init__(self, float_format: str = "%.12g"):
        self.float_format = float_format
        self.logger = logging.getLogger(__name__)

    def to_json(self, data: Dict[str, Any], command: Optional[str] = None) -> str:
        """Serialize a result dictionary with a _metadata block."""
        payload = dict(_plain(data))
        payload["_metadata"] = {"version": FORMAT_VERSION, "file_format": "json"}
        if command:
            payload["_metadata"]["command"] = command
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False,
                          default=_json_default, allow_nan=False)

    def to_csv(self, frame: pd.DataFrame, header: Optional[Dict[str, Any]] = None) -> str:
        """CSV text with '# key: value' comment lines before the table."""
        buffer = io.StringIO()
        for key, value in (header or {}).items():
            buffer.write(f"# {key}: {_plain(value)}\n")
        frame.to_csv(buffer, index=False, float_format=self.float_format, na_rep="nan")
        return buffer.getvalue()

    def write_text(self, text: str, file_path: Union[str, Path]) -> str:
        """
        Write text output to a file.

        Args:
            text: Rendered output
            file_path: Destination; parent directories are created

        Returns:
            str: Path to the written file

        Raises:
            FileOperationError: If the write fails
        """
        target = Path(file_path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            with open(target, 'w', encoding='utf-8') as f:
                f.write(text if text.endswith("\n") else text + "\n")
        except OSError as e:
            raise FileOperationError("write", str(target), e)
        self.logger.info("wrote %s", target)
        return str(target)

    def read_density(self, file_path: Union[str, Path]) -> GridDensity:
        """
        Load a sampled density from .csv or .json.

        Args:
            file_path: Path to the density file

        Returns:
            GridDensity: Uniform-grid density

        Raises:
            FileOperationError: If the file is missing, unreadable or not a valid density
        """
        path = Path(file_path)
        if not path.exists():
            raise FileOperationError("read", str(path), FileNotFoundError(f"File not found: {path}"))
        try:
            if path.suffix.lower() == ".json":
                with open(path, 'r', encoding='utf-8') as f:
                    return GridDensity.from_dict(json.load(f))
            return self._read_density_csv(path)
        except FileOperationError:
            raise
        except (OSError, ValueError, CurvatureBoundsError, pd.errors.ParserError) as e:
            raise FileOperationError("read", str(path), e)

    def _read_density_csv(self, path: Path) -> GridDensity:
        frame = pd.read_csv(path, comment="#", header=None, skip_blank_lines=True)
        if frame.shape[1] < 2:
            raise ValueError("expected two columns (x, value)")
        frame = frame.iloc[:, :2]
        # A non-numeric first row is a header
        first = pd.to_numeric(frame.iloc[0], errors="coerce")
        if first.isna().any():
            frame = frame.iloc[1:]
        numeric = frame.apply(pd.to_numeric, errors="coerce")
        if numeric.isna().to_numpy().any():
            raise ValueError("non-numeric entries in density table")
        self.logger.debug("read %d density samples from %s", len(numeric), path)
        return GridDensity.from_samples(numeric.iloc[:, 0].to_numpy(dtype=float),
                                        numeric.iloc[:, 1].to_numpy(dtype=float))


def header_from(items: Iterable[tuple]) -> Dict[str, Any]:
    """Ordered header dictionary from (key, value) pairs, dropping None values."""
    return {key: value for key, value in items if value is not None}
