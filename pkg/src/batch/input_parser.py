"""
Input parser for sweep parameter lists

Supported input formats:
- Range strings ``a:b:n`` (n evenly spaced points, endpoints included)
- Comma separated value lists (``0.1, 1, 2``)
- Value files (.txt one or more values per line, .csv first column)
"""

import csv
import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from ..core.exceptions import DomainError, FileOperationError
from ..means.dimension import parse_extended


class InputParser:
    """Parameter-list parser for the sweep command"""

    def __init__(self, lang_config=None):
        self.lang_config = lang_config
        self.supported_formats = {'.txt', '.csv'}
        self.max_points = 10000  # Hard cap on a single sweep
        self.logger = logging.getLogger(__name__)

    def _text(self, key: str, default: str) -> str:
        if self.lang_config:
            return self.lang_config.get(key)
        return default

    def parse_range(self, text: str) -> np.ndarray:
        """
        Parse ``a:b:n`` into n evenly spaced values from a to b

        Args:
            text: Range string

        Returns:
            np.ndarray: Sweep values
        """
        parts = [part.strip() for part in text.split(':')]
        if len(parts) != 3:
            raise DomainError("range", text, self._text(
                "range_format_error", "Range must have the form a:b:n").format(text))
        try:
            start, stop = float(parts[0]), float(parts[1])
            count = int(parts[2])
        except ValueError:
            raise DomainError("range", text, self._text(
                "range_format_error", "Range must have the form a:b:n").format(text))

        if not (np.isfinite(start) and np.isfinite(stop)):
            raise DomainError("range", text, "Range endpoints must be finite")
        if count < 1 or count > self.max_points:
            raise DomainError("range", text, f"Point count must lie in [1, {self.max_points}], got {count}")
        if count == 1:
            if start != stop:
                raise DomainError("range", text, "A single-point range needs a == b")
            return np.array([start])
        return np.linspace(start, stop, count)

    def parse_values(self, text: str) -> np.ndarray:
        """Parse a comma separated list of finite reals."""
        raw = [item.strip() for item in text.split(',') if item.strip()]
        if not raw:
            raise DomainError("values", text, self._text("no_values", "No parameter values given"))
        return self._finite_array(raw, text)

    def parse_file(self, file_path: Union[str, Path]) -> np.ndarray:
        """Read sweep values from a .txt or .csv file; '#' lines are comments."""
        path = Path(file_path)
        if not path.exists():
            raise FileOperationError("read", str(path), FileNotFoundError(
                self._text("file_not_found", "File does not exist: {}").format(path)))
        if path.suffix.lower() not in self.supported_formats:
            raise FileOperationError("read", str(path), ValueError(
                self._text("unsupported_file_format", "Unsupported file format: {}").format(path.suffix)))

        raw: List[str] = []
        try:
            with open(path, 'r', encoding='utf-8') as f:
                if path.suffix.lower() == '.csv':
                    for row in csv.reader(line for line in f if not line.lstrip().startswith('#')):
                        if row and row[0].strip():
                            raw.append(row[0].strip())
                else:
                    for line in f:
                        line = line.strip()
                        if not line or line.startswith('#'):
                            continue
                        raw.extend(token for token in line.replace(',', ' ').split() if token)
        except OSError as e:
            raise FileOperationError("read", str(path), e)

        # A non-numeric first cell is a header
        if raw:
            try:
                float(raw[0])
            except ValueError:
                raw = raw[1:]
        if not raw:
            raise DomainError("values", str(path), self._text("no_values", "No parameter values given"))
        self.logger.debug("read %d sweep values from %s", len(raw), path)
        return self._finite_array(raw, str(path))

    def parse_input(self, range_text: Optional[str] = None, values: Optional[str] = None,
                    file_path: Optional[str] = None) -> np.ndarray:
        """Exactly one of range_text, values or file_path must be given."""
        given = [item for item in (range_text, values, file_path) if item]
        if len(given) != 1:
            raise DomainError("input", given, self._text(
                "must_specify_one_input", "Specify exactly one of --range, --values or --values-file"))
        if range_text:
            return self.parse_range(range_text)
        if values:
            return self.parse_values(values)
        return self.parse_file(file_path)  # type: ignore[arg-type]

    def _finite_array(self, raw: List[str], source: str) -> np.ndarray:
        try:
            parsed = np.array([parse_extended(item) for item in raw], dtype=float)
        except ValueError as e:
            raise DomainError("values", source, f"Could not parse parameter values: {e}")
        if not np.all(np.isfinite(parsed)):
            raise DomainError("values", source, "Sweep values must be finite")
        if parsed.size > self.max_points:
            raise DomainError("values", source, f"At most {self.max_points} sweep values are supported")
        return parsed
