"""
Concurrent execution of independent parameter solves

Runs one stateless task per parameter value on a thread pool and collects a
TaskResult per value; errors are captured per task so a sweep can report
skipped rows instead of aborting.
"""

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Sequence

from ..core.config import SweepConfig
from ..core.exceptions import CurvatureBoundsError


@dataclass
class TaskResult:
    """Outcome of one parameter solve"""
    parameter: float
    success: bool
    result: Optional[Any] = None
    error: Optional[str] = None
    error_code: Optional[str] = None


class SweepExecutor:
    """Thread-pool runner for sweep rows; use as a context manager."""

    def __init__(self, config: Optional[SweepConfig] = None):
        self.config = config or SweepConfig()
        self.executor: Optional[ThreadPoolExecutor] = None
        self.logger = logging.getLogger(__name__)

    def __enter__(self) -> "SweepExecutor":
        self.executor = ThreadPoolExecutor(max_workers=max(1, self.config.max_workers))
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        if self.executor:
            self.executor.shutdown(wait=True)
            self.executor = None

    def execute_concurrent(
        self,
        parameters: Sequence[float],
        task_func: Callable[[float], Any],
        progress_callback: Optional[Callable[[float, str], None]] = None,
    ) -> List[TaskResult]:
        """
        Execute one task per parameter

        Args:
            parameters: Parameter values
            task_func: Solve for a single parameter value
            progress_callback: Called with (parameter, status)

        Returns:
            List[TaskResult]: In completion order
        """
        if not self.executor:
            raise RuntimeError("SweepExecutor must be used within a 'with' statement")

        future_to_parameter = {
            self.executor.submit(self._execute_task, value, task_func, progress_callback): value
            for value in parameters
        }
        results = []
        timeout = max(1, len(future_to_parameter)) * self.config.timeout_per_task
        for future in as_completed(future_to_parameter, timeout=timeout):
            value = future_to_parameter[future]
            result = future.result()
            results.append(result)
            if progress_callback:
                progress_callback(value, "completed" if result.success else "failed")
        return results

    def _execute_task(
        self,
        value: float,
        task_func: Callable[[float], Any],
        progress_callback: Optional[Callable[[float, str], None]],
    ) -> TaskResult:
        if progress_callback:
            progress_callback(value, "running")

        try:
            return TaskResult(parameter=value, success=True, result=task_func(value))
        except CurvatureBoundsError as e:
            self.logger.warning("parameter %g skipped: %s", value, e)
            return TaskResult(parameter=value, success=False, error=str(e), error_code=e.error_code)
        except Exception as e:
            self.logger.error("parameter %g failed: %s", value, e)
            return TaskResult(parameter=value, success=False, error=f"Task execution exception: {e}")
