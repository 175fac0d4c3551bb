"""
Batch processing for parameter sweeps
"""

from .concurrent_manager import SweepExecutor, TaskResult
from .input_parser import InputParser

__all__ = ['InputParser', 'SweepExecutor', 'TaskResult']
