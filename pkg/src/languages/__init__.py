"""
Language package for report and command line texts
Supports English and Chinese localization
"""

from .config import LanguageConfig, get_language_config
from .en import TEXTS as EN_TEXTS
from .zh import TEXTS as ZH_TEXTS

__all__ = ['EN_TEXTS', 'ZH_TEXTS', 'LanguageConfig', 'get_language_config']
