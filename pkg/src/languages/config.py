"""
Language selection for reports and command line messages
"""
from typing import Any, Dict
from .en import TEXTS as EN_TEXTS
from .zh import TEXTS as ZH_TEXTS

LANGUAGE_TEXTS: Dict[str, Dict[str, str]] = {"en": EN_TEXTS, "zh": ZH_TEXTS}
SUPPORTED_LANGUAGES = tuple(LANGUAGE_TEXTS)


class LanguageConfig:
    """Localized texts for one language; unknown codes use English"""

    def __init__(self, language: str = "en"):
        self.language = language.lower()
        self.texts = LANGUAGE_TEXTS.get(self.language, EN_TEXTS)

    def get(self, key: str) -> str:
        """Text for key, falling back to English and then to the key itself"""
        return self.texts.get(key, EN_TEXTS.get(key, key))

    def format(self, key: str, *args: Any) -> str:
        """Text for key with positional placeholders filled in"""
        return self.get(key).format(*args)


def get_language_config(language: str = "en") -> Dict[str, str]:
    """
    Text dictionary for a language code.

    Args:
        language: 'en' or 'zh'

    Returns:
        Dictionary with localized strings
    """
    return LanguageConfig(language).texts
