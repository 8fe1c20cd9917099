"""Configuration and logging shared by every freefactors module."""

from freefactors.core.config import Settings, settings
from freefactors.core.logging import get_log_context, get_logger, setup_logging

__all__ = ["Settings", "settings", "get_logger", "get_log_context", "setup_logging"]
