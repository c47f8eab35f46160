"""
Colored logging utility for component-specific loggers.
Gives each CLI verb (cube, cset, graph, nerve, enriched, dmsl) its own colored prefix.
"""

import logging
import sys
from typing import Dict, Optional
from dataclasses import dataclass

try:
    from colorama import init, Fore, Style
    init(autoreset=True)
    COLORAMA_AVAILABLE = True
except ImportError:
    COLORAMA_AVAILABLE = False
    # Fallback ANSI color codes
    class Fore:
        RED = '\033[31m'
        GREEN = '\033[32m'
        YELLOW = '\033[33m'
        BLUE = '\033[34m'
        MAGENTA = '\033[35m'
        CYAN = '\033[36m'
        WHITE = '\033[37m'
        RESET = '\033[0m'

    class Style:
        BRIGHT = '\033[1m'
        RESET_ALL = '\033[0m'

from models.constants import LOG_FORMAT


@dataclass
class ComponentColors:
    """Color scheme for one component"""
    primary: str
    accent: str


class ColoredFormatter(logging.Formatter):
    """Formatter that prefixes records with a colored component tag"""

    def __init__(self, colors: ComponentColors, component: str, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.colors = colors
        self.component = component

        self.level_colors = {
            logging.DEBUG: Fore.WHITE,
            logging.INFO: self.colors.primary,
            logging.WARNING: Fore.YELLOW,
            logging.ERROR: Fore.RED,
            logging.CRITICAL: Fore.RED + Style.BRIGHT,
        }

    def format(self, record):
        color = self.level_colors.get(record.levelno, Fore.WHITE)
        formatted = super().format(record)
        prefix = f"[{self.colors.accent}{self.component}{Fore.RESET}]"
        return f"{prefix} {color}{formatted}{Fore.RESET}"


class ComponentLoggerManager:
    """Hands out one colored logger per component, reusing it on later calls"""

    # Fixed schemes for the known verbs keep output stable between runs
    KNOWN_SCHEMES = {
        "cube": ComponentColors(primary=Fore.CYAN, accent=Fore.CYAN + Style.BRIGHT),
        "cset": ComponentColors(primary=Fore.GREEN, accent=Fore.GREEN + Style.BRIGHT),
        "graph": ComponentColors(primary=Fore.MAGENTA, accent=Fore.MAGENTA + Style.BRIGHT),
        "nerve": ComponentColors(primary=Fore.BLUE, accent=Fore.BLUE + Style.BRIGHT),
        "enriched": ComponentColors(primary=Fore.YELLOW, accent=Fore.YELLOW + Style.BRIGHT),
        "dmsl": ComponentColors(primary=Fore.WHITE, accent=Fore.WHITE + Style.BRIGHT),
    }
    FALLBACK = ComponentColors(primary=Fore.WHITE, accent=Style.BRIGHT)

    def __init__(self):
        self.loggers: Dict[str, logging.Logger] = {}

    def get_component_logger(self, component: str, stream=None) -> logging.Logger:
        """
        Get or create the colored logger of a component

        Args:
            component: verb or package name, e.g. "graph"
            stream: output stream, stderr by default so stdout stays parseable

        Returns:
            Configured logger with colored output
        """
        if component in self.loggers:
            return self.loggers[component]

        logger = logging.getLogger(f"cubix.{component}")
        for handler in logger.handlers[:]:
            logger.removeHandler(handler)

        handler = logging.StreamHandler(stream or sys.stderr)
        colors = self.KNOWN_SCHEMES.get(component, self.FALLBACK)
        handler.setFormatter(ColoredFormatter(colors=colors, component=component, fmt=LOG_FORMAT))
        logger.addHandler(handler)
        logger.propagate = False

        self.loggers[component] = logger
        return logger


# Global instance
_component_logger_manager = ComponentLoggerManager()


def get_component_logger(component: str) -> logging.Logger:
    """Get the colored logger of a component"""
    return _component_logger_manager.get_component_logger(component)


def setup_root_logger(level: str = "WARNING", format_string: Optional[str] = None):
    """Setup the root logger with basic configuration"""
    if format_string is None:
        format_string = LOG_FORMAT

    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format=format_string,
        stream=sys.stderr,
    )
