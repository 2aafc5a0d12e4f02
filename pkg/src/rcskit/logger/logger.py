"""
Logger

Records go to the `rcskit` logger, which never propagates to the root logger. The first record
attaches a console handler (INFO, stderr); `configure()` swaps in explicit levels, a format and an
optional timestamped log file.

Functions:
    configure: Replace handlers with explicit settings
    debug: DEBUG, caller location by default
    info: INFO, no location by default
    warning: WARNING, caller location by default
    error: ERROR, optional traceback
    critical: CRITICAL, traceback by default
    exception: ERROR with the active exception's traceback
"""

# -----------------------------------------------------------------------------
# Standard Libraries
# -----------------------------------------------------------------------------
import logging
import os
import sys
import traceback
from datetime   import datetime
from pathlib    import Path
from typing     import Optional

# -----------------------------------------------------------------------------
# Third-Party Libraries
# -----------------------------------------------------------------------------
from attrs      import define

__all__ = ["LOGGER_NAME", "DEFAULT_FORMAT", "configure", "debug", "info", "warning", "error", "critical", "exception"]

LOGGER_NAME    = "rcskit"
DEFAULT_FORMAT = "%(levelname).1s|%(asctime)s|%(message)s"
LOG_FILE       = "rcskit.log"

# Caller paths are shown relative to the directory holding the package
_SOURCE_ROOT   = Path(__file__).resolve().parents[2]


@define
class _State:
    configured: bool = False
    log_dir:    Optional[Path] = None


_state = _State()


def _logger() -> logging.Logger:
    return logging.getLogger(LOGGER_NAME)


def _install(console_level: int, file_level: int, log_dir: Optional[str | Path], log_format: str) -> Optional[Path]:
    """Replace every handler; returns the timestamped log directory when a file is attached."""
    logger = _logger()
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = False

    formatter = logging.Formatter(log_format)
    # stderr, so command summaries on stdout stay clean
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(console_level)
    console.setFormatter(formatter)
    logger.addHandler(console)

    run_dir = None
    if log_dir:
        run_dir = Path(log_dir) / datetime.now().strftime("%Y-%m-%d_%H-%M")
        run_dir.mkdir(parents=True, exist_ok=True)
        log_file = logging.FileHandler(run_dir / LOG_FILE, encoding="utf-8")
        log_file.setLevel(file_level)
        log_file.setFormatter(formatter)
        logger.addHandler(log_file)

    logger.setLevel(min(console_level, file_level) if run_dir else console_level)
    _state.configured = True
    _state.log_dir    = run_dir
    return run_dir


def configure(log_dir:          Optional[str | Path] = None,
              console_level:    int = logging.INFO,
              file_level:       int = logging.DEBUG,
              log_format:       Optional[str] = None) -> Optional[Path]:
    """
    Configure logging explicitly. Calling it again replaces the previous handlers.

    Args:
        log_dir: Directory for log files; None falls back to RCSKIT_LOG_DIR, then console only
        console_level: Console threshold
        file_level: Log file threshold
        log_format: Record format (default `DEFAULT_FORMAT`)

    Returns:
        The timestamped directory holding `rcskit.log`, or None when logging to the console only.
    """
    log_dir = log_dir or os.environ.get("RCSKIT_LOG_DIR") or None
    run_dir = _install(console_level, file_level, log_dir, log_format or DEFAULT_FORMAT)
    if run_dir is not None:
        _logger().debug(f"logging to {run_dir / LOG_FILE}")
    return run_dir


def _caller() -> str:
    frame = sys._getframe(1)
    while frame is not None and frame.f_code.co_filename == __file__:
        frame = frame.f_back
    if frame is None:
        return "[unknown]"
    path = Path(frame.f_code.co_filename)
    try:
        shown = path.resolve().relative_to(_SOURCE_ROOT).as_posix()
    except ValueError:
        shown = path.name
    return f"[{shown}:{frame.f_lineno} in {frame.f_code.co_name}]"


def _emit(level: int, msg: str, include_location: bool, include_traceback: bool = False) -> None:
    if not _state.configured:
        _install(logging.INFO, logging.DEBUG, os.environ.get("RCSKIT_LOG_DIR") or None, DEFAULT_FORMAT)
    logger = _logger()
    # Location lookup walks the stack
    if not logger.isEnabledFor(level):
        return
    text = f"{_caller()} {msg}" if include_location else msg
    if include_traceback:
        if sys.exc_info()[0] is not None:
            logger.log(level, text, exc_info=True)
            return
        text += "\nStack trace:\n" + "".join(traceback.format_stack()[:-2])
    logger.log(level, text)


def debug(msg: str, include_location: bool = True) -> None:
    _emit(logging.DEBUG, msg, include_location)


def info(msg: str, include_location: bool = False) -> None:
    _emit(logging.INFO, msg, include_location)


def warning(msg: str, include_location: bool = True) -> None:
    _emit(logging.WARNING, msg, include_location)


def error(msg: str, include_location: bool = True, include_traceback: bool = False) -> None:
    """
    Log an error.

    Args:
        msg: Message
        include_location: Prefix `[file:line in function]`
        include_traceback: Attach the active exception, or the current stack outside a handler
    """
    _emit(logging.ERROR, msg, include_location, include_traceback)


def critical(msg: str, include_location: bool = True, include_traceback: bool = True) -> None:
    _emit(logging.CRITICAL, msg, include_location, include_traceback)


def exception(msg: str, include_location: bool = True) -> None:
    """Log an error with the traceback of the exception being handled."""
    _emit(logging.ERROR, msg, include_location, include_traceback=True)
