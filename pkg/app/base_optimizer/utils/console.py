"""主控台日誌工具模組。

提供 `debug`、`info`、`warn`、`error` 等函式，以 `rich` 輸出到標準錯誤，
並依 `LogEnv.level` 過濾。標準輸出保留給命令列的結果報表。
"""
from rich.console import Console
from rich.text import Text

from ..configs import LogLevel, log_env

_console = Console(stderr=True)

_LEVEL_ORDER = {
    LogLevel.DEBUG: 10,
    LogLevel.INFO: 20,
    LogLevel.WARNING: 30,
    LogLevel.ERROR: 40,
}

_LEVEL_STYLE = {
    LogLevel.DEBUG: "dim",
    LogLevel.INFO: "cyan",
    LogLevel.WARNING: "yellow",
    LogLevel.ERROR: "bold red",
}

_current_level: LogLevel = log_env.level


def set_log_level(level: LogLevel) -> None:
    """設定目前的最低輸出等級。

    Args:
        level (LogLevel): 新的日誌等級。
    """
    global _current_level
    _current_level = level


def _emit(level: LogLevel, message: str) -> None:
    if _LEVEL_ORDER[level] < _LEVEL_ORDER[_current_level]:
        return
    # 訊息內含 [x, y] 之類的文字，不可當作 rich markup 解析
    _console.print(Text.assemble((f"[{level.value}] ", _LEVEL_STYLE[level]), message))


def debug(message: str) -> None:
    """輸出除錯訊息。"""
    _emit(LogLevel.DEBUG, message)


def info(message: str) -> None:
    """輸出一般資訊。"""
    _emit(LogLevel.INFO, message)


def warn(message: str) -> None:
    """輸出警告訊息。"""
    _emit(LogLevel.WARNING, message)


def error(message: str) -> None:
    """輸出錯誤訊息。"""
    _emit(LogLevel.ERROR, message)
