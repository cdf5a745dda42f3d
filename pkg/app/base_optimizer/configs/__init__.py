"""應用程式組態設定模組。

此模組使用 `pydantic-settings` 函式庫定義用於從環境變數載入
各演算法列舉上限與日誌等級的設定類別。
"""
from enum import Enum

from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(str, Enum):
    """日誌級別列舉"""
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class EnvSetting(BaseSettings):
    """所有環境變數設定類的基底類別。

    透過 `model_config` 設定 Pydantic 的行為：
    - `extra="ignore"`: 忽略環境變數中未在模型中定義的額外欄位。
    - `case_sensitive=False`: 環境變數名稱不區分大小寫。
    """
    model_config = SettingsConfigDict(extra="ignore", case_sensitive=False)


class GuardEnv(EnvSetting):
    """指數級列舉的上限設定。

    使用 `env_prefix="BASEOPT_GUARD_"`，例如 `lattice_max_elements`
    對應環境變數 `BASEOPT_GUARD_LATTICE_MAX_ELEMENTS`。

    Attributes:
        lattice_max_elements (int): 列舉整個閉集格時允許的最大元素數。預設 20。
        hypergraph_max_exponent (int): 建立擬閉超圖時，候選集合數量上限為
                                       `2 ** hypergraph_max_exponent`。預設 20。
        oracle_max_elements (int): 暴力參考實作允許的最大集合大小。預設 14。
    """
    model_config = SettingsConfigDict(env_prefix="BASEOPT_GUARD_")

    lattice_max_elements: int = 20
    hypergraph_max_exponent: int = 20
    oracle_max_elements: int = 14


class LogEnv(EnvSetting):
    """日誌輸出設定。

    Attributes:
        level (LogLevel): 最低輸出等級，對應環境變數 `BASEOPT_LOG_LEVEL`。預設 WARNING。
    """
    model_config = SettingsConfigDict(env_prefix="BASEOPT_LOG_")

    level: LogLevel = LogLevel.WARNING


guard_env = GuardEnv()
log_env = LogEnv()
