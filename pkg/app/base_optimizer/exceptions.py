"""閉包系統最佳化套件的例外類別模組。

所有領域例外皆繼承自 `BaseOptimizerError`，並帶有一個機器可讀的 `code`，
命令列介面會以 `error: <code>: <message>` 的格式輸出。
"""
from typing import Optional


class BaseOptimizerError(Exception):
    """所有領域例外的基底類別。

    Attributes:
        code (str): 機器可讀的錯誤代碼。
    """
    code: str = "ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class GuardError(BaseOptimizerError):
    """指數級列舉超出組態上限時拋出。"""
    code = "GUARD"


class UniverseTooLarge(GuardError):
    """基底集合超過允許的元素數量。"""


class CandidateLimitExceeded(GuardError):
    """超圖邊列舉的候選集合數量超出上限。"""


class UniverseMismatch(BaseOptimizerError):
    """兩個物件不屬於同一個基底集合。"""
    code = "UNIVERSE"


class NotClosed(BaseOptimizerError):
    """傳入的集合不是閉集。"""
    code = "NOT_CLOSED"


class NotEssential(BaseOptimizerError):
    """傳入的閉集沒有任何擬閉生成集 (非本質集)。"""
    code = "NOT_ESSENTIAL"


class NotConvexGeometry(BaseOptimizerError):
    """此操作僅適用於凸幾何。"""
    code = "NOT_CG"


class NotABase(BaseOptimizerError):
    """候選蘊涵集合與原基底不等價。"""
    code = "NOT_A_BASE"


class InvalidImplication(BaseOptimizerError):
    """候選蘊涵在原閉包系統中不成立。"""
    code = "INVALID_IMPLICATION"


class NotComparable(BaseOptimizerError):
    """偏序集中兩元素不可比較 (或順序相反)。"""
    code = "NOT_COMPARABLE"


class DimensionMismatch(BaseOptimizerError):
    """點座標維度與設定的維度不一致。"""
    code = "DIMENSION"


class OracleInconsistency(BaseOptimizerError):
    """暴力參考實作偵測到閉集族不滿足閉包系統公理。"""
    code = "ORACLE"


class FileFormatError(BaseOptimizerError):
    """文字檔格式解析錯誤，附帶行號。

    Attributes:
        line_number (Optional[int]): 發生錯誤的行號 (從 1 起算)，未知時為 `None`。
    """
    code = "PARSE"

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"第 {line_number} 行: {message}"
        super().__init__(message)
        self.line_number = line_number


class InvalidParameter(BaseOptimizerError):
    """產生器或指令收到超出範圍的參數。"""
    code = "ARGUMENT"
