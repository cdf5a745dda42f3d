"""最佳性證明 (OptimizationCertificate) 與類別邊定律報表的資料模型。"""
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .ground_set import ElementSet


class CertificateEntry(BaseModel):
    """單一本質集的檢查結果。

    Attributes:
        essential_set (ElementSet): 本質集 C。
        implication_count (int): 候選基底中前提閉包為 C 的蘊涵數。
        premise (Optional[ElementSet]): 唯一蘊涵的前提；蘊涵數不為 1 時為 `None`。
        conclusion (ElementSet): 這些蘊涵結論的聯集 T。
        premise_is_extreme (bool): 前提是否恰為 ex(C)。
        edge_count (int): HQC(C) 的邊數。
        is_hitting (bool): T 是否為 HQC(C) 的 hitting set。
        is_minimum (bool): T 是否為最小 (基數) hitting set。
        minimum_size (int): HQC(C) 最小 hitting set 的大小。
    """
    model_config = ConfigDict(frozen=True)

    essential_set: ElementSet
    implication_count: int
    premise: Optional[ElementSet] = None
    conclusion: ElementSet
    premise_is_extreme: bool = False
    edge_count: int = 0
    is_hitting: bool = False
    is_minimum: bool = False
    minimum_size: int = 0


class OptimizationCertificate(BaseModel):
    """依本質集分解的最佳性證明。

    Attributes:
        entries (Tuple[CertificateEntry, ...]): 每個本質集一筆。
        is_convex_geometry (bool): 閉包系統是否為凸幾何。
        is_base (bool): 候選是否與原基底等價。
        is_left_optimum (bool): 是否為左最佳 (每個本質集恰一條 ex(C) ⟹ T)。
        is_optimum (bool): 是否為最佳 (另需每個 T 為最小 hitting set)。
    """
    model_config = ConfigDict(frozen=True)

    entries: Tuple[CertificateEntry, ...] = ()
    is_convex_geometry: bool = False
    is_base: bool = False
    is_left_optimum: bool = False
    is_optimum: bool = False

    @model_validator(mode="after")
    def validate_verdicts(self) -> "OptimizationCertificate":
        """is_optimum ⇒ is_left_optimum ⇒ is_base。"""
        if self.is_optimum and not self.is_left_optimum:
            raise ValueError("最佳基底必為左最佳")
        if self.is_left_optimum and not self.is_base:
            raise ValueError("左最佳的候選必須是基底")
        return self


class EdgeLaw(str, Enum):
    """各凸幾何類別的擬閉超圖邊定律"""
    DOUBLE_SHELLING = "double-shelling"  # 邊為比較圖的連通分量
    ACYCLIC = "acyclic"  # 邊皆為單點
    AFFINE = "affine"  # 唯一的邊 C ∖ ex(C)
    ACCEPTANT = "acceptant"  # 唯一的邊


class EdgeLawViolation(BaseModel):
    """違反類別邊定律的本質集。"""
    model_config = ConfigDict(frozen=True)

    essential_set: ElementSet
    expected: Tuple[ElementSet, ...] = ()
    actual: Tuple[ElementSet, ...] = ()
    message: str


class EdgeLawReport(BaseModel):
    """類別邊定律檢查報表。

    Attributes:
        law (EdgeLaw): 檢查的定律。
        checked (int): 檢查的本質集數量。
        violations (Tuple[EdgeLawViolation, ...]): 違反紀錄。
    """
    model_config = ConfigDict(frozen=True)

    law: EdgeLaw
    checked: int = 0
    violations: Tuple[EdgeLawViolation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations
