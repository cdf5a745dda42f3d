"""蘊涵 (implication) 與蘊涵基底 (implicational base) 的資料模型。"""
from typing import Any, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr, computed_field, model_validator

from ..exceptions import UniverseMismatch
from ..utils.funcs import lexicographic_key
from .ground_set import ElementSet, GroundSet


class Implication(BaseModel):
    """單一蘊涵 A ⟹ B。

    建構時會自動將結論扣除前提，確保 premise ∩ conclusion = ∅。

    Attributes:
        premise (ElementSet): 前提 A。
        conclusion (ElementSet): 結論 B (已扣除 A)。
    """
    model_config = ConfigDict(frozen=True)

    premise: ElementSet
    conclusion: ElementSet

    @model_validator(mode="before")
    @classmethod
    def normalize_conclusion(cls, data: Any) -> Any:
        """檢查兩側屬於同一基底集合，並將結論扣除前提。

        Raises:
            ValueError: 若前提與結論屬於不同的基底集合。
        """
        if isinstance(data, dict):
            premise = data.get("premise")
            conclusion = data.get("conclusion")
            if isinstance(premise, ElementSet) and isinstance(conclusion, ElementSet):
                if premise.universe != conclusion.universe:
                    raise ValueError("前提與結論必須屬於同一個基底集合")
                data = {**data, "conclusion": conclusion - premise}
        return data

    @classmethod
    def from_masks(cls, universe: GroundSet, premise: int, conclusion: int) -> "Implication":
        """由遮罩直接建立 (供演算法內部使用)。"""
        return cls.model_construct(
            premise=ElementSet.from_mask(universe, premise),
            conclusion=ElementSet.from_mask(universe, conclusion & ~premise),
        )

    @property
    def universe(self) -> GroundSet:
        return self.premise.universe

    @property
    def masks(self) -> Tuple[int, int]:
        """(前提遮罩, 結論遮罩)。"""
        return (self.premise.mask, self.conclusion.mask)

    @property
    def size(self) -> int:
        """|A| + |B|。"""
        return len(self.premise) + len(self.conclusion)

    def __str__(self) -> str:
        return f"{' '.join(self.premise.names)} -> {' '.join(self.conclusion.names)}".strip()


class SizeReport(BaseModel):
    """蘊涵基底的各項大小量測。

    Attributes:
        count (int): 蘊涵數量 |Σ|。
        left (int): 左大小 s_L(Σ)，前提大小總和。
        right (int): 右大小 s_R(Σ)，結論大小總和。
    """
    model_config = ConfigDict(frozen=True)

    count: int = 0
    left: int = 0
    right: int = 0

    @computed_field
    @property
    def total(self) -> int:
        """總大小 s(Σ) = s_L(Σ) + s_R(Σ)。"""
        return self.left + self.right


class ImplicationalBase(BaseModel):
    """蘊涵基底 (U, Σ)。

    Attributes:
        universe (GroundSet): 基底集合 U。
        implications (Tuple[Implication, ...]): 依序儲存的蘊涵；允許重複，
                                               由 `normalize` 移除。
    """
    model_config = ConfigDict(frozen=True)

    universe: GroundSet
    implications: Tuple[Implication, ...] = ()

    _pairs: List[Tuple[int, int]] = PrivateAttr(default_factory=list)

    @model_validator(mode="after")
    def validate_universe(self) -> "ImplicationalBase":
        """確保所有蘊涵皆屬於同一個基底集合。"""
        for imp in self.implications:
            if imp.universe != self.universe:
                raise UniverseMismatch(f"蘊涵 {imp} 不屬於此基底集合")
        return self

    def model_post_init(self, __context) -> None:
        self._pairs = [imp.masks for imp in self.implications]

    @classmethod
    def from_masks(cls, universe: GroundSet, pairs: Iterable[Tuple[int, int]]) -> "ImplicationalBase":
        """由 (前提遮罩, 結論遮罩) 序列建立基底。"""
        return cls(
            universe=universe,
            implications=tuple(Implication.from_masks(universe, p, c) for p, c in pairs),
        )

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        """所有蘊涵的遮罩對，供閉包運算使用。"""
        return self._pairs

    def __len__(self) -> int:
        return len(self.implications)

    def sizes(self) -> SizeReport:
        """計算 |Σ|、s_L、s_R 與 s。

        結論在建構時已扣除前提；重複的蘊涵依儲存內容計入。

        Returns:
            SizeReport: 大小報表。
        """
        return SizeReport(
            count=len(self.implications),
            left=sum(p.bit_count() for p, _ in self._pairs),
            right=sum(c.bit_count() for _, c in self._pairs),
        )

    def normalize(self) -> "ImplicationalBase":
        """移除空結論與重複的蘊涵，其餘保持原順序。

        Returns:
            ImplicationalBase: 正規化後的新基底。
        """
        seen = set()
        kept = []
        for p, c in self._pairs:
            if c == 0 or (p, c) in seen:
                continue
            seen.add((p, c))
            kept.append((p, c))
        return ImplicationalBase.from_masks(self.universe, kept)

    def with_pairs(self, pairs: Iterable[Tuple[int, int]]) -> "ImplicationalBase":
        """以同一基底集合建立新的蘊涵基底。"""
        return ImplicationalBase.from_masks(self.universe, pairs)

    def sorted(self) -> "ImplicationalBase":
        """依前提、再依結論的索引字典序排序 (命令列輸出的固定順序)。"""
        ordered = sorted(self._pairs, key=lambda pc: (lexicographic_key(pc[0]), lexicographic_key(pc[1])))
        return self.with_pairs(ordered)

    def __str__(self) -> str:
        return "{" + ", ".join(str(imp) for imp in self.implications) + "}"


def sort_implications(base: ImplicationalBase) -> ImplicationalBase:
    """回傳依固定順序排列的基底 (前提優先、結論其次)。"""
    return base.sorted()
