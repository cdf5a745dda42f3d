"""擬閉超圖 (quasi-closed hypergraph) 的資料模型。"""
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .ground_set import ElementSet


class QuasiClosedHypergraph(BaseModel):
    """本質集 C 的擬閉超圖 HQC(C)。

    頂點集合為 C，邊為 C ∖ Q，其中 Q 取遍 C 的所有包含關係下極大的擬閉集。

    Attributes:
        essential_set (ElementSet): 本質集 C。
        extreme (ElementSet): C 的極點 ex(C)。
        edges (Tuple[ElementSet, ...]): 超圖的邊，依 (大小, 索引字典序) 排序。
    """
    model_config = ConfigDict(frozen=True)

    essential_set: ElementSet
    extreme: ElementSet
    edges: Tuple[ElementSet, ...] = ()

    @model_validator(mode="after")
    def validate_edges(self) -> "QuasiClosedHypergraph":
        """每條邊非空、落在 C 之內，且彼此互不包含。"""
        c = self.essential_set.mask
        masks = [e.mask for e in self.edges]
        for m in masks:
            if m == 0 or m & ~c:
                raise ValueError("擬閉超圖的邊必須為 C 的非空子集合")
        for i, a in enumerate(masks):
            for b in masks[i + 1:]:
                if a & ~b == 0 or b & ~a == 0:
                    raise ValueError("擬閉超圖的邊必須兩兩互不包含")
        return self

    @property
    def vertices(self) -> ElementSet:
        """所有邊的聯集。"""
        mask = 0
        for e in self.edges:
            mask |= e.mask
        return ElementSet.from_mask(self.essential_set.universe, mask)

    def maximal_quasi_closed_sets(self) -> Tuple[ElementSet, ...]:
        """由邊反推的極大擬閉集 {C ∖ e}。"""
        return tuple(self.essential_set - e for e in self.edges)

    def is_hit_by(self, t: ElementSet) -> bool:
        """`t` 是否與每條邊相交 (即為 hitting set)。"""
        return all(e.mask & t.mask for e in self.edges)
