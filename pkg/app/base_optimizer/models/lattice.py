"""閉集格檢視 (LatticeView) 與等價類 (EquivalenceClass) 的資料模型。"""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr

from .ground_set import ElementSet
from .implication import Implication, ImplicationalBase


class LatticeView(BaseModel):
    """小規模閉包系統的完整閉集列舉結果。

    Attributes:
        base (ImplicationalBase): 產生此閉包系統的蘊涵基底。
        closed_sets (Tuple[ElementSet, ...]): 所有閉集，依 (大小, 索引字典序) 排序。
        covers (Tuple[Tuple[int, int], ...]): 覆蓋關係 (下方索引, 上方索引)，
                                             下方為上方的前驅 (predecessor)。
        essential (Tuple[bool, ...]): 每個閉集是否為本質集。
        extreme_points (Tuple[ElementSet, ...]): 每個閉集的極點 ex(C)。
    """
    model_config = ConfigDict(frozen=True)

    base: ImplicationalBase
    closed_sets: Tuple[ElementSet, ...]
    covers: Tuple[Tuple[int, int], ...] = ()
    essential: Tuple[bool, ...] = ()
    extreme_points: Tuple[ElementSet, ...] = ()

    _position: Dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._position = {c.mask: i for i, c in enumerate(self.closed_sets)}

    @property
    def universe(self):
        return self.base.universe

    def index_of(self, c: ElementSet) -> Optional[int]:
        """閉集在 `closed_sets` 中的索引；非閉集回傳 `None`。"""
        return self._position.get(c.mask)

    def is_closed(self, c: ElementSet) -> bool:
        return c.mask in self._position

    def predecessors(self, index: int) -> List[int]:
        """第 `index` 個閉集的所有前驅索引。"""
        return [low for low, high in self.covers if high == index]


class EquivalenceClass(BaseModel):
    """基底中前提閉包相同的一組蘊涵。

    Attributes:
        closure (ElementSet): 這組蘊涵前提的共同閉包。
        implications (Tuple[Implication, ...]): 屬於此類的蘊涵，保持基底中的順序。
    """
    model_config = ConfigDict(frozen=True)

    closure: ElementSet
    implications: Tuple[Implication, ...]
