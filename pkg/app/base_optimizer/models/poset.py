"""偏序集 (Poset) 資料模型。

嚴格序關係以元素索引對 (i, j) 表示 i < j，建構時必須已經遞移封閉；
由任意關係 (例如覆蓋關係) 建立時請使用 `Poset.from_relations`，
會先以 networkx 取遞移閉包。
"""
from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import NotComparable
from .ground_set import ElementSet, GroundSet


class Poset(BaseModel):
    """有限偏序集 P = (U, <)。

    Attributes:
        universe (GroundSet): 元素集合 U。
        less_than (FrozenSet[Tuple[int, int]]): 嚴格序 (i, j) 代表 i < j。
    """
    model_config = ConfigDict(frozen=True)

    universe: GroundSet
    less_than: FrozenSet[Tuple[int, int]] = frozenset()

    @model_validator(mode="after")
    def validate_order(self) -> "Poset":
        """檢查非自反、反對稱與遞移性。"""
        n = self.universe.size
        for i, j in self.less_than:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"序關係 ({i}, {j}) 超出元素索引範圍")
            if i == j:
                raise ValueError(f"序關係不可自反: {self.universe.elements[i]}")
            if (j, i) in self.less_than:
                raise ValueError(
                    f"序關係不可對稱: {self.universe.elements[i]} 與 {self.universe.elements[j]}"
                )
        for i, j in self.less_than:
            for k, m in self.less_than:
                if j == k and (i, m) not in self.less_than:
                    raise ValueError("序關係必須遞移封閉")
        return self

    @classmethod
    def from_relations(cls, universe: GroundSet, pairs: Iterable[Tuple[str, str]]) -> "Poset":
        """由元素名稱對 (x, y) 代表 x < y 建立偏序集，先取遞移閉包。

        Args:
            universe (GroundSet): 元素集合。
            pairs (Iterable[Tuple[str, str]]): 覆蓋關係或任意序關係。

        Returns:
            Poset: 遞移封閉後的偏序集。

        Raises:
            pydantic.ValidationError: 若關係含有環 (無法構成偏序)。
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(universe.size))
        graph.add_edges_from((universe.index_of(x), universe.index_of(y)) for x, y in pairs)
        closure = nx.transitive_closure(graph, reflexive=False)
        return cls(universe=universe, less_than=frozenset(closure.edges()))

    def less(self, x: int, y: int) -> bool:
        """索引 x 是否嚴格小於 y。"""
        return (x, y) in self.less_than

    def comparable(self, x: int, y: int) -> bool:
        return x == y or (x, y) in self.less_than or (y, x) in self.less_than

    def interval_mask(self, x: int, y: int) -> int:
        """閉區間 [x, y] 的遮罩；x 不小於 y 時拋出 NotComparable。"""
        if not self.less(x, y):
            raise NotComparable(
                f"{self.universe.elements[x]} 並未小於 {self.universe.elements[y]}"
            )
        mask = (1 << x) | (1 << y)
        for z in range(self.universe.size):
            if self.less(x, z) and self.less(z, y):
                mask |= 1 << z
        return mask

    def interval(self, x: str, y: str) -> ElementSet:
        """閉區間 [x, y]。"""
        u = self.universe
        return ElementSet.from_mask(u, self.interval_mask(u.index_of(x), u.index_of(y)))

    def cover_pairs(self) -> List[Tuple[int, int]]:
        """覆蓋關係 (Hasse 圖的邊)，依索引排序。"""
        graph = nx.DiGraph(list(self.less_than))
        graph.add_nodes_from(range(self.universe.size))
        reduced = nx.transitive_reduction(graph)
        return sorted(reduced.edges())
