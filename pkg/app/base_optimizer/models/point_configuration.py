"""有限點配置 (PointConfiguration) 資料模型，座標為精確有理數。"""
from fractions import Fraction
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import DimensionMismatch
from .ground_set import GroundSet


class PointConfiguration(BaseModel):
    """R^d 中具名的有限點集。

    Attributes:
        universe (GroundSet): 點的名稱集合。
        dim (int): 維度 d (>= 1)。
        coordinates (Tuple[Tuple[Fraction, ...], ...]): 依元素索引排列的座標。
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    universe: GroundSet
    dim: int
    coordinates: Tuple[Tuple[Fraction, ...], ...]

    @model_validator(mode="after")
    def validate_coordinates(self) -> "PointConfiguration":
        """檢查點數、維度一致性，以及沒有重合的點。

        Raises:
            DimensionMismatch: 若有座標維度與 `dim` 不同。
            ValueError: 若維度不合法、點數不符或有重合的點。
        """
        if self.dim < 1:
            raise ValueError("維度必須至少為 1")
        if len(self.coordinates) != self.universe.size:
            raise ValueError(f"點數 {len(self.coordinates)} 與元素數 {self.universe.size} 不符")
        for name, vector in zip(self.universe.elements, self.coordinates):
            if len(vector) != self.dim:
                raise DimensionMismatch(f"點 {name} 有 {len(vector)} 個座標，預期 {self.dim} 個")
        if len(set(self.coordinates)) != len(self.coordinates):
            raise ValueError("點配置中有重合的點")
        return self

    @classmethod
    def from_mapping(cls, dim: int, points: Dict[str, Tuple]) -> "PointConfiguration":
        """由 {名稱: 座標} 建立點配置，座標會轉為 `Fraction`。"""
        universe = GroundSet(elements=tuple(points))
        coordinates = tuple(tuple(Fraction(v) for v in vector) for vector in points.values())
        return cls(universe=universe, dim=dim, coordinates=coordinates)

    def point(self, index: int) -> Tuple[Fraction, ...]:
        return self.coordinates[index]
