"""基底集合 (ground set) 與其子集合的資料模型。

`GroundSet` 固定元素的順序與索引；`ElementSet` 以整數位元遮罩記錄成員，
所有集合運算 (聯集、交集、差集、補集、包含關係) 皆為精確的位元運算。
"""
from typing import Dict, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_validator

from ..exceptions import UniverseMismatch, UniverseTooLarge
from ..utils.funcs import indices_mask, mask_indices, mask_sort_key

# 稠密位元表示法允許的元素上限
MAX_ELEMENTS = 64


class GroundSet(BaseModel):
    """有序且元素名稱唯一的基底集合 U。

    Attributes:
        elements (Tuple[str, ...]): 元素名稱，順序即為索引 0..n-1。
    """
    model_config = ConfigDict(frozen=True)

    elements: Tuple[str, ...]

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("elements")
    @classmethod
    def validate_elements(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        """驗證元素名稱非空、不重複，且數量不超過上限。

        Args:
            value (Tuple[str, ...]): 待驗證的元素名稱序列。

        Returns:
            Tuple[str, ...]: 原序列。

        Raises:
            UniverseTooLarge: 若元素數量超過 `MAX_ELEMENTS`。
            ValueError: 若有空名稱或重複名稱。
        """
        if len(value) > MAX_ELEMENTS:
            raise UniverseTooLarge(f"基底集合有 {len(value)} 個元素，超過上限 {MAX_ELEMENTS}")
        for name in value:
            if not name or name != name.strip():
                raise ValueError(f"元素名稱不可為空或含前後空白: {name!r}")
        if len(set(value)) != len(value):
            duplicated = sorted({name for name in value if value.count(name) > 1})
            raise ValueError(f"元素名稱重複: {duplicated}")
        return value

    def model_post_init(self, __context) -> None:
        self._index = {name: i for i, name in enumerate(self.elements)}

    @property
    def size(self) -> int:
        """元素個數 |U|。"""
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        """整個基底集合的遮罩。"""
        return (1 << len(self.elements)) - 1

    def index_of(self, name: str) -> int:
        """查詢元素索引。

        Raises:
            KeyError: 若名稱不屬於此基底集合。
        """
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"未宣告的元素: {name}") from None

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def mask_of(self, names: Iterable[str]) -> int:
        """將元素名稱轉為遮罩。"""
        return indices_mask(self.index_of(name) for name in names)

    def subset(self, names: Iterable[str]) -> "ElementSet":
        """以元素名稱建立子集合。

        Args:
            names (Iterable[str]): 元素名稱；單一字串會被視為「每個字元一個元素」。

        Returns:
            ElementSet: 對應的子集合。
        """
        return ElementSet.from_mask(self, self.mask_of(names))

    def empty(self) -> "ElementSet":
        """空集合。"""
        return ElementSet.from_mask(self, 0)

    def full(self) -> "ElementSet":
        """整個基底集合 U。"""
        return ElementSet.from_mask(self, self.full_mask)


class ElementSet(BaseModel):
    """基底集合的子集合。

    Attributes:
        universe (GroundSet): 所屬的基底集合。
        mask (int): 成員遮罩，第 i 位元代表 `universe.elements[i]`。
    """
    model_config = ConfigDict(frozen=True)

    universe: GroundSet
    mask: int = 0

    @model_validator(mode="after")
    def validate_mask(self) -> "ElementSet":
        """確保成員皆屬於基底集合。"""
        if self.mask < 0 or self.mask & ~self.universe.full_mask:
            raise ValueError(f"遮罩 {self.mask} 超出基底集合範圍")
        return self

    @classmethod
    def from_mask(cls, universe: GroundSet, mask: int) -> "ElementSet":
        """由已知合法的遮罩直接建立 (略過驗證，供演算法內部使用)。"""
        return cls.model_construct(universe=universe, mask=mask)

    # --- 檢視 ---
    @property
    def indices(self) -> List[int]:
        """成員索引，遞增排列。"""
        return mask_indices(self.mask)

    @property
    def names(self) -> Tuple[str, ...]:
        """成員名稱，依索引排列。"""
        return tuple(self.universe.elements[i] for i in mask_indices(self.mask))

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """先依大小、再依索引字典序的排序鍵。"""
        return mask_sort_key(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, name: object) -> bool:
        if not isinstance(name, str) or name not in self.universe:
            return False
        return bool(self.mask >> self.universe.index_of(name) & 1)

    def __str__(self) -> str:
        return "{" + ", ".join(self.names) + "}"

    def __repr__(self) -> str:
        return f"ElementSet({''.join(self.names) if all(len(n) == 1 for n in self.names) else list(self.names)})"

    # --- 集合代數 ---
    def _check(self, other: "ElementSet") -> None:
        if other.universe is not self.universe and other.universe != self.universe:
            raise UniverseMismatch("兩個集合屬於不同的基底集合")

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet.from_mask(self.universe, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet.from_mask(self.universe, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet.from_mask(self.universe, self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        """在基底集合內的補集 U ∖ self。"""
        return ElementSet.from_mask(self.universe, self.universe.full_mask & ~self.mask)

    def __le__(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "ElementSet") -> bool:
        return other <= self

    def __gt__(self, other: "ElementSet") -> bool:
        return other < self

    def issubset(self, other: "ElementSet") -> bool:
        """是否為 `other` 的子集合。"""
        return self <= other

    def isdisjoint(self, other: "ElementSet") -> bool:
        """兩集合是否不相交。"""
        self._check(other)
        return self.mask & other.mask == 0

    def with_element(self, name: str) -> "ElementSet":
        """加入單一元素後的集合。"""
        return ElementSet.from_mask(self.universe, self.mask | (1 << self.universe.index_of(name)))
