"""閉包引擎：前向鏈結 (forward chaining)、基底等價與有效性、飽和運算 σ，
以及擬閉 (quasi-closed) / 偽閉 (pseudo-closed) 判定。

內部一律以整數遮罩運算；對外介面接受並回傳 `ElementSet`。
"""
from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, PrivateAttr

from ..exceptions import UniverseMismatch
from ..models import ElementSet, Implication, ImplicationalBase
from ..utils.funcs import iter_submasks


def close_mask(pairs: Sequence[Tuple[int, int]], mask: int) -> int:
    """以前向鏈結計算遮罩的閉包。

    反覆套用所有前提已被包含的蘊涵，直到集合不再變大為止。

    Args:
        pairs (Sequence[Tuple[int, int]]): (前提遮罩, 結論遮罩) 序列。
        mask (int): 起始集合。

    Returns:
        int: 閉包遮罩。
    """
    changed = True
    while changed:
        changed = False
        for premise, conclusion in pairs:
            if premise & ~mask == 0 and conclusion & ~mask:
                mask |= conclusion
                changed = True
    return mask


class ClosureFn(BaseModel):
    """蘊涵基底所誘導的閉包運算子。

    會快取每條蘊涵前提的閉包，供飽和運算 σ 重複使用。

    Attributes:
        base (ImplicationalBase): 誘導此閉包運算子的基底。
    """
    model_config = ConfigDict(frozen=True)

    base: ImplicationalBase

    _premise_closures: List[int] = PrivateAttr(default_factory=list)

    def model_post_init(self, __context) -> None:
        pairs = self.base.pairs
        self._premise_closures = [close_mask(pairs, p) for p, _ in pairs]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return self.base.pairs

    @property
    def premise_closures(self) -> List[int]:
        """每條蘊涵前提的閉包遮罩，順序同 `base.implications`。"""
        return self._premise_closures

    def close_mask(self, mask: int) -> int:
        return close_mask(self.base.pairs, mask)

    def saturate_mask(self, mask: int) -> int:
        """σ(Y)：以 Σ_Y 對 Y 做前向鏈結，Σ_Y 移除所有前提閉包等於 cl(Y) 的蘊涵。"""
        target = self.close_mask(mask)
        kept = [
            pair for pair, pc in zip(self.base.pairs, self._premise_closures) if pc != target
        ]
        return close_mask(kept, mask)

    def is_closed_mask(self, mask: int) -> bool:
        return self.close_mask(mask) == mask

    def is_quasi_closed_mask(self, mask: int) -> bool:
        """非閉集且為 σ 的固定點。"""
        return not self.is_closed_mask(mask) and self.saturate_mask(mask) == mask

    def is_pseudo_closed_mask(self, mask: int) -> bool:
        """擬閉，且沒有任何真子集是同一閉包的擬閉生成集。"""
        if not self.is_quasi_closed_mask(mask):
            return False
        target = self.close_mask(mask)
        for sub in iter_submasks(mask):
            if sub == mask:
                continue
            if self.close_mask(sub) == target and self.is_quasi_closed_mask(sub):
                return False
        return True

    def __call__(self, seed: ElementSet) -> ElementSet:
        self.check_universe(seed)
        return ElementSet.from_mask(seed.universe, self.close_mask(seed.mask))

    def saturate(self, seed: ElementSet) -> ElementSet:
        self.check_universe(seed)
        return ElementSet.from_mask(seed.universe, self.saturate_mask(seed.mask))

    def check_universe(self, s: ElementSet) -> None:
        """確認集合與基底屬於同一個基底集合。

        Raises:
            UniverseMismatch: 若基底集合不同。
        """
        if s.universe != self.base.universe:
            raise UniverseMismatch("集合與基底屬於不同的基底集合")


def close(base: ImplicationalBase, seed: ElementSet) -> ElementSet:
    """計算 `seed` 在 `base` 下的閉包。

    Args:
        base (ImplicationalBase): 蘊涵基底。
        seed (ElementSet): 起始集合。

    Returns:
        ElementSet: 最小的包含 `seed` 的閉集。

    Raises:
        UniverseMismatch: 若 `seed` 不屬於基底的基底集合。
    """
    if seed.universe != base.universe:
        raise UniverseMismatch("集合與基底屬於不同的基底集合")
    return ElementSet.from_mask(base.universe, close_mask(base.pairs, seed.mask))


def is_valid(base: ImplicationalBase, imp: Implication) -> bool:
    """蘊涵 A ⟹ B 在 `base` 下是否成立，即 B ⊆ cl(A)。

    Raises:
        UniverseMismatch: 若蘊涵不屬於基底的基底集合。
    """
    if imp.universe != base.universe:
        raise UniverseMismatch("蘊涵與基底屬於不同的基底集合")
    premise, conclusion = imp.masks
    return conclusion & ~close_mask(base.pairs, premise) == 0


def equivalent(b1: ImplicationalBase, b2: ImplicationalBase) -> bool:
    """兩個基底是否誘導相同的閉包系統。

    以互相推導每一條蘊涵來判定，對閉包系統相等是充分且必要的。

    Raises:
        UniverseMismatch: 若兩個基底的基底集合不同。
    """
    if b1.universe != b2.universe:
        raise UniverseMismatch("兩個基底的基底集合不同")
    return _entails(b2.pairs, b1.pairs) and _entails(b1.pairs, b2.pairs)


def _entails(pairs: Sequence[Tuple[int, int]], others: Sequence[Tuple[int, int]]) -> bool:
    return all(c & ~close_mask(pairs, p) == 0 for p, c in others)


def saturate(base: ImplicationalBase, seed: ElementSet) -> ElementSet:
    """飽和運算 σ(Y)。

    Args:
        base (ImplicationalBase): 蘊涵基底。
        seed (ElementSet): Y。

    Returns:
        ElementSet: σ(Y)，滿足 Y ⊆ σ(Y) ⊆ cl(Y)。
    """
    return ClosureFn(base=base).saturate(seed)


def is_quasi_closed(base: ImplicationalBase, q: ElementSet) -> bool:
    """`q` 是否為擬閉集 (閉集不算擬閉集)。"""
    fn = ClosureFn(base=base)
    fn.check_universe(q)
    return fn.is_quasi_closed_mask(q.mask)


def is_pseudo_closed(base: ImplicationalBase, p: ElementSet) -> bool:
    """`p` 是否為偽閉集。

    會列舉 `p` 的所有子集合，僅適用於小規模輸入。
    """
    fn = ClosureFn(base=base)
    fn.check_universe(p)
    return fn.is_pseudo_closed_mask(p.mask)
