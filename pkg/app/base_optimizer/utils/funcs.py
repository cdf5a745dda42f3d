"""通用輔助函式模組。

此模組包含以整數位元遮罩 (bit mask) 表示子集合時常用的運算，
例如子集合列舉、元素索引轉換與排序鍵。所有演算法內部皆以遮罩運算，
僅在對外介面才包裝為 `ElementSet`。
"""
from typing import Iterator, List, Tuple


def popcount(mask: int) -> int:
    """計算遮罩中設為 1 的位元數 (即集合大小)。"""
    return mask.bit_count()


def mask_indices(mask: int) -> List[int]:
    """將遮罩轉為遞增的元素索引列表。

    Args:
        mask (int): 子集合遮罩。

    Returns:
        List[int]: 遮罩中所有元素的索引，由小到大。
    """
    indices = []
    while mask:
        low = mask & -mask
        indices.append(low.bit_length() - 1)
        mask ^= low
    return indices


def indices_mask(indices) -> int:
    """將索引序列轉為遮罩。"""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_submasks(mask: int) -> Iterator[int]:
    """列舉 `mask` 的所有子集合 (包含空集合與 `mask` 本身)。

    以 `sub = (sub - 1) & mask` 的標準技巧由大到小列舉。

    Args:
        mask (int): 母集合遮罩。

    Yields:
        int: 每個子集合的遮罩。
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_sort_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    """閉集、邊與蘊涵輸出時使用的排序鍵：先比大小，再比索引字典序。"""
    return (popcount(mask), tuple(mask_indices(mask)))


def lexicographic_key(mask: int) -> Tuple[int, ...]:
    """僅依索引字典序比較的排序鍵 (不先比大小)。"""
    return tuple(mask_indices(mask))


def element_names(size: int) -> Tuple[str, ...]:
    """隨機產生器使用的預設元素名稱：不超過 26 個時用 a..z，否則用 e0, e1, ...。"""
    if size <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:size])
    return tuple(f"e{i}" for i in range(size))
