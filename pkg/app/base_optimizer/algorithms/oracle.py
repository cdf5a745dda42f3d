"""暴力參考實作 (oracle)。

僅供測試與 `oracle` 指令交叉驗證，全部以窮舉子集合完成。這裡只依賴資料模型與
前向鏈結閉包，刻意不呼叫 σ、擬閉超圖捷徑或最佳化流程。
"""
from itertools import combinations
from typing import List, Tuple

from .. import configs
from ..exceptions import NotConvexGeometry, OracleInconsistency, UniverseTooLarge
from ..models import ElementSet, ImplicationalBase, SizeReport
from ..utils.funcs import indices_mask, iter_submasks, mask_indices, mask_sort_key
from .closure import close_mask


def _guard(size: int, what: str) -> None:
    limit = configs.guard_env.oracle_max_elements
    if size > limit:
        raise UniverseTooLarge(f"{what}有 {size} 個元素，超過參考實作上限 {limit}")


def _closure_table(base: ImplicationalBase) -> List[int]:
    _guard(base.universe.size, "基底集合")
    pairs = base.pairs
    return [close_mask(pairs, m) for m in range(base.universe.full_mask + 1)]


def oracle_closed_sets(base: ImplicationalBase) -> List[ElementSet]:
    """列舉所有閉集，並檢查閉集族包含 U 且對交集封閉。

    Raises:
        UniverseTooLarge: 若超過參考實作上限。
        OracleInconsistency: 若閉集族不滿足閉包系統公理。
    """
    table = _closure_table(base)
    closed = [m for m, c in enumerate(table) if c == m]
    family = set(closed)
    if base.universe.full_mask not in family:
        raise OracleInconsistency("閉集族不包含整個基底集合")
    for a, b in combinations(closed, 2):
        if a & b not in family:
            raise OracleInconsistency("閉集族對交集不封閉")
    return [ElementSet.from_mask(base.universe, m) for m in sorted(closed, key=mask_sort_key)]


def _psi_fixpoint(table: List[int], mask: int) -> int:
    target = table[mask]
    while True:
        grown = mask
        for sub in iter_submasks(mask):
            closure = table[sub]
            if closure != target and closure & ~target == 0:
                grown |= closure
        if grown == mask:
            return mask
        mask = grown


def oracle_sigma(base: ImplicationalBase, seed: ElementSet) -> ElementSet:
    """以 ψ(Y) = Y ∪ ⋃{cl(Z) : Z ⊆ Y, cl(Z) ⊂ cl(Y)} 反覆迭代至固定點。"""
    _guard(len(seed), "起始集合")
    table = _closure_table(base)
    return ElementSet.from_mask(base.universe, _psi_fixpoint(table, seed.mask))


def _quasi_closed(table: List[int], q: int) -> bool:
    target = table[q]
    if target == q:
        return False
    for a in iter_submasks(q):
        closure = table[a]
        if closure != target and closure & ~target == 0 and closure & ~q:
            return False
    return True


def oracle_quasi_closed_direct(base: ImplicationalBase, q: ElementSet) -> bool:
    """直接依定義判定：Q 非閉集，且每個 A ⊆ Q 若 cl(A) ⊂ cl(Q) 則 cl(A) ⊆ Q。"""
    _guard(len(q), "待判定集合")
    return _quasi_closed(_closure_table(base), q.mask)


def oracle_optimum_cg(base: ImplicationalBase) -> Tuple[ImplicationalBase, SizeReport]:
    """以完全窮舉建立凸幾何的最佳基底 {ex(C) ⟹ 最小 hitting set}。

    Returns:
        Tuple[ImplicationalBase, SizeReport]: 最佳基底與其大小。

    Raises:
        UniverseTooLarge: 若超過參考實作上限。
        NotConvexGeometry: 若閉包系統不是凸幾何。
    """
    table = _closure_table(base)
    full = base.universe.full_mask
    closed = {m for m, c in enumerate(table) if c == m}
    if 0 not in closed or any(
        m != full and not any((m | 1 << x) in closed for x in mask_indices(full & ~m))
        for m in closed
    ):
        raise NotConvexGeometry("此閉包系統不是凸幾何")

    spanning: dict = {}
    for q in range(full + 1):
        if _quasi_closed(table, q):
            spanning.setdefault(table[q], []).append(q)

    pairs = []
    for c in sorted(spanning, key=mask_sort_key):
        ex = indices_mask(x for x in mask_indices(c) if not table[c & ~(1 << x)] >> x & 1)
        members = spanning[c]
        maximal = [q for q in members if not any(o != q and q & ~o == 0 for o in members)]
        edges = [c & ~q for q in maximal]
        vertices = mask_indices(c)
        best = None
        for k in range(len(vertices) + 1):
            for combo in combinations(vertices, k):
                t = indices_mask(combo)
                if all(e & t for e in edges):
                    best = t
                    break
            if best is not None:
                break
        pairs.append((ex, best))
    optimum = ImplicationalBase.from_masks(base.universe, pairs)
    return optimum, optimum.sizes()
