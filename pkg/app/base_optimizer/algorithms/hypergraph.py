"""擬閉超圖 HQC(C) 的建構、hitting set 列舉與互斥邊判定。"""
from itertools import combinations
from typing import List, Optional

from .. import configs
from ..exceptions import CandidateLimitExceeded, NotEssential
from ..models import ElementSet, ImplicationalBase, LatticeView, QuasiClosedHypergraph
from ..utils import console
from ..utils.funcs import indices_mask, iter_submasks, mask_indices, mask_sort_key
from .closure import ClosureFn
from .lattice import essential_sets, is_convex_geometry


def _maximal(masks: List[int]) -> List[int]:
    """包含關係下的極大元素。"""
    return [m for m in masks if not any(o != m and m & ~o == 0 for o in masks)]


def _minimal(masks: List[int]) -> List[int]:
    """包含關係下的極小元素。"""
    return [m for m in masks if not any(o != m and o & ~m == 0 for o in masks)]


def build_hqc(
    base: ImplicationalBase,
    view: LatticeView,
    c: ElementSet,
    convex: Optional[bool] = None,
) -> QuasiClosedHypergraph:
    """建立本質集 `c` 的擬閉超圖。

    凸幾何只需列舉 ex(C) ⊆ S ⊂ C 的候選集合；一般情況列舉 C 的所有真子集合。
    保留閉包為 C 的擬閉集，取極大者，再對 C 取補集作為邊。

    Args:
        base (ImplicationalBase): 蘊涵基底。
        view (LatticeView): `base` 的閉集格檢視。
        c (ElementSet): 本質集 C。
        convex (Optional[bool]): 已知是否為凸幾何；`None` 時由 `view` 判定。

    Returns:
        QuasiClosedHypergraph: HQC(C)，邊依 (大小, 索引字典序) 排序。

    Raises:
        NotEssential: 若 `c` 不是本質集。
        CandidateLimitExceeded: 若候選集合數量超過 2 ** `hypergraph_max_exponent`。
    """
    index = view.index_of(c)
    if index is None or not view.essential[index]:
        raise NotEssential(f"{c} 不是本質集")
    if convex is None:
        convex = is_convex_geometry(view)

    ex = view.extreme_points[index].mask
    # 凸幾何中 C 的每個生成集都包含 ex(C)
    fixed = ex if convex else 0
    free = c.mask & ~fixed
    limit = configs.guard_env.hypergraph_max_exponent
    if free.bit_count() > limit:
        raise CandidateLimitExceeded(
            f"{c} 的擬閉超圖需要列舉 2^{free.bit_count()} 個候選集合，超過上限 2^{limit}"
        )

    fn = ClosureFn(base=base)
    spanning = []
    for sub in iter_submasks(free):
        s = sub | fixed
        # 非閉集且 σ(S) = S 即為擬閉集
        if s != c.mask and fn.close_mask(s) == c.mask and fn.saturate_mask(s) == s:
            spanning.append(s)
    edges = sorted((c.mask & ~q for q in _maximal(spanning)), key=mask_sort_key)
    console.debug(f"HQC({c})：{len(spanning)} 個擬閉生成集、{len(edges)} 條邊")
    universe = base.universe
    return QuasiClosedHypergraph(
        essential_set=c,
        extreme=ElementSet.from_mask(universe, ex),
        edges=tuple(ElementSet.from_mask(universe, e) for e in edges),
    )


def build_all_hqcs(base: ImplicationalBase, view: LatticeView) -> List[QuasiClosedHypergraph]:
    """依本質集的排序建立所有擬閉超圖。"""
    convex = is_convex_geometry(view)
    return [build_hqc(base, view, c, convex=convex) for c in essential_sets(view)]


def _vertex_mask(h: QuasiClosedHypergraph) -> int:
    return indices_mask(i for e in h.edges for i in e.indices)


def _hits(h: QuasiClosedHypergraph, mask: int) -> bool:
    return all(e.mask & mask for e in h.edges)


def minimal_hitting_sets(h: QuasiClosedHypergraph) -> List[ElementSet]:
    """所有包含關係下極小的 hitting set。

    在邊的聯集上暴力列舉，僅適用於小規模超圖。沒有邊時唯一的極小 hitting set 為 ∅。
    """
    # 只需在邊的聯集內找，其餘元素不影響是否命中
    hitting = [m for m in iter_submasks(_vertex_mask(h)) if _hits(h, m)]
    universe = h.essential_set.universe
    return [ElementSet.from_mask(universe, m) for m in sorted(_minimal(hitting), key=mask_sort_key)]


def minimum_hitting_sets(h: QuasiClosedHypergraph) -> List[ElementSet]:
    """所有基數最小的 hitting set，依索引字典序排列。"""
    universe = h.essential_set.universe
    vertices = mask_indices(_vertex_mask(h))
    for k in range(len(vertices) + 1):
        found = [
            indices_mask(combo) for combo in combinations(vertices, k) if _hits(h, indices_mask(combo))
        ]
        if found:
            return [ElementSet.from_mask(universe, m) for m in found]
    return []


def minimum_hitting_set(h: QuasiClosedHypergraph) -> ElementSet:
    """基數最小的 hitting set；同大小時取索引字典序最小者。"""
    return minimum_hitting_sets(h)[0]


def has_disjoint_edges(h: QuasiClosedHypergraph) -> bool:
    """邊是否兩兩互斥。"""
    seen = 0
    for e in h.edges:
        if seen & e.mask:
            return False
        seen |= e.mask
    return True


def all_edges_disjoint(hqcs: List[QuasiClosedHypergraph]) -> bool:
    """整個閉包系統的每個擬閉超圖是否都有互斥的邊。"""
    return all(has_disjoint_edges(h) for h in hqcs)
