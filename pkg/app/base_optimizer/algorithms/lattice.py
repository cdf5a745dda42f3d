"""閉集格分析：小規模列舉全部閉集、覆蓋關係、極點、本質集與等價類，
以及凸幾何判定。
"""
from typing import Dict, Iterator, List, Tuple

from .. import configs
from ..exceptions import NotClosed, UniverseTooLarge
from ..models import ElementSet, EquivalenceClass, ImplicationalBase, LatticeView
from ..utils import console
from ..utils.funcs import mask_indices, mask_sort_key
from .closure import ClosureFn


def check_lattice_guard(base: ImplicationalBase) -> None:
    """確認基底集合大小在閉集格列舉的上限內。

    Raises:
        UniverseTooLarge: 若元素數超過 `GuardEnv.lattice_max_elements`。
    """
    limit = configs.guard_env.lattice_max_elements
    if base.universe.size > limit:
        raise UniverseTooLarge(
            f"閉集格列舉最多支援 {limit} 個元素，目前有 {base.universe.size} 個"
        )


def quasi_closed_masks(fn: ClosureFn, full_mask: int) -> Iterator[Tuple[int, int]]:
    """列舉所有擬閉集。

    Args:
        fn (ClosureFn): 閉包運算子。
        full_mask (int): 基底集合遮罩。

    Yields:
        Tuple[int, int]: (擬閉集遮罩, 其閉包遮罩)。
    """
    for mask in range(full_mask + 1):
        closure = fn.close_mask(mask)
        if closure != mask and fn.saturate_mask(mask) == mask:
            yield mask, closure


def extreme_mask(fn: ClosureFn, closed: int) -> int:
    """ex(C) = {x ∈ C : x ∉ cl(C ∖ {x})}。"""
    ex = 0
    for i in mask_indices(closed):
        bit = 1 << i
        if not fn.close_mask(closed & ~bit) & bit:
            ex |= bit
    return ex


def enumerate_lattice(base: ImplicationalBase) -> LatticeView:
    """列舉閉包系統的所有閉集，並計算覆蓋關係、極點與本質旗標。

    逐一檢查全部 2^|U| 個子集合，僅適用於小規模輸入。

    Args:
        base (ImplicationalBase): 蘊涵基底。

    Returns:
        LatticeView: 閉集依 (大小, 索引字典序) 排序的完整檢視。

    Raises:
        UniverseTooLarge: 若超過閉集格列舉上限。
    """
    check_lattice_guard(base)
    fn = ClosureFn(base=base)
    universe = base.universe
    full = universe.full_mask

    closed = sorted((m for m in range(full + 1) if fn.close_mask(m) == m), key=mask_sort_key)
    position: Dict[int, int] = {m: i for i, m in enumerate(closed)}

    covers: List[Tuple[int, int]] = []
    for i, c in enumerate(closed):
        # 上覆蓋 = {cl(C ∪ {x})} 中的極小者
        candidates = {fn.close_mask(c | (1 << x)) for x in mask_indices(full & ~c)}
        for up in candidates:
            if not any(other != up and other & ~up == 0 for other in candidates):
                covers.append((i, position[up]))
    covers.sort()

    essential_masks = {closure for _, closure in quasi_closed_masks(fn, full)}
    console.debug(
        f"閉集格：{len(closed)} 個閉集、{len(covers)} 條覆蓋邊、{len(essential_masks)} 個本質集"
    )
    return LatticeView(
        base=base,
        closed_sets=tuple(ElementSet.from_mask(universe, m) for m in closed),
        covers=tuple(covers),
        essential=tuple(m in essential_masks for m in closed),
        extreme_points=tuple(ElementSet.from_mask(universe, extreme_mask(fn, m)) for m in closed),
    )


def is_convex_geometry(view: LatticeView) -> bool:
    """閉包系統是否為凸幾何：∅ 為閉集，且每個真閉集都能加入一個元素成為閉集。"""
    if not view.is_closed(view.universe.empty()):
        return False
    full = view.universe.full_mask
    for c in view.closed_sets:
        if c.mask == full:
            continue
        if not any(
            view.is_closed(c.with_element(view.universe.elements[x]))
            for x in mask_indices(full & ~c.mask)
        ):
            return False
    return True


def has_unique_minimal_spanning_sets(view: LatticeView) -> bool:
    """每個閉集是否都有唯一的極小生成集。

    ex(C) 是 C 所有生成集的交集，因此唯一極小生成集存在若且唯若 cl(ex(C)) = C。
    配合 ∅ 為閉集即為凸幾何的等價刻劃。
    """
    fn = ClosureFn(base=view.base)
    return all(
        fn.close_mask(ex.mask) == c.mask for c, ex in zip(view.closed_sets, view.extreme_points)
    )


def extreme_points(view: LatticeView, c: ElementSet) -> ElementSet:
    """閉集 `c` 的極點 ex(C)。

    Raises:
        NotClosed: 若 `c` 不是閉集。
    """
    index = view.index_of(c)
    if index is None:
        raise NotClosed(f"{c} 不是閉集")
    return view.extreme_points[index]


def essential_sets(view: LatticeView) -> List[ElementSet]:
    """所有本質集，依閉集的排序。"""
    return [c for c, flag in zip(view.closed_sets, view.essential) if flag]


def equivalence_classes(base: ImplicationalBase) -> List[EquivalenceClass]:
    """依前提閉包將基底分組。

    Returns:
        List[EquivalenceClass]: 依閉包 (大小, 索引字典序) 排序；類內保持基底中的順序。
    """
    fn = ClosureFn(base=base)
    groups: Dict[int, list] = {}
    for imp, closure in zip(base.implications, fn.premise_closures):
        groups.setdefault(closure, []).append(imp)
    return [
        EquivalenceClass(
            closure=ElementSet.from_mask(base.universe, closure),
            implications=tuple(groups[closure]),
        )
        for closure in sorted(groups, key=mask_sort_key)
    ]
