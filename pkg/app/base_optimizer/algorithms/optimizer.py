"""基底最佳化：最小化、左化簡、右化簡、完整最佳化流程、標準基底建構，
以及以擬閉超圖驗證最佳性。

凸幾何的最佳基底恰好是每個本質集 C 各一條 ex(C) ⟹ T，其中 T 為 HQC(C)
的最小 hitting set。當每個 HQC(C) 的邊兩兩互斥時，最小化後依序做左化簡與
右化簡即可得到最佳基底。
"""
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import GuardError, InvalidImplication, NotABase, NotConvexGeometry, UniverseMismatch
from ..models import (
    CertificateEntry,
    ElementSet,
    ImplicationalBase,
    LatticeView,
    OptimizationCertificate,
    QuasiClosedHypergraph,
)
from ..utils import console
from ..utils.funcs import mask_indices
from .closure import ClosureFn, close_mask, equivalent
from .hypergraph import build_all_hqcs, minimum_hitting_set, minimum_hitting_sets
from .lattice import check_lattice_guard, enumerate_lattice, is_convex_geometry, quasi_closed_masks

Pairs = List[Tuple[int, int]]


def validate_by_quasiclosed(base: ImplicationalBase, candidate: ImplicationalBase) -> bool:
    """以擬閉集判定候選是否為 `base` 的基底。

    候選是基底若且唯若每個擬閉集 Q 都有候選蘊涵 A ⟹ B 滿足 A ⊆ Q、
    cl(A) = cl(Q) 且 B ∩ (cl(Q) ∖ Q) ≠ ∅。

    Args:
        base (ImplicationalBase): 原基底。
        candidate (ImplicationalBase): 候選蘊涵集合。

    Returns:
        bool: 候選是否與原基底等價。

    Raises:
        UniverseMismatch: 若兩者的基底集合不同。
        InvalidImplication: 若候選中有在原閉包系統不成立的蘊涵。
        UniverseTooLarge: 若超過閉集格列舉上限。
    """
    if base.universe != candidate.universe:
        raise UniverseMismatch("候選與原基底的基底集合不同")
    fn = ClosureFn(base=base)
    for imp in candidate.implications:
        premise, conclusion = imp.masks
        if conclusion & ~fn.close_mask(premise):
            raise InvalidImplication(f"蘊涵 {imp} 在原閉包系統中不成立")
    check_lattice_guard(base)

    spans = [(p, c, fn.close_mask(p)) for p, c in candidate.pairs]
    for q, closure in quasi_closed_masks(fn, base.universe.full_mask):
        gap = closure & ~q
        if not any(p & ~q == 0 and pc == closure and c & gap for p, c, pc in spans):
            console.debug(f"擬閉集 {ElementSet.from_mask(base.universe, q)} 未被候選涵蓋")
            return False
    return True


def minimize(base: ImplicationalBase) -> ImplicationalBase:
    """將基底最小化為蘊涵數最少的等價基底。

    1. 正規化；
    2. 每條 A ⟹ B 改為 A ⟹ cl(A) ∖ A；
    3. 依序取出每條蘊涵，以其餘蘊涵計算前提的閉包 A'；若 A' 已包含結論則刪除，
       否則改為 A' ⟹ cl(A) ∖ A'。

    結果的前提恰為所有偽閉集，結論為完整閉包，之後交給右化簡縮小。

    Args:
        base (ImplicationalBase): 任意基底。

    Returns:
        ImplicationalBase: 等價且蘊涵數最少的基底，保持輸入順序。
    """
    normalized = base.normalize()
    full = normalized.pairs
    pairs: Pairs = []
    for p, _ in full:
        closure = close_mask(full, p)
        # 略過前提已閉的蘊涵
        if closure & ~p:
            pairs.append((p, closure))

    index = 0
    while index < len(pairs):
        premise, closure = pairs[index]
        rest = pairs[:index] + pairs[index + 1:]
        # 以其餘蘊涵左飽和前提，已推得完整閉包代表這條是多餘的
        reduced = close_mask(rest, premise)
        if closure & ~reduced == 0:
            pairs = rest
            continue
        # 備註：改寫後的前提參與後面蘊涵的閉包計算
        pairs[index] = (reduced, closure)
        index += 1

    console.debug(f"最小化：{len(base)} 條蘊涵 → {len(pairs)} 條")
    return base.with_pairs((p, c & ~p) for p, c in pairs)


def left_reduce(base: ImplicationalBase) -> ImplicationalBase:
    """左化簡：逐一嘗試自前提移除元素，移除後仍為基底即接受。

    A ⟹ B 的前提可去掉 x 若且唯若 B ⊆ cl(A ∖ {x})，閉包以目前的基底計算。
    蘊涵依序處理，前提元素依索引遞增掃描，重複直到不再變動。
    """
    pairs: Pairs = list(base.normalize().pairs)
    changed = True
    while changed:
        changed = False
        for i in range(len(pairs)):
            for x in mask_indices(pairs[i][0]):
                premise, conclusion = pairs[i]
                smaller = premise & ~(1 << x)
                if conclusion & ~close_mask(pairs, smaller) == 0:
                    pairs[i] = (smaller, conclusion)
                    changed = True
    return base.with_pairs(pairs)


def right_reduce(base: ImplicationalBase) -> ImplicationalBase:
    """右化簡：逐一嘗試自結論移除元素，移除後仍為基底即接受。

    A ⟹ B 的結論可去掉 x 若且唯若把它換成 A ⟹ B ∖ {x} 之後，x 仍在 A 的閉包內。
    蘊涵依序處理，結論元素依索引遞增掃描，重複直到不再變動；
    結論變為空集合的蘊涵會被移除。
    """
    pairs: Pairs = list(base.normalize().pairs)
    changed = True
    while changed:
        changed = False
        for i in range(len(pairs)):
            for x in mask_indices(pairs[i][1]):
                premise, conclusion = pairs[i]
                bit = 1 << x
                pairs[i] = (premise, conclusion & ~bit)
                if close_mask(pairs, premise) & bit:
                    changed = True
                else:
                    pairs[i] = (premise, conclusion)
    return base.with_pairs((p, c) for p, c in pairs if c)


def optimize(base: ImplicationalBase) -> Tuple[ImplicationalBase, Optional[OptimizationCertificate]]:
    """完整最佳化流程：right_reduce(left_reduce(minimize(base)))，並附上證明。

    任何基底都能處理；僅在凸幾何且所有 HQC 的邊互斥時保證最佳。超過列舉上限時
    回傳化簡後的基底，證明為 `None`。

    Args:
        base (ImplicationalBase): 任意基底。

    Returns:
        Tuple[ImplicationalBase, Optional[OptimizationCertificate]]: 化簡後的基底與證明。
    """
    minimized = minimize(base)
    left = left_reduce(minimized)
    result = right_reduce(left)
    console.debug(
        f"最佳化流程大小：輸入 {base.sizes().total}、最小化 {minimized.sizes().total}、"
        f"左化簡 {left.sizes().total}、右化簡 {result.sizes().total}"
    )
    try:
        view = enumerate_lattice(base)
        hqcs = build_all_hqcs(base, view)
    except GuardError as e:
        console.warn(f"無法產生最佳性證明：{e.message}")
        return result, None

    certificate = certify(base, result, view, hqcs)
    if not certificate.is_optimum:
        console.warn("最佳化結果未通過最佳性驗證")
    return result, certificate


def canonical_base(base: ImplicationalBase, use_convex_fast_path: bool = True) -> ImplicationalBase:
    """建立標準 (Duquenne–Guigues) 基底 {P ⟹ cl(P) ∖ P : P 為偽閉集}。

    凸幾何中每個本質集 C 恰有一個偽閉集 σ(ex(C))；一般情況則將所有擬閉集依閉包
    分組，各取包含關係下的極小者。

    Args:
        base (ImplicationalBase): 任意基底。
        use_convex_fast_path (bool): 是否在凸幾何時使用 σ(ex(C)) 捷徑。

    Returns:
        ImplicationalBase: 依前提、結論排序的標準基底。

    Raises:
        UniverseTooLarge: 若超過閉集格列舉上限。
    """
    view = enumerate_lattice(base)
    fn = ClosureFn(base=base)
    pairs: Pairs = []
    if use_convex_fast_path and is_convex_geometry(view):
        for c, ex, flag in zip(view.closed_sets, view.extreme_points, view.essential):
            if flag:
                pseudo = fn.saturate_mask(ex.mask)
                pairs.append((pseudo, c.mask & ~pseudo))
    else:
        groups: Dict[int, List[int]] = {}
        for q, closure in quasi_closed_masks(fn, base.universe.full_mask):
            groups.setdefault(closure, []).append(q)
        for closure, members in groups.items():
            for q in members:
                if not any(o != q and o & ~q == 0 for o in members):
                    pairs.append((q, closure & ~q))
    return base.with_pairs(pairs).sorted()


def _require_convex(view: LatticeView) -> None:
    if not is_convex_geometry(view):
        raise NotConvexGeometry("此閉包系統不是凸幾何")


def build_optimum_from_hypergraphs(
    view: LatticeView, hqcs: Sequence[QuasiClosedHypergraph]
) -> ImplicationalBase:
    """由擬閉超圖直接組出最佳基底 {ex(C) ⟹ 最小 hitting set}。

    Raises:
        NotConvexGeometry: 若閉包系統不是凸幾何。
    """
    _require_convex(view)
    return view.base.with_pairs((h.extreme.mask, minimum_hitting_set(h).mask) for h in hqcs)


def enumerate_optimum_bases(
    view: LatticeView, hqcs: Sequence[QuasiClosedHypergraph]
) -> List[ImplicationalBase]:
    """列舉凸幾何的所有最佳基底。

    每個本質集獨立選擇一個最小 hitting set，取所有組合。

    Raises:
        NotConvexGeometry: 若閉包系統不是凸幾何。
    """
    _require_convex(view)
    choices = [minimum_hitting_sets(h) for h in hqcs]
    return [
        view.base.with_pairs((h.extreme.mask, t.mask) for h, t in zip(hqcs, chosen))
        for chosen in product(*choices)
    ]


def singleton_conclusion_base(base: ImplicationalBase) -> ImplicationalBase:
    """每個偽閉集 P 各一條 P ⟹ x，x 為 cl(P) ∖ P 中索引最小的元素。

    仿射凸幾何中此形式即為最佳基底；其他閉包系統一般不是基底。
    """
    pairs = []
    for p, c in canonical_base(base).pairs:
        pairs.append((p, c & -c))
    return base.with_pairs(pairs)


def certify(
    base: ImplicationalBase,
    candidate: ImplicationalBase,
    view: LatticeView,
    hqcs: Sequence[QuasiClosedHypergraph],
) -> OptimizationCertificate:
    """依本質集分解候選基底並產生證明。

    非凸幾何時只回報實際檢查到的項目，左最佳與最佳旗標皆為否。

    Args:
        base (ImplicationalBase): 原基底。
        candidate (ImplicationalBase): 待驗證的候選。
        view (LatticeView): `base` 的閉集格檢視。
        hqcs (Sequence[QuasiClosedHypergraph]): 所有本質集的擬閉超圖，順序同 `essential_sets`。

    Returns:
        OptimizationCertificate: 證明。
    """
    universe = base.universe
    fn = ClosureFn(base=base)
    # 依前提閉包分組，每組即候選在一個等價類內的蘊涵
    groups: Dict[int, List[Tuple[int, int]]] = {}
    for p, c in candidate.pairs:
        groups.setdefault(fn.close_mask(p), []).append((p, c))

    entries = []
    for h in hqcs:
        members = groups.pop(h.essential_set.mask, [])
        # 沒有成員時 conclusion 為空集合，is_hitting 必為否
        conclusion = 0
        for _, c in members:
            conclusion |= c
        t = ElementSet.from_mask(universe, conclusion)
        premise = ElementSet.from_mask(universe, members[0][0]) if len(members) == 1 else None
        minimum_size = len(minimum_hitting_set(h))
        hitting = h.is_hit_by(t)
        entries.append(CertificateEntry(
            essential_set=h.essential_set,
            implication_count=len(members),
            premise=premise,
            conclusion=t,
            premise_is_extreme=premise is not None and premise.mask == h.extreme.mask,
            edge_count=len(h.edges),
            is_hitting=hitting,
            is_minimum=hitting and len(t) == minimum_size,
            minimum_size=minimum_size,
        ))

    convex = is_convex_geometry(view)
    is_base = equivalent(base, candidate)
    # groups 剩下的是前提閉包不是本質集的多餘蘊涵
    is_left = (
        convex
        and is_base
        and not groups
        and all(e.implication_count == 1 and e.premise_is_extreme for e in entries)
    )
    return OptimizationCertificate(
        entries=tuple(entries),
        is_convex_geometry=convex,
        is_base=is_base,
        is_left_optimum=is_left,
        is_optimum=is_left and all(e.is_minimum for e in entries),
    )


def verify_optimum(base: ImplicationalBase, candidate: ImplicationalBase) -> OptimizationCertificate:
    """驗證候選是否為凸幾何 `base` 的最佳基底。

    Raises:
        UniverseMismatch: 若兩者的基底集合不同。
        NotConvexGeometry: 若閉包系統不是凸幾何。
        NotABase: 若候選與原基底不等價。
    """
    if base.universe != candidate.universe:
        raise UniverseMismatch("候選與原基底的基底集合不同")
    view = enumerate_lattice(base)
    _require_convex(view)
    if not equivalent(base, candidate):
        raise NotABase("候選蘊涵集合與原基底不等價")
    return certify(base, candidate, view, build_all_hqcs(base, view))
