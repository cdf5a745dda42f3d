"""凸幾何類別的辨識：δ 關係與無環凸幾何、蘊涵圖、接受度 (acceptance degree)、
各類別的擬閉超圖邊定律，以及隨機基底產生器。
"""
import random
from typing import List, Optional, Sequence, Set, Tuple

import networkx as nx

from ..exceptions import InvalidParameter, NotConvexGeometry
from ..models import (
    EdgeLaw,
    EdgeLawReport,
    EdgeLawViolation,
    ElementSet,
    GroundSet,
    ImplicationalBase,
    LatticeView,
    Poset,
    QuasiClosedHypergraph,
)
from ..utils.funcs import element_names, mask_indices, mask_sort_key
from .closure import ClosureFn
from .lattice import check_lattice_guard, is_convex_geometry
from .posets import comparability_components


def minimal_generators(base: ImplicationalBase, x: str) -> List[ElementSet]:
    """元素 x 的所有極小生成集：包含關係下極小、不含 x 且閉包含 x 的集合。

    Raises:
        UniverseTooLarge: 若超過閉集格列舉上限。
    """
    check_lattice_guard(base)
    fn = ClosureFn(base=base)
    u = base.universe
    bit = 1 << u.index_of(x)
    generators = []
    for mask in sorted(range(u.full_mask + 1), key=mask_sort_key):
        if mask & bit or any(g & ~mask == 0 for g in generators):
            continue
        if fn.close_mask(mask) & bit:
            generators.append(mask)
    return [ElementSet.from_mask(u, m) for m in generators]


def delta_relation(base: ImplicationalBase) -> Set[Tuple[str, str]]:
    """δ 關係：b δ a 若且唯若 b 有某個極小生成集包含 a。

    Returns:
        Set[Tuple[str, str]]: 所有 (b, a) 名稱對。
    """
    relation = set()
    for b in base.universe.elements:
        for generator in minimal_generators(base, b):
            relation.update((b, a) for a in generator.names)
    return relation


def is_acyclic_geometry(base: ImplicationalBase, view: LatticeView) -> bool:
    """閉包系統是否為無環凸幾何 (凸幾何且 δ 關係無環)。"""
    if not is_convex_geometry(view):
        return False
    graph = nx.DiGraph()
    graph.add_nodes_from(base.universe.elements)
    graph.add_edges_from(delta_relation(base))
    return nx.is_directed_acyclic_graph(graph)


def implication_graph_is_acyclic(base: ImplicationalBase) -> bool:
    """基底的蘊涵圖 (A ⟹ B 給出所有 a → b 邊) 是否無環。

    這是無環凸幾何的充分條件；同一閉包系統的其他基底可能有環。
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(base.universe.size))
    for premise, conclusion in base.pairs:
        graph.add_edges_from((a, b) for a in mask_indices(premise) for b in mask_indices(conclusion))
    return nx.is_directed_acyclic_graph(graph)


def acceptance_degree(view: LatticeView) -> Optional[int]:
    """找出最小的 q 使凸幾何為 q-acceptant；不存在時回傳 `None`。

    q-acceptant：元素少於 q 的子集合皆為閉集，且每個閉集 C 滿足
    |ex(C)| = min(q, |C|)。

    Raises:
        NotConvexGeometry: 若閉包系統不是凸幾何。
    """
    if not is_convex_geometry(view):
        raise NotConvexGeometry("接受度只對凸幾何有定義")
    u = view.universe
    for q in range(u.size + 1):
        small_closed = all(
            view.is_closed(ElementSet.from_mask(u, m))
            for m in range(u.full_mask + 1)
            if m.bit_count() < q
        )
        if small_closed and all(
            len(ex) == min(q, len(c)) for c, ex in zip(view.closed_sets, view.extreme_points)
        ):
            return q
    return None


def class_edge_law_check(
    view: LatticeView,
    hqcs: Sequence[QuasiClosedHypergraph],
    law: EdgeLaw,
    poset: Optional[Poset] = None,
) -> EdgeLawReport:
    """檢查各本質集的擬閉超圖是否符合指定類別的邊定律。

    Args:
        view (LatticeView): 閉集格檢視。
        hqcs (Sequence[QuasiClosedHypergraph]): 所有本質集的擬閉超圖。
        law (EdgeLaw): 要檢查的定律。
        poset (Optional[Poset]): 雙殼化定律所需的偏序集。

    Returns:
        EdgeLawReport: 檢查結果與違反紀錄。

    Raises:
        ValueError: 檢查雙殼化定律卻未提供偏序集時。
    """
    if law is EdgeLaw.DOUBLE_SHELLING and poset is None:
        raise ValueError("雙殼化邊定律需要偏序集")
    violations = []
    for h in hqcs:
        actual = tuple(h.edges)
        expected: Tuple[ElementSet, ...] = ()
        message = ""
        if law is EdgeLaw.DOUBLE_SHELLING:
            ends = h.extreme.names
            if len(ends) != 2 or not poset.comparable(*map(poset.universe.index_of, ends)):
                message = f"極點 {h.extreme} 不是一對可比較的元素"
            else:
                x, y = ends if poset.less(*map(poset.universe.index_of, ends)) else ends[::-1]
                expected = tuple(comparability_components(poset, x, y))
                if {e.mask for e in expected} != {e.mask for e in actual}:
                    message = "邊不等於比較圖的連通分量"
        elif law is EdgeLaw.ACYCLIC:
            if any(len(e) != 1 for e in actual):
                message = "存在非單點的邊"
        elif law is EdgeLaw.AFFINE:
            expected = (h.essential_set - h.extreme,)
            if len(actual) != 1 or actual[0].mask != expected[0].mask:
                message = "邊不是唯一的 C ∖ ex(C)"
        elif law is EdgeLaw.ACCEPTANT:
            if len(actual) != 1:
                message = f"有 {len(actual)} 條邊，預期恰好一條"
        if message:
            violations.append(EdgeLawViolation(
                essential_set=h.essential_set,
                expected=expected,
                actual=actual,
                message=message,
            ))
    return EdgeLawReport(law=law, checked=len(hqcs), violations=tuple(violations))


def random_acyclic_base(seed: int, size: int, count: Optional[int] = None) -> ImplicationalBase:
    """依隨機拓撲順序產生蘊涵圖無環的基底 (必為凸幾何)。

    每條蘊涵的結論是單一元素 b，前提是排在 b 之前的 1 至 3 個元素。
    少於 2 個元素時沒有可用的前提，回傳空基底 (所有子集合皆為閉集)。

    Args:
        seed (int): 亂數種子。
        size (int): 元素數，不可為負數。
        count (Optional[int]): 蘊涵數；`None` 時取 `size`。

    Returns:
        ImplicationalBase: 隨機無環基底。

    Raises:
        InvalidParameter: 若 `size` 或 `count` 為負數。
    """
    if size < 0 or (count is not None and count < 0):
        raise InvalidParameter(f"元素數與蘊涵數不可為負數: size={size}, count={count}")
    rng = random.Random(seed)
    universe = GroundSet(elements=element_names(size))
    if size < 2:
        return ImplicationalBase.from_masks(universe, [])
    order = list(range(size))
    rng.shuffle(order)
    pairs = []
    for _ in range(size if count is None else count):
        k = rng.randrange(1, size)
        premise = rng.sample(order[:k], rng.randint(1, min(3, k)))
        pairs.append((sum(1 << i for i in premise), 1 << order[k]))
    return ImplicationalBase.from_masks(universe, pairs)


def random_base(seed: int, size: int, count: int) -> ImplicationalBase:
    """一般的隨機基底，前提可為空集合，用於閉包性質的隨機測試。"""
    rng = random.Random(seed)
    universe = GroundSet(elements=element_names(size))
    pairs = []
    for _ in range(count):
        premise = sum(1 << i for i in range(size) if rng.random() < 0.3)
        conclusion = 1 << rng.randrange(size)
        conclusion |= sum(1 << i for i in range(size) if rng.random() < 0.15)
        pairs.append((premise, conclusion))
    return ImplicationalBase.from_masks(universe, pairs)
