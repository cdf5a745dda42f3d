"""雙殼化 (double-shelling) 凸幾何：偏序集的序凸子集族。"""
import random
from typing import List

import networkx as nx

from ..models import ElementSet, GroundSet, ImplicationalBase, Poset
from ..utils.funcs import element_names, indices_mask, mask_sort_key


def double_shelling_base(p: Poset) -> ImplicationalBase:
    """序凸集族 Co(P) 的標準基底 {xy ⟹ [x, y] ∖ {x, y} : 存在 x < z < y}。

    Args:
        p (Poset): 偏序集。

    Returns:
        ImplicationalBase: 依前提、結論排序的標準基底。
    """
    pairs = []
    for x, y in p.less_than:
        interval = p.interval_mask(x, y)
        endpoints = (1 << x) | (1 << y)
        if interval != endpoints:
            pairs.append((endpoints, interval & ~endpoints))
    return ImplicationalBase.from_masks(p.universe, pairs).sorted()


def comparability_components(p: Poset, x: str, y: str) -> List[ElementSet]:
    """開區間 (x, y) 上比較圖的連通分量。

    Args:
        p (Poset): 偏序集。
        x (str): 區間下端。
        y (str): 區間上端，必須 x < y。

    Returns:
        List[ElementSet]: 各連通分量，依 (大小, 索引字典序) 排序。

    Raises:
        NotComparable: 若 x 並未小於 y。
    """
    u = p.universe
    i, j = u.index_of(x), u.index_of(y)
    interior = p.interval_mask(i, j) & ~((1 << i) | (1 << j))
    nodes = [k for k in range(u.size) if interior >> k & 1]

    graph = nx.Graph()
    graph.add_nodes_from(nodes)
    graph.add_edges_from((a, b) for a in nodes for b in nodes if p.less(a, b))
    masks = sorted((indices_mask(c) for c in nx.connected_components(graph)), key=mask_sort_key)
    return [ElementSet.from_mask(u, m) for m in masks]


def order_convex_sets(p: Poset) -> List[ElementSet]:
    """直接列舉所有序凸子集 (即 x < z < y 且 x, y ∈ S 蘊含 z ∈ S)。"""
    u = p.universe
    intervals = [((1 << x) | (1 << y), p.interval_mask(x, y)) for x, y in p.less_than]
    convex = []
    for mask in range(u.full_mask + 1):
        if all(
            interval & ~mask == 0
            for ends, interval in intervals
            if ends & ~mask == 0
        ):
            convex.append(mask)
    return [ElementSet.from_mask(u, m) for m in sorted(convex, key=mask_sort_key)]


def random_poset(seed: int, size: int, density: float = 0.3) -> Poset:
    """隨機 DAG 取遞移閉包得到的偏序集。

    Args:
        seed (int): 亂數種子；相同種子得到相同結果。
        size (int): 元素數。
        density (float): 每對 (i, j), i < j 成為序關係的機率。

    Returns:
        Poset: 隨機偏序集，元素順序即拓撲順序。
    """
    rng = random.Random(seed)
    universe = GroundSet(elements=element_names(size))
    names = universe.elements
    relations = [
        (names[i], names[j])
        for i in range(size)
        for j in range(i + 1, size)
        if rng.random() < density
    ]
    return Poset.from_relations(universe, relations)
