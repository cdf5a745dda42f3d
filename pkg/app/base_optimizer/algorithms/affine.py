"""仿射凸幾何：有限點配置的凸包跡 h(Y) ∩ U。

凸包成員判定只用精確有理數：依 Carathéodory 定理，u ∈ h(Y) 若且唯若 Y 中
某個至多 d + 1 點的子集合以非負且總和為 1 的重心座標表示 u。
"""
import random
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..models import ElementSet, ImplicationalBase, PointConfiguration
from ..utils import console
from ..utils.funcs import element_names, indices_mask
from .lattice import enumerate_lattice

Vector = Tuple[Fraction, ...]


def barycentric(vertices: Sequence[Vector], target: Vector) -> Optional[List[Fraction]]:
    """解 Σ λ_i v_i = target、Σ λ_i = 1 的重心座標。

    以分數高斯消去法求解；頂點仿射相依 (解不唯一) 或無解時回傳 `None`。

    Args:
        vertices (Sequence[Vector]): 頂點座標。
        target (Vector): 目標點。

    Returns:
        Optional[List[Fraction]]: 唯一解 λ，不一定非負。
    """
    k = len(vertices)
    rows = [[v[r] for v in vertices] + [target[r]] for r in range(len(target))]
    rows.append([Fraction(1)] * k + [Fraction(1)])

    rank = 0
    for col in range(k):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            return None
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [value / lead for value in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    if any(rows[i][k] != 0 for i in range(rank, len(rows))):
        return None
    return [rows[i][k] for i in range(k)]


def _in_simplex(vertices: Sequence[Vector], target: Vector) -> bool:
    weights = barycentric(vertices, target)
    return weights is not None and all(w >= 0 for w in weights)


def hull_contains(points: PointConfiguration, subset: ElementSet, name: str) -> bool:
    """點 `name` 是否落在 `subset` 的凸包內。

    Args:
        points (PointConfiguration): 點配置。
        subset (ElementSet): 生成凸包的點。
        name (str): 待判定的點。

    Returns:
        bool: 是否 u ∈ h(subset)。
    """
    index = points.universe.index_of(name)
    if subset.mask >> index & 1:
        return True
    target = points.point(index)
    members = subset.indices
    for size in range(1, min(points.dim + 1, len(members)) + 1):
        for combo in combinations(members, size):
            if _in_simplex([points.point(i) for i in combo], target):
                return True
    return False


def caratheodory_base(points: PointConfiguration) -> ImplicationalBase:
    """{S ⟹ (h(S) ∩ U) ∖ S : 2 ≤ |S| ≤ d + 1}，去掉空結論。

    任何 Y 的凸包跡都是 Y 中至多 d + 1 點子集合凸包跡的聯集，
    因此這個基底的閉包恰為 h(Y) ∩ U。
    """
    n = points.universe.size
    pairs = []
    for size in range(2, min(points.dim + 1, n) + 1):
        for combo in combinations(range(n), size):
            vertices = [points.point(i) for i in combo]
            inside = [
                u for u in range(n)
                if u not in combo and _in_simplex(vertices, points.point(u))
            ]
            if inside:
                pairs.append((indices_mask(combo), indices_mask(inside)))
    return ImplicationalBase.from_masks(points.universe, pairs)


def affine_base(points: PointConfiguration) -> ImplicationalBase:
    """仿射凸幾何的基底 {ex(C) ⟹ C ∖ ex(C) : C 為本質集}。

    Args:
        points (PointConfiguration): 點配置。

    Returns:
        ImplicationalBase: 依前提、結論排序的基底。

    Raises:
        UniverseTooLarge: 若超過閉集格列舉上限。
    """
    view = enumerate_lattice(caratheodory_base(points))
    pairs = [
        (ex.mask, c.mask & ~ex.mask)
        for c, ex, flag in zip(view.closed_sets, view.extreme_points, view.essential)
        if flag
    ]
    console.debug(f"仿射凸幾何：{len(view.closed_sets)} 個閉集、{len(pairs)} 條蘊涵")
    return ImplicationalBase.from_masks(points.universe, pairs).sorted()


def random_point_configuration(seed: int, size: int, dim: int = 2, spread: int = 3) -> PointConfiguration:
    """在 [-spread, spread]^dim 的整數格點上隨機取 `size` 個相異點。

    格點範圍小，容易出現共線、共面等退化情形。

    Raises:
        ValueError: 若格點不足 `size` 個。
    """
    if (2 * spread + 1) ** dim < size:
        raise ValueError("格點數量不足以放置所有點")
    rng = random.Random(seed)
    chosen: List[Vector] = []
    while len(chosen) < size:
        point = tuple(Fraction(rng.randint(-spread, spread)) for _ in range(dim))
        if point not in chosen:
            chosen.append(point)
    return PointConfiguration.from_mapping(dim, dict(zip(element_names(size), chosen)))
