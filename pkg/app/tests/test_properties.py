"""以固定種子的隨機輸入檢查各類別的性質。

每個類別都驗證：閉包系統是凸幾何、擬閉超圖符合類別的邊定律，
以及最佳化流程產出的基底通過最佳性驗證，並與暴力參考實作的大小一致。
"""
import random

import pytest

from base_optimizer.algorithms.affine import affine_base, caratheodory_base, random_point_configuration
from base_optimizer.algorithms.closure import (
    ClosureFn,
    equivalent,
    is_pseudo_closed,
    is_quasi_closed,
)
from base_optimizer.algorithms.hypergraph import all_edges_disjoint, build_all_hqcs
from base_optimizer.algorithms.lattice import enumerate_lattice, has_unique_minimal_spanning_sets, is_convex_geometry
from base_optimizer.algorithms.optimizer import (
    canonical_base,
    left_reduce,
    minimize,
    optimize,
    right_reduce,
    singleton_conclusion_base,
    validate_by_quasiclosed,
    verify_optimum,
)
from base_optimizer.algorithms.oracle import oracle_optimum_cg, oracle_quasi_closed_direct, oracle_sigma
from base_optimizer.algorithms.posets import double_shelling_base, order_convex_sets, random_poset
from base_optimizer.algorithms.recognition import (
    class_edge_law_check,
    is_acyclic_geometry,
    random_acyclic_base,
    random_base,
)
from base_optimizer.models import EdgeLaw, ElementSet, GroundSet, ImplicationalBase


def check_class(base, law, poset=None):
    """共用檢查：凸幾何、邊定律、最佳化結果為最佳，且大小與參考實作相同。"""
    view = enumerate_lattice(base)
    assert is_convex_geometry(view)
    hqcs = build_all_hqcs(base, view)
    report = class_edge_law_check(view, hqcs, law, poset=poset)
    assert report.holds, [v.message for v in report.violations]
    assert all_edges_disjoint(hqcs)

    result, certificate = optimize(base)
    assert certificate is not None and certificate.is_optimum
    _, oracle_sizes = oracle_optimum_cg(base)
    assert result.sizes() == oracle_sizes
    return view


def reindexed(base, seed):
    """反轉元素索引，並以固定種子打亂蘊涵順序。"""
    universe = GroundSet(elements=tuple(reversed(base.universe.elements)))
    pairs = [
        (universe.mask_of(imp.premise.names), universe.mask_of(imp.conclusion.names))
        for imp in base.implications
    ]
    random.Random(seed).shuffle(pairs)
    return ImplicationalBase.from_masks(universe, pairs)


@pytest.mark.parametrize("seed", range(100))
@pytest.mark.parametrize("kind", ["double_shelling", "acyclic"])
def test_optimum_size_ignores_order_and_indexing(kind, seed):
    if kind == "double_shelling":
        base = double_shelling_base(random_poset(seed, 3 + seed % 6))
    else:
        base = random_acyclic_base(seed, 3 + seed % 5)
    shuffled = reindexed(base, seed)
    assert shuffled.sizes() == base.sizes()

    result, certificate = optimize(shuffled)
    assert certificate is not None and certificate.is_optimum
    assert equivalent(result, shuffled)
    assert result.sizes() == oracle_optimum_cg(base)[1]


@pytest.mark.parametrize("seed", range(200))
def test_double_shelling(seed):
    poset = random_poset(seed, 3 + seed % 6)
    base = double_shelling_base(poset)
    view = check_class(base, EdgeLaw.DOUBLE_SHELLING, poset=poset)
    assert [c.mask for c in view.closed_sets] == [c.mask for c in order_convex_sets(poset)]


@pytest.mark.parametrize("seed", range(200))
def test_acyclic(seed):
    base = random_acyclic_base(seed, 3 + seed % 5)
    view = check_class(base, EdgeLaw.ACYCLIC)
    assert is_acyclic_geometry(base, view)


@pytest.mark.parametrize("seed", range(200))
def test_affine(seed):
    points = random_point_configuration(seed, 3 + seed % 5, dim=1 + seed % 3)
    base = affine_base(points)
    assert equivalent(base, caratheodory_base(points))
    check_class(base, EdgeLaw.AFFINE)
    assert verify_optimum(base, singleton_conclusion_base(base)).is_optimum


@pytest.mark.parametrize("seed", range(500))
class TestRandomBases:
    """一般 (不一定是凸幾何) 的隨機基底。"""

    @staticmethod
    def make(seed):
        return random_base(seed, 3 + seed % 5, 2 + (seed // 5) % 6)

    def test_closure_axioms(self, seed):
        base = self.make(seed)
        fn = ClosureFn(base=base)
        full = base.universe.full_mask
        for y in range(full + 1):
            c = fn.close_mask(y)
            assert y & ~c == 0
            assert fn.close_mask(c) == c
            s = fn.saturate_mask(y)
            assert y & ~s == 0 and s & ~c == 0
            for x in range(base.universe.size):
                assert c & ~fn.close_mask(y | 1 << x) == 0

    def test_oracle_agreement(self, seed):
        base = self.make(seed)
        u = base.universe
        fn = ClosureFn(base=base)
        for mask in range(u.full_mask + 1):
            y = ElementSet.from_mask(u, mask)
            assert oracle_sigma(base, y) == fn.saturate(y)
            assert oracle_quasi_closed_direct(base, y) == is_quasi_closed(base, y)

    def test_minimize_matches_canonical(self, seed):
        base = self.make(seed)
        minimized = minimize(base)
        canonical = canonical_base(base, use_convex_fast_path=False)
        assert len(minimized) == len(canonical)
        assert equivalent(minimized, base)
        assert all(is_pseudo_closed(base, imp.premise) for imp in minimized.implications)
        assert {imp.premise.mask for imp in minimized.implications} == {
            imp.premise.mask for imp in canonical.implications
        }

    def test_reductions_keep_equivalence(self, seed):
        base = self.make(seed)
        minimized = minimize(base)
        left = left_reduce(minimized)
        right = right_reduce(left)
        assert equivalent(left, base) and equivalent(right, base)
        assert left.sizes().left <= minimized.sizes().left
        assert right.sizes().right <= left.sizes().right
        assert validate_by_quasiclosed(base, right)

    def test_convex_characterizations_agree(self, seed):
        base = self.make(seed)
        view = enumerate_lattice(base)
        empty_closed = view.is_closed(base.universe.empty())
        assert is_convex_geometry(view) == (empty_closed and has_unique_minimal_spanning_sets(view))
