"""凸幾何類別：雙殼化、仿射、無環與 acceptant 的產生器、辨識與邊定律。"""
from fractions import Fraction

import pytest
from pydantic import ValidationError

from base_optimizer.algorithms.affine import (
    affine_base,
    barycentric,
    caratheodory_base,
    hull_contains,
    random_point_configuration,
)
from base_optimizer.algorithms.closure import equivalent
from base_optimizer.algorithms.hypergraph import build_all_hqcs
from base_optimizer.algorithms.lattice import enumerate_lattice, is_convex_geometry
from base_optimizer.algorithms.optimizer import singleton_conclusion_base, verify_optimum
from base_optimizer.algorithms.posets import (
    comparability_components,
    double_shelling_base,
    order_convex_sets,
    random_poset,
)
from base_optimizer.algorithms.recognition import (
    acceptance_degree,
    class_edge_law_check,
    delta_relation,
    implication_graph_is_acyclic,
    is_acyclic_geometry,
    minimal_generators,
    random_acyclic_base,
)
from base_optimizer.exceptions import DimensionMismatch, InvalidParameter, NotComparable, NotConvexGeometry
from base_optimizer.models import EdgeLaw, GroundSet, PointConfiguration, Poset

from .helpers import subset


def rules(base) -> set:
    return {str(imp).replace(" ", "") for imp in base.implications}


def edge_report(base, law, poset=None):
    view = enumerate_lattice(base)
    return class_edge_law_check(view, build_all_hqcs(base, view), law, poset=poset)


class TestPosets:
    def test_chain(self, chain_poset):
        assert rules(double_shelling_base(chain_poset)) == {"ac->b"}
        assert len(order_convex_sets(chain_poset)) == 7

    def test_cycle_rejected(self):
        u = GroundSet(elements=tuple("ab"))
        with pytest.raises(ValidationError):
            Poset.from_relations(u, [("a", "b"), ("b", "a")])

    def test_interval(self, interval_poset):
        assert interval_poset.interval("x", "f") == subset(interval_poset.universe, "abfx")
        with pytest.raises(NotComparable):
            interval_poset.interval("a", "b")

    def test_comparability_components(self, interval_poset):
        components = comparability_components(interval_poset, "x", "y")
        assert ["".join(c.names) for c in components] == ["d", "ceh", "abfg"]
        assert ["".join(c.names) for c in comparability_components(interval_poset, "a", "y")] == ["f", "g"]

    def test_components_need_comparable_pair(self, interval_poset):
        with pytest.raises(NotComparable):
            comparability_components(interval_poset, "y", "x")

    def test_double_shelling_sizes(self, interval_poset_base):
        sizes = interval_poset_base.sizes()
        assert (sizes.count, sizes.total) == (10, 43)

    def test_random_poset_is_deterministic(self):
        assert random_poset(7, 6) == random_poset(7, 6)
        p = random_poset(7, 6)
        assert all(i < j for i, j in p.less_than)


class TestAffine:
    def test_barycentric(self):
        triangle = [(Fraction(0), Fraction(0)), (Fraction(2), Fraction(0)), (Fraction(0), Fraction(2))]
        assert barycentric(triangle, (Fraction(1), Fraction(1))) == [0, Fraction(1, 2), Fraction(1, 2)]

    def test_barycentric_dependent_vertices(self):
        line = [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(2))]
        assert barycentric(line, (Fraction(1), Fraction(1))) is None

    def test_hull_contains(self, square_center):
        u = square_center.universe
        assert hull_contains(square_center, subset(u, "ac"), "o")
        assert hull_contains(square_center, subset(u, "abc"), "o")
        assert not hull_contains(square_center, subset(u, "ab"), "o")
        assert not hull_contains(square_center, subset(u, "abo"), "c")

    @pytest.mark.parametrize(
        "fixture, expected",
        [
            ("square_center", {"ac->o", "bd->o"}),
            ("collinear", {"pr->q"}),
            ("collinear4", {"ac->b", "bd->c", "ad->bc"}),
        ],
    )
    def test_affine_base(self, request, fixture, expected):
        points = request.getfixturevalue(fixture)
        base = affine_base(points)
        assert rules(base) == expected
        assert equivalent(base, caratheodory_base(points))

    def test_singleton_conclusions_are_optimum(self, collinear4):
        base = affine_base(collinear4)
        singleton = singleton_conclusion_base(base)
        assert rules(singleton) == {"ac->b", "bd->c", "ad->b"}
        assert verify_optimum(base, singleton).is_optimum

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            PointConfiguration.from_mapping(2, {"a": (0, 0), "b": (1,)})

    def test_duplicate_points(self):
        with pytest.raises(ValidationError):
            PointConfiguration.from_mapping(1, {"a": (0,), "b": (0,)})

    def test_random_configuration(self):
        points = random_point_configuration(3, 6, dim=2)
        assert points == random_point_configuration(3, 6, dim=2)
        assert points.universe.size == 6

    def test_not_enough_lattice_points(self):
        with pytest.raises(ValueError):
            random_point_configuration(0, 10, dim=1, spread=1)


class TestRecognition:
    def test_minimal_generators(self, chain_poset):
        base = double_shelling_base(chain_poset)
        assert minimal_generators(base, "b") == [subset(base.universe, "ac")]
        assert minimal_generators(base, "a") == []

    def test_delta_relation(self, chain_poset):
        assert delta_relation(double_shelling_base(chain_poset)) == {("b", "a"), ("b", "c")}

    def test_acyclic_geometry(self, chain_poset, cg_four, example1):
        chain = double_shelling_base(chain_poset)
        assert is_acyclic_geometry(chain, enumerate_lattice(chain))
        assert not is_acyclic_geometry(cg_four, enumerate_lattice(cg_four))
        assert not is_acyclic_geometry(example1, enumerate_lattice(example1))

    def test_implication_graph(self, chain_poset, cg_four):
        assert implication_graph_is_acyclic(double_shelling_base(chain_poset))
        assert not implication_graph_is_acyclic(cg_four)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_acyclic_base(self, seed):
        base = random_acyclic_base(seed, 6)
        view = enumerate_lattice(base)
        assert implication_graph_is_acyclic(base)
        assert is_convex_geometry(view)
        assert is_acyclic_geometry(base, view)
        assert random_acyclic_base(seed, 6) == base

    @pytest.mark.parametrize("size", [0, 1])
    def test_random_acyclic_base_too_small_for_premises(self, size):
        base = random_acyclic_base(3, size)
        assert base.universe.size == size
        assert len(base) == 0
        assert is_convex_geometry(enumerate_lattice(base))

    def test_random_acyclic_base_negative_size(self):
        with pytest.raises(InvalidParameter):
            random_acyclic_base(3, -1)

    @pytest.mark.parametrize(
        "fixture, degree",
        [("acceptant_left", 2), ("acceptant_right", 2), ("cg_four", None)],
    )
    def test_acceptance_degree(self, request, fixture, degree):
        base = request.getfixturevalue(fixture)
        assert acceptance_degree(enumerate_lattice(base)) == degree

    def test_chain_is_two_acceptant(self, chain_poset):
        base = double_shelling_base(chain_poset)
        assert acceptance_degree(enumerate_lattice(base)) == 2

    def test_acceptance_needs_convex_geometry(self, example1):
        with pytest.raises(NotConvexGeometry):
            acceptance_degree(enumerate_lattice(example1))


class TestEdgeLaws:
    def test_double_shelling(self, interval_poset, interval_poset_base):
        report = edge_report(interval_poset_base, EdgeLaw.DOUBLE_SHELLING, poset=interval_poset)
        assert report.holds
        assert report.checked == 10

    def test_double_shelling_needs_poset(self, interval_poset_base):
        with pytest.raises(ValueError):
            edge_report(interval_poset_base, EdgeLaw.DOUBLE_SHELLING)

    def test_acyclic(self, chain_poset, cg_four):
        assert edge_report(double_shelling_base(chain_poset), EdgeLaw.ACYCLIC).holds
        report = edge_report(cg_four, EdgeLaw.ACYCLIC)
        assert not report.holds
        assert [v.essential_set for v in report.violations] == [subset(cg_four.universe, "abcd")]

    @pytest.mark.parametrize("fixture", ["square_center", "collinear", "collinear4"])
    def test_affine(self, request, fixture):
        assert edge_report(affine_base(request.getfixturevalue(fixture)), EdgeLaw.AFFINE).holds

    def test_acceptant(self, acceptant_left, acceptant_right, overlapping_edges):
        assert edge_report(acceptant_left, EdgeLaw.ACCEPTANT).holds
        assert edge_report(acceptant_right, EdgeLaw.ACCEPTANT).holds
        report = edge_report(overlapping_edges, EdgeLaw.ACCEPTANT)
        assert not report.holds
        assert overlapping_edges.universe.full() in [v.essential_set for v in report.violations]
