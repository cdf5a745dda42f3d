"""閉包引擎：前向鏈結、有效性、等價、σ 與擬閉 / 偽閉判定。"""
import random

import pytest

from base_optimizer.algorithms.closure import (
    ClosureFn,
    close,
    equivalent,
    is_pseudo_closed,
    is_quasi_closed,
    is_valid,
    saturate,
)
from base_optimizer.algorithms.recognition import random_base
from base_optimizer.exceptions import UniverseMismatch
from base_optimizer.models import ElementSet, GroundSet, Implication

from .helpers import base_of, subset


class TestClose:
    def test_forward_chaining(self, example1):
        u = example1.universe
        assert close(example1, subset(u, "f")) == subset(u, "cdef")
        assert close(example1, subset(u, "ad")) == u.full()

    def test_universe_is_closed(self, example1):
        assert close(example1, example1.universe.full()) == example1.universe.full()

    def test_other_universe_is_rejected(self, example1):
        with pytest.raises(UniverseMismatch):
            close(example1, GroundSet(elements=("a",)).full())

    @pytest.mark.parametrize("check", [is_quasi_closed, is_pseudo_closed])
    def test_set_predicates_reject_other_universe(self, example1, check):
        ClosureFn(base=example1).check_universe(example1.universe.empty())
        with pytest.raises(UniverseMismatch):
            check(example1, GroundSet(elements=("a",)).full())

    @pytest.mark.parametrize("seed", range(30))
    def test_closure_axioms(self, seed):
        rng = random.Random(seed)
        base = random_base(seed, size=6, count=5)
        u = base.universe
        fn = ClosureFn(base=base)
        small = ElementSet.from_mask(u, rng.randrange(64))
        large = small | ElementSet.from_mask(u, rng.randrange(64))
        closed = fn(small)
        assert small <= closed
        assert closed <= fn(large)
        assert fn(closed) == closed


class TestIsValid:
    def test_derived_implication(self, example1):
        u = example1.universe
        assert is_valid(example1, Implication(premise=subset(u, "ce"), conclusion=subset(u, "f")))

    def test_empty_conclusion(self, example1):
        u = example1.universe
        assert is_valid(example1, Implication(premise=subset(u, "a"), conclusion=u.empty()))

    def test_invalid_implication(self, example1):
        u = example1.universe
        assert not is_valid(example1, Implication(premise=subset(u, "a"), conclusion=subset(u, "c")))


class TestEquivalent:
    def test_canonical_and_optimum(self, example1, example1_optimum):
        assert equivalent(example1, example1_optimum)

    def test_reflexive(self, example1):
        assert equivalent(example1, example1)

    def test_missing_implication(self, example1):
        smaller = example1.with_pairs(example1.pairs[1:])
        assert not equivalent(example1, smaller)

    def test_universe_mismatch(self, example1):
        other = base_of(GroundSet(elements=tuple("abc")), "a->b")
        with pytest.raises(UniverseMismatch):
            equivalent(example1, other)

    @pytest.mark.parametrize("seed", range(20))
    def test_equivalence_relation(self, seed):
        b1 = random_base(seed, size=5, count=4)
        # 加入可推導的蘊涵不改變閉包系統
        extra = [(p, ClosureFn(base=b1).close_mask(p)) for p, _ in b1.pairs]
        b2 = b1.with_pairs(list(b1.pairs) + extra)
        b3 = b2.with_pairs(list(reversed(b2.pairs)))
        assert equivalent(b1, b2) and equivalent(b2, b1)
        assert equivalent(b2, b3) and equivalent(b1, b3)


class TestSaturate:
    def test_quasi_closed_set_is_fixed(self, example1):
        u = example1.universe
        assert saturate(example1, subset(u, "ef")) == subset(u, "ef")

    def test_closed_set_is_fixed(self, example1):
        u = example1.universe
        assert saturate(example1, subset(u, "cdef")) == subset(u, "cdef")

    def test_single_generator_of_two_element_class(self, example1):
        u = example1.universe
        assert saturate(example1, subset(u, "a")) == subset(u, "a")

    @pytest.mark.parametrize("seed", range(30))
    def test_between_seed_and_closure_and_idempotent(self, seed):
        rng = random.Random(seed)
        base = random_base(seed, size=6, count=6)
        fn = ClosureFn(base=base)
        y = ElementSet.from_mask(base.universe, rng.randrange(64))
        sigma = saturate(base, y)
        assert y <= sigma <= fn(y)
        assert saturate(base, sigma) == sigma


class TestQuasiClosed:
    @pytest.mark.parametrize("names", ["cde", "abcd", "abd", "abe", "cf", "ef"])
    def test_quasi_closed_sets(self, example1, names):
        assert is_quasi_closed(example1, subset(example1.universe, names))

    @pytest.mark.parametrize("names", ["", "ab", "cdef", "abcdef", "c"])
    def test_closed_sets_are_not_quasi_closed(self, example1, names):
        assert not is_quasi_closed(example1, subset(example1.universe, names))

    def test_non_saturated_set(self, example1):
        # σ 會由 a 推出 b，再由 f 推出 cde
        assert not is_quasi_closed(example1, subset(example1.universe, "aef"))


class TestPseudoClosed:
    @pytest.mark.parametrize("names", ["a", "b", "f", "ce", "de", "abe", "abd"])
    def test_pseudo_closed_sets(self, example1, names):
        assert is_pseudo_closed(example1, subset(example1.universe, names))

    def test_quasi_closed_but_not_minimal(self, example1):
        assert not is_pseudo_closed(example1, subset(example1.universe, "cde"))

    def test_closed_set(self, example1):
        assert not is_pseudo_closed(example1, subset(example1.universe, "ab"))
