"""共用的 pytest fixture：從 fixtures/ 目錄載入範例閉包系統。"""
from pathlib import Path

import pytest

from base_optimizer import configs
from base_optimizer.algorithms.posets import double_shelling_base
from base_optimizer.configs import GuardEnv
from base_optimizer.models import ImplicationalBase
from base_optimizer.utils.file_formats import parse_points, parse_poset

from .helpers import FIXTURES, load_base


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def example1() -> ImplicationalBase:
    return load_base("example1.base")


@pytest.fixture
def example1_optimum() -> ImplicationalBase:
    return load_base("example1_optimum.base")


@pytest.fixture
def cg_four() -> ImplicationalBase:
    return load_base("cg_four.base")


@pytest.fixture
def overlapping_edges() -> ImplicationalBase:
    return load_base("overlapping_edges.base")


@pytest.fixture
def acceptant_left() -> ImplicationalBase:
    return load_base("acceptant_left.base")


@pytest.fixture
def acceptant_right() -> ImplicationalBase:
    return load_base("acceptant_right.base")


@pytest.fixture
def interval_poset():
    return parse_poset((FIXTURES / "interval_poset.poset").read_text(encoding="utf-8"))


@pytest.fixture
def interval_poset_base(interval_poset) -> ImplicationalBase:
    return double_shelling_base(interval_poset)


@pytest.fixture
def interval_poset_optimum() -> ImplicationalBase:
    return load_base("interval_poset_optimum.base")


@pytest.fixture
def chain_poset():
    return parse_poset((FIXTURES / "chain.poset").read_text(encoding="utf-8"))


@pytest.fixture
def square_center():
    return parse_points((FIXTURES / "square_center.points").read_text(encoding="utf-8"))


@pytest.fixture
def collinear():
    return parse_points((FIXTURES / "collinear.points").read_text(encoding="utf-8"))


@pytest.fixture
def collinear4():
    return parse_points((FIXTURES / "collinear4.points").read_text(encoding="utf-8"))


@pytest.fixture
def tight_guards(monkeypatch):
    """把列舉上限調小，方便觸發 GUARD 錯誤。"""
    monkeypatch.setattr(
        configs,
        "guard_env",
        GuardEnv(lattice_max_elements=4, hypergraph_max_exponent=2, oracle_max_elements=3),
    )
    return configs.guard_env
