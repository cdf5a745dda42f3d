"""測試共用的載入與建構輔助函式。"""
from pathlib import Path

from base_optimizer.models import ElementSet, GroundSet, ImplicationalBase
from base_optimizer.utils.file_formats import parse_base

FIXTURES = Path(__file__).parent / "fixtures"


def load_base(name: str) -> ImplicationalBase:
    return parse_base((FIXTURES / name).read_text(encoding="utf-8"))


def subset(universe: GroundSet, names: str) -> ElementSet:
    """以單字元名稱建立子集合，例如 `subset(u, "cdef")`。"""
    return universe.subset(names)


def base_of(universe: GroundSet, *rules: str) -> ImplicationalBase:
    """以 `"ab->c"` 形式的單字元規則建立基底。"""
    pairs = []
    for rule in rules:
        left, right = rule.split("->")
        pairs.append((universe.mask_of(left.strip()), universe.mask_of(right.strip())))
    return ImplicationalBase.from_masks(universe, pairs)


def edge_sets(hypergraph) -> set:
    """超圖的邊轉為名稱字串集合，例如 {"de", "ce"}。"""
    return {"".join(e.names) for e in hypergraph.edges}
