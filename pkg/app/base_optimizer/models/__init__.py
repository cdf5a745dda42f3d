"""領域資料模型。"""
from .certificate import CertificateEntry, EdgeLaw, EdgeLawReport, EdgeLawViolation, OptimizationCertificate
from .ground_set import MAX_ELEMENTS, ElementSet, GroundSet
from .hypergraph import QuasiClosedHypergraph
from .implication import Implication, ImplicationalBase, SizeReport, sort_implications
from .lattice import EquivalenceClass, LatticeView
from .point_configuration import PointConfiguration
from .poset import Poset

__all__ = [
    "MAX_ELEMENTS",
    "CertificateEntry",
    "EdgeLaw",
    "EdgeLawReport",
    "EdgeLawViolation",
    "ElementSet",
    "EquivalenceClass",
    "GroundSet",
    "Implication",
    "ImplicationalBase",
    "LatticeView",
    "OptimizationCertificate",
    "PointConfiguration",
    "Poset",
    "QuasiClosedHypergraph",
    "SizeReport",
    "sort_implications",
]
