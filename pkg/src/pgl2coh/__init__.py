"""Exact cohomology, Chen-Ruan and quantum orbifold rings for the moduli of PGL_2-bundles on a curve."""

__version__ = "0.1.0"

from .classical import InvariantRing, classical_relations, full_poincare_polynomial, invariant_ring
from .classes import OrbifoldClass
from .chen_ruan import ChenRuanRing, cr_poincare_polynomial, cr_product, orbifold_pairing
from .gw import StackyModel, donaldson_evaluate, extension_rank, virtual_dim_M, virtual_dim_N
from .polynomial import ALPHA, BETA, GAMMA, QPARAM, Poly
from .quantum import (
    QuantumOrbifoldPresentation,
    QuantumOrbifoldRing,
    classical_limit,
    g2_table,
    quantum_product,
    quantum_relations,
    twisted_alpha_product,
)
from .sectors import SectorGenerator, TorsionClass, sector_rank, sector_total_rank, weil_pairing

__all__ = [
    "ALPHA", "BETA", "GAMMA", "QPARAM", "Poly",
    "InvariantRing", "classical_relations", "full_poincare_polynomial", "invariant_ring",
    "OrbifoldClass", "ChenRuanRing", "cr_poincare_polynomial", "cr_product", "orbifold_pairing",
    "StackyModel", "donaldson_evaluate", "extension_rank", "virtual_dim_M", "virtual_dim_N",
    "QuantumOrbifoldPresentation", "QuantumOrbifoldRing", "classical_limit", "g2_table",
    "quantum_product", "quantum_relations", "twisted_alpha_product",
    "SectorGenerator", "TorsionClass", "sector_rank", "sector_total_rank", "weil_pairing",
]
