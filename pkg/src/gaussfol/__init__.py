"""Exact computer algebra for codimension-one foliations on projective space."""

from .polyring import Polynomial, VarRing, gcd, parse_polynomial, squarefree_decompose
from .groebner import (
    Budget,
    BudgetExceeded,
    Ideal,
    MonomialOrder,
    elimination_ideal,
    groebner_basis,
    projective_degree,
    saturate,
)
from .exterior import DifferentialForm, VectorField, contract_volume, exterior_derivative, wedge
from .foliation import Foliation, make_foliation, projectively_equal, pullback_foliation
from .gauss import (
    ComponentData,
    RationalMap,
    contracted_divisor,
    gauss_map,
    invert_birational,
    is_dominant,
    local_multiplicity,
    tdg_by_formula,
    tdg_oracle,
    transverse_multiplicity,
    verify_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "ComponentData", "DifferentialForm", "Foliation", "Ideal", "MonomialOrder",
    "Polynomial", "RationalMap", "VarRing", "VectorField", "contract_volume", "contracted_divisor",
    "elimination_ideal", "exterior_derivative", "gauss_map", "gcd", "groebner_basis", "invert_birational",
    "is_dominant", "local_multiplicity", "make_foliation", "parse_polynomial", "projective_degree",
    "projectively_equal", "pullback_foliation", "saturate", "squarefree_decompose", "tdg_by_formula",
    "tdg_oracle", "transverse_multiplicity", "verify_inverse", "wedge",
]
