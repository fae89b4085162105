"""Exact Poincaré series of twisted Higgs moduli on P^1 by localization over argyle chains."""

from .chains import ChainLabel, DomainError, enumerate_labellings, label_admissible, total_slope
from .collision import (bpf_grassmannian_class, bpf_tuple_class, common_zero_class,
                        coprime_tuple_class, fq_count_oracle, interpolate_class)
from .dimension import higgs_moduli_dimension, moduli_dimension
from .geometry import (ArgyleBlock, EmptyStratum, NonArgyleError, StratumGeometry, block_decompose,
                       closure_geometry, h0_end, h1_end)
from .localization import (FixedComponent, component_class, poincare_series, rank2_closed_form,
                           rank2_generating_function, series_report)
from .morse import morse_index
from .series import MotivicClass, PoincarePoly, grassmannian_class, projective_class
from .sigma import (build_sigma_system, pullback_degrees, sigma_determinant_check, solve_sigma,
                    tuple_stability_check)
from .splittings import SplittingType, admissible_strata, generic_splitting, type_change_children

__version__ = "0.1.0"

__all__ = [
    "admissible_strata",
    "ArgyleBlock",
    "block_decompose",
    "bpf_grassmannian_class",
    "bpf_tuple_class",
    "build_sigma_system",
    "ChainLabel",
    "closure_geometry",
    "common_zero_class",
    "component_class",
    "coprime_tuple_class",
    "DomainError",
    "EmptyStratum",
    "enumerate_labellings",
    "FixedComponent",
    "fq_count_oracle",
    "generic_splitting",
    "grassmannian_class",
    "h0_end",
    "h1_end",
    "higgs_moduli_dimension",
    "interpolate_class",
    "label_admissible",
    "moduli_dimension",
    "morse_index",
    "MotivicClass",
    "NonArgyleError",
    "poincare_series",
    "PoincarePoly",
    "projective_class",
    "pullback_degrees",
    "rank2_closed_form",
    "rank2_generating_function",
    "series_report",
    "sigma_determinant_check",
    "solve_sigma",
    "SplittingType",
    "StratumGeometry",
    "total_slope",
    "tuple_stability_check",
    "type_change_children",
]
