"""Intersecting-subset quantum CSS codes: construction, analysis, CLI."""

from .alist import from_alist, to_alist
from .catalog import (CatalogEntry, VerificationReport, asymmetric_entry,
                      catalog, get_entry, standard_rm_entry, verify_entry)
from .csscode import (CircuitSpec, ComponentPair, CssCode, SyndromeSchedule,
                      build_css, code_from_json)
from .decomp import (IncompletePermutation, JointDecomposition, joint_decompose,
                     layered_decompose, layered_tensor)
from .gf2 import BitMatrix, BitVector
from .grm import (GrmSpace, NestedPair, css_xz_distances, dual_parameter_set,
                  grm_generator, nested_distance, nested_distance_uuv, r_matrix)
from .oracle import (CosetProblem, coset_min_weight, css_distances_bruteforce,
                     DEFAULT_DIM_CAP)
from .posets import (DECREASING, INCREASING, MonotoneSet, SubsetTuple, closure,
                     complement_partition)

__all__ = [
    "BitMatrix", "BitVector", "CatalogEntry", "CircuitSpec", "ComponentPair",
    "CosetProblem", "CssCode", "DECREASING", "DEFAULT_DIM_CAP", "GrmSpace",
    "INCREASING", "IncompletePermutation", "JointDecomposition", "MonotoneSet",
    "NestedPair", "SubsetTuple", "SyndromeSchedule", "VerificationReport",
    "asymmetric_entry", "build_css", "catalog", "closure", "code_from_json",
    "complement_partition", "coset_min_weight", "css_distances_bruteforce",
    "css_xz_distances", "dual_parameter_set", "from_alist", "get_entry",
    "grm_generator", "joint_decompose", "layered_decompose", "layered_tensor",
    "nested_distance", "nested_distance_uuv", "r_matrix", "standard_rm_entry",
    "to_alist", "verify_entry",
]

__version__ = "0.1.0"
