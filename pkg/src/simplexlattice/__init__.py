"""Simplex-lattice hypergraphs H_{k,q} and their edgewise subdivisions:
Sperner-admissible labelings, exhaustive verification of the 2-colors-per-
hyperedge property, an exact brute-force oracle, file formats, and a CLI.
"""

from ._version import __version__
from .io import (
    LabelingFormatError,
    UnsupportedDimension,
    oracle_result_to_dict,
    read_labeling,
    render_svg,
    report_to_dict,
    write_labeling,
    write_oracle_result,
    write_report,
)
from .labeling import (
    READING_POSITION,
    READING_SELECTED,
    READINGS,
    Labeling,
    LabelUndefined,
    argmin_index,
    deficiency,
    label,
    label_all,
    label_pi,
    rule_descriptor,
    selected_index_pi,
)
from .lattice import (
    Hyperedge,
    InconsistentPair,
    Params,
    coordinate,
    enumerate_facets,
    enumerate_hyperedges,
    enumerate_vertices,
    hyperedge,
    identity_permutation,
    is_consistent,
    is_lattice_point,
    is_permutation,
    pi_hyperedge,
    vertex_rank,
    vertex_unrank,
)
from .oracle import OracleResult, admissible_colors, compare_pi_readings, min_max_colors
from .verify import (
    VerificationReport,
    check_all_pi,
    check_colors,
    check_sperner,
    edge_colors,
    full_report,
)

__all__ = [
    "__version__",
    "Hyperedge",
    "InconsistentPair",
    "Labeling",
    "LabelUndefined",
    "LabelingFormatError",
    "OracleResult",
    "Params",
    "READING_POSITION",
    "READING_SELECTED",
    "READINGS",
    "UnsupportedDimension",
    "VerificationReport",
    "admissible_colors",
    "argmin_index",
    "check_all_pi",
    "check_colors",
    "check_sperner",
    "compare_pi_readings",
    "coordinate",
    "deficiency",
    "edge_colors",
    "enumerate_facets",
    "enumerate_hyperedges",
    "enumerate_vertices",
    "full_report",
    "hyperedge",
    "identity_permutation",
    "is_consistent",
    "is_lattice_point",
    "is_permutation",
    "label",
    "label_all",
    "label_pi",
    "min_max_colors",
    "oracle_result_to_dict",
    "pi_hyperedge",
    "read_labeling",
    "render_svg",
    "report_to_dict",
    "rule_descriptor",
    "selected_index_pi",
    "vertex_rank",
    "vertex_unrank",
    "write_labeling",
    "write_oracle_result",
    "write_report",
]
