"""Separating-set energies and Poincare diagnostics on metric measure graphs."""

__version__ = "0.1.0"

from . import errors
from .energies import (
    CutWitness,
    EnergyReport,
    boundary_vertex_energy,
    brute_force_cut_infimum,
    capacity,
    codim_hausdorff,
    energy_report,
    first_shell_minkowski,
    min_cut_energy,
    minkowski_content,
    modulus_connecting,
    perimeter,
)
from .graph import (
    DistanceField,
    MetricMeasureGraph,
    ahlfors_exponent,
    ball_measure,
    build_graph,
    doubling_constant,
    load_graph_json,
    save_graph_json,
    shortest_paths,
    sphere_growth,
)
from .poincare import (
    CoareaResult,
    ScanReport,
    ScanRow,
    TestFunction,
    coarea_check,
    default_function_suite,
    local_poincare_check,
    pi_scan,
    ptpi_ratio,
    quantize_levels,
    test_function,
)
from .riesz import MassCheck, RieszField, riesz_mass_check, riesz_potential
from .separating import (
    SeparatingSet,
    enumerate_separating_sets,
    sublevel_set,
    validate_separating_set,
)
from .spaces import (
    gen_carpet,
    gen_dumbbell,
    gen_grid,
    gen_path,
    ingest_point_cloud,
)

__all__ = [
    "errors",
    "CutWitness",
    "EnergyReport",
    "boundary_vertex_energy",
    "brute_force_cut_infimum",
    "capacity",
    "codim_hausdorff",
    "energy_report",
    "first_shell_minkowski",
    "min_cut_energy",
    "minkowski_content",
    "modulus_connecting",
    "perimeter",
    "DistanceField",
    "MetricMeasureGraph",
    "ahlfors_exponent",
    "ball_measure",
    "build_graph",
    "doubling_constant",
    "load_graph_json",
    "save_graph_json",
    "shortest_paths",
    "sphere_growth",
    "CoareaResult",
    "ScanReport",
    "ScanRow",
    "TestFunction",
    "coarea_check",
    "default_function_suite",
    "local_poincare_check",
    "pi_scan",
    "ptpi_ratio",
    "quantize_levels",
    "test_function",
    "MassCheck",
    "RieszField",
    "riesz_mass_check",
    "riesz_potential",
    "SeparatingSet",
    "enumerate_separating_sets",
    "sublevel_set",
    "validate_separating_set",
    "gen_carpet",
    "gen_dumbbell",
    "gen_grid",
    "gen_path",
    "ingest_point_cloud",
]
