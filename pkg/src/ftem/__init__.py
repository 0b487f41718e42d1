"""Vertex fault-tolerant emulators and spanners with exhaustive verification."""
from .additive import build_additive2, build_additive4
from .builders import (
    BuildParams,
    LocalPath,
    build_vft_5_emulator,
    build_vft_emulator,
    build_vft_spanner_greedy,
    choose_params,
    enumerate_local_paths_through,
)
from .constructions import (
    blow_up,
    girth,
    lb_instance_stretch2k1,
    lb_instance_stretch3,
    projective_plane_incidence,
    random_graph,
)
from .graph import (
    INF,
    EmulatorGraph,
    WeightedGraph,
    emulator_dist,
    graph_dist,
    hop_dist,
    load_graph,
)
from .oracle import Method, Verdict, WitnessResult, exhaustive_witness, find_fault_set
from .verify import (
    VerificationReport,
    count_alternating_kpaths,
    count_middle_heavy_3paths,
    is_local,
    is_sala,
    verify_additive,
    verify_multiplicative,
)

__version__ = "0.1.0"
