"""orientcount: exact enumeration and verification for orientations of
(random) graphs avoiding directed k-cycles.

The package provides bitset graph types and directed-cycle primitives,
seeded samplers, two independent exact counters for k-cycle-free
orientations, local-density pseudorandomness checkers, a container-building
encoder for sparse extensions, Kleitman-Winston containers for independent
sets, Monte Carlo checks of extension-count bounds, and a reproducible
sweep harness with a CLI.
"""

__version__ = "0.1.0"

from .bitsets import as_mask, bits, full_mask, mask_of, size
from .containers import (
    AveragingResult,
    ContainerFamily,
    KWConfig,
    averaging_check,
    canonical_kw_config,
    kw_check_hypothesis,
    kw_family,
    kw_fingerprint,
    kw_reconstruct,
)
from .counting import (
    BRUTE_EDGE_LIMIT,
    CountResult,
    count_acyclic,
    count_bruteforce,
    count_propagate,
    enumerate_cfree,
)
from .density import (
    DensityVerdict,
    Frame,
    MomentBound,
    Params,
    is_r_locally_dense,
    is_sparse_extension,
    moment_bound_check,
    validate_frame,
)
from .encode import (
    EncodeInput,
    EncodeOutput,
    TraceStep,
    antiparallel_pairs,
    container_family_stats,
    encode,
    fingerprint_degree_report,
    verify_T_determines_C,
)
from .errors import BudgetRefusal, PreconditionError
from .extensions import (
    ExtensionBoundReport,
    dense_case_bound,
    estimate_dense_case,
    estimate_sparse_case,
    fingerprint_split,
    independent_in_power,
    minimal_fingerprint,
    per_vertex_rate,
    sparse_case_bound,
)
from .graphs import (
    BACKWARD,
    FORWARD,
    UNSET,
    Digraph,
    Graph,
    Orientation,
    bidir_degree,
    bidir_edge_count,
    has_directed_cycle,
    power_digraph,
    read_digraph,
    read_graph,
    read_orientation,
    remove_vertices,
    write_edge_list,
)
from .sampling import sample_extension, sample_gnp, sample_orientation
from .sweep import (
    BoundCheckReport,
    SweepRow,
    SweepSpec,
    bound_check_rows,
    execute_sweep,
    read_sweep_csv,
    run_sweep,
    run_theorem_bound_check,
    upper_bound,
    write_sweep_csv,
    write_sweep_json,
)
