"""walkmix: random-walk graph sampling with inverse-degree bias correction.

Library layout:

* :mod:`walkmix.graph` - edge-list ingestion, simplification, LCC, queries.
* :mod:`walkmix.walkers` - step kernels (srw/nbrw/mhrw/idrw/eidrw) and the
  budgeted walk driver with unique-query accounting.
* :mod:`walkmix.estimators` - visit weights and the weighted ratio estimator.
* :mod:`walkmix.oracle` - exact transition matrices, stationary laws, and
  detailed-balance checks for small graphs.
* :mod:`walkmix.bench` - reproducible experiment driver writing CSV.
* :mod:`walkmix.cli` - the ``walkmix`` command.
"""

from .graph import (
    DegreeStats,
    EdgeList,
    EdgeListError,
    Graph,
    demo_graph,
    is_connected,
    largest_connected_component,
    load_edge_list,
    load_graph,
    simplify_undirected,
    uniform_neighbor,
)
from .rng import RandomStream
from .walkers import (
    CATEGORICAL,
    REJECTION,
    QueryLedger,
    WalkSample,
    WalkerKind,
    WalkerState,
    run_walk,
    step_eidrw,
    step_idrw,
    step_mhrw,
    step_nbrw,
    step_srw,
)
from .estimators import (
    Estimate,
    estimate_average_degree,
    ht_estimate,
    relative_error,
    visit_weight,
    walk_weights,
)
from .oracle import (
    TransitionMatrix,
    detailed_balance_residual,
    stationary_closed_form,
    stationary_power_iteration,
    transition_matrix,
    true_average_degree,
)
from .bench import BenchConfig, BenchRecord, mix_seed, run_exp1, run_exp2

__version__ = "0.1.0"
