"""One-step walk kernels and the budgeted walk driver.

Five neighbor-selection rules over the same immutable graph:

* ``srw``   - plain random walk, uniform over neighbors.
* ``nbrw``  - non-backtracking walk: uniform over neighbors minus the node
  just left, backtracking only when stuck at a degree-1 node.
* ``mhrw``  - Metropolis walk targeting the uniform node law: propose a
  uniform neighbor j, accept with min(1, d_i/d_j), stay put on reject.
* ``idrw``  - inverse-degree walk: propose a uniform neighbor j, accept
  with probability 1/d_j, re-propose until accepted.
* ``eidrw`` - inverse-degree walk with acceptance filter 1/d_j**alpha,
  interpolating between srw (alpha=0) and idrw (alpha=1).

The inverse-degree kernels run in one of two modes realizing the same law:
``rejection`` executes the accept/re-propose loop literally, while
``categorical`` draws the next node directly from the normalized weights
d_j**-alpha over the neighbors (no unbounded loop; the default).

Query accounting follows crawling-cost semantics: a node is charged once,
when its neighbor list is first fetched (i.e. when the walker occupies
it). Degree lookups are free by default because platforms display degrees
without a further request; ``count_degree_probes`` switches to a
pessimistic variant where degree-reading kernels are charged for every
neighbor of each occupied node.
"""

from __future__ import annotations

import weakref
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .graph import Graph
from .rng import RandomStream

__all__ = [
    "CATEGORICAL",
    "REJECTION",
    "WalkerKind",
    "WalkerState",
    "QueryLedger",
    "WalkSample",
    "step_srw",
    "step_nbrw",
    "step_mhrw",
    "step_idrw",
    "step_eidrw",
    "run_walk",
    "DEFAULT_STEP_CAP_MULTIPLIER",
]

CATEGORICAL = "categorical"
REJECTION = "rejection"
_MODES = (CATEGORICAL, REJECTION)
_NAMES = ("srw", "nbrw", "mhrw", "idrw", "eidrw")

DEFAULT_STEP_CAP_MULTIPLIER = 50


@dataclass(frozen=True)
class WalkerKind:
    """A walker variant: kernel name, alpha (inverse-degree family), mode."""

    name: str
    alpha: float | None = None
    mode: str = CATEGORICAL

    def __post_init__(self):
        if self.name not in _NAMES:
            raise ValueError(f"unknown walker {self.name!r}, expected one of {_NAMES}")
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}, expected one of {_MODES}")
        if self.name == "eidrw":
            if self.alpha is None:
                raise ValueError("eidrw requires alpha")
            if self.alpha < 0:
                raise ValueError(f"alpha must be >= 0, got {self.alpha}")
            object.__setattr__(self, "alpha", float(self.alpha))
        elif self.alpha is not None:
            raise ValueError(f"{self.name} does not take alpha")

    @classmethod
    def srw(cls) -> "WalkerKind":
        return cls("srw")

    @classmethod
    def nbrw(cls) -> "WalkerKind":
        return cls("nbrw")

    @classmethod
    def mhrw(cls) -> "WalkerKind":
        return cls("mhrw")

    @classmethod
    def idrw(cls, mode: str = CATEGORICAL) -> "WalkerKind":
        return cls("idrw", mode=mode)

    @classmethod
    def eidrw(cls, alpha: float, mode: str = CATEGORICAL) -> "WalkerKind":
        return cls("eidrw", alpha=alpha, mode=mode)

    @property
    def effective_alpha(self) -> float | None:
        """Acceptance exponent: 1 for idrw, given alpha for eidrw, else None."""
        if self.name == "idrw":
            return 1.0
        return self.alpha

    @property
    def reads_neighbor_degrees(self) -> bool:
        """Whether the kernel inspects candidate degrees when selecting."""
        if self.name == "mhrw":
            return True
        a = self.effective_alpha
        return a is not None and a != 0.0

    def token(self) -> str:
        """Compact config/CSV token, e.g. 'nbrw' or 'eidrw:0.3'."""
        if self.name == "eidrw":
            return f"eidrw:{self.alpha:g}"
        return self.name

    @classmethod
    def parse(cls, token: str, mode: str = CATEGORICAL) -> "WalkerKind":
        token = token.strip().lower()
        if ":" in token:
            name, _, value = token.partition(":")
            if name != "eidrw":
                raise ValueError(f"only eidrw takes a parameter, got {token!r}")
            return cls.eidrw(float(value), mode=mode)
        if token == "eidrw":
            raise ValueError("eidrw token requires an alpha, e.g. 'eidrw:0.3'")
        if token == "idrw":
            return cls.idrw(mode=mode)
        return cls(token)


class WalkerState:
    """Mutable position of one walker: current node, previous (nbrw), stream."""

    __slots__ = ("current", "previous", "rng")

    def __init__(self, current: int, rng: RandomStream, previous: int | None = None):
        self.current = current
        self.previous = previous
        self.rng = rng


class QueryLedger:
    """Unique neighbor-list-fetch accounting for one walk."""

    __slots__ = ("visited", "step_count")

    def __init__(self):
        self.visited: set[int] = set()
        self.step_count = 0

    @property
    def unique_count(self) -> int:
        return len(self.visited)

    def charge(self, node: int) -> None:
        self.visited.add(node)


@dataclass
class WalkSample:
    """Ordered record of a walk: every step's node (repeats included)."""

    nodes: list[int]
    degrees: list[int]
    ledger: QueryLedger
    kind: WalkerKind
    start: int
    truncated: bool = False
    seed: int | None = None

    def __len__(self) -> int:
        return len(self.nodes)


# -- one-step kernels ----------------------------------------------------------


def step_srw(g: Graph, state: WalkerState) -> int:
    """Move to a uniform neighbor of the current node."""
    nbrs = g.adjacency[state.current]
    nxt = nbrs[state.rng.pick(len(nbrs))]
    state.current = nxt
    return nxt


def step_nbrw(g: Graph, state: WalkerState) -> int:
    """Move to a uniform neighbor excluding the previous node.

    At a degree-1 node the walker backtracks (the only neighbor is the
    previous node). The first step, with no previous node, is uniform.
    """
    cur = state.current
    nbrs = g.adjacency[cur]
    d = len(nbrs)
    prev = state.previous
    if prev is None or d == 1:
        nxt = nbrs[state.rng.pick(d)]
    else:
        k = state.rng.pick(d - 1)
        if k >= bisect_left(nbrs, prev):
            k += 1
        nxt = nbrs[k]
    state.previous = cur
    state.current = nxt
    return nxt


def step_mhrw(g: Graph, state: WalkerState) -> int:
    """Propose a uniform neighbor j, accept with min(1, d_i/d_j), else stay."""
    adj = g.adjacency
    cur = state.current
    nbrs = adj[cur]
    d = len(nbrs)
    rng = state.rng
    j = nbrs[rng.pick(d)]
    if rng.uniform() * len(adj[j]) <= d:
        state.current = j
        return j
    return cur


def step_eidrw(g: Graph, state: WalkerState, alpha: float = 1.0, mode: str = CATEGORICAL) -> int:
    """Inverse-degree step with acceptance filter 1/d_j**alpha.

    Rejection mode repeats {propose uniform neighbor j, draw q} until
    q <= 1/d_j**alpha. Categorical mode draws j directly with probability
    d_j**-alpha normalized over the neighbors; both realize the same law.
    At alpha=0 every candidate is accepted, collapsing to a plain step
    that consumes a single uniform (same draw protocol as srw).
    """
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    cur = state.current
    nbrs = g.adjacency[cur]
    rng = state.rng
    if alpha == 0.0:
        nxt = nbrs[rng.pick(len(nbrs))]
    elif mode == REJECTION:
        adj = g.adjacency
        d = len(nbrs)
        while True:
            j = nbrs[rng.pick(d)]
            if rng.uniform() <= len(adj[j]) ** -alpha:
                nxt = j
                break
    elif mode == CATEGORICAL:
        cum = _cum_table(g, cur, alpha)
        nxt = nbrs[bisect_right(cum, rng.uniform())]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    state.current = nxt
    return nxt


def step_idrw(g: Graph, state: WalkerState, mode: str = CATEGORICAL) -> int:
    """Inverse-degree step with alpha fixed at 1."""
    return step_eidrw(g, state, 1.0, mode)


# Cumulative neighbor-weight tables, cached per graph and alpha. Rebuilding
# the same value on a rare concurrent first touch is benign.
_TABLE_CACHE: "weakref.WeakKeyDictionary[Graph, dict[float, list]]" = weakref.WeakKeyDictionary()


def _cum_table(g: Graph, node: int, alpha: float) -> list[float]:
    per_graph = _TABLE_CACHE.get(g)
    if per_graph is None:
        per_graph = _TABLE_CACHE.setdefault(g, {})
    tables = per_graph.get(alpha)
    if tables is None:
        tables = per_graph.setdefault(alpha, [None] * g.node_count)
    cum = tables[node]
    if cum is None:
        adj = g.adjacency
        weights = [len(adj[j]) ** -alpha for j in adj[node]]
        total = sum(weights)
        cum = []
        acc = 0.0
        for w in weights:
            acc += w
            cum.append(acc / total)
        cum[-1] = 1.0  # guard bisect against rounding at the top end
        tables[node] = cum
    return cum


# -- walk driver -----------------------------------------------------------------


def _make_stepper(g: Graph, kind: WalkerKind):
    if kind.name == "srw":
        return step_srw
    if kind.name == "nbrw":
        return step_nbrw
    if kind.name == "mhrw":
        return step_mhrw
    alpha = kind.effective_alpha
    mode = kind.mode

    def stepper(graph, state, _alpha=alpha, _mode=mode):
        return step_eidrw(graph, state, _alpha, _mode)

    return stepper


def run_walk(
    g: Graph,
    kind: WalkerKind,
    start: int,
    *,
    budget: int | None = None,
    steps: int | None = None,
    seed: int | None = None,
    rng: RandomStream | None = None,
    step_cap_multiplier: int = DEFAULT_STEP_CAP_MULTIPLIER,
    count_degree_probes: bool = False,
) -> WalkSample:
    """Run one walk to a unique-query budget or a fixed step count.

    Exactly one of ``budget`` / ``steps`` must be given. In budget mode the
    walk stops once ``budget`` distinct nodes have been charged (the start
    node counts as the first query); a safety cap of
    ``step_cap_multiplier * budget`` steps bounds stalls, and hitting it
    sets ``truncated`` on the returned sample instead of failing. There is
    no burn-in: every visited node enters the sample, repeats included.
    """
    g._check_node(start)
    if (budget is None) == (steps is None):
        raise ValueError("exactly one of budget or steps must be given")
    if budget is not None:
        if budget < 1:
            raise ValueError(f"budget must be >= 1, got {budget}")
        if budget > g.node_count:
            raise ValueError(f"budget {budget} exceeds node count {g.node_count}")
    if rng is None:
        if seed is None:
            raise ValueError("a seed or an explicit RandomStream is required")
        rng = RandomStream(seed)

    adj = g.adjacency
    charge_neighbors = count_degree_probes and kind.reads_neighbor_degrees
    state = WalkerState(start, rng)
    ledger = QueryLedger()
    ledger.charge(start)
    if charge_neighbors:
        ledger.visited.update(adj[start])
    nodes = [start]
    degrees = [len(adj[start])]
    step = _make_stepper(g, kind)
    truncated = False

    if steps is not None:
        for _ in range(steps):
            nxt = step(g, state)
            ledger.step_count += 1
            ledger.charge(nxt)
            if charge_neighbors:
                ledger.visited.update(adj[nxt])
            nodes.append(nxt)
            degrees.append(len(adj[nxt]))
    else:
        step_cap = step_cap_multiplier * budget
        charge = ledger.charge
        nodes_append = nodes.append
        degrees_append = degrees.append
        while ledger.unique_count < budget:
            if ledger.step_count >= step_cap:
                truncated = True
                break
            nxt = step(g, state)
            ledger.step_count += 1
            charge(nxt)
            if charge_neighbors:
                ledger.visited.update(adj[nxt])
            nodes_append(nxt)
            degrees_append(len(adj[nxt]))

    return WalkSample(
        nodes=nodes,
        degrees=degrees,
        ledger=ledger,
        kind=kind,
        start=start,
        truncated=truncated,
        seed=rng.seed,
    )
