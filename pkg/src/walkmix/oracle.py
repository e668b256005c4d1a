"""Exact verification engine for the walk kernels on small graphs.

Builds dense row-stochastic transition matrices for each walker, computes
stationary distributions both by power iteration and in closed form, and
measures how far a candidate distribution is from satisfying detailed
balance. Everything here is desk-scale (dense matrices, graphs up to a
few thousand nodes) and exists to check the samplers, not to run them.

Closed forms: a plain walk is stationary proportional to degree; the
Metropolis walk targets the uniform law; the inverse-degree family with
exponent alpha is stationary proportional to

    d_i**-alpha * sum_{k in N(i)} d_k**-alpha

which reduces to the degree law at alpha=0. The non-backtracking walk is
excluded: its node sequence is not first-order Markov, so it has no node
transition matrix (it is validated empirically against its one-step law
in the walker tests instead).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph
from .walkers import WalkerKind

__all__ = [
    "ORACLE_SIZE_CAP",
    "UnsupportedWalkerError",
    "PowerIterationError",
    "TransitionMatrix",
    "transition_matrix",
    "stationary_power_iteration",
    "stationary_closed_form",
    "detailed_balance_residual",
    "true_average_degree",
    "min_positive_power",
    "format_distribution",
    "format_matrix",
    "star_alpha_sweep",
]

ORACLE_SIZE_CAP = 5000


class UnsupportedWalkerError(ValueError):
    """Requested walker has no node-level transition matrix."""


class PowerIterationError(RuntimeError):
    """Power iteration failed to reach the requested tolerance."""


@dataclass(frozen=True)
class TransitionMatrix:
    """Dense row-stochastic one-step matrix of a walker on a graph."""

    kind: WalkerKind
    alpha: float | None
    matrix: np.ndarray

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def validate(self, tol: float = 1e-12) -> None:
        m = self.matrix
        if np.any(m < 0):
            raise ValueError("negative transition probability")
        if np.max(np.abs(m.sum(axis=1) - 1.0)) > tol:
            raise ValueError("rows do not sum to 1")


def _dense_adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.node_count, g.node_count))
    for u, nbrs in enumerate(g.adjacency):
        a[u, list(nbrs)] = 1.0
    return a


def transition_matrix(
    g: Graph, kind: WalkerKind | str, size_cap: int = ORACLE_SIZE_CAP
) -> TransitionMatrix:
    """Exact one-step matrix for srw, mhrw, idrw, or eidrw.

    The inverse-degree rows are the normalized off-diagonal weights
    1/(d_i d_j**alpha): the raw kernel leaves self-mass on the diagonal,
    and re-proposing until acceptance redistributes it over the neighbors,
    giving P_ij = w_ij / sum_k w_ik with a zero diagonal. The Metropolis
    matrix keeps its rejection mass on the diagonal.
    """
    if isinstance(kind, str):
        kind = WalkerKind.parse(kind)
    if kind.name == "nbrw":
        raise UnsupportedWalkerError(
            "nbrw is not a first-order Markov chain on nodes; no node matrix exists"
        )
    n = g.node_count
    if n > size_cap:
        raise ValueError(f"graph has {n} nodes, above the oracle cap {size_cap}")

    a = _dense_adjacency(g)
    d = g.degrees.astype(float)
    if kind.name == "srw":
        p = a / d[:, None]
        return TransitionMatrix(kind=kind, alpha=None, matrix=p)
    if kind.name == "mhrw":
        accept = np.minimum(1.0, d[:, None] / d[None, :])
        p = a * accept / d[:, None]  # diagonal starts at zero (no self-loops)
        np.fill_diagonal(p, 1.0 - p.sum(axis=1))
        return TransitionMatrix(kind=kind, alpha=None, matrix=p)

    alpha = kind.effective_alpha
    w = a * (d**-alpha)[None, :] / d[:, None]
    escape = w.sum(axis=1)  # 1 - self-mass, strictly positive on connected graphs
    p = w / escape[:, None]
    return TransitionMatrix(kind=kind, alpha=alpha, matrix=p)


def stationary_power_iteration(
    p: TransitionMatrix | np.ndarray,
    tol: float = 1e-12,
    max_iterations: int = 10**6,
) -> np.ndarray:
    """Stationary distribution by iterate-and-normalize from the uniform start.

    Iterates the half-lazy chain (P + I)/2, which shares the original
    chain's stationary vector but cannot oscillate on periodic (e.g.
    bipartite) graphs. Convergence is measured against the original P:
    the result satisfies ||x P - x||_inf <= tol.
    """
    m = p.matrix if isinstance(p, TransitionMatrix) else np.asarray(p, dtype=float)
    n = m.shape[0]
    x = np.full(n, 1.0 / n)
    for _ in range(max_iterations):
        z = x @ m
        if np.max(np.abs(z - x)) <= tol:
            return x / x.sum()
        x = 0.5 * (x + z)
        x /= x.sum()
    raise PowerIterationError(
        f"no convergence to tol {tol} within {max_iterations} iterations"
    )


def stationary_closed_form(g: Graph, alpha: float) -> np.ndarray:
    """Closed-form stationary law of the inverse-degree walk at ``alpha``.

    Normalizes d_i**-alpha * sum_{k in N(i)} d_k**-alpha over nodes; at
    alpha=0 this is exactly degree / (2 * edge_count).
    """
    d = g.degrees.astype(float)
    inv = d**-alpha
    neighbor_sums = np.fromiter(
        (inv[list(nbrs)].sum() for nbrs in g.adjacency), dtype=float, count=g.node_count
    )
    pi = inv * neighbor_sums
    return pi / pi.sum()


def detailed_balance_residual(p: TransitionMatrix | np.ndarray, pi: np.ndarray) -> float:
    """max over (i, j) of |pi_i P_ij - pi_j P_ji|; zero iff pi is reversible for P."""
    m = p.matrix if isinstance(p, TransitionMatrix) else np.asarray(p, dtype=float)
    flow = pi[:, None] * m
    return float(np.max(np.abs(flow - flow.T)))


def true_average_degree(g: Graph) -> float:
    """Exact population mean degree, 2|E| / |V|."""
    return 2.0 * g.edge_count / g.node_count


def min_positive_power(p: TransitionMatrix | np.ndarray, cap: int | None = None) -> int | None:
    """Smallest k with P**k entrywise positive, or None up to ``cap``.

    A positive power certifies the chain is irreducible and aperiodic,
    hence has a unique stationary distribution.
    """
    m = p.matrix if isinstance(p, TransitionMatrix) else np.asarray(p, dtype=float)
    if cap is None:
        cap = m.shape[0]
    acc = m.copy()
    for k in range(1, cap + 1):
        if np.all(acc > 0):
            return k
        acc = acc @ m
    return None


def format_distribution(pi: np.ndarray) -> str:
    """Text table of a distribution: node id and value, 12 significant digits."""
    lines = [f"{i:>6d}  {v:.12g}" for i, v in enumerate(pi)]
    return "\n".join(lines) + "\n"


def format_matrix(p: TransitionMatrix | np.ndarray) -> str:
    """Text table of matrix entries 'i j value' (nonzeros only), 12 digits."""
    m = p.matrix if isinstance(p, TransitionMatrix) else np.asarray(p, dtype=float)
    lines = []
    for i, j in zip(*np.nonzero(m)):
        lines.append(f"{i:>6d} {j:>6d}  {m[i, j]:.12g}")
    return "\n".join(lines) + "\n"


def star_alpha_sweep(
    leaves: int = 10, alphas: tuple[float, ...] = (0.0, 0.5, 1.0, 2.0, 4.0, 8.0)
) -> list[tuple[float, float]]:
    """(alpha, max pi / min pi) on a star graph, for inspection.

    On a star the closed form gives a hub/leaf mass ratio equal to the
    leaf count at every alpha, so raising alpha does not flatten the
    stationary law toward uniform on hub-and-spoke topologies.
    """
    from .graph import simplify_undirected

    star = simplify_undirected([(0, i) for i in range(1, leaves + 1)])
    out = []
    for alpha in alphas:
        pi = stationary_closed_form(star, alpha)
        out.append((alpha, float(pi.max() / pi.min())))
    return out
