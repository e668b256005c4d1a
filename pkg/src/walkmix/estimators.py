"""Visit-weighted ratio estimation of node statistics from walk samples.

A walker visits node i with long-run frequency pi(i); weighting each
sampled occurrence by w_i proportional to 1/pi(i) and forming

    estimate = sum_i w_i f(i) / sum_i w_i

over the walk's multiset of visits gives an asymptotically unbiased
estimate of the population mean of f. Weights per walker:

* srw, nbrw       w_i = 1 / d_i            (stationary law ~ degree)
* mhrw            w_i = 1                  (uniform target)
* idrw, eidrw     w_i = 1 / (d_i**-alpha * sum_{k in N(i)} d_k**-alpha)

The estimate is invariant to rescaling all weights by a positive constant,
so unnormalized weights are fine. Every occurrence in the walk contributes
one term; the repeats produced by a staying mhrw walker are what make its
plain sample mean unbiased.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .graph import Graph
from .walkers import WalkerKind, WalkSample

__all__ = [
    "Estimate",
    "visit_weight",
    "walk_weights",
    "ht_estimate",
    "estimate_average_degree",
    "relative_error",
]


@dataclass(frozen=True)
class Estimate:
    value: float
    sample_size: int
    walker: WalkerKind | None = None


def visit_weight(g: Graph, kind: WalkerKind, node: int) -> float:
    """Unnormalized visit weight of ``node`` under the walker's stationary law.

    For the inverse-degree family this reads every neighbor degree of the
    node (free under the default query-cost model).
    """
    d = g.degree(node)
    name = kind.name
    if name in ("srw", "nbrw"):
        return 1.0 / d
    if name == "mhrw":
        return 1.0
    alpha = kind.effective_alpha
    if alpha == 0.0:
        return 1.0 / d
    adj = g.adjacency
    inv_sum = sum(len(adj[j]) ** -alpha for j in adj[node])
    return 1.0 / (d**-alpha * inv_sum)


def walk_weights(g: Graph, sample: WalkSample) -> np.ndarray:
    """Per-occurrence weights aligned with ``sample.nodes``."""
    cache: dict[int, float] = {}
    kind = sample.kind
    out = np.empty(len(sample.nodes))
    for t, node in enumerate(sample.nodes):
        w = cache.get(node)
        if w is None:
            w = cache[node] = visit_weight(g, kind, node)
        out[t] = w
    return out


def ht_estimate(
    sample: WalkSample | Sequence[int],
    f: Callable[[int], float],
    weights: Sequence[float],
) -> Estimate:
    """Weighted ratio estimate sum(w f) / sum(w) over the sample multiset.

    ``sample`` is a WalkSample or a plain node sequence; ``weights`` must
    be aligned with it, one entry per occurrence.
    """
    if isinstance(sample, WalkSample):
        nodes = sample.nodes
        walker = sample.kind
    else:
        nodes = list(sample)
        walker = None
    if not nodes:
        raise ValueError("cannot estimate from an empty sample")
    w = np.asarray(weights, dtype=float)
    if w.shape != (len(nodes),):
        raise ValueError(f"{len(nodes)} sample entries but {w.shape} weights")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("weights must be positive and finite")
    values = np.fromiter((f(i) for i in nodes), dtype=float, count=len(nodes))
    value = float(np.dot(w, values) / w.sum())
    return Estimate(value=value, sample_size=len(nodes), walker=walker)


def estimate_average_degree(g: Graph, sample: WalkSample) -> Estimate:
    """Average-degree estimate from one walk, using the walker's weights.

    Aggregates over unique nodes (occurrence counts folded in), which is
    equivalent to the per-occurrence sum and much faster on long walks.
    """
    if not sample.nodes:
        raise ValueError("cannot estimate from an empty sample")
    nodes, counts = np.unique(np.asarray(sample.nodes, dtype=np.int64), return_counts=True)
    kind = sample.kind
    w = np.fromiter(
        (visit_weight(g, kind, int(i)) for i in nodes), dtype=float, count=len(nodes)
    )
    cw = counts * w
    degs = g.degrees[nodes]
    value = float(np.dot(cw, degs) / cw.sum())
    return Estimate(value=value, sample_size=len(sample.nodes), walker=kind)


def relative_error(estimate: float, truth: float) -> float:
    """|truth - estimate| / truth, the benchmark error metric."""
    if truth == 0:
        raise ValueError("relative error undefined for truth == 0")
    return abs(truth - estimate) / truth
