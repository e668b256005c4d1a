"""Query-cost benchmark driver: error-vs-budget and alpha-sweep experiments.

Two experiment shapes over one dataset:

* exp1 - for each (walker, budget, replication), walk to the unique-query
  budget from a uniformly drawn start node and record the relative error
  of the average-degree estimate.
* exp2 - fix the budget and sweep the inverse-degree exponent alpha.

Rows are independently reproducible: replication r of (walker, budget)
runs on ``mix_seed(master_seed, walker_token, budget, r)``, a SHA-256
based 64-bit mix, and the seeded stream first draws the start node and
then drives the walk. Identical config and master seed therefore yield
byte-identical CSV output regardless of thread count.

Config files are flat ``key = value`` text, '#' comments, lists
comma-separated::

    dataset = ca-GrQc.txt
    walkers = idrw, nbrw, mhrw
    budgets = 100, 200, 300, 400, 500, 600
    alphas = 0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0
    exp2_budget = 300
    replications = 200
    master_seed = 0

CSV schema (UTF-8, LF):
``dataset,walker,alpha,budget,replication,estimate,relative_error,steps,truncated``
with floats in repr form so every stored relative_error is exactly
recomputable from the stored estimate and the dataset truth.
"""

from __future__ import annotations

import hashlib
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import estimators
from .graph import Graph, demo_graph, load_graph, resolve_dataset
from .rng import RandomStream
from .walkers import CATEGORICAL, DEFAULT_STEP_CAP_MULTIPLIER, WalkerKind, run_walk

__all__ = [
    "CSV_HEADER",
    "BenchConfig",
    "BenchRecord",
    "parse_config",
    "parse_config_text",
    "mix_seed",
    "load_bench_graph",
    "run_exp1",
    "run_exp2",
    "records_to_csv",
    "write_csv",
]

logger = logging.getLogger(__name__)

CSV_HEADER = "dataset,walker,alpha,budget,replication,estimate,relative_error,steps,truncated"

DEFAULT_BUDGETS = (100, 200, 300, 400, 500, 600)
DEFAULT_ALPHAS = tuple(round(0.1 * i, 10) for i in range(11))
DEFAULT_WALKERS = ("idrw", "nbrw", "mhrw")
BUILTIN_GRAPHS = ("demo", "fig1")

TRUNCATION_WARN_FRACTION = 0.01


@dataclass
class BenchConfig:
    dataset: str
    name: str | None = None
    walkers: tuple[str, ...] = DEFAULT_WALKERS
    budgets: tuple[int, ...] = DEFAULT_BUDGETS
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    exp2_budget: int = 300
    replications: int = 200
    master_seed: int = 0
    step_cap_multiplier: int = DEFAULT_STEP_CAP_MULTIPLIER
    idrw_mode: str = CATEGORICAL

    def __post_init__(self):
        if self.replications < 1:
            raise ValueError(f"replications must be >= 1, got {self.replications}")
        if not self.budgets:
            raise ValueError("budgets must be nonempty")
        if list(self.budgets) != sorted(set(self.budgets)):
            raise ValueError(f"budgets must be strictly increasing, got {self.budgets}")
        if any(b < 1 for b in self.budgets):
            raise ValueError("budgets must be >= 1")
        if any(a < 0 for a in self.alphas):
            raise ValueError("alphas must be >= 0")
        for token in self.walkers:
            WalkerKind.parse(token)  # fail fast on typos

    @property
    def display_name(self) -> str:
        return self.name or Path(self.dataset).stem

    def walker_kinds(self) -> list[WalkerKind]:
        return [WalkerKind.parse(token, mode=self.idrw_mode) for token in self.walkers]


@dataclass(frozen=True)
class BenchRecord:
    dataset: str
    walker: str
    alpha: float | None
    budget: int
    replication: int
    estimate: float
    relative_error: float
    steps: int
    truncated: bool

    def to_csv_row(self) -> str:
        alpha = "" if self.alpha is None else repr(self.alpha)
        return (
            f"{self.dataset},{self.walker},{alpha},{self.budget},{self.replication},"
            f"{self.estimate!r},{self.relative_error!r},{self.steps},{int(self.truncated)}"
        )


# -- configuration -----------------------------------------------------------------


def parse_config_text(text: str) -> BenchConfig:
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        values[key.strip().lower()] = value.strip()

    known = {
        "dataset",
        "name",
        "walkers",
        "budgets",
        "alphas",
        "exp2_budget",
        "replications",
        "master_seed",
        "step_cap_multiplier",
        "idrw_mode",
    }
    unknown = set(values) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    if "dataset" not in values:
        raise ValueError("config is missing the 'dataset' key")

    kwargs: dict = {"dataset": values["dataset"]}
    if "name" in values:
        kwargs["name"] = values["name"]
    if "walkers" in values:
        kwargs["walkers"] = tuple(t.strip() for t in values["walkers"].split(",") if t.strip())
    if "budgets" in values:
        kwargs["budgets"] = tuple(int(t) for t in values["budgets"].split(","))
    if "alphas" in values:
        kwargs["alphas"] = tuple(float(t) for t in values["alphas"].split(","))
    for key in ("exp2_budget", "replications", "step_cap_multiplier", "master_seed"):
        if key in values:
            kwargs[key] = int(values[key])
    if "idrw_mode" in values:
        kwargs["idrw_mode"] = values["idrw_mode"].lower()
    return BenchConfig(**kwargs)


def parse_config(path: str | Path) -> BenchConfig:
    return parse_config_text(Path(path).read_text(encoding="utf-8"))


def load_bench_graph(cfg: BenchConfig) -> Graph:
    """Resolve the config's dataset to a preprocessed (LCC) graph."""
    if cfg.dataset.lower() in BUILTIN_GRAPHS:
        return demo_graph()
    return load_graph(resolve_dataset(cfg.dataset))


# -- seeding -------------------------------------------------------------------------


def mix_seed(master_seed: int, *parts) -> int:
    """Deterministic 64-bit row seed from the master seed and row identity.

    SHA-256 over 'master|part|part|...' truncated to 8 bytes, so any
    (walker, budget, replication) row can be re-run in isolation.
    """
    payload = "|".join([str(int(master_seed)), *map(str, parts)])
    digest = hashlib.sha256(payload.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _single_row(
    graph: Graph,
    dataset_name: str,
    truth: float,
    master_seed: int,
    step_cap_multiplier: int,
    kind: WalkerKind,
    budget: int,
    rep: int,
) -> BenchRecord:
    seed = mix_seed(master_seed, kind.token(), budget, rep)
    stream = RandomStream(seed)
    start = stream.pick(graph.node_count)
    sample = run_walk(
        graph,
        kind,
        start,
        budget=budget,
        rng=stream,
        step_cap_multiplier=step_cap_multiplier,
    )
    est = estimators.estimate_average_degree(graph, sample)
    return BenchRecord(
        dataset=dataset_name,
        walker=kind.name,
        alpha=kind.effective_alpha,
        budget=budget,
        replication=rep,
        estimate=est.value,
        relative_error=estimators.relative_error(est.value, truth),
        steps=sample.ledger.step_count,
        truncated=sample.truncated,
    )


# -- experiment drivers ---------------------------------------------------------------

_WORKER_CTX: tuple | None = None


def _worker_init(graph, dataset_name, truth, master_seed, step_cap_multiplier):
    global _WORKER_CTX
    _WORKER_CTX = (graph, dataset_name, truth, master_seed, step_cap_multiplier)


def _worker_row(task):
    kind, budget, rep = task
    return _single_row(*_WORKER_CTX, kind, budget, rep)


def _run_grid(
    cfg: BenchConfig,
    graph: Graph | None,
    kinds: list[WalkerKind],
    budgets: tuple[int, ...],
    threads: int,
) -> list[BenchRecord]:
    if graph is None:
        graph = load_bench_graph(cfg)
    over = [b for b in budgets if b > graph.node_count]
    if over:
        raise ValueError(
            f"budgets {over} exceed the {graph.node_count}-node component"
        )
    truth = 2.0 * graph.edge_count / graph.node_count
    ctx = (graph, cfg.display_name, truth, cfg.master_seed, cfg.step_cap_multiplier)
    tasks = [
        (kind, budget, rep)
        for kind in kinds
        for budget in budgets
        for rep in range(cfg.replications)
    ]

    if threads == 0:
        threads = os.cpu_count() or 1
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(
            max_workers=threads, initializer=_worker_init, initargs=ctx
        ) as pool:
            records = list(pool.map(_worker_row, tasks, chunksize=32))
    else:
        records = [_single_row(*ctx, *task) for task in tasks]

    _warn_on_truncation(records, cfg)
    return records


def _warn_on_truncation(records: list[BenchRecord], cfg: BenchConfig) -> None:
    by_walker: dict[str, list[bool]] = {}
    for rec in records:
        by_walker.setdefault(rec.walker, []).append(rec.truncated)
    for walker, flags in by_walker.items():
        frac = sum(flags) / len(flags)
        if frac > TRUNCATION_WARN_FRACTION:
            logger.warning(
                "%s: %.1f%% of %s replications hit the step cap (%dx budget); "
                "estimates from truncated walks are kept but flagged",
                cfg.display_name,
                100.0 * frac,
                walker,
                cfg.step_cap_multiplier,
            )


def run_exp1(
    cfg: BenchConfig, graph: Graph | None = None, threads: int = 1
) -> list[BenchRecord]:
    """Error vs unique-query budget for every configured walker.

    Rows are ordered (walker, budget, replication) regardless of thread
    count. ``graph`` may be supplied directly to skip dataset loading.
    """
    return _run_grid(cfg, graph, cfg.walker_kinds(), cfg.budgets, threads)


def run_exp2(
    cfg: BenchConfig, graph: Graph | None = None, threads: int = 1
) -> list[BenchRecord]:
    """Error vs alpha for the inverse-degree walker at the fixed exp2 budget."""
    kinds = [WalkerKind.eidrw(a, mode=cfg.idrw_mode) for a in cfg.alphas]
    return _run_grid(cfg, graph, kinds, (cfg.exp2_budget,), threads)


# -- output ---------------------------------------------------------------------------


def records_to_csv(records: list[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    lines.extend(rec.to_csv_row() for rec in records)
    return "\n".join(lines) + "\n"


def write_csv(records: list[BenchRecord], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(records_to_csv(records))
