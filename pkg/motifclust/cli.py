"""Command-line front end: cluster, sweep, eval, stats and gen."""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from enum import Enum
from typing import IO, Any, Dict, Iterator, List, Optional, Sequence

import pydantic
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .cluster import cluster_with_stats, compute_scores
from .core.exceptions import ConfigurationError, MotifClustError
from .core.types import SelectionRule, SimilarityKind
from .generators import DENSITY_REGIMES, RmatParams, SbmParams, gen_rmat, gen_sbm
from .graph.io import (
    NodeIdMap,
    load_communities,
    load_edge_list,
    open_output,
    read_partition,
    write_edge_list,
    write_partition,
)
from .motifs import motif_cut_fractions, score_separation, write_scores_csv
from .quality import CSV_SUMMARY_HEADER, density_histogram, evaluate
from .sweep import default_grid, format_sweep_csv, sweep, with_selection
from .utils.config import (
    DEFAULT_JUMP_FACTOR,
    DEFAULT_MIN_COMMUNITY_SIZE,
    get_default_log_level,
    get_default_threads,
)
from .utils.logger import get_logger, set_log_level
from .utils.parallel import num_workers

logger = get_logger("cli")

SIM_CHOICES = [kind.value for kind in SimilarityKind]
STATS_DEFAULT_KINDS = ["tw", "tectonic", "jaccard", "k3"]


class Command(Enum):
    """CLI subcommands."""

    CLUSTER = "cluster"
    SWEEP = "sweep"
    EVAL = "eval"
    GEN = "gen"
    STATS = "stats"


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation; every field has a default."""

    model_config = ConfigDict(use_enum_values=True)

    command: Command = Command.CLUSTER
    input: Optional[str] = None
    output: Optional[str] = None
    truth: Optional[str] = None
    graph: Optional[str] = None
    scores_out: Optional[str] = None
    kinds: List[SimilarityKind] = Field(default_factory=lambda: [SimilarityKind.TW])
    delta: Optional[float] = None
    start: Optional[float] = None
    end: Optional[float] = None
    step: Optional[float] = None
    threads: Optional[int] = Field(default=None, ge=1)
    min_size: int = Field(default=DEFAULT_MIN_COMMUNITY_SIZE, ge=1)
    seed: int = Field(default=0, ge=0)
    rule: Optional[SelectionRule] = None
    auto_select: bool = False
    jump_factor: float = Field(default=DEFAULT_JUMP_FACTOR, ge=0.0)
    singletons: str = Field(default="keep", pattern="^(keep|drop)$")
    output_format: str = Field(default="json", pattern="^(json|csv)$")
    bins: int = Field(default=10, ge=1)
    node_limit: Optional[int] = Field(default=None, ge=1)
    log_level: Optional[str] = None
    # gen
    generator: Optional[str] = None
    n: int = Field(default=50, ge=0)
    p1: float = Field(default=0.1, ge=0.0, le=1.0)
    p2: float = Field(default=0.8, ge=0.0, le=1.0)
    q: float = Field(default=0.05, ge=0.0, le=1.0)
    scale: int = Field(default=10, ge=1)
    edges: Optional[int] = Field(default=None, ge=0)
    edge_factor: Optional[float] = Field(default=None, ge=0.0)
    quadrants: Optional[List[float]] = None
    regime: Optional[str] = None

    @property
    def kind(self) -> SimilarityKind:
        return SimilarityKind.parse(self.kinds[0])

    @property
    def include_singletons(self) -> bool:
        return self.singletons == "keep"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser reporting usage errors as ConfigurationError (exit status 1)."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise ConfigurationError(f"{self.prog}: {message}")


def _quadrants(text: str) -> List[float]:
    try:
        values = [float(token) for token in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected four comma-separated numbers, got {text!r}")
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"expected four comma-separated numbers, got {text!r}")
    return values


def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker count (default: $MOTIFCLUST_THREADS, else all cores)")
    common.add_argument("--log-level", dest="log_level", default=None,
                        help="logging level (default: $MOTIFCLUST_LOG_LEVEL, else WARNING)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _ArgumentParser(
        prog="motifclust",
        description="Motif-based community detection: score edges, sparsify, take connected components.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", metavar="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    p_cluster = commands.add_parser("cluster", parents=[common], formatter_class=fmt,
                                    help="cluster a graph at one threshold")
    p_cluster.add_argument("--input", required=True, help="edge-list file (plain or gzip)")
    p_cluster.add_argument("--output", required=True, help="partition file to write")
    p_cluster.add_argument("--sim", choices=SIM_CHOICES, default="tw", help="similarity function")
    p_cluster.add_argument("--delta", type=float, required=True,
                           help="threshold; edges scoring below it are removed")
    p_cluster.add_argument("--singletons", choices=["keep", "drop"], default="keep",
                           help="write singleton communities")
    p_cluster.add_argument("--scores-out", dest="scores_out", default=None,
                           help="also write per-edge scores as u,v,score CSV")
    p_cluster.add_argument("--node-limit", dest="node_limit", type=int, default=None,
                           help="node-count guard for --sim bc (default: $MOTIFCLUST_BC_NODE_LIMIT or 20000)")

    p_sweep = commands.add_parser("sweep", parents=[common], formatter_class=fmt,
                                  help="sweep a threshold grid and optionally select a threshold")
    p_sweep.add_argument("--input", required=True, help="edge-list file (plain or gzip)")
    p_sweep.add_argument("--output", default=None, help="CSV file to write (default: stdout)")
    p_sweep.add_argument("--sim", choices=SIM_CHOICES, default="tw", help="similarity function")
    p_sweep.add_argument("--start", type=float, default=None, help="first threshold (default grid per --sim)")
    p_sweep.add_argument("--end", type=float, default=None, help="grid end, exclusive")
    p_sweep.add_argument("--step", type=float, default=None, help="grid step")
    p_sweep.add_argument("--truth", default=None, help="groundtruth community file; adds an f1 column")
    p_sweep.add_argument("--min-size", dest="min_size", type=int, default=DEFAULT_MIN_COMMUNITY_SIZE,
                         help="drop groundtruth communities smaller than this")
    p_sweep.add_argument("--rule", choices=[rule.value for rule in SelectionRule], default=None,
                         help="selection rule; implies --auto-select (default when selecting: jump)")
    p_sweep.add_argument("--jump-factor", dest="jump_factor", type=float, default=DEFAULT_JUMP_FACTOR,
                         help="minimum largest-CC jump for the jump rule")
    p_sweep.add_argument("--auto-select", dest="auto_select", action="store_true",
                         help="append the selected threshold as a comment line")
    p_sweep.add_argument("--singletons", choices=["keep", "drop"], default="keep",
                         help="count singleton clusters when computing f1")
    p_sweep.add_argument("--node-limit", dest="node_limit", type=int, default=None,
                         help="node-count guard for --sim bc")

    p_eval = commands.add_parser("eval", parents=[common], formatter_class=fmt,
                                 help="evaluate a partition file against groundtruth")
    p_eval.add_argument("--input", required=True, help="partition file (one community per line)")
    p_eval.add_argument("--truth", required=True, help="groundtruth community file")
    p_eval.add_argument("--graph", default=None,
                        help="edge-list file whose labels define the node set (default: partition labels)")
    p_eval.add_argument("--min-size", dest="min_size", type=int, default=DEFAULT_MIN_COMMUNITY_SIZE,
                        help="drop groundtruth communities smaller than this")
    p_eval.add_argument("--singletons", choices=["keep", "drop"], default="keep",
                        help="evaluate singleton clusters")
    p_eval.add_argument("--format", dest="output_format", choices=["json", "csv"], default="json",
                        help="JSON report or one-line CSV summary")
    p_eval.add_argument("--output", default=None, help="file to write (default: stdout)")

    p_stats = commands.add_parser("stats", parents=[common], formatter_class=fmt,
                                  help="groundtruth diagnostics: motif cuts, densities, score separation")
    p_stats.add_argument("--input", required=True, help="edge-list file (plain or gzip)")
    p_stats.add_argument("--truth", required=True, help="groundtruth community file")
    p_stats.add_argument("--sim", nargs="+", choices=SIM_CHOICES, default=STATS_DEFAULT_KINDS,
                         help="similarity functions for score separation")
    p_stats.add_argument("--min-size", dest="min_size", type=int, default=DEFAULT_MIN_COMMUNITY_SIZE,
                         help="drop groundtruth communities smaller than this")
    p_stats.add_argument("--bins", type=int, default=10, help="density histogram bins")
    p_stats.add_argument("--node-limit", dest="node_limit", type=int, default=None,
                         help="node-count guard for --sim bc")
    p_stats.add_argument("--output", default=None, help="file to write (default: stdout)")

    p_gen = commands.add_parser("gen", help="generate a synthetic graph")
    generators = p_gen.add_subparsers(dest="generator", metavar="generator", required=True)

    g_sbm = generators.add_parser("sbm", parents=[common], formatter_class=fmt, help="two-block SBM")
    g_sbm.add_argument("--n", type=int, default=50, help="nodes per block")
    g_sbm.add_argument("--p1", type=float, default=0.1, help="edge probability inside block 1")
    g_sbm.add_argument("--p2", type=float, default=0.8, help="edge probability inside block 2")
    g_sbm.add_argument("--q", type=float, default=0.05, help="edge probability across blocks")
    g_sbm.add_argument("--seed", type=int, default=0, help="random seed")
    g_sbm.add_argument("--output", "--out", dest="output", required=True, help="edge-list file to write")

    g_rmat = generators.add_parser("rmat", parents=[common], formatter_class=fmt, help="R-MAT graph")
    g_rmat.add_argument("--scale", type=int, default=10, help="log2 of the node count")
    size = g_rmat.add_mutually_exclusive_group()
    size.add_argument("--edges", type=int, default=None, help="requested edge count")
    size.add_argument("--edge-factor", dest="edge_factor", type=float, default=None,
                      help="requested edges per node (default 16)")
    size.add_argument("--regime", choices=list(DENSITY_REGIMES), default=None,
                      help="edge count by density regime: 5n, 50n or n^1.5")
    g_rmat.add_argument("--a", dest="quadrants", type=_quadrants, default=None,
                        help="quadrant probabilities a11,a12,a21,a22 (default 0.45,0.15,0.15,0.25)")
    g_rmat.add_argument("--seed", type=int, default=0, help="random seed")
    g_rmat.add_argument("--output", "--out", dest="output", required=True, help="edge-list file to write")
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse arguments into a validated RunConfig."""
    args = build_parser().parse_args(argv)
    values = {key: value for key, value in vars(args).items() if value is not None}
    sim = values.pop("sim", None)
    if sim is not None:
        values["kinds"] = sim if isinstance(sim, list) else [sim]
    try:
        return RunConfig(**values)
    except pydantic.ValidationError as e:
        raise ConfigurationError(_pydantic_message(e))


def _pydantic_message(error: pydantic.ValidationError) -> str:
    parts = []
    for item in error.errors():
        where = ".".join(str(loc) for loc in item.get("loc", ()))
        parts.append(f"{where}: {item.get('msg')}" if where else str(item.get("msg")))
    return "; ".join(parts)


@contextmanager
def _output_stream(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    with open_output(path) as handle:
        yield handle


def _peak_memory_bytes() -> Optional[int]:
    try:
        import resource
    except ImportError:
        return None
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # kilobytes on Linux, bytes on macOS
    return int(peak if sys.platform == "darwin" else peak * 1024)


def cmd_cluster(config: RunConfig) -> int:
    g, id_map = load_edge_list(config.input)
    result = cluster_with_stats(g, config.kind, config.delta, node_limit=config.node_limit)
    write_partition(config.output, result.partition, id_map, include_singletons=config.include_singletons)
    if config.scores_out:
        write_scores_csv(config.scores_out, g, result.scores, id_map)
    status = {
        "n": g.node_count,
        "m": g.edge_count,
        "communities": result.partition.community_count,
        "largest": result.partition.largest_size(),
        "seconds": round(result.seconds, 6),
        "peak_mem": _peak_memory_bytes(),
    }
    print(json.dumps(status))
    return 0


def cmd_sweep(config: RunConfig) -> int:
    g, id_map = load_edge_list(config.input)
    start, end, step = config.start, config.end, config.step
    if start is None and end is None and step is None:
        start, end, step = default_grid(config.kind)
    elif start is None or end is None or step is None:
        raise ConfigurationError("--start, --end and --step must be given together")
    truth = load_communities(config.truth, id_map, config.min_size) if config.truth else None
    report = sweep(
        g, config.kind, start, end, step,
        truth=truth, node_limit=config.node_limit, include_singletons=config.include_singletons,
    )
    if config.auto_select or config.rule is not None:
        rule = config.rule or SelectionRule.LARGEST_CC_JUMP
        report = with_selection(report, rule, config.jump_factor)
        logger.info(f"selected delta={report.selected_delta} by rule {report.selection_rule}")
    with _output_stream(config.output) as handle:
        handle.write(format_sweep_csv(report))
    return 0


def cmd_eval(config: RunConfig) -> int:
    id_map: Optional[NodeIdMap] = None
    if config.graph:
        _, id_map = load_edge_list(config.graph)
    predicted, id_map = read_partition(config.input, id_map)
    if predicted.unknown_labels:
        logger.warning(
            f"{config.input}: skipped {predicted.unknown_labels} partition labels absent from the graph"
        )
    truth = load_communities(config.truth, id_map, config.min_size)
    report = evaluate(predicted, truth, include_singletons=config.include_singletons)
    with _output_stream(config.output) as handle:
        if config.output_format == "csv":
            handle.write(CSV_SUMMARY_HEADER + "\n" + report.csv_summary() + "\n")
        else:
            handle.write(report.to_json() + "\n")
    return 0


def cmd_stats(config: RunConfig) -> int:
    g, id_map = load_edge_list(config.input)
    truth = load_communities(config.truth, id_map, config.min_size)
    separation: Dict[str, Optional[float]] = {}
    for kind in config.kinds:
        kind = SimilarityKind.parse(kind)
        scores = compute_scores(g, kind, node_limit=config.node_limit)
        separation[kind.value] = score_separation(g, scores, truth)
    payload = {
        "n": g.node_count,
        "m": g.edge_count,
        "communities": len(truth),
        "unknown_labels": truth.unknown_labels,
        "motif_cut_fractions": motif_cut_fractions(g, truth).to_dict(),
        "density_histogram": [b.model_dump() for b in density_histogram(g, truth, config.bins)],
        "score_separation": separation,
    }
    with _output_stream(config.output) as handle:
        handle.write(json.dumps(payload) + "\n")
    return 0


def cmd_gen(config: RunConfig) -> int:
    try:
        if config.generator == "sbm":
            params = SbmParams(n=config.n, p1=config.p1, p2=config.p2, q=config.q, seed=config.seed)
            g = gen_sbm(params)
            header = f"sbm n={params.n} p1={params.p1} p2={params.p2} q={params.q} seed={params.seed}"
        else:
            extra: Dict[str, Any] = {"seed": config.seed}
            if config.quadrants is not None:
                extra.update(zip(("a11", "a12", "a21", "a22"), config.quadrants))
            if config.regime is not None:
                rmat = RmatParams.for_density(config.scale, config.regime, **extra)
            else:
                if config.edges is not None:
                    extra["edges"] = config.edges
                if config.edge_factor is not None:
                    extra["edge_factor"] = config.edge_factor
                rmat = RmatParams(scale=config.scale, **extra)
            g = gen_rmat(rmat)
            header = (
                f"rmat scale={rmat.scale} edges={rmat.requested_edges} "
                f"a={rmat.a11},{rmat.a12},{rmat.a21},{rmat.a22} seed={rmat.seed}"
            )
    except pydantic.ValidationError as e:
        raise ConfigurationError(_pydantic_message(e))
    write_edge_list(config.output, g, header=f"{header}\nnodes={g.node_count} edges={g.edge_count}")
    return 0


_COMMANDS = {
    Command.CLUSTER.value: cmd_cluster,
    Command.SWEEP.value: cmd_sweep,
    Command.EVAL.value: cmd_eval,
    Command.STATS.value: cmd_stats,
    Command.GEN.value: cmd_gen,
}


def run(config: RunConfig) -> int:
    """Configure logging and the worker pool, then dispatch the command."""
    try:
        set_log_level(config.log_level or get_default_log_level())
    except ValueError as e:
        raise ConfigurationError(str(e))
    workers = get_default_threads(config.threads)
    logger.debug(f"running {config.command} with {workers} workers")
    started = time.perf_counter()
    with num_workers(workers):
        status = _COMMANDS[Command(config.command).value](config)
    logger.debug(f"{config.command} finished in {time.perf_counter() - started:.3f}s")
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    try:
        return run(parse_config(argv))
    except MotifClustError as e:
        logger.debug(f"{e.code}: {e.details}")
        print(f"motifclust: error: {e.message}", file=sys.stderr)
        return e.exit_code
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0


if __name__ == "__main__":
    sys.exit(main())

__all__ = ["RunConfig", "Command", "build_parser", "parse_config", "run", "main"]
