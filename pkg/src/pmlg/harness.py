"""End-to-end verification against the brute-force solver, plus a scaling
benchmark.  Reports are plain ``key=value`` text with a stable field order so
they can be golden-filed (timing lines excluded from comparisons)."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

from .graph import degree_stats, is_acyclic, is_deterministic
from .graph_io import write_graph, write_pattern
from .matching import match_exists
from .ov import OvInstance, gen_ov_instance, solve_ov_bruteforce
from .reductions import (
    ReductionArtifact,
    assemble_undirected,
    assemble_zigzag,
    build_deterministic_dag,
    encode_binary,
    orient_to_dag,
)

_RERUN_THRESHOLD_MS = 5.0
_RERUN_ITERATIONS = 10


def build_artifact(inst: OvInstance, variant: str, binary: bool = False) -> ReductionArtifact:
    """Build the requested artifact variant, optionally binary-encoded."""
    if variant == "undirected":
        art = assemble_undirected(inst)
    elif variant == "dag":
        art = orient_to_dag(assemble_undirected(inst))
    elif variant == "det-dag":
        art = build_deterministic_dag(inst)
    elif variant == "zigzag":
        if binary:
            raise ValueError("binary encoding is not defined for the zigzag variant")
        return assemble_zigzag(inst)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return encode_binary(art) if binary else art


@dataclass
class VerificationReport:
    n: int
    d: int
    seed: int | None
    mode: str | None
    variant: str
    binary: bool
    short_circuited: bool
    ov_answer: tuple[int, int] | None
    match_answers: tuple[bool, ...]
    agree: bool
    deterministic: bool | None
    acyclic: bool | None
    max_in_plus_out: int | None
    is_simple_path: bool | None
    pattern_length: int | None
    edge_count: int | None
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_lines(self) -> list[str]:
        def fmt(value) -> str:
            if value is None:
                return "-"
            if isinstance(value, bool):
                return "true" if value else "false"
            return str(value)

        pair = "none" if self.ov_answer is None else f"{self.ov_answer[0]},{self.ov_answer[1]}"
        match_p1 = self.match_answers[0] if len(self.match_answers) > 0 else None
        match_p2 = self.match_answers[1] if len(self.match_answers) > 1 else None
        lines = [
            f"n={self.n}",
            f"d={self.d}",
            f"seed={fmt(self.seed)}",
            f"mode={fmt(self.mode)}",
            f"variant={self.variant}",
            f"binary={fmt(self.binary)}",
            f"short_circuited={fmt(self.short_circuited)}",
            f"ov_pair={pair}",
            f"match_p1={fmt(match_p1)}",
            f"match_p2={fmt(match_p2)}",
            f"agree={fmt(self.agree)}",
            f"deterministic={fmt(self.deterministic)}",
            f"acyclic={fmt(self.acyclic)}",
            f"max_in_plus_out={fmt(self.max_in_plus_out)}",
            f"is_simple_path={fmt(self.is_simple_path)}",
            f"pattern_length={fmt(self.pattern_length)}",
            f"edge_count={fmt(self.edge_count)}",
        ]
        lines.extend(f"time_{name}_ms={value:.3f}" for name, value in self.timings_ms.items())
        return lines

    def __str__(self) -> str:
        return "\n".join(self.to_lines())


def verify_reduction(
    inst: OvInstance,
    variant: str,
    binary: bool = False,
    seed: int | None = None,
    mode: str | None = None,
) -> VerificationReport:
    """Build the artifact and check it answers exactly like the solver.

    Deterministic-DAG builds are skipped for instances containing an all-zero
    y vector; the instance is then answered by the solver alone and the
    report is marked short-circuited (such vectors are orthogonal to
    everything, so agreement holds by construction).
    """
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    ov_answer = solve_ov_bruteforce(inst)
    timings["ov"] = (time.perf_counter() - t0) * 1000.0

    short_circuit = variant == "det-dag" and any(
        all(b == 0 for b in y) for y in inst.Y
    )
    if short_circuit:
        return VerificationReport(
            n=inst.n,
            d=inst.d,
            seed=seed,
            mode=mode,
            variant=variant,
            binary=binary,
            short_circuited=True,
            ov_answer=ov_answer,
            match_answers=(),
            agree=ov_answer is not None,
            deterministic=None,
            acyclic=None,
            max_in_plus_out=None,
            is_simple_path=None,
            pattern_length=None,
            edge_count=None,
            timings_ms=timings,
        )

    t0 = time.perf_counter()
    art = build_artifact(inst, variant, binary)
    timings["build"] = (time.perf_counter() - t0) * 1000.0

    t0 = time.perf_counter()
    match_answers = tuple(match_exists(art.graph, p) for p in art.patterns)
    timings["match"] = (time.perf_counter() - t0) * 1000.0

    stats = degree_stats(art.graph)
    directed = art.graph.directed
    return VerificationReport(
        n=inst.n,
        d=inst.d,
        seed=seed,
        mode=mode,
        variant=variant,
        binary=binary,
        short_circuited=False,
        ov_answer=ov_answer,
        match_answers=match_answers,
        agree=(ov_answer is not None) == any(match_answers),
        deterministic=is_deterministic(art.graph) if directed else None,
        acyclic=is_acyclic(art.graph) if directed else None,
        max_in_plus_out=stats.max_in_plus_out,
        is_simple_path=stats.is_simple_path,
        pattern_length=max(p.m for p in art.patterns),
        edge_count=stats.edge_count,
        timings_ms=timings,
    )


@dataclass(frozen=True)
class ScalingRow:
    n: int
    d: int
    node_count: int
    edge_count: int
    pattern_length: int
    match_time_ms: float


def _fit_loglog_slope(xs: list[float], ys: list[float]) -> float:
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mean_x = sum(lx) / len(lx)
    mean_y = sum(ly) / len(ly)
    num = sum((a - mean_x) * (b - mean_y) for a, b in zip(lx, ly))
    den = sum((a - mean_x) ** 2 for a in lx)
    return num / den


def bench_scaling(
    variant: str, n_series: list[int], d: int, seed: int
) -> tuple[list[ScalingRow], float | None]:
    """Time matching on worst-case (pair-free) instances of growing n.

    Returns per-size rows and the least-squares slope of log(match time)
    against log(n*d), or None for a single row.  Rows measuring under 5 ms
    are re-run and averaged over 10 iterations.
    """
    if any(b <= a for a, b in zip(n_series, n_series[1:])) or not n_series:
        raise ValueError("n_series must be nonempty and strictly increasing")
    rows: list[ScalingRow] = []
    for n in n_series:
        inst = gen_ov_instance(n, d, seed, "no-orthogonal")
        art = build_artifact(inst, variant)

        def run() -> float:
            t0 = time.perf_counter()
            for p in art.patterns:
                match_exists(art.graph, p)
            return (time.perf_counter() - t0) * 1000.0

        elapsed = run()
        if elapsed < _RERUN_THRESHOLD_MS:
            elapsed = sum(run() for _ in range(_RERUN_ITERATIONS)) / _RERUN_ITERATIONS
        rows.append(
            ScalingRow(
                n=n,
                d=d,
                node_count=art.graph.n,
                edge_count=len(art.graph.edges),
                pattern_length=max(p.m for p in art.patterns),
                match_time_ms=elapsed,
            )
        )
    slope = None
    if len(rows) >= 2:
        slope = _fit_loglog_slope(
            [float(r.n * r.d) for r in rows],
            [max(r.match_time_ms, 1e-6) for r in rows],
        )
    return rows, slope


def save_artifact(art: ReductionArtifact, prefix: str, seed: int | None = None) -> list[str]:
    """Write graph, pattern(s) and a one-line metadata file; returns paths."""
    paths = []
    graph_path = f"{prefix}.graph"
    with open(graph_path, "wb") as fh:
        fh.write(write_graph(art.graph))
    paths.append(graph_path)
    for idx, p in enumerate(art.patterns, start=1):
        pat_path = f"{prefix}.pat{idx}"
        with open(pat_path, "wb") as fh:
            fh.write(write_pattern(p))
        paths.append(pat_path)
    meta_path = f"{prefix}.meta"
    seed_token = "-" if seed is None else str(seed)
    binary_token = "true" if art.binary_encoded else "false"
    padded_token = "true" if art.padded else "false"
    with open(meta_path, "w", encoding="utf-8") as fh:
        fh.write(
            f"{art.variant} {art.n} {art.d} {binary_token} {padded_token} {seed_token}\n"
        )
    paths.append(meta_path)
    return paths
