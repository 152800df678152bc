"""Command-line front end.

Subcommands ``classify``, ``boundary``, ``critical``, ``sweep`` and
``scenario`` read a sectioned config file (``-c``) with ``--set
section.key=value`` overrides and write JSON or CSV to stdout or
``--output``.  Exit status: 0 success, 2 configuration error, 3 solver
error.
"""

from __future__ import annotations

import argparse
import itertools
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence

import numpy as np

from . import domain, kernels, scenarios, stress
from .config import ConfigError, RunConfig, build, parse_float, parse_list
from .errors import MaterialEvaluationError, NotAvailable, SolverError
from .io import csv_text, json_text
from .material import GENERIC, mooney_rivlin

EXIT_OK, EXIT_CONFIG, EXIT_SOLVER = 0, 2, 3

BOUNDARY_FIELDS = ["k_v", "kind", "lambda1", "lambda2", "residual"]
SWEEP_FIELDS = [
    "lambda1", "lambda2", "k_v", "c1", "c2", "regime",
    "t1", "t2", "t1_relaxed", "t2_relaxed", "on_boundary", "diagnostic",
]

THREADS_ENV = "TENSILE_DOMAIN_THREADS"


def _emit(text: str, output: Optional[str]) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {output}: {exc}") from None


def _output(args, cfg: RunConfig, section: str) -> Optional[str]:
    return args.output or cfg.get(section, "output")


def _material_record(cfg: RunConfig) -> dict:
    return cfg.material.describe()


def _state_record(model, state, k_v) -> dict:
    raw = stress.plane_stress(model, state, k_v)
    relaxed = stress.relaxed_stress(model, state, k_v)
    return {
        "lambda1": state.lambda1,
        "lambda2": state.lambda2,
        "k_v": k_v,
        "regime": raw.regime.value,
        "on_boundary": raw.on_boundary,
        "stress": {"t1": raw.t1, "t2": raw.t2},
        "relaxed": {"t1": relaxed.t1, "t2": relaxed.t2, "regime": relaxed.regime.value,
                    "diagnostic": relaxed.diagnostic},
    }


# -- subcommands -------------------------------------------------------------

def cmd_classify(args, cfg: RunConfig) -> int:
    sec = cfg.section("classify")
    if "lambda1" not in sec or "lambda2" not in sec:
        raise ConfigError("[classify] needs lambda1 and lambda2")
    state = stress.StretchState(parse_float(sec["lambda1"], "classify.lambda1"),
                                parse_float(sec["lambda2"], "classify.lambda2"))
    k_v = cfg.single_k() if cfg.k_values else 0.0
    record = {"material": _material_record(cfg), **_state_record(cfg.material, state, k_v)}
    _emit(json_text(record), _output(args, cfg, "classify"))
    return EXIT_OK


def cmd_boundary(args, cfg: RunConfig) -> int:
    sec = cfg.section("boundary")
    lo = parse_float(sec.get("lambda1_min", "0.5"), "boundary.lambda1_min")
    hi = parse_float(sec.get("lambda1_max", "5"), "boundary.lambda1_max")
    n = parse_float(sec.get("n", "200"), "boundary.n")
    if n != int(n) or n < 2:
        raise ConfigError("boundary.n must be an integer >= 2")
    if not 0 < lo < hi:
        raise ConfigError(f"boundary range must satisfy 0 < lambda1_min < lambda1_max, got {lo}, {hi}")
    lower_only = sec.get("lower_only", "true").strip().lower() not in ("false", "0", "no")
    k_values = cfg.k_values or [0.0]
    curves = []
    for k_v in k_values:
        b = domain.boundary(cfg.material, k_v, (lo, hi), int(n), lower_only=lower_only)
        for w in b.warnings:
            print(f"warning: {w}", file=sys.stderr)
        curves.append(b)
    output = _output(args, cfg, "boundary")
    split = args.split or sec.get("split", "false").strip().lower() in ("true", "1", "yes")
    if split:
        if output in (None, "-"):
            raise ConfigError("--split needs --output")
        path = Path(output)
        for i, b in enumerate(curves):
            target = path.with_name(f"{path.stem}_kv{i}{path.suffix}")
            _emit(csv_text(b.rows(), BOUNDARY_FIELDS), str(target))
    else:
        rows = [r for b in curves for r in b.rows()]
        _emit(csv_text(rows, BOUNDARY_FIELDS), output)
    return EXIT_OK


def cmd_critical(args, cfg: RunConfig) -> int:
    model = cfg.material
    point = scenarios.pull_in(model)
    generic = domain.critical_activation(model, method="generic")
    closed = point if point.method == "closed-form" else None
    discrepancy = None
    if closed is not None:
        discrepancy = max(abs(generic.k_v_crit - closed.k_v_crit) / closed.k_v_crit,
                          abs(generic.lambda_crit - closed.lambda_crit) / closed.lambda_crit)
    best = scenarios.optimal_prestretch(model)
    record = {
        "material": _material_record(cfg),
        "k_v_crit": point.k_v_crit,
        "lambda_crit": point.lambda_crit,
        "closed_form": None if closed is None else closed.to_record(),
        "generic": generic.to_record(),
        "discrepancy": discrepancy,
        "optimal_prestretch": {"prestretch": best.prestretch, "k_v": best.activation},
    }
    _emit(json_text(record), _output(args, cfg, "critical"))
    return EXIT_OK


def _worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ConfigError(f"{THREADS_ENV} must be >= 0")
    return n if n > 0 else (os.cpu_count() or 1)


def sweep_rows(lam1: Sequence[float], lam2: Sequence[float], k_values: Sequence[float],
               c1_values: Sequence[float], c2_values: Sequence[float], workers: int = 1) -> List[dict]:
    """Full factorial sweep, ordered lambda1, lambda2, k_v, c1, c2 (last fastest)."""
    for v in list(lam1) + list(lam2):
        if not (v > 0 and math.isfinite(v)):
            raise ConfigError(f"stretches must be positive, got {v!r}")
    moduli = list(itertools.product(c1_values, c2_values))
    for c1, c2 in moduli:
        mooney_rivlin(c1, c2)  # validates
    g1, g2 = np.meshgrid(np.asarray(lam1, float), np.asarray(lam2, float), indexing="ij")
    x, y = g1.ravel(), g2.ravel()
    jobs = list(itertools.product(k_values, moduli))
    chunks = np.array_split(np.arange(x.size), max(1, min(workers, x.size)))

    def run(job):
        k_v, (c1, c2) = job
        if workers <= 1:
            return kernels.mr_grid(c1, c2, k_v, x, y, stress.TAU_B)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(
                lambda idx: kernels.mr_grid(c1, c2, k_v, x[idx], y[idx], stress.TAU_B), chunks))
        return tuple(np.concatenate([p[i] for p in parts]) for i in range(6))

    results = [run(job) for job in jobs]
    rows = []
    for p in range(x.size):
        for (k_v, (c1, c2)), (t1, t2, r1, r2, reg, flg) in zip(jobs, results):
            f = int(flg[p])
            regime = stress.regime_from_code(reg[p]).value
            diagnostic = None
            if f & kernels.FLAG_NO_WIDTH:
                diagnostic = "no-natural-width"
            elif f & kernels.FLAG_UNIAXIAL:
                diagnostic = "uniaxial-not-tensile"
            rows.append({
                "lambda1": float(x[p]), "lambda2": float(y[p]), "k_v": k_v, "c1": c1, "c2": c2,
                "regime": regime, "t1": float(t1[p]), "t2": float(t2[p]),
                "t1_relaxed": float(r1[p]), "t2_relaxed": float(r2[p]),
                "on_boundary": bool(f & kernels.FLAG_BOUNDARY), "diagnostic": diagnostic,
            })
    return rows


def cmd_sweep(args, cfg: RunConfig) -> int:
    sec = cfg.section("sweep")
    if cfg.material.kind == GENERIC:
        raise ConfigError("sweep supports mooney-rivlin and neo-hookean materials only")
    lam1 = parse_list(sec.get("lambda1", ""), "sweep.lambda1")
    lam2 = parse_list(sec.get("lambda2", ""), "sweep.lambda2")
    if not lam1 or not lam2:
        raise ConfigError("sweep needs a non-empty stretch grid (sweep.lambda1, sweep.lambda2)")
    c1_values = parse_list(sec.get("c1", ""), "sweep.c1") or [cfg.material.c1]
    c2_values = parse_list(sec.get("c2", ""), "sweep.c2") or [cfg.material.c2]
    k_values = cfg.k_values or [0.0]
    try:
        rows = sweep_rows(lam1, lam2, k_values, c1_values, c2_values, _worker_count())
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    _emit(csv_text(rows, SWEEP_FIELDS), _output(args, cfg, "sweep"))
    return EXIT_OK


def cmd_scenario(args, cfg: RunConfig) -> int:
    sec = cfg.section("scenario")
    kind = sec.get("type", "free").strip().lower()
    k_values = cfg.k_values or [0.0]
    model = cfg.material
    record = {"material": _material_record(cfg), "scenario": kind}
    if kind == "free":
        record["results"] = [scenarios.free_actuation(model, k).to_record() for k in k_values]
        record["pull_in"] = scenarios.pull_in(model).to_record()
    elif kind == "prestretch":
        if "prestretch" not in sec:
            raise ConfigError("[scenario] type=prestretch needs prestretch")
        pre = parse_float(sec["prestretch"], "scenario.prestretch")
        if pre <= 0:
            raise ConfigError(f"prestretch must be positive, got {pre!r}")
        record["prestretch"] = pre
        record["results"] = [scenarios.prestretched_actuation(model, pre, k).to_record() for k in k_values]
        record["max_activation"] = scenarios.max_activation_for_prestretch(model, pre)
    else:
        raise ConfigError(f"unknown scenario type {kind!r} (free | prestretch)")
    _emit(json_text(record), _output(args, cfg, "scenario"))
    return EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "boundary": cmd_boundary,
    "critical": cmd_critical,
    "sweep": cmd_sweep,
    "scenario": cmd_scenario,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensile-domain",
        description="Tensile/wrinkled/slack analysis of voltage-activated elastomer membranes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("-c", "--config", help="sectioned key-value config file")
        p.add_argument("--set", action="append", default=[], metavar="SECTION.KEY=VALUE",
                       help="override a config entry (repeatable; wins over the file)")
        p.add_argument("--kv", help="activation value(s), shorthand for --set load.k_v=...")
        p.add_argument("-o", "--output", help="output file (default stdout)")
        if name == "boundary":
            p.add_argument("--split", action="store_true", help="one CSV per k_v instead of long format")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build(args.config, args.set, kv=args.kv)
        return COMMANDS[args.command](args, cfg)
    except (SolverError, MaterialEvaluationError, NotAvailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
