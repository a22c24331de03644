"""Command-line driver.

Exit status: 0 when every checked inequality holds within the tolerance,
2 when one is violated (which points at a bug, since they are theorems),
1 on input or usage errors.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import channels, jsonio
from .density_core import purity, random_density, random_unitary, validate_density
from .errors import EntroportraitError, UsageError
from .matrix_portrait import embed_padded, quantum_subadditivity_report
from .prob_core import pad_to_length, probability_vector
from .stochastic_portrait import (
    Factorization,
    batch_information,
    factorizations,
    padded_length,
    subadditivity_report,
)
from .tomography import tomogram, tomographic_subadditivity

SEED_ENV = "ENTROPORTRAIT_SEED"
COMMANDS = ("classical", "quantum", "tomogram", "channel", "xsearch", "sweep")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2

CLASSICAL_TOL = 1e-10
SWEEP_CLASSICAL_DIMS = (4, 6, 8, 12)
SWEEP_QUANTUM_DIM = 6


@dataclass
class RunConfig:
    command: str
    input_path: str = None
    factorization: tuple = None
    seed: int = 0
    trials: int = 1000
    tolerance: float = 1e-9
    output_format: str = "json"
    random_dim: int = None
    rank: int = None
    s: float = 2.0
    s_max: int = 10
    truncate: int = None
    timing: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.trials < 1:
            raise UsageError("--trials must be >= 1")
        if not self.tolerance > 0:
            raise UsageError("--tolerance must be > 0")
        if self.output_format not in ("json", "text"):
            raise UsageError("--format must be json or text")


# ---------------------------------------------------------------- helpers


def codings(n):
    """Nontrivial factorizations of ``n`` in both orientations."""
    out = []
    for f in factorizations(n):
        out.append(f)
        if f.N != f.M:
            out.append(f.swapped())
    return out


def _chosen_codings(config, n):
    if config.factorization is not None:
        f = Factorization(*config.factorization)
        if f.n < n:
            raise UsageError(f"factorization {f.N}x{f.M} covers {f.n} < {n} components")
        return f.n, [f]
    m = padded_length(n) if not factorizations(n) else n
    return m, codings(m)


def _random_probability(rng, n):
    return rng.dirichlet(np.ones(n))


def _load(config, kind):
    doc = jsonio.load_document(config.input_path)
    found = jsonio.document_kind(doc)
    if found != kind:
        raise UsageError(f"{config.command} needs a {kind} document, got a {found}")
    return jsonio.parse_vector(doc) if kind == "vector" else validate_density(jsonio.parse_matrix(doc))


def _need_source(config):
    if (config.input_path is None) == (config.random_dim is None):
        raise UsageError("give exactly one of --input or --random")


def _summary(values, tol, below=True):
    values = np.asarray(values, dtype=float)
    i = int(np.argmin(values)) if below else int(np.argmax(values))
    bad = values < -tol if below else values > tol
    key = "min" if below else "max"
    return {key: float(values[i]), f"arg{key}_trial": i, "violations": int(bad.sum())}


# ---------------------------------------------------------------- commands


def run_classical(config):
    _need_source(config)
    tol = config.tolerance
    if config.input_path is not None:
        p = _load(config, "vector")
        n, fs = _chosen_codings(config, p.size)
        padded = pad_to_length(p, n)
        reports = [subadditivity_report(padded, f).to_dict() for f in fs]
        violations = sum(r["information"] < -tol for r in reports)
        return {"n": int(p.size), "padded_n": n, "reports": reports, "violations": violations}
    n, fs = _chosen_codings(config, config.random_dim)
    rng = np.random.default_rng(config.seed)
    P = np.zeros((config.trials, n))
    P[:, : config.random_dim] = np.array([_random_probability(rng, config.random_dim) for _ in range(config.trials)])
    by_f = []
    for f in fs:
        s = _summary(batch_information(P, f), tol)
        by_f.append({"factorization": f.as_list(), **s})
    return {
        "n": config.random_dim,
        "padded_n": n,
        "trials": config.trials,
        "by_factorization": by_f,
        "violations": sum(b["violations"] for b in by_f),
    }


def run_quantum(config):
    _need_source(config)
    tol = config.tolerance
    if config.input_path is not None:
        rho = _load(config, "matrix")
        n, fs = _chosen_codings(config, rho.shape[0])
        rho_n = embed_padded(rho, n)
        reports = [quantum_subadditivity_report(rho_n, f).to_dict() for f in fs]
        violations = sum(r["information"] < -tol for r in reports)
        return {"dim": int(rho.shape[0]), "padded_n": n, "reports": reports, "violations": violations}
    dim = config.random_dim
    n, fs = _chosen_codings(config, dim)
    info = {f: [] for f in fs}
    for i in range(config.trials):
        rank = config.rank if config.rank is not None else 1 + i % dim
        rho = embed_padded(random_density(dim, rank, config.seed + i), n)
        for f in fs:
            info[f].append(quantum_subadditivity_report(rho, f).information)
    by_f = [{"factorization": f.as_list(), **_summary(info[f], tol)} for f in fs]
    return {
        "dim": dim,
        "padded_n": n,
        "trials": config.trials,
        "by_factorization": by_f,
        "violations": sum(b["violations"] for b in by_f),
    }


def run_tomogram(config):
    _need_source(config)
    tol = min(config.tolerance, CLASSICAL_TOL)
    if config.input_path is not None:
        rho = _load(config, "matrix")
    else:
        rho = random_density(config.random_dim, config.rank, config.seed)
    dim = rho.shape[0]
    n, fs = _chosen_codings(config, dim)
    u_seed = config.seed
    w = tomogram(rho, random_unitary(dim, u_seed)).probabilities
    reports = [tomographic_subadditivity(rho, random_unitary(dim, u_seed), f).to_dict() for f in fs]
    sweep = []
    for f in fs:
        vals = [tomographic_subadditivity(rho, random_unitary(dim, u_seed + i), f).information for i in range(config.trials)]
        sweep.append({"factorization": f.as_list(), **_summary(vals, tol)})
    return {
        "u_seed": u_seed,
        "w": w,
        "report": {"padded_n": n, "by_factorization": reports},
        "sweep": {"trials": config.trials, "by_factorization": sweep},
        "violations": sum(r["information"] < -tol for r in reports) + sum(s["violations"] for s in sweep),
    }


def _chain_increase(chain):
    return float(np.max(np.diff(chain), initial=-np.inf)) if len(chain) > 1 else 0.0


def run_channel(config):
    _need_source(config)
    tol = config.tolerance
    if config.input_path is not None:
        doc = jsonio.load_document(config.input_path)
        kind = jsonio.document_kind(doc)
    else:
        kind = "matrix"
    if kind == "vector":
        p = jsonio.parse_vector(doc)
        chain = channels.escort_entropy_chain(p, config.s_max)
        out = {
            "kind": "escort",
            "s": config.s,
            "output": jsonio.vector_to_json(channels.escort_map(p, channels.EscortParams(config.s))),
            "entropy_chain": chain,
        }
    else:
        if config.input_path is not None:
            rho = validate_density(jsonio.parse_matrix(doc))
        else:
            rho = random_density(config.random_dim, config.rank, config.seed)
        r = channels.power_channel(rho, config.s)
        chain = channels.quantum_power_entropy_chain(rho, config.s_max)
        out = {
            "kind": "power",
            "s": config.s,
            "output": jsonio.matrix_to_json(r),
            "purity_before": purity(rho),
            "purity_after": purity(r),
            "entropy_chain": chain,
        }
        if config.truncate is not None:
            out["truncated"] = jsonio.matrix_to_json(channels.truncation_channel(rho, config.truncate))
    inc = _chain_increase(chain)
    out["max_chain_increase"] = inc
    violations = int(inc > tol)
    if kind == "matrix" and out["purity_after"] < out["purity_before"] - tol:
        violations += 1
    out["violations"] = violations
    return out


def run_xsearch(config):
    rep = channels.xstate_entanglement_search(config.trials, config.seed, config.s)
    out = rep.to_dict()
    out["violations"] = int(rep.min_eig_before < -channels.PPT_TOL)
    return out


def _suite_classical(config, tol):
    rng = np.random.default_rng(config.seed)
    per_trial = []
    for n in SWEEP_CLASSICAL_DIMS:
        P = np.array([_random_probability(rng, n) for _ in range(config.trials)])
        per_trial += [batch_information(P, f) for f in codings(n)]
    return _summary(np.min(per_trial, axis=0), tol)


def _suite_quantum(config, tol):
    dim = SWEEP_QUANTUM_DIM
    vals = []
    for i in range(config.trials):
        rho = random_density(dim, 1 + i % dim, config.seed + i)
        vals.append(min(quantum_subadditivity_report(rho, f).information for f in codings(dim)))
    return _summary(vals, tol)


def _suite_tomographic(config, tol):
    dim = SWEEP_QUANTUM_DIM
    rho = random_density(dim, dim, config.seed)
    vals = []
    for i in range(config.trials):
        u = random_unitary(dim, config.seed + i)
        vals.append(min(tomographic_subadditivity(rho, u, f).information for f in codings(dim)))
    return _summary(vals, min(tol, CLASSICAL_TOL))


def _suite_channels(config, tol):
    rng = np.random.default_rng(config.seed)
    increases = []
    for i in range(config.trials):
        p = _random_probability(rng, 6)
        rho = random_density(4, 1 + i % 4, config.seed + i)
        increases.append(
            max(
                _chain_increase(channels.escort_entropy_chain(p, config.s_max)),
                _chain_increase(channels.quantum_power_entropy_chain(rho, config.s_max)),
            )
        )
    return _summary(increases, tol, below=False)


SUITES = (
    ("classical", _suite_classical),
    ("quantum", _suite_quantum),
    ("tomographic", _suite_tomographic),
    ("channel_monotonicity", _suite_channels),
)


def run_sweep(config):
    suites = []
    for name, fn in SUITES:
        t0 = time.perf_counter()
        s = fn(config, config.tolerance)
        entry = {"suite": name, "trials": config.trials, **s}
        if config.timing:
            entry["runtime"] = time.perf_counter() - t0
        suites.append(entry)
    return {"suites": suites, "violations": sum(s["violations"] for s in suites)}


RUNNERS = {
    "classical": run_classical,
    "quantum": run_quantum,
    "tomogram": run_tomogram,
    "channel": run_channel,
    "xsearch": run_xsearch,
    "sweep": run_sweep,
}


def run(config):
    """Execute ``config``; returns ``(exit_status, report)``."""
    body = RUNNERS[config.command](config)
    report = {"command": config.command, "seed": config.seed, "tolerance": config.tolerance, **body}
    return (EXIT_VIOLATION if report["violations"] else EXIT_OK), report


def sweep(config):
    return run_sweep(config)


# ---------------------------------------------------------------- argv


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _default_seed():
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def build_parser():
    parser = _Parser(prog="entroportrait", description="Entropic subadditivity checks for vectors, states and tomograms.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help=f"base seed (default: ${SEED_ENV} or 0)")
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--tolerance", type=float, default=1e-9)
    common.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    source = _Parser(add_help=False)
    source.add_argument("--input", dest="input_path")
    source.add_argument("--random", dest="random_dim", type=int, metavar="DIM")
    source.add_argument("--factorization", nargs=2, type=int, metavar=("N", "M"))
    source.add_argument("--rank", type=int)

    sub.add_parser("classical", parents=[common, source], help="classical subadditivity of probability vectors")
    sub.add_parser("quantum", parents=[common, source], help="quantum subadditivity of density-matrix portraits")
    sub.add_parser("tomogram", parents=[common, source], help="tomogram and tomographic subadditivity")
    ch = sub.add_parser("channel", parents=[common, source], help="escort / power channels and entropy chains")
    ch.add_argument("--s", type=float, default=2.0)
    ch.add_argument("--s-max", dest="s_max", type=int, default=10)
    ch.add_argument("--truncate", type=int)
    xs = sub.add_parser("xsearch", parents=[common], help="search for entanglement created by the power channel")
    xs.add_argument("--s", type=float, default=2.0)
    sw = sub.add_parser("sweep", parents=[common], help="all inequality suites over seeded ensembles")
    sw.add_argument("--s-max", dest="s_max", type=int, default=10)
    sw.add_argument("--timing", action="store_true", help="include per-suite runtimes (breaks byte-identical replay)")
    return parser


def config_from_args(argv=None):
    ns = vars(build_parser().parse_args(argv))
    if ns.get("seed") is None:
        ns["seed"] = _default_seed()
    if ns.get("factorization") is not None:
        ns["factorization"] = tuple(ns["factorization"])
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in ns.items() if k in fields})


def _text(report):
    lines = [f"{report['command']}: seed={report['seed']} violations={report['violations']}"]
    for key in ("reports", "by_factorization", "suites"):
        for entry in report.get(key, []):
            lines.append("  " + " ".join(f"{k}={v}" for k, v in entry.items()))
    if "report" in report:
        for entry in report["report"]["by_factorization"]:
            lines.append("  " + " ".join(f"{k}={v}" for k, v in entry.items()))
    for key in ("max_chain_increase", "hits", "min_eig_before"):
        if key in report:
            lines.append(f"  {key}={report[key]}")
    return "\n".join(lines)


def main(argv=None):
    try:
        config = config_from_args(argv)
        status, report = run(config)
    except (EntroportraitError, UsageError) as exc:
        print(f"entroportrait: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if config.output_format == "json":
        print(jsonio.dumps(report))
    else:
        print(_text(report))
    if status == EXIT_VIOLATION:
        print("entroportrait: inequality violated beyond tolerance", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
