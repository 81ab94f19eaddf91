"""Reproducible experiment runner exposed as the ontology-lab command.

Every experiment is a pure function of (params, seed): rerunning the same
config byte-reproduces the results payload. Reports carry the inputs echo,
the results table, and wall-clock duration; the duration and other metadata
stay outside the hashed payload region.

Exit codes: 0 success, 2 configuration error, 3 computation error. On
failure a machine-readable JSON error record goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import __version__
from . import blackhole, clock, fermion, flow, infoloss, oscillator
from .tableio import render_csv


class ConfigError(ValueError):
    """Bad config file, unknown experiment, or invalid parameters."""


class UpstreamError(RuntimeError):
    """An experiment failed while computing."""


def _plain(obj):
    """Recursively convert numpy scalars/arrays so json.dumps is happy."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    return obj


# ---------------------------------------------------------------------------
# experiment implementations; each returns (results, csv_header, csv_rows)


def _run_clock_spectrum(params, rng):
    model = clock.ClockModel(n_states=params["N"], tau=params["tau"])
    spectrum = clock.energy_spectrum(model)
    closed = clock.closed_form_energies(model)
    rows = [
        (n, spectrum.eigenvalues[n], closed[n], spectrum.eigenvalues[n] - closed[n])
        for n in range(model.n_states)
    ]
    results = {
        "energies": spectrum.eigenvalues.tolist(),
        "closed_form_max_deviation": float(np.max(np.abs(spectrum.eigenvalues - closed))),
    }
    return results, ("n", "energy", "closed_form", "deviation"), rows


def _run_oscillator_identities(params, rng):
    rows = []
    for ell in params["ells"]:
        rep = oscillator.build_spin_rep(int(ell), params["tau"])
        model = clock.ClockModel(n_states=rep.dim, tau=rep.tau)
        ladder = np.sort(np.real(np.diag(oscillator.hamiltonian(rep))))
        clock_match = float(
            np.max(np.abs(ladder - clock.energy_spectrum(model).eigenvalues))
        )
        rows.append((
            int(ell),
            oscillator.su2_residual(rep),
            oscillator.casimir_residual(rep),
            oscillator.commutator_identity_residual(rep),
            oscillator.hamiltonian_identity_residual(rep),
            clock_match,
        ))
    header = ("ell", "su2_residual", "casimir_residual",
              "xp_identity_residual", "quadratic_identity_residual",
              "clock_spectrum_match")
    results = {
        "rows": [list(r) for r in rows],
        "columns": list(header),
        "max_residual": float(max(max(r[1:]) for r in rows)),
    }
    return results, header, rows


def _run_continuum_scan(params, rng):
    scan = oscillator.continuum_scan(
        params["ells"], omega=params["omega"], levels=params["levels"]
    )
    results = {
        "rows": [list(r) for r in scan.rows],
        "columns": list(oscillator.ContinuumScan.CSV_HEADER),
        "predicted_coefficients": scan.predicted_coefficients.tolist(),
        "fitted_coefficients": (
            None if scan.fitted_coefficients is None
            else scan.fitted_coefficients.tolist()
        ),
        "observed_order": scan.observed_order,
    }
    return results, oscillator.ContinuumScan.CSV_HEADER, scan.rows


def _load_graph(params):
    if "graph_file" in params and params["graph_file"] is not None:
        return infoloss.read_graph(params["graph_file"])
    if "successors" in params and params["successors"] is not None:
        return infoloss.FunctionalGraph(np.asarray(params["successors"], dtype=np.int64))
    raise ConfigError("provide either graph_file or successors")


def _run_infoloss_classes(params, rng):
    graph = _load_graph(params)
    if graph.n > 100000:
        raise ConfigError("class listing limited to 100000 states")
    quotient = infoloss.equivalence_classes(graph)
    members = [[] for _ in range(quotient.num_classes)]
    for state, cls in enumerate(quotient.class_of):
        members[int(cls)].append(state)
    perm = infoloss.quotient_evolution(quotient)
    results = {
        "n": graph.n,
        "num_classes": quotient.num_classes,
        "classes": members,
        "class_successor": quotient.class_successor.tolist(),
        "quotient_is_permutation": bool(
            np.all(perm.sum(axis=0) == 1.0) and np.all(perm.sum(axis=1) == 1.0)
        ),
    }
    rows = [(i, m[0], len(m), " ".join(map(str, m))) for i, m in enumerate(members)]
    return results, ("class", "representative", "size", "members"), rows


def _run_infoloss_census(params, rng):
    source = params["source"]
    if not isinstance(source, dict) or "kind" not in source:
        raise ConfigError("source must be an object with a 'kind' field")
    kind = source["kind"]
    if kind == "file":
        graph = infoloss.read_graph(source["path"])
    elif kind == "random":
        graph = infoloss.random_functional_graph(int(source["n"]), rng)
    elif kind == "shift-with-merge":
        graph = infoloss.shift_with_merge(
            int(source["volume_bits"]), int(source["boundary_bits"])
        )
    else:
        raise ConfigError(f"unknown census source kind {kind!r}")
    report = infoloss.limit_cycle_census(graph)
    results = {"n": graph.n, **report.to_json()}
    rows = [(i, length) for i, length in enumerate(report.cycles)]
    return results, ("cycle", "length"), rows


def _run_fermion_commute(params, rng):
    grid = fermion.sphere_product_grid(
        n_theta=int(params["n_theta"]),
        n_phi=int(params["n_phi"]),
        n_rho=int(params["n_rho"]),
        rho_min=params["rho_min"],
        rho_max=params["rho_max"],
    )
    report = fermion.beable_commutator_residuals(grid)
    results = report.to_json()
    rows = [(k, v) for k, v in sorted(results.items())]
    return results, ("quantity", "value"), rows


def _fermion_state(spec) -> fermion.SheetGrid:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("state must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "single-ray":
        return fermion.single_ray_grid(
            float(spec.get("theta", 0.0)),
            float(spec.get("phi", 0.0)),
            float(spec.get("q", 1.0)),
        )
    if kind == "rays":
        rays = np.asarray(spec["rays"], dtype=float)
        amp = np.asarray(spec["amplitudes_re"], dtype=float)
        if "amplitudes_im" in spec:
            amp = amp + 1j * np.asarray(spec["amplitudes_im"], dtype=float)
        return fermion.ray_grid(rays, spec["q_nodes"], spec["q_weights"], amp)
    if kind == "file":
        return fermion.load_grid(spec["path"])
    raise ConfigError(f"unknown state kind {kind!r}")


def _run_fermion_wave(params, rng):
    grid = _fermion_state(params["state"])
    points = np.asarray(params["points"], dtype=float)
    values = fermion.beable_to_position_wave(grid, points)
    rows = fermion.wave_csv_rows(points, values)
    results = {"rows": [list(r) for r in rows],
               "columns": ["x1", "x2", "x3", "re_up", "im_up", "re_dn", "im_dn"]}
    return results, ("x1", "x2", "x3", "re_up", "im_up", "re_dn", "im_dn"), rows


def _run_weyl_check(params, rng):
    grid = _fermion_state(params["state"])
    deviation = fermion.weyl_consistency_check(
        grid, params["t"], np.asarray(params["points"], dtype=float)
    )
    results = {"t": params["t"], "max_deviation": deviation}
    return results, ("t", "max_deviation"), [(params["t"], deviation)]


def _flow_field(spec, n):
    q = 2.0 * np.pi * np.arange(n) / n
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigError("field must be an object with a 'kind' field")
    kind = spec["kind"]
    if kind == "constant":
        return np.full(n, float(spec["value"]))
    if kind == "sine":
        return float(spec["offset"]) + float(spec["amplitude"]) * np.sin(q)
    if kind == "samples":
        values = np.asarray(spec["values"], dtype=float)
        if values.size != n:
            raise ConfigError(f"need exactly {n} samples, got {values.size}")
        return values
    raise ConfigError(f"unknown field kind {kind!r}")


def _run_flow_transport(params, rng):
    n = int(params["grid_size"])
    system = flow.FlowSystem(_flow_field(params["field"], n), dt=params["dt"])
    report = flow.transport_check(
        system, params["center"], params["t"], sigma=params["sigma"]
    )
    results = report.to_json()
    rows = [(results["t"], results["mean_quantum"], results["mean_classical"],
             results["deviation"], results["norm_drift"])]
    return results, ("t", "mean_quantum", "mean_classical", "deviation", "norm_drift"), rows


def _run_blackhole_table(params, rng):
    masses = [float(m) for m in params["masses"]]
    rows = blackhole.table_rows(masses, params["constant_c"])
    balance = []
    for m in masses:
        ratio = blackhole.log_density_ratio(m, params["delta_e"])
        balance.append({"mass": m, "first_order": ratio.first_order,
                        "exact": ratio.exact})
    results = {
        "rows": [list(r) for r in rows],
        "columns": ["M", "T_H", "sigma", "bits", "ln_rho"],
        "delta_e": params["delta_e"],
        "detailed_balance": balance,
    }
    return results, ("M", "T_H", "sigma", "bits", "ln_rho"), rows


# ---------------------------------------------------------------------------
# catalog

EXPERIMENTS = {
    "clock-spectrum": {
        "description": "Diagonalize the N-state clock step and compare "
                       "energies with the evenly spaced half-offset ladder",
        "topic": "periodic automaton to energy eigenbasis map",
        "params": {
            "N": {"type": "int", "required": True,
                  "description": "number of ontological states"},
            "tau": {"type": "number", "required": False, "default": 1.0,
                    "description": "time per automaton step"},
        },
        "run": _run_clock_spectrum,
    },
    "oscillator-identities": {
        "description": "Residuals of the spin-ladder operator identities "
                       "(algebra, Casimir, deformed commutator, quadratic split)",
        "topic": "clock embedded in a spin multiplet as an oscillator",
        "params": {
            "ells": {"type": "array", "required": True,
                     "description": "spin values to test"},
            "tau": {"type": "number", "required": False, "default": 1.0,
                    "description": "time per automaton step"},
        },
        "run": _run_oscillator_identities,
    },
    "continuum-scan": {
        "description": "Scan the quadratic-part spectrum across spin sizes "
                       "and fit the finite-size deviation law",
        "topic": "continuum limit of the spin oscillator levels",
        "params": {
            "ells": {"type": "array", "required": True,
                     "description": "ascending spin values"},
            "omega": {"type": "number", "required": False, "default": 1.0,
                      "description": "target oscillator frequency"},
            "levels": {"type": "int", "required": False, "default": 5,
                       "description": "number of low-lying levels to track"},
        },
        "run": _run_continuum_scan,
    },
    "infoloss-classes": {
        "description": "Merge classes of a non-invertible automaton and the "
                       "induced permutation on classes",
        "topic": "information loss quotient construction",
        "params": {
            "graph_file": {"type": "string", "required": False,
                           "description": "path to a successor-list file"},
            "successors": {"type": "array", "required": False,
                           "description": "inline successor list"},
        },
        "run": _run_infoloss_classes,
    },
    "infoloss-census": {
        "description": "Limit-cycle census: cycle lengths, on-cycle count, "
                       "transient depth histogram",
        "topic": "how much state survives dissipative evolution",
        "params": {
            "source": {"type": "object", "required": True,
                       "description": "one of {kind: file, path}, "
                                      "{kind: random, n}, "
                                      "{kind: shift-with-merge, volume_bits, boundary_bits}"},
        },
        "run": _run_infoloss_census,
    },
    "fermion-commute": {
        "description": "Pairwise commutators of the discretized observable "
                       "set (direction, helicity, dilatation)",
        "topic": "simultaneously measurable sheet variables",
        "params": {
            "n_theta": {"type": "int", "required": False, "default": 8,
                        "description": "polar quadrature nodes"},
            "n_phi": {"type": "int", "required": False, "default": 8,
                      "description": "azimuthal nodes"},
            "n_rho": {"type": "int", "required": False, "default": 32,
                      "description": "radial log-grid nodes per sign"},
            "rho_min": {"type": "number", "required": False, "default": -3.0,
                        "description": "lower log-wavenumber bound"},
            "rho_max": {"type": "number", "required": False, "default": 3.0,
                        "description": "upper log-wavenumber bound"},
        },
        "run": _run_fermion_commute,
    },
    "fermion-wave": {
        "description": "Reconstruct the two-component position amplitude "
                       "from a sheet-variable state",
        "topic": "sheet variables back to a position-space spinor",
        "params": {
            "state": {"type": "object", "required": True,
                      "description": "state spec: {kind: single-ray|rays|file, ...}"},
            "points": {"type": "array", "required": True,
                       "description": "sample points [[x1, x2, x3], ...]"},
        },
        "run": _run_fermion_wave,
    },
    "weyl-check": {
        "description": "Shift the sheets then transform, versus transform "
                       "then phase-evolve each plane-wave mode",
        "topic": "deterministic motion commutes with the wave picture",
        "params": {
            "state": {"type": "object", "required": True,
                      "description": "state spec: {kind: single-ray|rays|file, ...}"},
            "t": {"type": "number", "required": False, "default": 1.0,
                  "description": "evolution time"},
            "points": {"type": "array", "required": True,
                       "description": "sample points [[x1, x2, x3], ...]"},
        },
        "run": _run_weyl_check,
    },
    "flow-transport": {
        "description": "Evolve a packet under the Hermitian lift of a circle "
                       "flow and compare its mean with the characteristic",
        "topic": "quantum lift of an arbitrary classical flow",
        "params": {
            "grid_size": {"type": "int", "required": False, "default": 256,
                          "description": "periodic grid points"},
            "field": {"type": "object", "required": True,
                      "description": "velocity field: {kind: constant|sine|samples, ...}"},
            "center": {"type": "number", "required": False, "default": 1.0,
                       "description": "initial packet center"},
            "t": {"type": "number", "required": False, "default": 2.0,
                  "description": "evolution time"},
            "sigma": {"type": "number", "required": False, "default": None,
                      "description": "packet width (defaults to twice the grid step)"},
            "dt": {"type": "number", "required": False, "default": 1e-3,
                   "description": "characteristic integrator step"},
        },
        "run": _run_flow_transport,
    },
    "blackhole-table": {
        "description": "Temperature, cross-section, and quarter-area state "
                       "count across a list of masses",
        "topic": "horizon thermodynamics as discrete state counting",
        "params": {
            "masses": {"type": "array", "required": True,
                       "description": "masses in gravitational natural units"},
            "delta_e": {"type": "number", "required": False, "default": 0.01,
                        "description": "probe energy for detailed balance"},
            "constant_c": {"type": "number", "required": False, "default": 0.0,
                           "description": "additive constant in ln(state count)"},
        },
        "run": _run_blackhole_table,
    },
}

_TYPE_CHECKS = {
    "int": lambda v: isinstance(v, int) and not isinstance(v, bool),
    "number": lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
    "string": lambda v: isinstance(v, str),
    "array": lambda v: isinstance(v, list),
    "object": lambda v: isinstance(v, dict),
    "boolean": lambda v: isinstance(v, bool),
}


def list_experiments() -> list:
    """Catalog entries in stable (alphabetical) order."""
    catalog = []
    for name in sorted(EXPERIMENTS):
        entry = EXPERIMENTS[name]
        params = {
            pname: {k: v for k, v in pspec.items()}
            for pname, pspec in entry["params"].items()
        }
        catalog.append({
            "name": name,
            "description": entry["description"],
            "topic": entry["topic"],
            "params": params,
        })
    return catalog


def _validate_params(name: str, supplied: dict) -> dict:
    spec = EXPERIMENTS[name]["params"]
    unknown = set(supplied) - set(spec)
    if unknown:
        raise ConfigError(f"unknown parameter(s) for {name}: {sorted(unknown)}")
    params = {}
    for pname, pspec in spec.items():
        if pname in supplied:
            value = supplied[pname]
            if value is not None and not _TYPE_CHECKS[pspec["type"]](value):
                raise ConfigError(
                    f"parameter {pname} of {name} must be {pspec['type']}"
                )
            params[pname] = value
        elif pspec["required"]:
            raise ConfigError(f"missing required parameter {pname} for {name}")
        else:
            params[pname] = pspec.get("default")
    return params


@dataclass(frozen=True)
class Report:
    experiment: str
    params: dict
    seed: int
    results: dict
    csv_header: tuple
    csv_rows: tuple
    duration_s: float
    version: str

    def payload(self) -> dict:
        """The deterministic region: everything except timing metadata."""
        return {
            "experiment": self.experiment,
            "params": self.params,
            "seed": self.seed,
            "results": self.results,
        }

    def payload_bytes(self) -> bytes:
        return json.dumps(self.payload(), sort_keys=True).encode()

    def to_json(self) -> dict:
        body = self.payload()
        body["meta"] = {"duration_s": self.duration_s, "version": self.version}
        return body

    def to_csv_text(self) -> str:
        return render_csv(self.csv_header, self.csv_rows)


def run_experiment(config: dict) -> Report:
    """Validate a config mapping and execute the named experiment."""
    if not isinstance(config, dict):
        raise ConfigError("config must be a JSON object")
    name = config.get("experiment")
    if name not in EXPERIMENTS:
        raise ConfigError(f"unknown experiment {name!r}; see `ontology-lab list`")
    raw_params = config.get("params", {})
    if not isinstance(raw_params, dict):
        raise ConfigError("params must be an object")
    params = _validate_params(name, raw_params)
    seed = config.get("seed", 0)
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ConfigError(f"seed must be a nonnegative integer, got {seed!r}")

    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    try:
        results, header, rows = EXPERIMENTS[name]["run"](params, rng)
    except ConfigError:
        raise
    except (ValueError, KeyError, OSError, RuntimeError) as exc:
        raise UpstreamError(f"{name} failed: {exc}") from exc
    duration = time.perf_counter() - start
    return Report(
        experiment=name,
        params=_plain(params),
        seed=seed,
        results=_plain(results),
        csv_header=tuple(header),
        csv_rows=tuple(tuple(r) for r in rows),
        duration_s=duration,
        version=__version__,
    )


# ---------------------------------------------------------------------------
# command line


def _emit_error(kind: str, message: str) -> None:
    record = {"error": {"type": kind, "message": message}}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def _cmd_run(args) -> int:
    try:
        with open(args.config) as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        _emit_error("config", f"cannot read config: {exc}")
        return 2

    if not isinstance(config, dict):
        _emit_error("config", "config must be a JSON object")
        return 2
    output = dict(config.get("output") or {})
    if args.out is not None:
        output["path"] = args.out
    if args.json:
        output["format"] = "json"
    if args.seed is not None:
        config["seed"] = args.seed
    fmt = output.get("format", "json")
    if fmt not in ("json", "csv"):
        _emit_error("config", f"unknown output format {fmt!r}")
        return 2

    try:
        report = run_experiment(config)
    except ConfigError as exc:
        _emit_error("config", str(exc))
        return 2
    except UpstreamError as exc:
        _emit_error("computation", str(exc))
        return 3

    if fmt == "csv":
        text = report.to_csv_text()
    else:
        text = json.dumps(report.to_json(), sort_keys=True, indent=2) + "\n"
    path = output.get("path")
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
        print(f"{report.experiment}: wrote {fmt} report to {path} "
              f"in {report.duration_s:.3f}s")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_list(args) -> int:
    catalog = list_experiments()
    if args.json:
        print(json.dumps(catalog, sort_keys=True, indent=2))
        return 0
    for entry in catalog:
        print(f"{entry['name']}: {entry['description']}")
        print(f"    topic: {entry['topic']}")
        for pname, pspec in entry["params"].items():
            req = "required" if pspec["required"] else f"default={pspec.get('default')!r}"
            print(f"    {pname} ({pspec['type']}, {req}): {pspec['description']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontology-lab",
        description="Run reproducible experiments on deterministic automata "
                    "and their quantum lifts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="execute one experiment from a JSON config")
    runp.add_argument("--config", required=True, help="path to the config file")
    runp.add_argument("--out", default=None, help="override the output path")
    runp.add_argument("--json", action="store_true",
                      help="force JSON output format")
    runp.add_argument("--seed", type=int, default=None,
                      help="override the config seed")
    runp.set_defaults(func=_cmd_run)

    listp = sub.add_parser("list", help="print the experiment catalog")
    listp.add_argument("--json", action="store_true",
                       help="emit the catalog as schema-valid JSON")
    listp.set_defaults(func=_cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
