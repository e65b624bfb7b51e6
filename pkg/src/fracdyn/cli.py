"""Experiment runner.

Configs are INI files (``configparser`` syntax): named sections of
``key = value`` pairs.  Unknown sections or keys are rejected.  Every run
writes ``metadata.json`` (the fully resolved configuration plus the library
version; it re-parses into an equal configuration), one or more data files
(CSV for time series and snapshots, JSON for reports), and ``summary.json``
with pass/fail results against the configured tolerances.  Floats are
written with 17 significant digits so repeated runs are byte-identical.

Exit codes: 0 success, 1 configuration error, 2 numerical failure
(blow-up or non-convergence), 3 I/O error.
"""

import argparse
import configparser
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import dispersion_check
from .chain import ChainSpec, ChainState, continuum_limit_compare, evolve_chain
from .errors import (BlowUpError, ConfigError, ConvergenceError, DomainError,
                     FracdynError)
from .fields import (FieldState, Interaction, ModelSpec, Potential,
                     evolve_field, evolve_sine_gordon, field_mass,
                     nls_evolve, sine_gordon_energy, stationary_fgle_solve)
from .fracops import (caputo_left_l1, mittag_leffler,
                      riesz_derivative_spectral)
from .grids import GridSpec, TimeGrid
from .kernels import MemoryKernel, memory_convolution

EXPERIMENT_KINDS = ("evolve_field", "sine_gordon", "nls", "stationary_fgle",
                    "chain", "continuum_compare", "dispersion",
                    "operator_selftest")

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_IO = 0, 1, 2, 3


def _parse_terms(text):
    terms = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            order, coeff = item.split(":")
            terms.append([float(order), float(coeff)])
        except ValueError as exc:
            raise ConfigError(f"bad spatial term '{item}', expected order:coeff") from exc
    return terms


def _parse_int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad integer list '{text}'") from exc


def _parse_float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"bad float list '{text}'") from exc


# (section, key) -> (converter, default); REQUIRED means no default
REQUIRED = object()

_SCHEMA = {
    "experiment": {"kind": (str, REQUIRED), "seed": (int, 0), "threads": (int, 1)},
    "grid": {"n_points": (int, REQUIRED), "length": (float, REQUIRED)},
    "time": {"dt": (float, REQUIRED), "n_steps": (int, REQUIRED)},
    "model": {"g0": (float, 1.0), "g0_prime": (float, 0.0), "beta": (float, 1.0),
              "spatial_terms": (_parse_terms, []), "potential": (str, "none"),
              "a": (float, 0.0), "b": (float, 0.0),
              "interaction": (str, "identity"), "interaction_mix": (float, 0.0),
              "field_kind": (str, "real")},
    "initial": {"kind": (str, "cosine"), "amplitude": (float, 1.0),
                "mode": (int, 1), "value": (float, 0.0), "width": (float, 1.0),
                "phase": (float, 0.0)},
    "nls": {"alpha": (float, REQUIRED), "g": (float, 1.0), "a": (float, 0.0),
            "b": (float, 0.0)},
    "sine_gordon": {"alpha": (float, 2.0), "beta_plus_one": (float, 2.0),
                    "velocity": (float, 0.2)},
    "stationary": {"alpha": (float, REQUIRED), "g": (float, 1.0),
                   "a": (float, REQUIRED), "b": (float, REQUIRED),
                   "tol": (float, 1e-10), "max_iter": (int, 100)},
    "chain": {"n_particles": (int, REQUIRED), "dx": (float, 1.0),
              "alpha": (float, REQUIRED), "g0": (float, 1.0),
              "beta": (float, 1.0), "cutoff": (int, 0),
              "a": (float, 0.0), "b": (float, 0.0),
              "potential": (str, "none"), "interaction": (str, "identity"),
              "interaction_mix": (float, 0.0)},
    "compare": {"modes": (_parse_int_list, REQUIRED), "fit_horizon": (float, 2.0)},
    "dispersion": {"modes": (_parse_int_list, REQUIRED)},
    "output": {"snapshot_every": (int, 0)},
    "tolerances": {"mass_drift": (float, 1e-10), "energy_drift": (float, 1e-2),
                   "residual": (float, 1e-10), "rate_deviation": (float, 5e-2),
                   "selftest": (float, 1e-12)},
}

_SECTIONS_BY_KIND = {
    "evolve_field": {"experiment", "grid", "time", "model", "initial", "output",
                     "tolerances"},
    "sine_gordon": {"experiment", "grid", "time", "sine_gordon", "output",
                    "tolerances"},
    "nls": {"experiment", "grid", "time", "nls", "initial", "output",
            "tolerances"},
    "stationary_fgle": {"experiment", "grid", "stationary", "initial",
                        "tolerances"},
    "chain": {"experiment", "chain", "time", "initial", "output", "tolerances"},
    "continuum_compare": {"experiment", "chain", "time", "compare",
                          "tolerances"},
    "dispersion": {"experiment", "grid", "time", "nls", "dispersion",
                   "tolerances"},
    "operator_selftest": {"experiment", "tolerances"},
}


@dataclass
class ExperimentConfig:
    """Fully resolved and validated experiment description."""

    kind: str
    seed: int = 0
    threads: int = 1
    sections: dict = field(default_factory=dict)

    def section(self, name):
        return self.sections.get(name, {})

    def to_dict(self):
        return {"kind": self.kind, "seed": self.seed, "threads": self.threads,
                "sections": self.sections}

    @classmethod
    def from_dict(cls, data):
        return cls(kind=data["kind"], seed=data["seed"], threads=data["threads"],
                   sections=data["sections"])


def _resolve_section(name, raw):
    schema = _SCHEMA[name]
    out = {}
    for key in raw:
        if key not in schema:
            raise ConfigError(f"unknown key '{key}' in section [{name}]")
    for key, (conv, default) in schema.items():
        if key in raw:
            try:
                out[key] = conv(raw[key])
            except ConfigError:
                raise
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for '{key}' in [{name}]: {raw[key]!r}") from exc
        elif default is REQUIRED:
            raise ConfigError(f"missing required key '{key}' in section [{name}]")
        else:
            out[key] = default
    return out


def _validate_ranges(cfg: ExperimentConfig):
    """Range checks that name the offending key."""
    def check(cond, key, msg):
        if not cond:
            raise ConfigError(f"invalid '{key}': {msg}")

    for sec in ("nls", "stationary", "sine_gordon", "chain"):
        if sec in cfg.sections and "alpha" in cfg.sections[sec]:
            a = cfg.sections[sec]["alpha"]
            check(0.0 < a <= 2.0, "alpha", f"must be in (0, 2], got {a}")
    if "model" in cfg.sections:
        for order, _ in cfg.sections["model"]["spatial_terms"]:
            check(0.0 < order <= 2.0, "spatial_terms",
                  f"order must be in (0, 2], got {order}")
        beta = cfg.sections["model"]["beta"]
        check(0.0 < beta <= 2.0, "beta", f"must be in (0, 2], got {beta}")
    if "chain" in cfg.sections:
        beta = cfg.sections["chain"]["beta"]
        check(0.0 < beta <= 2.0, "beta", f"must be in (0, 2], got {beta}")
    if "sine_gordon" in cfg.sections:
        bp1 = cfg.sections["sine_gordon"]["beta_plus_one"]
        check(1.0 < bp1 <= 2.0, "beta_plus_one", f"must be in (1, 2], got {bp1}")
        v = cfg.sections["sine_gordon"]["velocity"]
        check(abs(v) < 1.0, "velocity", "kink velocity must satisfy |v| < 1")
    if "grid" in cfg.sections:
        check(cfg.sections["grid"]["n_points"] >= 2, "n_points", "need >= 2")
        check(cfg.sections["grid"]["length"] > 0, "length", "must be positive")
    if "time" in cfg.sections:
        check(cfg.sections["time"]["dt"] > 0, "dt", "must be positive")
        check(cfg.sections["time"]["n_steps"] >= 1, "n_steps", "need >= 1")


def load_config(path, kind=None, seed=None, threads=None):
    """Parse and validate an INI experiment config into an ExperimentConfig."""
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except OSError:
        raise
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse config: {exc}") from exc

    raw = {s: dict(parser.items(s)) for s in parser.sections()}
    if "experiment" not in raw:
        raise ConfigError("missing [experiment] section")
    exp = _resolve_section("experiment", raw["experiment"])
    if exp["kind"] not in EXPERIMENT_KINDS:
        raise ConfigError(f"unknown experiment kind '{exp['kind']}'")
    if kind is not None and exp["kind"] != kind:
        raise ConfigError(f"config kind '{exp['kind']}' does not match "
                          f"subcommand '{kind}'")
    allowed = _SECTIONS_BY_KIND[exp["kind"]]
    sections = {}
    for name, body in raw.items():
        if name not in _SCHEMA:
            raise ConfigError(f"unknown section [{name}]")
        if name not in allowed:
            raise ConfigError(f"section [{name}] does not apply to "
                              f"experiment kind '{exp['kind']}'")
        if name != "experiment":
            sections[name] = _resolve_section(name, body)
    for name in allowed - {"experiment"}:
        if name not in sections:
            # sections with only defaulted keys may be omitted entirely
            schema = _SCHEMA[name]
            if any(d is REQUIRED for _, d in schema.values()):
                raise ConfigError(f"missing required section [{name}] for "
                                  f"kind '{exp['kind']}'")
            sections[name] = _resolve_section(name, {})
    cfg = ExperimentConfig(kind=exp["kind"],
                           seed=exp["seed"] if seed is None else int(seed),
                           threads=exp["threads"] if threads is None else int(threads),
                           sections=sections)
    if cfg.threads < 1:
        raise ConfigError("invalid 'threads': must be >= 1")
    _validate_ranges(cfg)
    return cfg


# ---------------------------------------------------------------- writers

def _fmt(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def write_csv(path, header, rows):
    with open(path, "w") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _json_default(o):
    if isinstance(o, (np.integer,)):
        return int(o)
    if isinstance(o, (np.floating,)):
        return float(o)
    if isinstance(o, (np.bool_,)):
        return bool(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"not JSON serializable: {type(o)}")


def write_json(path, data):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True, default=_json_default)
        fh.write("\n")


def write_metadata(outdir, cfg):
    write_json(outdir / "metadata.json",
               {"version": __version__, "config": cfg.to_dict()})


def read_metadata(path):
    with open(path) as fh:
        data = json.load(fh)
    return ExperimentConfig.from_dict(data["config"])


# ---------------------------------------------------------------- builders

def _build_model(sec):
    return ModelSpec(
        g0=sec["g0"], g0_prime=sec["g0_prime"],
        spatial_terms=tuple((o, c) for o, c in sec["spatial_terms"]),
        a=sec["a"], b=sec["b"], potential=Potential(sec["potential"]),
        interaction=Interaction(sec["interaction"]),
        interaction_mix=sec["interaction_mix"], field_kind=sec["field_kind"])


def _initial_field(sec, grid, rng, complex_field=False):
    x = grid.x
    kind = sec["kind"]
    amp, mode = sec["amplitude"], sec["mode"]
    if kind == "cosine":
        u0 = amp * np.cos(2 * np.pi * mode * np.arange(grid.n_points)
                          / grid.n_points + sec["phase"])
    elif kind == "uniform":
        u0 = np.full(grid.n_points, sec["value"])
    elif kind == "random":
        u0 = amp * rng.standard_normal(grid.n_points)
    elif kind == "gaussian":
        c = grid.length / 2
        u0 = amp * np.exp(-((x - c) / sec["width"]) ** 2 / 2)
    elif kind == "plane_wave":
        k = 2 * np.pi * mode / grid.length
        u0 = amp * np.exp(1j * k * x)
    elif kind == "pulse":
        c = grid.length / 2
        u0 = amp / np.cosh((x - c) / sec["width"])
    else:
        raise ConfigError(f"unknown initial kind '{kind}'")
    if complex_field:
        return u0.astype(complex)
    if np.iscomplexobj(u0):
        raise ConfigError(f"initial kind '{kind}' produces a complex field")
    return u0


def _snapshot_rows(state, every):
    hist = state.history
    t = state.times
    x = state.grid.x
    steps = range(0, state.n_completed + 1, every) if every else (0, state.n_completed)
    for j in steps:
        for i in range(state.grid.n_points):
            v = hist[j, i]
            if np.iscomplexobj(hist):
                yield (t[j], x[i], v.real, v.imag)
            else:
                yield (t[j], x[i], v)


# ---------------------------------------------------------------- runners

def _run_evolve_field(cfg, outdir, rng):
    g = cfg.section("grid")
    grid = GridSpec(g["n_points"], g["length"])
    time = TimeGrid(cfg.section("time")["n_steps"], cfg.section("time")["dt"])
    model = _build_model(cfg.section("model"))
    beta = cfg.section("model")["beta"]
    u0 = _initial_field(cfg.section("initial"), grid, rng,
                        complex_field=model.field_kind == "complex")
    state = FieldState.from_initial(grid, time, u0)
    evolve_field(model, state, beta)
    every = cfg.section("output")["snapshot_every"]
    cols = ("t", "x", "u_re", "u_im") if state.is_complex else ("t", "x", "u")
    write_csv(outdir / "snapshots.csv", cols, _snapshot_rows(state, every))
    return {"final_sup_norm": float(np.max(np.abs(state.current()))),
            "steps": state.n_completed, "passed": True}


def _run_sine_gordon(cfg, outdir, rng):
    g = cfg.section("grid")
    grid = GridSpec(g["n_points"], g["length"])
    time = TimeGrid(cfg.section("time")["n_steps"], cfg.section("time")["dt"])
    sg = cfg.section("sine_gordon")
    alpha, bp1, v = sg["alpha"], sg["beta_plus_one"], sg["velocity"]
    L = grid.length
    x = grid.x - L / 2
    gam = 1.0 / math.sqrt(1.0 - v * v)

    def pair(tau):
        xx = (x - v * tau + L / 2) % L - L / 2
        return (4 * np.arctan(np.exp(gam * (xx + L / 4)))
                + 4 * np.arctan(np.exp(-gam * (xx - L / 4))) - 2 * np.pi)

    u0 = pair(0.0)
    kr = grid.wavenumbers_real
    v0 = -v * np.fft.irfft(1j * kr * np.fft.rfft(u0), n=grid.n_points)
    state = FieldState.from_initial(grid, time, u0, initial_velocity=v0)
    evolve_sine_gordon(state, alpha, bp1)
    e0 = sine_gordon_energy(state, 0)
    e1 = sine_gordon_energy(state, state.n_completed - 1)
    drift = abs(e1 - e0) / abs(e0)
    summary = {"energy_initial": e0, "energy_final": e1, "energy_drift": drift,
               "passed": drift < cfg.section("tolerances")["energy_drift"]}
    if alpha == 2.0 and bp1 == 2.0:
        shape_err = float(np.max(np.abs(state.current() - pair(time.t_final))))
        summary["kink_shape_error"] = shape_err
    every = cfg.section("output")["snapshot_every"]
    write_csv(outdir / "snapshots.csv", ("t", "x", "u"),
              _snapshot_rows(state, every))
    return summary


def _run_nls(cfg, outdir, rng):
    g = cfg.section("grid")
    grid = GridSpec(g["n_points"], g["length"])
    time = TimeGrid(cfg.section("time")["n_steps"], cfg.section("time")["dt"])
    p = cfg.section("nls")
    u0 = _initial_field(cfg.section("initial"), grid, rng, complex_field=True)
    state = FieldState.from_initial(grid, time, u0)
    nls_evolve(state, p["alpha"], p["g"], p["a"], p["b"])
    m0 = field_mass(state.history[0], grid)
    m1 = field_mass(state.current(), grid)
    drift = abs(m1 - m0) / m0
    every = cfg.section("output")["snapshot_every"]
    write_csv(outdir / "snapshots.csv", ("t", "x", "u_re", "u_im"),
              _snapshot_rows(state, every))
    return {"mass_initial": m0, "mass_final": m1, "mass_drift": drift,
            "passed": drift < cfg.section("tolerances")["mass_drift"]
            * max(1, state.n_completed / 1000)}


def _run_stationary(cfg, outdir, rng):
    g = cfg.section("grid")
    grid = GridSpec(g["n_points"], g["length"])
    p = cfg.section("stationary")
    guess = _initial_field(cfg.section("initial"), grid, rng)
    result = stationary_fgle_solve(grid, p["alpha"], p["g"], p["a"], p["b"],
                                   guess, tol=p["tol"], max_iter=p["max_iter"])
    write_csv(outdir / "solution.csv", ("x", "u"),
              zip(grid.x, result.u))
    if not result.converged:
        raise ConvergenceError(
            f"stationary solve stalled at residual {result.residual_norm:.3e}",
            estimate=result.residual_norm)
    return {"residual_norm": result.residual_norm, "iterations": result.n_iter,
            "converged": result.converged, "passed": result.converged}


def _build_chain(sec):
    local = ModelSpec(a=sec["a"], b=sec["b"],
                      potential=Potential(sec["potential"]),
                      interaction=Interaction(sec["interaction"]),
                      interaction_mix=sec["interaction_mix"])
    return ChainSpec(n_particles=sec["n_particles"], dx=sec["dx"],
                     alpha=sec["alpha"], g0=sec["g0"], beta=sec["beta"],
                     coupling_cutoff=sec["cutoff"], local=local)


def _run_chain(cfg, outdir, rng):
    spec = _build_chain(cfg.section("chain"))
    time = TimeGrid(cfg.section("time")["n_steps"], cfg.section("time")["dt"])
    u0 = _initial_field(cfg.section("initial"), spec.grid, rng)
    state = ChainState.from_chain(spec, time, u0)
    evolve_chain(spec, state)
    every = cfg.section("output")["snapshot_every"]
    write_csv(outdir / "trajectory.csv", ("t", "x", "u"),
              _snapshot_rows(state, every))
    return {"final_sup_norm": float(np.max(np.abs(state.current()))),
            "steps": state.n_completed, "passed": True}


def _run_continuum_compare(cfg, outdir, rng):
    spec = _build_chain(cfg.section("chain"))
    tsec = cfg.section("time")
    comp = cfg.section("compare")
    report = continuum_limit_compare(spec, comp["modes"], tsec["dt"],
                                     tsec["n_steps"],
                                     fit_horizon=comp["fit_horizon"])
    write_json(outdir / "report.json", report.to_dict())
    worst = max(report.deviation_vs_continuum)
    return {"worst_deviation_vs_continuum": worst,
            "fitted_exponent": report.fitted_exponent,
            "passed": worst < cfg.section("tolerances")["rate_deviation"]}


def _run_dispersion(cfg, outdir, rng):
    g = cfg.section("grid")
    grid = GridSpec(g["n_points"], g["length"])
    time = TimeGrid(cfg.section("time")["n_steps"], cfg.section("time")["dt"])
    p = cfg.section("nls")
    modes = cfg.section("dispersion")["modes"]
    x = grid.x
    u0 = np.zeros(grid.n_points, dtype=complex)
    for m in modes:
        u0 += np.exp(1j * (2 * np.pi * m / grid.length) * x)
    state = FieldState.from_initial(grid, time, u0)
    nls_evolve(state, p["alpha"], p["g"], p["a"], p["b"])
    report = dispersion_check(state, alpha=p["alpha"], beta=1.0, g=p["g"],
                              a=p["a"], b=p["b"], modes=modes)
    write_json(outdir / "report.json", report.to_dict())
    return {"max_rel_err": max(report.rel_err),
            "fitted_exponent": report.fitted_exponent,
            "passed": max(report.rel_err) < 1e-4
            and abs(report.fitted_exponent - p["alpha"]) < 0.02}


def _run_selftest(cfg, outdir, rng):
    checks = {}
    grid = GridSpec(128, 2 * np.pi)
    x = grid.x
    worst = 0.0
    for alpha in (1.2, 1.5, 2.0):
        for m in (1, 5, 31):
            u = np.cos(m * x)
            got = riesz_derivative_spectral(u, alpha, grid)
            err = float(np.max(np.abs(got + m ** alpha * u)) / m ** alpha)
            worst = max(worst, err)
    checks["riesz_mode_exactness"] = worst

    u = np.full(64, 3.7)
    checks["caputo_constant"] = float(np.max(np.abs(caputo_left_l1(u, 0.5, 0.01))))

    t = np.arange(0, 1001) * 1e-3
    val = caputo_left_l1(t, 0.5, 1e-3)[-1]
    checks["caputo_linear"] = abs(val - 2 / math.sqrt(math.pi))

    checks["ml_exp"] = abs(mittag_leffler(1.0, 1.0) - math.e)
    checks["ml_at_zero"] = abs(mittag_leffler(0.7, 0.0) - 1.0)

    hist = rng.standard_normal(257)
    kern = MemoryKernel(beta=0.4, g0=1.7)
    dt = 1.0 / 256
    mc = memory_convolution(kern, np.diff(hist) / dt, dt)
    ca = 1.7 * caputo_left_l1(hist, 0.4, dt)
    checks["memory_identity"] = float(np.max(np.abs(mc - ca)))

    u1 = rng.standard_normal(128)
    u2 = rng.standard_normal(128)
    lin = riesz_derivative_spectral(2.0 * u1 - 0.5 * u2, 1.5, grid) - (
        2.0 * riesz_derivative_spectral(u1, 1.5, grid)
        - 0.5 * riesz_derivative_spectral(u2, 1.5, grid))
    checks["riesz_linearity"] = float(np.max(np.abs(lin)))

    tol = cfg.section("tolerances")["selftest"]
    passed = all(v <= tol for v in checks.values())
    write_json(outdir / "selftest.json",
               {"checks": checks, "tolerance": tol, "passed": passed})
    if not passed:
        raise ConvergenceError("operator self-test failed", estimate=max(checks.values()))
    return {"worst": max(checks.values()), "passed": passed}


_RUNNERS = {
    "evolve_field": _run_evolve_field,
    "sine_gordon": _run_sine_gordon,
    "nls": _run_nls,
    "stationary_fgle": _run_stationary,
    "chain": _run_chain,
    "continuum_compare": _run_continuum_compare,
    "dispersion": _run_dispersion,
    "operator_selftest": _run_selftest,
}


def run(cfg: ExperimentConfig, outdir):
    """Execute an experiment; returns the summary dict."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    write_metadata(outdir, cfg)
    rng = np.random.default_rng(cfg.seed)
    summary = _RUNNERS[cfg.kind](cfg, outdir, rng)
    write_json(outdir / "summary.json", summary)
    return summary


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="fracdyn",
        description="fractional field and chain experiment runner")
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in EXPERIMENT_KINDS:
        p = sub.add_parser(kind)
        p.add_argument("--config", required=True)
        p.add_argument("--out", required=True)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--threads", type=int, default=None)
    return parser


def main(argv=None):
    args = _make_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, kind=args.kind, seed=args.seed,
                          threads=args.threads)
    except (ConfigError, configparser.Error) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        summary = run(cfg, args.out)
    except (BlowUpError, ConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (ConfigError, DomainError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FracdynError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    status = "ok" if summary.get("passed", True) else "tolerance check failed"
    print(f"{cfg.kind}: {status}")
    return EXIT_OK if summary.get("passed", True) else EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
