"""Command-line interface: evaluate functions, run verification suites, emit reports.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
Reports are JSON (``"schema": 1``, keys sorted) or CSV.
"""

import argparse
import csv
import io
import itertools
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

__all__ = ["RunConfig", "main", "load_config", "EXIT_OK", "EXIT_FAIL", "EXIT_USAGE"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SCHEMA = 1
COMMANDS = ("eval", "verify", "kernel", "transform", "brachistochrone")
FUNCTIONS = ("conical_p", "conical_q", "bessel_k_imag", "whittaker_w", "heat_kernel", "greens_function")

# parameters accepted by each command (values are lists for grid parameters)
PARAMS = {
    "eval": {"fn", "mu", "nu", "z", "x", "kappa", "m", "rho", "t", "E"},
    "verify": {"suite", "n_paths"},
    "kernel": {"rho", "t", "E", "method"},
    "transform": {"kind", "test", "mu", "grid", "roundtrip"},
    "brachistochrone": {"omega", "R", "Omega", "t_end", "steps"},
}
_GRID = {"mu", "nu", "z", "x", "kappa", "m", "rho", "t", "E", "grid"}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    output_format: str = "json"
    tolerance_overrides: Optional[dict] = None
    seed: Optional[int] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in ("json", "csv"):
            raise UsageError("output_format must be json or csv")
        bad = set(self.params) - PARAMS[self.command]
        if bad:
            raise UsageError(f"unknown parameter(s) for {self.command}: {sorted(bad)}")
        return self


_CONFIG_KEYS = {"command", "params", "output_format", "tolerance_overrides", "seed"}


def _parse_scalar(text):
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    return text


def load_config(path):
    """Read a RunConfig file: JSON, or ``key=value`` lines.

    In the key=value form, ``command``, ``output_format`` and ``seed`` are
    top-level, keys ``tol.NAME`` are tolerance overrides and every other
    key is a command parameter.  Unknown keys are rejected.
    """
    with open(path) as fh:
        text = fh.read()
    stripped = text.strip()
    if stripped.startswith("{"):
        raw = json.loads(stripped)
        bad = set(raw) - _CONFIG_KEYS
        if bad:
            raise UsageError(f"unknown config keys: {sorted(bad)}")
        return raw
    raw = {"params": {}, "tolerance_overrides": {}}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"bad config line: {line!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        if key in ("command", "output_format"):
            raw[key] = val
        elif key == "seed":
            raw[key] = int(val)
        elif key.startswith("tol."):
            raw["tolerance_overrides"][key[4:]] = float(val)
        else:
            raw["params"][key] = val
    return raw


def _grid_values(v):
    if isinstance(v, (list, tuple)):
        return [float(x) for x in v]
    return [float(x) for x in str(v).split(",") if x.strip()]


def _num(v):
    """JSON-safe float (NaN/inf become None)."""
    v = float(np.real(v))
    return v if np.isfinite(v) else None


def _fmt(v):
    return "" if v is None else repr(v)


# ---------------------------------------------------------------- commands

def _cmd_eval(cfg):
    from . import kernels
    from .specfun import bessel_k_imag, conical_p, conical_q, whittaker_w

    p = dict(cfg.params)
    fn = p.pop("fn", None)
    if fn not in FUNCTIONS:
        raise UsageError(f"--fn must be one of {FUNCTIONS}")
    need = {"conical_p": ("mu", "nu", "z"), "conical_q": ("mu", "nu", "z"), "bessel_k_imag": ("nu", "x"),
            "whittaker_w": ("kappa", "m", "z"), "heat_kernel": ("rho", "t"), "greens_function": ("rho", "E")}[fn]
    missing = [k for k in need if k not in p]
    if missing:
        raise UsageError(f"{fn} needs parameters {list(need)}; missing {missing}")
    extra = set(p) - set(need)
    if extra:
        raise UsageError(f"{fn} does not take {sorted(extra)}")
    grids = [_grid_values(p[k]) for k in need]
    rows = []
    for point in itertools.product(*grids):
        kw = dict(zip(need, point))
        if fn in ("conical_p", "conical_q"):
            f = conical_p if fn == "conical_p" else conical_q
            zm1 = kw["z"] - 1.0
            r = f((kw["mu"], kw["nu"]), kw["z"], zm1) if fn == "conical_q" else f((kw["mu"], kw["nu"]), kw["z"])
            val, err = r.value, r.est_error
        elif fn == "bessel_k_imag":
            r = bessel_k_imag(kw["nu"], kw["x"])
            val, err = r.value, r.est_error
        elif fn == "whittaker_w":
            r = whittaker_w(kw["kappa"], kw["m"], kw["z"])
            val, err = r.value, r.est_error
        elif fn == "heat_kernel":
            val, err = kernels.heat_kernel_radial(kw["rho"], kw["t"], return_error=True)
        else:
            val, err = kernels.greens_function(kw["rho"], kw["E"]), float("nan")
        rows.append({**kw, "value": _num(val), "est_error": _num(err)})
    return {"fn": fn, "rows": rows}, EXIT_OK


def _cmd_verify(cfg):
    from .verify import SUITES, run_suite

    suite = cfg.params.get("suite")
    if suite not in SUITES:
        raise UsageError(f"--suite must be one of {sorted(SUITES)}")
    kw = {}
    if cfg.seed is not None:
        kw["seed"] = cfg.seed
    if "n_paths" in cfg.params:
        kw["n_paths"] = int(cfg.params["n_paths"])
    try:
        rep = run_suite(suite, cfg.tolerance_overrides, **kw)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from exc
    recs = []
    for r in rep.records:
        d = r.as_dict()
        for key in ("lhs", "rhs", "rel_err", "tol"):
            d[key] = _num(d[key])
        recs.append(d)
    return {"suite": suite, "records": recs, "_wall_ms": rep.wall_ms}, EXIT_OK if rep.passed else EXIT_FAIL


def _cmd_kernel(cfg):
    from . import kernels

    p = cfg.params
    method = p.get("method", "spectral")
    rows = []
    if "E" in p:
        for rho, E in itertools.product(_grid_values(p.get("rho", 1.0)), _grid_values(p["E"])):
            m = "spectral" if method == "spectral" else "laplace"
            rows.append({"rho": rho, "E": E, "greens_function": _num(kernels.greens_function(rho, E, m))})
    else:
        for rho, t in itertools.product(_grid_values(p.get("rho", 1.0)), _grid_values(p.get("t", 0.5))):
            if method == "mckean":
                val, err = kernels.heat_kernel_mckean(rho, t), float("nan")
            elif method == "spectral":
                val, err = kernels.heat_kernel_radial(rho, t, return_error=True)
            else:
                raise UsageError("method must be spectral or mckean")
            rows.append({"rho": rho, "t": t, "value": _num(val), "est_error": _num(err)})
    return {"method": method, "rows": rows}, EXIT_OK


def _cmd_transform(cfg):
    from .transforms import kontorovich_lebedev, kontorovich_lebedev_roundtrip, mehler_fock, mehler_fock_roundtrip
    from .verify import mf_test_functions

    p = cfg.params
    kind = p.get("kind", "mehler_fock")
    roundtrip = str(p.get("roundtrip", "false")).lower() in ("1", "true", "yes")
    if kind == "mehler_fock":
        fns = mf_test_functions()
        test = p.get("test", "gauss")
        if test not in fns:
            raise UsageError(f"--test must be one of {sorted(fns)}")
        f, sup = fns[test]
        mu = float(p.get("mu", 0.5))
        if roundtrip:
            e, _, _ = mehler_fock_roundtrip(f, mu, sup)
            return {"kind": kind, "test": test, "mu": mu, "rel_l2": _num(e)}, EXIT_OK
        r = mehler_fock(f, mu, _grid_values(p.get("grid", "0.5,1,2,4")), support=sup)
    elif kind == "kontorovich_lebedev":
        g = lambda a: a * np.exp(-a * a)  # noqa: E731
        if roundtrip:
            e, _, _ = kontorovich_lebedev_roundtrip(g)
            return {"kind": kind, "test": "a*exp(-a^2)", "rel_l2": _num(e)}, EXIT_OK
        r = kontorovich_lebedev(g, _grid_values(p.get("grid", "0,0.5,1,2,4")))
    else:
        raise UsageError("--kind must be mehler_fock or kontorovich_lebedev")
    rows = [{"param": _num(a), "value": _num(b), "est_error": _num(c)} for a, b, c in r.table]
    return {"kind": kind, "rows": rows, "truncation_report": _num(r.truncation_report)}, EXIT_OK


def _cmd_brachistochrone(cfg):
    from . import brachistochrone as br
    from .mat2 import max_error

    p = cfg.params
    omega, R = float(p.get("omega", 0.5)), float(p.get("R", 1.0))
    Omega = float(p.get("Omega", -omega))
    t_end, steps = float(p.get("t_end", 1.0)), int(p.get("steps", 1024))
    st = br.BrachistochroneState(br.hamiltonian_hyperbolic(0.0, omega, R), br.constraint(Omega), 0.0)
    traj = br.integrate_brachistochrone(st, t_end, steps)
    err = max_error(traj.H[-1], br.hamiltonian_hyperbolic(t_end, omega, R))
    H = traj.H[-1]
    return {"omega": omega, "R": R, "Omega": Omega, "t_end": t_end, "steps": steps,
            "H_final": [[[_num(v.real), _num(v.imag)] for v in row] for row in H],
            "closed_form_error": _num(err), "drift_trace_h2": _num(traj.drift_h2),
            "drift_trace_hf": _num(traj.drift_hf), "trace_h2": _num(traj.trace_h2[-1].real)}, EXIT_OK


_HANDLERS = {"eval": _cmd_eval, "verify": _cmd_verify, "kernel": _cmd_kernel,
             "transform": _cmd_transform, "brachistochrone": _cmd_brachistochrone}


# ---------------------------------------------------------------- output

def _render(cfg, payload, wall_ms):
    echo = asdict(cfg)
    if cfg.output_format == "json":
        doc = {"schema": SCHEMA, "command": cfg.command, "config_echo": echo, "wall_ms": round(wall_ms, 3)}
        doc.update(payload)
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if cfg.command == "verify":
        w.writerow(["anchor", "param", "lhs", "rhs", "rel_err", "tol", "pass"])
        for r in payload["records"]:
            w.writerow([r["anchor"], r["param"], _fmt(r["lhs"]), _fmt(r["rhs"]), _fmt(r["rel_err"]),
                        _fmt(r["tol"]), "true" if r["pass"] else "false"])
    elif "rows" in payload:
        rows = payload["rows"]
        cols = list(rows[0]) if rows else []
        w.writerow(cols)
        for r in rows:
            w.writerow([_fmt(r[c]) if not isinstance(r[c], str) else r[c] for c in cols])
    else:
        flat = {k: v for k, v in payload.items() if not isinstance(v, (list, dict))}
        w.writerow(list(flat))
        w.writerow([_fmt(v) if not isinstance(v, str) else v for v in flat.values()])
    return buf.getvalue()


# ---------------------------------------------------------------- argparse

def _parser():
    ap = argparse.ArgumentParser(prog="hypdiff", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), default=None)
    common.add_argument("--config", help="RunConfig file (JSON or key=value lines)")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--tol", action="append", default=[], metavar="KEY=VALUE",
                        help="tolerance override (repeatable)")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a special function on a grid")
    p.add_argument("--fn", choices=FUNCTIONS)
    for k in ("mu", "nu", "z", "x", "kappa", "m", "rho", "t", "E"):
        p.add_argument(f"--{k}", help="value or comma-separated list")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite")
    p.add_argument("--n-paths", dest="n_paths", type=int)

    p = sub.add_parser("kernel", parents=[common], help="heat kernel or Green's function")
    p.add_argument("--rho")
    p.add_argument("--t")
    p.add_argument("--E")
    p.add_argument("--method", choices=("spectral", "mckean", "laplace"))

    p = sub.add_parser("transform", parents=[common], help="Mehler-Fock / Kontorovich-Lebedev transforms")
    p.add_argument("--kind", choices=("mehler_fock", "kontorovich_lebedev"))
    p.add_argument("--test", help="test function (mehler_fock: gauss, bump, exp)")
    p.add_argument("--mu")
    p.add_argument("--grid", help="comma-separated p or nu values")
    p.add_argument("--roundtrip", action="store_const", const="true")

    p = sub.add_parser("brachistochrone", parents=[common], help="integrate the brachistochrone ODE")
    for k in ("omega", "R", "Omega"):
        p.add_argument(f"--{k}", type=float)
    p.add_argument("--t-end", dest="t_end", type=float)
    p.add_argument("--steps", type=int)
    return ap


_NON_PARAMS = {"command", "output_format", "config", "seed", "tol", "output"}


def _build_config(args):
    raw = {"params": {}, "tolerance_overrides": {}}
    if args.config:
        raw.update(load_config(args.config))
        raw.setdefault("params", {})
        raw["tolerance_overrides"] = raw.get("tolerance_overrides") or {}
        if raw.get("command", args.command) != args.command:
            raise UsageError("config command does not match the subcommand")
    for key, val in vars(args).items():
        if key not in _NON_PARAMS and val is not None:
            raw["params"][key] = val
    for item in args.tol:
        if "=" not in item:
            raise UsageError(f"--tol expects KEY=VALUE, got {item!r}")
        k, v = item.split("=", 1)
        raw["tolerance_overrides"][k] = float(v)
    raw["command"] = args.command
    if args.output_format:
        raw["output_format"] = args.output_format
    if args.seed is not None:
        raw["seed"] = args.seed
    raw["tolerance_overrides"] = raw["tolerance_overrides"] or None
    raw["params"] = {k: (v if k in _GRID or not isinstance(v, str) else _parse_scalar(v))
                     for k, v in sorted(raw["params"].items())}
    return RunConfig(**raw).validate()


def main(argv=None):
    """Entry point; returns the exit code."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = _build_config(args)
        start = time.perf_counter()
        payload, code = _HANDLERS[cfg.command](cfg)
        wall = payload.pop("_wall_ms", 1e3 * (time.perf_counter() - start))
    except (UsageError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"hypdiff: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(cfg, payload, wall)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if code == EXIT_FAIL:
        print(f"hypdiff: verification failed in suite {payload.get('suite')}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
