"""Command-line front end.

Every command writes one JSON document (or CSV for spectra) to stdout
or ``--out``. Exit codes: 0 success, 2 usage error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .algebra import RootFindingError
from .basis_maps import ExpansionError, map_report
from .boundary import (
    BoundaryPhases,
    SlabGeometry,
    build_covariant_G,
    check_G_implies_zero_current,
    g_special_cases,
    quantize_dirac,
    spectra_agree,
    weyl_current,
    weyl_quantize,
)
from .clifford import REPRESENTATIONS, CliffordError, build_gammas
from .majorana import majorana_report
from .paper_check import paper_check
from .serialize import dumps_json, spectrum_csv
from .solutions import (
    dirac_residual,
    make_mode,
    phi_basis,
    primed_set,
    set_det,
    set_rank,
    squared_set,
    u_sets,
    w_sets,
    weyl_waves,
)

__all__ = ["RunConfig", "main", "build_parser", "cmd_bases", "cmd_maps", "cmd_quantize"]

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3

SETS = ("squared", "primed", "u", "w", "phi", "weyl")

# defaults applied after the config file and flags are merged
DEFAULTS = {
    "rep": "spinor",
    "set": "squared",
    "gamma": 0.0,
    "k1": None,
    "k2": None,
    "k": None,
    "mass": None,
    "a": 1.0,
    "rho": 0.0,
    "sigma": 0.0,
    "mu": None,
    "nu": None,
    "kmax": 5.0,
    "basis": "planewave",
    "grid": None,
    "samples": 20,
    "seed": 0,
    "format": "json",
    "out": None,
}

FLOAT_KEYS = {"gamma", "k1", "k2", "k", "mass", "a", "rho", "sigma", "mu", "nu", "kmax"}
INT_KEYS = {"grid", "samples", "seed"}


class UsageError(ValueError):
    """Bad or missing command-line parameters."""


@dataclass
class RunConfig:
    """Merged parameters of one invocation."""

    command: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for key, val in self.params.items():
            if key in FLOAT_KEYS and val is not None and not math.isfinite(val):
                raise UsageError(f"--{key} must be finite")
        if self.params.get("format") not in ("json", "csv"):
            raise UsageError("--format must be json or csv")
        if self.params.get("kmax") is not None and self.params["kmax"] <= 0:
            raise UsageError("--kmax must be positive")

    def need(self, *keys) -> tuple:
        missing = [k for k in keys if self.params.get(k) is None]
        if missing:
            raise UsageError("missing required parameter(s): " + ", ".join("--" + k for k in missing))
        return tuple(self.params[k] for k in keys)

    def __getitem__(self, key):
        return self.params[key]


def read_config_file(path: str) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    for n, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{n}: expected key = value")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in DEFAULTS and key != "preset":
            raise UsageError(f"{path}:{n}: unknown key {key!r}")
        out[key] = _coerce(key, val)
    return out


def _coerce(key: str, val: str):
    try:
        if key in FLOAT_KEYS:
            return float(val)
        if key in INT_KEYS:
            return int(val)
    except ValueError:
        raise UsageError(f"bad value for {key}: {val!r}") from None
    return val


# ------------------------------------------------------------------- commands


def _mode(cfg: RunConfig):
    k1, k2, k, M = cfg.need("k1", "k2", "k", "mass")
    return make_mode(k1, k2, k, M)


def _verify_set(s, g) -> dict:
    return {
        "rank": set_rank(s),
        "determinant": set_det(s),
        "max_residual": max(dirac_residual(c, g) for c in s.columns),
    }


def cmd_bases(cfg: RunConfig) -> dict:
    which, rep = cfg["set"], cfg["rep"]
    if which not in SETS:
        raise UsageError(f"--set must be one of {SETS}")
    if rep not in REPRESENTATIONS:
        raise UsageError(f"--rep must be one of {REPRESENTATIONS}")
    if which == "weyl":
        k1, k2, k = cfg.need("k1", "k2", "k")
        waves = weyl_waves(k1, k2, k)
        out = {"set": "weyl", "waves": [w.to_dict() for w in waves]}
        if cfg["verify"]:
            out["verification"] = {
                "max_residual": max(w.residual() for w in waves),
                "helicity": [w.helicity()[0] for w in waves],
                "current": [weyl_current(w.components) for w in waves],
            }
        return out
    m = _mode(cfg)
    if which == "squared":
        sets = {"squared": squared_set(m, rep, cfg["gamma"])}
    elif which == "primed":
        sets = {"primed": primed_set(m, rep)}
    elif which == "u":
        U, Up = u_sets(m, rep)
        sets = {"U": U, "U_primed": Up}
    elif which == "w":
        W, Wp = w_sets(m)
        sets = {"W": W, "W_primed": Wp}
    else:
        if rep != "spinor":
            raise UsageError("--set phi is only available in the spinor representation")
        sets = {"phi": phi_basis(m)}
    out = {"set": which, "rep": next(iter(sets.values())).rep, "mode": m.as_dict(),
           "sets": {k: v.to_dict() for k, v in sets.items()}}
    if cfg["verify"]:
        g = build_gammas(out["rep"])
        out["verification"] = {k: _verify_set(v, g) for k, v in sets.items()}
    return out


def cmd_maps(cfg: RunConfig) -> dict:
    return map_report(_mode(cfg))


def cmd_majorana(cfg: RunConfig) -> dict:
    return majorana_report(_mode(cfg))


def _phases(cfg: RunConfig) -> BoundaryPhases:
    rho, sigma = cfg["rho"], cfg["sigma"]
    if cfg.params.get("preset") == "equal":
        return BoundaryPhases.equal(rho)
    mu = cfg["mu"] if cfg["mu"] is not None else rho
    nu = cfg["nu"] if cfg["nu"] is not None else sigma
    return BoundaryPhases(rho, sigma, mu, nu)


def cmd_quantize(cfg: RunConfig):
    """Returns ``(document, spectrum)``; the spectrum drives CSV output."""
    problem = cfg.params.get("problem")
    geom = SlabGeometry(cfg["a"])
    if problem == "weyl":
        k1, k2 = cfg.need("k1", "k2")
        rho, sigma = cfg["rho"], cfg["sigma"]
        if cfg.params.get("preset") == "equal":
            sigma = rho
        spec = weyl_quantize(k1, k2, geom, rho, sigma, cfg["kmax"], cfg["grid"])
        doc = {"problem": "weyl", "k1": k1, "k2": k2, "a": geom.a, "rho": rho, "sigma": sigma,
               "kmax": cfg["kmax"], "spectrum": spec.to_dict()}
        return doc, spec
    k1, k2, M = cfg.need("k1", "k2", "mass")
    ph = _phases(cfg)
    basis = cfg["basis"]
    if basis not in ("planewave", "squared", "both"):
        raise UsageError("--basis must be planewave, squared or both")
    doc = {"problem": "dirac", "k1": k1, "k2": k2, "mass": M, "a": geom.a,
           "phases": {"rho": ph.rho, "sigma": ph.sigma, "mu": ph.mu, "nu": ph.nu},
           "kmax": cfg["kmax"], "basis": basis}
    if basis == "both":
        s1 = quantize_dirac(k1, k2, M, geom, ph, cfg["kmax"], "planewave", cfg["grid"])
        s2 = quantize_dirac(k1, k2, M, geom, ph, cfg["kmax"], "squared", cfg["grid"])
        agree, gap = spectra_agree(s1, s2)
        doc.update({"spectrum": s1.to_dict(), "squared_spectrum": s2.to_dict(),
                    "identical_spectra": agree, "max_k_gap": gap})
        return doc, s1
    spec = quantize_dirac(k1, k2, M, geom, ph, cfg["kmax"], basis, cfg["grid"])
    doc["spectrum"] = spec.to_dict()
    return doc, spec


def cmd_covariant(cfg: RunConfig) -> dict:
    rep = cfg["rep"]
    if rep not in REPRESENTATIONS:
        raise UsageError(f"--rep must be one of {REPRESENTATIONS}")
    g = build_gammas(rep)
    rho, sigma = cfg["rho"], cfg["sigma"]
    G = build_covariant_G(rho, sigma, g)
    rng = np.random.default_rng(cfg["seed"])
    locked, probes = [], []
    to_rep = g.transform.S if g.transform is not None else np.eye(4)
    for _ in range(cfg["samples"]):
        a1, a2 = rng.normal(size=2) + 1j * rng.normal(size=2)
        psi = to_rep @ np.array([a1, a2, np.exp(1j * rho) * a1, np.exp(1j * sigma) * a2])
        locked.append(check_G_implies_zero_current(G, psi, g))
        probes.append(check_G_implies_zero_current(G, rng.normal(size=4) + 1j * rng.normal(size=4), g))
    return {
        "G": G.to_dict(),
        "special_cases": g_special_cases(rho, g),
        "phase_locked": {
            "count": len(locked),
            "max_fixed_point_deviation": max((r["fixed_point_deviation"] for r in locked), default=0.0),
            "max_abs_jz": max((abs(r["jz"]) for r in locked), default=0.0),
            "all_imply_zero_current": all(r["implication_holds"] for r in locked),
        },
        "random_probes": [{"fixed_point_deviation": r["fixed_point_deviation"], "jz": r["jz"]}
                          for r in probes],
    }


def cmd_paper_check(cfg: RunConfig) -> dict:
    p = cfg.params
    mode = tuple(p[k] if p.get(k) is not None else d for k, d in
                 zip(("k1", "k2", "k", "mass"), (0.3, 0.4, 1.2, 1.0)))
    phases = (p["rho"] if p.get("_rho_set") else 0.3, p["sigma"] if p.get("_sigma_set") else 1.1,
              p["mu"] if p.get("mu") is not None else -0.7, p["nu"] if p.get("nu") is not None else 2.0)
    a = p["a"] if p.get("_a_set") else 0.8
    return paper_check(mode, phases, a)


# --------------------------------------------------------------------- parser


def _add_mode(p, k=True, mass=True):
    p.add_argument("--k1", type=float)
    p.add_argument("--k2", type=float)
    if k:
        p.add_argument("--k", type=float)
    if mass:
        p.add_argument("--mass", type=float)


def _add_common(p):
    p.add_argument("--config", help="key = value file; flags override it")
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--format", choices=("json", "csv"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sqdirac", description=__doc__.splitlines()[0],
                                     argument_default=argparse.SUPPRESS)
    parser.add_argument("--paper-check", action="store_true",
                        help="run the printed-display comparison suite")
    _add_common(parser)
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("bases", help="generate solution sets", argument_default=argparse.SUPPRESS)
    _add_mode(p)
    p.add_argument("--rep", choices=REPRESENTATIONS)
    p.add_argument("--set", choices=SETS)
    p.add_argument("--gamma", type=float, help="seed phase of the squared set")
    p.add_argument("--verify", action="store_true")
    _add_common(p)

    for name, helptext in (("maps", "basis-change matrices"), ("majorana", "real and imaginary families")):
        p = sub.add_parser(name, help=helptext, argument_default=argparse.SUPPRESS)
        _add_mode(p)
        _add_common(p)

    q = sub.add_parser("quantize", help="boundary quantization", argument_default=argparse.SUPPRESS)
    qs = q.add_subparsers(dest="problem")
    for name in ("dirac", "weyl"):
        p = qs.add_parser(name, argument_default=argparse.SUPPRESS)
        _add_mode(p, k=False, mass=(name == "dirac"))
        p.add_argument("--a", type=float)
        p.add_argument("--rho", type=float)
        p.add_argument("--sigma", type=float)
        if name == "dirac":
            p.add_argument("--mu", type=float)
            p.add_argument("--nu", type=float)
            p.add_argument("--basis", choices=("planewave", "squared", "both"))
        p.add_argument("--kmax", type=float)
        p.add_argument("--grid", type=int, help="minimum number of grid intervals")
        p.add_argument("--preset", choices=("equal",), help="same phase on both plates")
        _add_common(p)

    p = sub.add_parser("covariant", help="boundary operator G", argument_default=argparse.SUPPRESS)
    p.add_argument("--rho", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--rep", choices=REPRESENTATIONS)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    _add_common(p)

    p = sub.add_parser("paper-check", help="printed-display comparison suite", argument_default=argparse.SUPPRESS)
    _add_mode(p)
    p.add_argument("--rho", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--mu", type=float)
    p.add_argument("--nu", type=float)
    p.add_argument("--a", type=float)
    _add_common(p)
    return parser


def _merge(ns: argparse.Namespace) -> RunConfig:
    flags = {k: v for k, v in vars(ns).items() if v is not None}
    file_vals = read_config_file(flags["config"]) if "config" in flags else {}
    params = dict(DEFAULTS)
    params.update(file_vals)
    params.update({k: v for k, v in flags.items() if k not in ("config", "command", "paper_check")})
    params["verify"] = bool(flags.get("verify") or file_vals.get("verify") in ("1", "true", "yes"))
    for key in ("rho", "sigma", "a"):
        params[f"_{key}_set"] = key in flags or key in file_vals
    command = "paper-check" if flags.get("paper_check") else flags.get("command")
    return RunConfig(command, params)


COMMANDS = {
    "bases": cmd_bases,
    "maps": cmd_maps,
    "majorana": cmd_majorana,
    "covariant": cmd_covariant,
    "paper-check": cmd_paper_check,
}


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    top_check = getattr(ns, "paper_check", False)
    command = getattr(ns, "command", None)
    if not top_check and command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    if command == "quantize" and not top_check and getattr(ns, "problem", None) is None:
        print("sqdirac: quantize needs 'dirac' or 'weyl'", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = _merge(ns)
        fmt, out = cfg["format"], cfg["out"]
        if cfg.command == "quantize":
            doc, spec = cmd_quantize(cfg)
            if not spec.roots:
                print("sqdirac: warning: empty spectrum", file=sys.stderr)
            text = spectrum_csv(spec) if fmt == "csv" else dumps_json(doc)
        else:
            if fmt == "csv":
                raise UsageError("--format csv is only available for quantize")
            text = dumps_json(COMMANDS[cfg.command](cfg))
    except (RootFindingError, ExpansionError, np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"sqdirac: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, CliffordError, ValueError) as exc:
        print(f"sqdirac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(text, out)
    except OSError as exc:
        print(f"sqdirac: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    sys.exit(run(argv))
