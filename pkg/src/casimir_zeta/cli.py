"""Command line front end.

Angles are in radians.  Lengths are dimensionless, in units of the plate
separation ``a`` for parallel planes and of ``1/m`` for massive
configurations.  The environment variable ``CASIMIR_TRUNC_ORDER`` overrides
the series truncation order.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .errors import CasimirError, DomainViolation
from .kernels import WedgeGeometry
from .observables import (
    AngularWedge,
    CosmicString,
    HalfSpaceMassive,
    ParallelPlanes,
    RectWedgeMassive,
    pressure_parallel,
    pressure_perpendicular,
    pressure_wedge,
    reduced_energy_parallel,
    stress_halfspace_massive,
    stress_parallel,
    stress_rectwedge_massive,
    stress_wedge,
)
from .tensors import CARTESIAN, CYLINDRICAL, ConformalSplit, StressTensor, frame_transform

CONFIGS = ("parallel", "halfspace", "rectwedge", "wedge", "string")
_ENERGY_FORMULA = {"dd": "EnDDPP", "dn": "EnDN", "nn": "EnNN", "periodic": "EnP"}


# ---------------------------------------------------------------------------
# serialization


def _fmt(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        return "null"
    if x == 0.0:
        return "0.0"
    text = format(x, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(not isinstance(v, (list, tuple, dict, np.ndarray)) for v in obj):
            return "[" + ", ".join(dumps(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt(obj)
    return json.dumps(str(obj))


def _validated(t: StressTensor) -> StressTensor:
    if not t.is_symmetric():
        raise DomainViolation("refusing to emit a non-symmetric tensor")
    if np.any(t.components[0, 1:] != 0.0):
        raise DomainViolation("refusing to emit a tensor with non-zero T_0i")
    if t.frame not in (CARTESIAN, CYLINDRICAL):
        raise DomainViolation(f"unknown frame tag {t.frame!r}")
    return t


def split_to_dict(split: ConformalSplit, point: dict | None = None) -> dict:
    conf = _validated(split.conformal)
    nonconf = _validated(split.nonconformal)
    total = _validated(split.total)
    out = {
        "frame": split.frame,
        "metric": conf.metric,
        "xi": split.xi,
        "xi_d": split.xi_d,
        "conformal": conf.components.tolist(),
        "nonconformal": nonconf.components.tolist(),
        "total": total.components.tolist(),
        "paper_eq": split.paper_eq,
    }
    if point:
        out["point"] = point
    return out


def _pressure_dict(res) -> dict | None:
    if res is None:
        return None
    out = {
        "prescription": res.prescription,
        "frame": res.frame,
        "vector": res.vector.tolist(),
        "finite": res.finite,
    }
    if res.divergence_exponent is not None:
        out["divergence_exponent"] = res.divergence_exponent
    out.update(res.extra)
    return out


# ---------------------------------------------------------------------------
# run specification


@dataclass
class RunSpec:
    config: str
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    tolerance: float | None = None

    def build(self):
        """The validated configuration object."""
        p = self.params
        if self.config == "parallel":
            return ParallelPlanes(p.get("bc", "dd"), p.get("a", 1.0), p.get("d", 3))
        if self.config == "halfspace":
            return HalfSpaceMassive(p.get("alpha1", -1.0), p.get("m", 1.0), p.get("kappa", 1.0))
        if self.config == "rectwedge":
            return RectWedgeMassive(p.get("alpha1", -1.0), p.get("alpha2", -1.0),
                                    p.get("m", 1.0), p.get("kappa", 1.0))
        if self.config == "wedge":
            return AngularWedge(p.get("bc", "dd"), _need(p, "alpha"))
        if self.config == "string":
            return CosmicString(p.get("alpha", 2.0 * math.pi))
        raise DomainViolation(f"unknown configuration {self.config!r}")


def _need(p, name):
    if p.get(name) is None:
        raise DomainViolation(f"missing --{name.replace('_', '-')}")
    return p[name]


def evaluate_point(spec: RunSpec, cfg, point: dict, frame: str | None = None) -> ConformalSplit:
    xi = spec.params.get("xi", 0.0)
    if spec.config == "parallel":
        return stress_parallel(cfg, xi, _need(point, "x1"))
    if spec.config == "halfspace":
        return stress_halfspace_massive(cfg, xi, _need(point, "x1"))
    if spec.config == "rectwedge":
        return stress_rectwedge_massive(cfg, xi, _need(point, "x1"), _need(point, "x2"))
    geom = WedgeGeometry(cfg.alpha, _need(point, "rho"), _need(point, "theta"))
    split = stress_wedge(cfg, xi, geom)
    if frame == CARTESIAN:
        split = ConformalSplit(frame_transform(split.conformal, CARTESIAN),
                               frame_transform(split.nonconformal, CARTESIAN),
                               split.xi, split.xi_d, split.paper_eq)
    return split


def _point_names(config: str):
    if config in ("wedge", "string"):
        return ("rho", "theta")
    if config == "rectwedge":
        return ("x1", "x2")
    return ("x1",)


# ---------------------------------------------------------------------------
# commands


def cmd_eval(spec: RunSpec, frame: str | None = None) -> str:
    cfg = spec.build()
    point = {k: spec.params.get(k) for k in _point_names(spec.config)}
    split = evaluate_point(spec, cfg, point, frame)
    return dumps(split_to_dict(split, point))


def _axis(lo, hi, n, open_ends):
    if n < 1:
        raise DomainViolation("grid counts must be positive")
    if open_ends:
        return [lo + (hi - lo) * (i + 1) / (n + 1) for i in range(n)]
    if n == 1:
        return [lo]
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def grid_points(spec: RunSpec, cfg) -> list[dict]:
    """Grid nodes; ranges that touch a boundary are sampled on the open interval."""
    p = spec.params
    if spec.config == "parallel":
        lo, hi = p.get("x1_range") or (0.0, cfg.a)
        return [{"x1": x} for x in _axis(lo, hi, p.get("x1_count", 20), lo <= 0.0 or hi >= cfg.a)]
    if spec.config == "halfspace":
        lo, hi = p.get("x1_range") or (0.0, 3.0)
        return [{"x1": x} for x in _axis(lo, hi, p.get("x1_count", 20), lo <= 0.0)]
    if spec.config == "rectwedge":
        lo1, hi1 = p.get("x1_range") or (0.0, 3.0)
        lo2, hi2 = p.get("x2_range") or (0.0, 3.0)
        xs1 = _axis(lo1, hi1, p.get("x1_count", 20), lo1 <= 0.0)
        xs2 = _axis(lo2, hi2, p.get("x2_count", 20), lo2 <= 0.0)
        return [{"x1": a, "x2": b} for a in xs1 for b in xs2]
    lo, hi = p.get("rho_range") or (0.5, 2.0)
    tlo, thi = p.get("theta_range") or (0.0, cfg.alpha)
    rhos = _axis(lo, hi, p.get("rho_count", 20), lo <= 0.0)
    thetas = _axis(tlo, thi, p.get("theta_count", 20), tlo <= 0.0 or thi >= cfg.alpha)
    return [{"rho": r, "theta": t} for r in rhos for t in thetas]


def _labels(frame: str, n: int):
    if frame == CYLINDRICAL:
        return ("t", "rho", "th", "z")
    return tuple(str(i) for i in range(n))


def _row_for(args):
    spec, cfg, point = args
    split = evaluate_point(spec, cfg, point)
    for t in (split.conformal, split.nonconformal):
        _validated(t)
    return split


def cmd_grid(spec: RunSpec, workers: int = 1) -> str:
    cfg = spec.build()
    points = grid_points(spec, cfg)
    jobs = [(spec, cfg, pt) for pt in points]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            splits = list(pool.map(_row_for, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        splits = [_row_for(j) for j in jobs]
    coords = list(_point_names(spec.config))
    n = splits[0].conformal.dim
    lab = _labels(splits[0].frame, n)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    names = [f"T_{lab[i]}{lab[j]}" for i, j in pairs]
    header = (["row"] + coords + ["xi", "xi_d"] + names
              + [f"conf_{c}" for c in names] + [f"nonconf_{c}" for c in names] + ["paper_eq"])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for k, (pt, split) in enumerate(zip(points, splits)):
        blocks = [split.total, split.conformal, split.nonconformal]
        vals = [split.total[i, j] for i, j in pairs]
        vals += [blocks[1][i, j] for i, j in pairs] + [blocks[2][i, j] for i, j in pairs]
        w.writerow([k] + [_fmt(pt[c]) for c in coords] + [_fmt(split.xi), _fmt(split.xi_d)]
                   + [_fmt(v) for v in vals] + [split.paper_eq])
    return buf.getvalue()


def read_grid_csv(text: str) -> tuple[list[str], list[dict]]:
    """Parse CSV emitted by ``grid``; numeric fields become floats."""
    reader = csv.DictReader(io.StringIO(text))
    rows = []
    for rec in reader:
        row = {}
        for k, v in rec.items():
            if k == "paper_eq":
                row[k] = v
            elif k == "row":
                row[k] = int(v)
            else:
                row[k] = float(v)
        rows.append(row)
    return list(reader.fieldnames or []), rows


def check_grid_csv(spec: RunSpec, text: str, rtol: float = 1e-12) -> list[str]:
    """Recompute every row of a grid CSV; returns a list of mismatch messages."""
    cfg = spec.build()
    names, rows = read_grid_csv(text)
    coords = list(_point_names(spec.config))
    problems = []
    for row in rows:
        split = evaluate_point(RunSpec(spec.config, dict(spec.params, xi=row["xi"])), cfg,
                               {c: row[c] for c in coords})
        n = split.conformal.dim
        lab = _labels(split.frame, n)
        for i in range(n):
            for j in range(i, n):
                ref = split.total[i, j]
                got = row[f"T_{lab[i]}{lab[j]}"]
                if abs(got - ref) > rtol * max(abs(ref), 1e-300):
                    problems.append(f"row {row['row']} T_{lab[i]}{lab[j]}: {got!r} vs {ref!r}")
        if row.get("paper_eq") != split.paper_eq:
            problems.append(f"row {row['row']}: formula tag {row.get('paper_eq')!r}")
    return problems


def cmd_energy(spec: RunSpec) -> str:
    if spec.config != "parallel":
        raise DomainViolation("reduced energies are defined for parallel planes only")
    cfg = spec.build()
    e = reduced_energy_parallel(cfg)
    return dumps({
        "config": "parallel",
        "bc": cfg.bc.value,
        "a": cfg.a,
        "d": cfg.d,
        "energy": e,
        "paper_eq": _ENERGY_FORMULA.get(cfg.bc.value, "") if cfg.d == 3 else "",
    })


def cmd_pressure(spec: RunSpec) -> str:
    cfg = spec.build()
    p = spec.params
    xi = p.get("xi", 0.0)
    if spec.config == "parallel":
        face = p.get("face") or "pi0"
        first, second = pressure_parallel(cfg, xi, face)
    elif spec.config == "halfspace":
        face = "pi1"
        first, second = pressure_perpendicular(cfg, xi)
    elif spec.config == "rectwedge":
        face = "pi1"
        first, second = pressure_perpendicular(cfg, xi, _need(p, "x2"))
    else:
        face = p.get("face") or "pi_alpha"
        first, second = pressure_wedge(cfg, xi, _need(p, "rho"), face)
    return dumps({
        "config": spec.config,
        "face": face,
        "xi": xi,
        "boundary_first": _pressure_dict(first),
        "interior_limit": _pressure_dict(second),
    })


def cmd_verify(only=None, tolerance=None, as_json=False, out=None) -> int:
    from .verify import run_all, summary_line

    out = sys.stdout if out is None else out

    results = run_all(only, tolerance)
    ok = all(r.passed for rs in results.values() for r in rs)
    if as_json:
        out.write(dumps({
            "passed": ok,
            "criteria": {str(n): [r.to_dict() for r in rs] for n, rs in results.items()},
        }) + "\n")
    else:
        for n, rs in results.items():
            out.write(summary_line(n, rs) + "\n")
            for r in rs:
                if not r.passed:
                    kind = "abs" if r.absolute else "rel"
                    out.write(f"    FAIL {r.name}: engine={r.engine!r} reference={r.reference!r} "
                              f"{kind} error={r.error:.3e} tol={r.tol:.1e}\n")
        out.write(("all checks passed" if ok else "some checks FAILED") + "\n")
    return 0 if ok else 1


def _param_value(text: str):
    try:
        return float(text)
    except ValueError:
        return text


def cmd_oracle(key: str, params: list[str], list_keys: bool = False) -> str:
    from .reference import KEYS, reference_value

    if list_keys:
        return dumps({"keys": list(KEYS)})
    prm = {}
    for item in params:
        name, sep, val = item.partition("=")
        if not sep:
            raise DomainViolation(f"parameters are name=value, got {item!r}")
        prm[name.strip()] = _param_value(val.strip())
    val = reference_value(key, prm)
    if isinstance(val, StressTensor):
        body = {"frame": val.frame, "metric": val.metric, "components": val.components.tolist()}
    else:
        body = {"value": val}
    return dumps(dict({"key": key, "params": prm}, **body))


# ---------------------------------------------------------------------------
# argument parsing


def _add_config(p: argparse.ArgumentParser, point: bool = True):
    p.add_argument("--config", choices=CONFIGS, default="parallel")
    p.add_argument("--bc", "--mode", dest="bc", default="dd",
                   help="dd, dn, nn or periodic (parallel planes and wedges)")
    p.add_argument("--d", type=int, default=3, help="spatial dimension (odd, >= 3)")
    p.add_argument("--a", type=float, default=1.0, help="plate separation")
    p.add_argument("--m", type=float, default=1.0, help="field mass")
    p.add_argument("--kappa", type=float, default=1.0, help="renormalization scale")
    p.add_argument("--alpha1", type=float, default=-1.0, help="+1 Neumann, -1 Dirichlet on x1 = 0")
    p.add_argument("--alpha2", type=float, default=-1.0, help="+1 Neumann, -1 Dirichlet on x2 = 0")
    p.add_argument("--alpha", type=float, help="wedge opening angle (radians)")
    p.add_argument("--xi", type=float, default=0.0, help="curvature coupling")
    if point:
        p.add_argument("--x1", type=float)
        p.add_argument("--x2", type=float)
        p.add_argument("--rho", type=float)
        p.add_argument("--theta", type=float, help="polar angle (radians)")


def _spec_from(args) -> RunSpec:
    params = {k: v for k, v in vars(args).items() if k not in ("command", "func") and v is not None}
    return RunSpec(args.config, params, getattr(args, "format", "json"), getattr(args, "tolerance", None))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="casimir-zeta",
        description="Zeta-regularized vacuum stress tensors, energies and pressures. "
                    "Angles in radians; lengths in units of the plate separation a "
                    "(parallel planes) or of 1/m (massive planes).",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="stress tensor at one point (JSON)")
    _add_config(p)
    p.add_argument("--frame", choices=(CARTESIAN, CYLINDRICAL),
                   help="output frame for wedges (default cylindrical)")

    p = sub.add_parser("grid", help="stress tensor on a grid (CSV)")
    _add_config(p, point=False)
    for name in ("x1", "x2", "rho", "theta"):
        p.add_argument(f"--{name}-range", dest=f"{name}_range", type=float, nargs=2,
                       metavar=("LO", "HI"))
        p.add_argument(f"--{name}-count", dest=f"{name}_count", type=int)
    p.add_argument("--workers", type=int, default=1, help="worker processes")
    p.add_argument("--format", choices=("csv",), default="csv")

    p = sub.add_parser("energy", help="reduced energy of parallel planes (JSON)")
    _add_config(p, point=False)

    p = sub.add_parser("pressure", help="boundary pressure, both prescriptions (JSON)")
    _add_config(p)
    p.add_argument("--face", "--plate", dest="face",
                   help="pi0 or pia (planes), pi0 or pi_alpha (wedges)")

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", action="append", default=[],
                   help="criterion numbers or tags (plates, massive, wedge, cross, oracle, "
                        "properties); repeat or separate with commas")
    p.add_argument("--tolerance", type=float, help="replace every check tolerance")
    p.add_argument("--json", action="store_true", help="machine readable report")
    p.add_argument("--grid-csv", help="recompute the rows of a grid CSV instead; "
                                      "pass the grid's configuration flags too")
    _add_config(p, point=False)

    p = sub.add_parser("oracle", help="evaluate a closed-form reference entry")
    p.add_argument("key", nargs="?", default="", help="formula key, optionally key:part")
    p.add_argument("--param", action="append", default=[], help="name=value")
    p.add_argument("--list", action="store_true", help="list the available keys")
    return ap


def _error(exc: Exception) -> str:
    if isinstance(exc, CasimirError):
        return dumps(exc.to_dict())
    return dumps({"error": "invalid_input", "type": type(exc).__name__, "message": str(exc)})


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "eval":
            print(cmd_eval(_spec_from(args), args.frame))
        elif args.command == "grid":
            sys.stdout.write(cmd_grid(_spec_from(args), args.workers))
        elif args.command == "energy":
            print(cmd_energy(_spec_from(args)))
        elif args.command == "pressure":
            print(cmd_pressure(_spec_from(args)))
        elif args.command == "verify":
            if args.grid_csv:
                with open(args.grid_csv, encoding="utf-8") as fh:
                    problems = check_grid_csv(_spec_from(args), fh.read())
                for msg in problems:
                    print(f"FAIL {msg}")
                print("grid CSV reproduced" if not problems else f"{len(problems)} mismatches")
                return 1 if problems else 0
            only = [item for arg in args.only for item in arg.split(",") if item]
            return cmd_verify(only, args.tolerance, args.json)
        elif args.command == "oracle":
            print(cmd_oracle(args.key, args.param, args.list))
        return 0
    except (CasimirError, KeyError, ValueError, OSError) as exc:
        print(_error(exc))
        return 2


if __name__ == "__main__":
    sys.exit(main())
