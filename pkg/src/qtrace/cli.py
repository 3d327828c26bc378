"""Command-line entry point: ``qtrace <command> ...``.

Every command prints JSON on stdout.  Errors are printed as
``{"error": <type>, "message": <text>}`` with a nonzero exit status, and a
verification that fails exits with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import mutation as mut
from .balance import balance_certificate, is_balanced_via_H, is_mutable_balanced
from .network import enumerate_paths, paths_json
from .surface import (
    P4, TriSurface, build_lattice, build_polygon, triangulate_polygon,
)
from .torus import TorusElement
from .trace import _network, corner_arc_trace, polygon_arc


@dataclass
class RunConfig:
    command: str
    surface: str = "P4"
    tri: str = "lambda"
    diagonals: str | None = None
    n: int = 2
    arcs: list = field(default_factory=lambda: ["a", "b", "c"])
    i: int = 1
    j: int = 1
    json_out: str | None = None
    dot_out: str | None = None
    threads: int | None = None
    shuffle_seed: int | None = None
    plan: str | None = None
    input: str | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.threads is not None and self.threads < 1:
            raise ValueError("threads must be at least 1")


def load_surface(cfg: RunConfig) -> TriSurface:
    name = cfg.surface
    if Path(name).suffix == ".json" or Path(name).is_file():
        return TriSurface.from_json(json.loads(Path(name).read_text()))
    if not name.upper().startswith("P"):
        raise ValueError(f"unknown surface {name!r}")
    k = int(name[1:])
    if cfg.diagonals:
        diags = [tuple(int(x) for x in d.split("-")) for d in cfg.diagonals.split(",")]
    elif k == 4:
        return P4(cfg.tri)
    else:
        diags = [(0, b) for b in range(2, k - 1)]
    return triangulate_polygon(build_polygon(k), diags)


def _write(path, text):
    if path:
        Path(path).write_text(text)


def _emit(obj, cfg: RunConfig):
    text = json.dumps(obj, indent=2, default=str)
    _write(cfg.json_out, text + "\n")
    print(text)


def cmd_quiver(cfg: RunConfig) -> int:
    lat = build_lattice(load_surface(cfg), cfg.n)
    _write(cfg.dot_out, lat.seed.to_dot())
    _emit({"n": cfg.n, "vertex_count": len(lat), "seed": lat.seed.to_json(),
           "H": lat.H.tolist()}, cfg)
    return 0


def cmd_paths(cfg: RunConfig) -> int:
    lat = build_lattice(load_surface(cfg), cfg.n)
    arc = polygon_arc(lat, _arc_arg(cfg.arcs[0]), cfg.i, cfg.j)
    net, _ = _network(lat, arc)
    paths = enumerate_paths(net, cfg.i, cfg.j)
    _write(cfg.dot_out, net.to_dot())
    _emit({"arc": arc.name, "i": cfg.i, "j": cfg.j, "count": len(paths),
           "paths": paths_json(net, paths)}, cfg)
    return 0


def cmd_trace(cfg: RunConfig) -> int:
    lat = build_lattice(load_surface(cfg), cfg.n)
    arc = polygon_arc(lat, _arc_arg(cfg.arcs[0]), cfg.i, cfg.j)
    tr = corner_arc_trace(lat, arc)
    certs = []
    for t in tr.support():
        certs.append({"balanced": balance_certificate(t, lat).to_json(),
                      "via_H": is_balanced_via_H(t, lat),
                      "mutable_balanced": is_mutable_balanced(t, lat.seed, cfg.n)})
    _emit({"arc": arc.name, "i": cfg.i, "j": cfg.j, "element": tr.to_json(),
           "certificates": certs}, cfg)
    return 0


def cmd_verify_naturality(cfg: RunConfig) -> int:
    if cfg.surface.upper() != "P4":
        raise ValueError("naturality is verified on P4")
    rep = mut.verify_naturality(cfg.n, tuple(cfg.arcs), cfg.threads, cfg.shuffle_seed)
    _emit(rep.to_json(), cfg)
    return 0 if rep.verdict else 1


def cmd_verify_pentagon(cfg: RunConfig) -> int:
    rep = mut.verify_consistency("P5", cfg.n, cfg.threads)
    _emit(rep.to_json(), cfg)
    return 0 if rep.verdict else 1


def cmd_verify_consistency(cfg: RunConfig) -> int:
    rep = mut.verify_consistency(cfg.surface.upper(), cfg.n, cfg.threads, tuple(cfg.arcs))
    _emit(rep.to_json(), cfg)
    return 0 if rep.verdict else 1


def load_plan(data: dict) -> mut.FlipPlan:
    surf = TriSurface.from_json(data["surface"])
    lat = build_lattice(surf, int(data["n"]))
    stages = None
    if "stages" in data:
        stages = [[tuple(v) if isinstance(v, list) else v for v in s] for s in data["stages"]]
    return mut.FlipPlan(lat, data["edge"], stages=stages)


def cmd_theta(cfg: RunConfig) -> int:
    plan = load_plan(json.loads(Path(cfg.plan).read_text()))
    elem = TorusElement.from_json(plan.target.seed, json.loads(Path(cfg.input).read_text()))
    records: list = []
    out = mut.theta_apply(plan, plan.to_chain_end(elem), records)
    _emit({"element": out.to_json(), "steps": [r.to_json() for r in records]}, cfg)
    return 0


def _arc_arg(a: str):
    return int(a) if a.isdigit() else a


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtrace", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, arcs=True):
        sp.add_argument("--surface", default="P4", help="P<k> or a surface JSON file")
        sp.add_argument("--tri", default="lambda", choices=["lambda", "lambda'", "lambdap"])
        sp.add_argument("--diagonals", help="comma separated a-b pairs, e.g. 0-2,0-3")
        sp.add_argument("--n", type=int, default=2)
        sp.add_argument("--json", dest="json_out")
        if arcs:
            sp.add_argument("--arc", action="append", dest="arcs",
                            help="a, b, c, d or a corner index (repeatable)")

    q = sub.add_parser("quiver", help="build the lattice quiver")
    common(q, arcs=False)
    q.add_argument("--dot", dest="dot_out")

    for name in ("paths", "trace"):
        sp = sub.add_parser(name, help=f"corner-arc {name}")
        common(sp)
        sp.add_argument("--i", type=int, required=True)
        sp.add_argument("--j", type=int, required=True)
        if name == "paths":
            sp.add_argument("--dot", dest="dot_out")

    v = sub.add_parser("verify", help="run a verification")
    v.add_argument("what", choices=["naturality", "pentagon", "consistency"])
    common(v)
    v.add_argument("--threads", type=int)
    v.add_argument("--shuffle-seed", type=int)

    t = sub.add_parser("theta", help="apply a flip coordinate change to an element")
    t.add_argument("--plan", required=True)
    t.add_argument("--input", required=True)
    t.add_argument("--json", dest="json_out")
    return p


def config_from_args(ns) -> RunConfig:
    d = {k: v for k, v in vars(ns).items() if v is not None}
    command = d.pop("command")
    if command == "verify":
        command = f"verify-{d.pop('what')}"
    elif command in ("paths", "trace") and "arcs" not in d:
        d["arcs"] = ["a"]
    return RunConfig(command=command, **d)


COMMANDS = {
    "quiver": cmd_quiver,
    "paths": cmd_paths,
    "trace": cmd_trace,
    "verify-naturality": cmd_verify_naturality,
    "verify-pentagon": cmd_verify_pentagon,
    "verify-consistency": cmd_verify_consistency,
    "theta": cmd_theta,
}


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return run(config_from_args(ns))
    except Exception as exc:  # report every failure as a JSON error object
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
