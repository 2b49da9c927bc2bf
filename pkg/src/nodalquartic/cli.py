"""Command-line entry point: ``nodalquartic <command> [flags]``.

Every command prints one RunReport JSON document on stdout.  Exit codes:
0 success, 1 unusable input or usage error, 2 the computation ran but
produced a verdict that no nodal quartic can have (dependent nodes, more
than 16 nodes, nonvanishing higher stalk cohomology in the nodal model,
a Kummer node candidate that fails certification).
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import CertificationFailureError, NodalQuarticError
from .icstalk import betti_nodal_quartic, load_family, nodal_stalk, stalk
from .kummer import SexticCurve, kummer_from_sextic
from .lattice import H2_RANK, load_config, nodal_model, sigma_splitting
from .nodal import SearchConfig, certify_point, dump_points, find_singular_numeric, load_points
from .qpoly import dump_poly, load_poly
from .severi import NodeSet, independence_test, severi_report

FORMAT_VERSION = 1
EXIT_OK, EXIT_INPUT, EXIT_VERDICT = 0, 1, 2

FILE_FORMATS = {
    "surface": '{"degree": d, "terms": [{"exp": [e0,e1,e2,e3], "num": "<int>", "den": "<positive int>"}]}',
    "nodes": '[{"coords": ["n0","n1","n2","n3"]}]  (integer strings)',
    "family": '{"dim": n, "operators": [[["<rational>", ...], ...], ...]}',
    "config": '{"dim": n, "gram": [[...rational strings...]], "sigmas": [[...]], "h": [...]}',
    "search": '{"seed_count": 200, "max_steps": 100, "tolerance": 1e-10, '
              '"cluster_radius": 1e-6, "max_height": 1000000, "seed": 0}',
}


class InputError(Exception):
    pass


def _digest(path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load(kind: str, loader, path):
    try:
        return loader(path)
    except FileNotFoundError as exc:
        raise InputError(f"--{kind}: no such file {path}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError, NodalQuarticError, ValueError, TypeError, KeyError) as exc:
        raise InputError(
            f"--{kind} {path}: {exc}\nexpected {kind} file format: {FILE_FORMATS[kind]}"
        ) from exc


def _certify_one(args):
    F, p = args
    return certify_point(F, p)


# -- commands ------------------------------------------------------------------


def cmd_certify(ns, files):
    F = _load("surface", load_poly, _need(ns, "surface"))
    pts = _load("nodes", load_points, _need(ns, "nodes"))
    files["surface"], files["nodes"] = _digest(ns.surface), _digest(ns.nodes)
    if ns.workers > 1:
        with ProcessPoolExecutor(ns.workers) as pool:
            reports = list(pool.map(_certify_one, [(F, p) for p in pts]))
    else:
        reports = [certify_point(F, p) for p in pts]
    return {"reports": [r.to_json_dict() for r in reports]}, EXIT_OK


def cmd_find_singular(ns, files):
    F = _load("surface", load_poly, _need(ns, "surface"))
    files["surface"] = _digest(ns.surface)
    cfg = SearchConfig(seed=ns.seed)
    if ns.search:
        data = _load("search", lambda p: json.loads(Path(p).read_text()), ns.search)
        cfg = _load("search", SearchConfig.from_json_dict, {"seed": ns.seed, **data})
        files["search"] = _digest(ns.search)
    cands = find_singular_numeric(F, cfg)
    return {
        "config": cfg.to_json_dict(),
        "candidates": [c.to_json_dict() for c in cands],
        "certified_nodes": [[str(x) for x in c.point.coords] for c in cands if c.report.is_node],
    }, EXIT_OK


def cmd_severi(ns, files):
    pts = _load("nodes", load_points, _need(ns, "nodes"))
    files["nodes"] = _digest(ns.nodes)
    try:
        nodes = NodeSet(tuple(pts))
    except NodalQuarticError as exc:
        raise InputError(f"--nodes {ns.nodes}: {exc}") from exc
    if ns.surface:
        F = _load("surface", load_poly, ns.surface)
        files["surface"] = _digest(ns.surface)
        try:
            rep = independence_test(F, nodes)
        except NodalQuarticError as exc:
            raise InputError(str(exc)) from exc
    else:
        rep = severi_report(nodes)
    return rep.to_json_dict(), EXIT_VERDICT if rep.violation else EXIT_OK


def cmd_stalk(ns, files):
    if (ns.delta is None) == (ns.family is None):
        raise InputError("stalk needs exactly one of --delta or --family")
    if ns.delta is not None:
        try:
            coh = nodal_stalk(ns.delta)
        except NodalQuarticError as exc:
            raise InputError(str(exc)) from exc
        payload = {"mode": "nodal", "delta": ns.delta, **coh.to_json_dict()}
        return payload, EXIT_OK if coh.higher_vanish else EXIT_VERDICT
    fam = _load("family", load_family, ns.family)
    files["family"] = _digest(ns.family)
    try:
        coh = stalk(fam)
    except NodalQuarticError as exc:
        raise InputError(str(exc)) from exc
    return {"mode": "family", "delta": fam.delta, **coh.to_json_dict()}, EXIT_OK


def cmd_betti(ns, files):
    if ns.delta is None:
        raise InputError("betti needs --delta")
    try:
        b = betti_nodal_quartic(ns.delta)
    except NodalQuarticError as exc:
        raise InputError(str(exc)) from exc
    return {"delta": ns.delta, "betti": list(b)}, EXIT_OK


def cmd_lattice(ns, files):
    if (ns.delta is None) == (ns.config is None):
        raise InputError("lattice needs exactly one of --delta or --config")
    if ns.delta is not None:
        try:
            cfg = nodal_model(ns.delta)
        except NodalQuarticError as exc:
            raise InputError(str(exc)) from exc
    else:
        cfg = _load("config", load_config, ns.config)
        files["config"] = _digest(ns.config)
    try:
        sigma, perp, prim = sigma_splitting(cfg)
    except (NodalQuarticError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    payload = {
        "delta": cfg.delta,
        "dim": cfg.space.dim,
        "sigma": sigma.dim,
        "sigma_perp": perp.dim,
        "sigma_perp_prim": prim.dim,
        "rank_check": 1 + prim.dim + sigma.dim == cfg.space.dim,
        "nodal_violations": cfg.nodal_violations(),
    }
    bad = ns.delta is not None and (
        (sigma.dim, perp.dim, prim.dim) != (ns.delta, H2_RANK - ns.delta, H2_RANK - 1 - ns.delta)
    )
    return payload, EXIT_VERDICT if bad else EXIT_OK


def cmd_kummer(ns, files):
    if not ns.roots:
        raise InputError("kummer needs --roots r1,...,r6")
    try:
        roots = [Fraction(r.strip()) for r in ns.roots.split(",")]
        curve = SexticCurve.from_roots(roots)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--roots {ns.roots}: {exc}") from exc
    try:
        out = kummer_from_sextic(curve)
    except CertificationFailureError as exc:
        return {"roots": [str(r) for r in roots], "failed_candidate": [str(x) for x in exc.point.coords]}, EXIT_VERDICT
    except NodalQuarticError as exc:
        raise InputError(str(exc)) from exc
    rep = independence_test(out.quartic, out.node_candidates)
    payload = {
        "roots": [str(r) for r in roots],
        "surface": out.quartic.to_json_dict(),
        "nodes": [p.to_json_dict() for p in out.node_candidates],
        "reports": [r.to_json_dict() for r in out.reports],
        "severi": rep.to_json_dict(),
    }
    if ns.out:
        d = Path(ns.out)
        d.mkdir(parents=True, exist_ok=True)
        dump_poly(out.quartic, d / "surface.json")
        dump_points(out.node_candidates, d / "nodes.json")
        (d / "severi.json").write_text(json.dumps(rep.to_json_dict(), indent=1, sort_keys=True) + "\n")
    return payload, EXIT_VERDICT if rep.violation else EXIT_OK


COMMANDS = {
    "certify": cmd_certify,
    "find-singular": cmd_find_singular,
    "severi": cmd_severi,
    "stalk": cmd_stalk,
    "betti": cmd_betti,
    "lattice": cmd_lattice,
    "kummer": cmd_kummer,
}


def _need(ns, name):
    v = getattr(ns, name)
    if v is None:
        raise InputError(f"{ns.command} needs --{name}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nodalquartic", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--surface")
        p.add_argument("--nodes")
        p.add_argument("--family")
        p.add_argument("--config")
        p.add_argument("--search")
        p.add_argument("--delta", type=int)
        p.add_argument("--roots")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out")
    return ap


def render(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    files: dict = {}
    t0 = time.perf_counter()
    try:
        payload, code = COMMANDS[ns.command](ns, files)
    except InputError as exc:
        print(f"nodalquartic {ns.command}: {exc}", file=stderr)
        return EXIT_INPUT
    params = {k: getattr(ns, k) for k in ("delta", "roots", "seed") if getattr(ns, k) is not None}
    report = {
        "command": ns.command,
        "inputs": {"files": files, "params": params},
        "outputs": payload,
        "versions": {"tool": __version__, "format": FORMAT_VERSION},
        "timing": {"wall_ms": round((time.perf_counter() - t0) * 1000.0, 3)},
    }
    text = render(report)
    stdout.write(text)
    if ns.out and ns.command != "kummer":
        Path(ns.out).write_text(text, encoding="utf-8")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
