"""Committed JSON fixtures and the command that regenerates them.

    python -m nodalquartic.fixtures [target-dir]

rewrites every file under ``nodalquartic/data`` (or ``target-dir``).
"""
from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

from .kummer import SexticCurve, fermat_quartic, kummer_from_sextic, one_node_example
from .nodal import ProjPointQ, dump_points, load_points
from .qpoly import dump_poly, load_poly
from .severi import independence_test

KUMMER_ROOTS = (0, 1, 2, 3, 4, 5)


def data_dir() -> Path:
    return Path(str(resources.files("nodalquartic") / "data"))


def path(name: str) -> Path:
    return data_dir() / name


def load_surface(name: str):
    return load_poly(path(name) / "surface.json")


def load_nodes(name: str):
    return load_points(path(name) / "nodes.json")


def guard_points() -> list[ProjPointQ]:
    """Seventeen distinct points in general enough position (evaluation rank 17).

    No quartic has seventeen nodes, so these only exercise the bound guard.
    """
    return [ProjPointQ((1, i, (i * i) % 7 - 3, (i**3) % 11 - 5)) for i in range(17)]


def regenerate(target: Path | None = None) -> None:
    root = Path(target) if target else data_dir()

    out = kummer_from_sextic(SexticCurve.from_roots(KUMMER_ROOTS))
    d = root / "kummer_012345"
    d.mkdir(parents=True, exist_ok=True)
    dump_poly(out.quartic, d / "surface.json")
    dump_points(out.node_candidates, d / "nodes.json")
    rep = independence_test(out.quartic, out.node_candidates)
    (d / "severi.json").write_text(json.dumps(rep.to_json_dict(), indent=1, sort_keys=True) + "\n")

    F, p = one_node_example()
    d = root / "one_node"
    d.mkdir(parents=True, exist_ok=True)
    dump_poly(F, d / "surface.json")
    dump_points([p], d / "nodes.json")

    d = root / "fermat"
    d.mkdir(parents=True, exist_ok=True)
    dump_poly(fermat_quartic(), d / "surface.json")
    dump_points([], d / "nodes.json")

    d = root / "guard17"
    d.mkdir(parents=True, exist_ok=True)
    dump_points(guard_points(), d / "nodes.json")


if __name__ == "__main__":
    regenerate(Path(sys.argv[1]) if len(sys.argv) > 1 else None)
