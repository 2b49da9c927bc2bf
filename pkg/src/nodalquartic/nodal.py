"""Certification of singular points of quartic surfaces.

A point p of S = {F = 0} is a node when F(p) = 0, the gradient of F
vanishes at p, and the 4x4 Hessian of F at p has rank exactly 3.  Every
verdict from :func:`certify_point` is exact.  :func:`find_singular_numeric`
is a floating-point search whose hits are rounded to rationals and then
re-certified, so a numerical artefact can never be reported as a node.
"""
from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np

from . import linalg
from .errors import NodalQuarticError, ZeroPolynomialError
from .qpoly import NVARS, HomogPoly, evaluate, gradient, hessian


class Classification(str, enum.Enum):
    SMOOTH = "Smooth"
    NODE = "Node"
    NON_NODE_SINGULAR = "NonNodeSingular"
    NOT_ON_SURFACE = "NotOnSurface"


class Mode(str, enum.Enum):
    EXACT = "Exact"
    NUMERICAL = "Numerical"


@dataclass(frozen=True, order=True)
class ProjPointQ:
    """A rational point of P^3 stored as its primitive integer representative.

    Any nonzero rational quadruple is accepted; it is rescaled so that the
    entries are coprime integers whose first nonzero entry is positive.
    """

    coords: tuple

    def __post_init__(self):
        c = [Fraction(x) for x in self.coords]
        if len(c) != NVARS:
            raise ValueError("projective points of P^3 have four coordinates")
        if all(x == 0 for x in c):
            raise ValueError("the zero vector is not a projective point")
        scale = lcm(*(x.denominator for x in c))
        ints = [int(x * scale) for x in c]
        g = reduce(gcd, ints)
        ints = [x // g for x in ints]
        if next(x for x in ints if x != 0) < 0:
            ints = [-x for x in ints]
        object.__setattr__(self, "coords", tuple(ints))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return NVARS

    def __str__(self):
        return "(" + ":".join(str(x) for x in self.coords) + ")"

    def transform(self, M: Sequence[Sequence]) -> "ProjPointQ":
        return ProjPointQ(tuple(linalg.matvec(M, self.coords)))

    def to_json_dict(self) -> dict:
        return {"coords": [str(x) for x in self.coords]}

    @classmethod
    def from_json_dict(cls, data) -> "ProjPointQ":
        try:
            return cls(tuple(int(x) for x in data["coords"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise NodalQuarticError(f"malformed point entry {data!r}: {exc}") from exc


def load_points(path) -> list[ProjPointQ]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise NodalQuarticError("a points file holds a JSON list")
    return [ProjPointQ.from_json_dict(d) for d in data]


def dump_points(points: Sequence[ProjPointQ], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([p.to_json_dict() for p in points], fh, indent=1)
        fh.write("\n")


@dataclass(frozen=True)
class SingularPointReport:
    point: ProjPointQ
    on_surface: bool
    gradient_vanishes: bool
    hessian_rank: int
    classification: Classification
    mode: Mode = Mode.EXACT

    @property
    def is_node(self) -> bool:
        return self.mode is Mode.EXACT and self.classification is Classification.NODE

    def to_json_dict(self) -> dict:
        return {
            "point": [str(x) for x in self.point.coords],
            "on_surface": self.on_surface,
            "gradient_vanishes": self.gradient_vanishes,
            "hessian_rank": self.hessian_rank,
            "classification": self.classification.value,
            "mode": self.mode.value,
        }


@lru_cache(maxsize=64)
def _derivatives(F: HomogPoly):
    return gradient(F), hessian(F)


def classify(on_surface: bool, gradient_vanishes: bool, hessian_rank: int) -> Classification:
    if not on_surface:
        return Classification.NOT_ON_SURFACE
    if not gradient_vanishes:
        return Classification.SMOOTH
    if hessian_rank == 3:
        return Classification.NODE
    return Classification.NON_NODE_SINGULAR


def hessian_at(F: HomogPoly, p: Sequence) -> list[list[Fraction]]:
    _, H = _derivatives(F)
    return [[evaluate(h, p) for h in row] for row in H]


def certify_point(F: HomogPoly, p: ProjPointQ) -> SingularPointReport:
    """Exact node test at p; see the module docstring for the criterion."""
    if F.is_zero():
        raise ZeroPolynomialError("cannot certify points of the zero polynomial")
    if F.degree < 2:
        raise ValueError("node certification needs a surface of degree >= 2")
    if not isinstance(p, ProjPointQ):
        p = ProjPointQ(tuple(p))
    grad, _ = _derivatives(F)
    x = p.coords
    on_surface = evaluate(F, x) == 0
    grad_zero = all(evaluate(g, x) == 0 for g in grad)
    r = linalg.rank(hessian_at(F, x))
    return SingularPointReport(p, on_surface, grad_zero, r, classify(on_surface, grad_zero, r))


# -- numerical search ------------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    seed_count: int = 200
    max_steps: int = 100
    tolerance: float = 1e-10
    cluster_radius: float = 1e-6
    max_height: int = 10**6
    seed: int = 0

    @classmethod
    def from_json_dict(cls, data) -> "SearchConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise NodalQuarticError(f"unknown SearchConfig fields: {sorted(extra)}")
        return cls(**data)

    def to_json_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Candidate:
    """One clustered Newton solution and its exact re-certification."""

    point: ProjPointQ
    report: SingularPointReport
    approx: tuple
    residual_value: float
    residual_gradient: float
    cluster_size: int = field(default=1, compare=False)

    def to_json_dict(self) -> dict:
        return {
            "report": self.report.to_json_dict(),
            "approx": [float(x) for x in self.approx],
            "residual_value": float(self.residual_value),
            "residual_gradient": float(self.residual_gradient),
            "cluster_size": self.cluster_size,
        }


class _NumericPoly:
    def __init__(self, F: HomogPoly, scale: float):
        items = list(F.items())
        self.exps = np.array([e for e, _ in items], dtype=np.int64).reshape(-1, NVARS)
        self.coeffs = np.array([float(c) / scale for _, c in items])

    def __call__(self, X: np.ndarray) -> np.ndarray:
        if self.exps.shape[0] == 0:
            return np.zeros(X.shape[0])
        mons = np.prod(X[:, None, :] ** self.exps[None, :, :], axis=2)
        return mons @ self.coeffs


def _numeric_system(F: HomogPoly):
    scale = float(max(abs(c) for _, c in F.items()))
    grad, H = _derivatives(F)
    f = _NumericPoly(F, scale)
    g = [_NumericPoly(gi, scale) for gi in grad]
    h = [[_NumericPoly(H[i][j], scale) for j in range(NVARS)] for i in range(NVARS)]
    return f, g, h


def _newton_chart(g, h, chart: int, seeds: np.ndarray, cfg: SearchConfig) -> np.ndarray:
    """Gauss-Newton on grad F = 0 in the affine chart x_chart = 1.

    Returns the homogeneous coordinates of the seeds that converged.
    """
    free = [j for j in range(NVARS) if j != chart]
    X = np.empty((seeds.shape[0], NVARS))
    X[:, chart] = 1.0
    X[:, free] = seeds
    alive = np.ones(X.shape[0], dtype=bool)
    done = np.zeros(X.shape[0], dtype=bool)
    res = np.full(X.shape[0], np.inf)
    for _ in range(cfg.max_steps):
        act = alive & ~done
        if not act.any():
            break
        idx = np.flatnonzero(act)
        Y = X[act]
        G = np.stack([gi(Y) for gi in g], axis=1)
        J = np.stack([np.stack([h[i][j](Y) for j in free], axis=1) for i in range(NVARS)], axis=1)
        step = -np.einsum("sij,sj->si", np.linalg.pinv(J), G)
        Y[:, free] += step
        X[act] = Y
        r = np.linalg.norm(np.stack([gi(Y) for gi in g], axis=1), axis=1)
        res[idx] = r
        stalled = np.linalg.norm(step, axis=1) < cfg.tolerance * 1e-3
        # degenerate (non-isolated) solutions converge only linearly, so keep
        # stepping until the update itself is negligible
        done[idx[stalled & (r < cfg.tolerance)]] = True
        blown = ~np.isfinite(Y).all(axis=1) | (np.abs(Y).max(axis=1) > 1e6)
        alive[idx[blown | (stalled & (r >= cfg.tolerance))]] = False
    ok = alive & (res < cfg.tolerance)
    return X[ok]


def _rationalize(v: np.ndarray, max_height: int) -> ProjPointQ | None:
    k = int(np.argmax(np.abs(v)))
    u = v / v[k]
    coords = [Fraction(float(x)).limit_denominator(max_height) for x in u]
    coords[k] = Fraction(1)
    try:
        return ProjPointQ(tuple(coords))
    except ValueError:
        return None


def find_singular_numeric(
    F: HomogPoly, search: SearchConfig | None = None, rng: np.random.Generator | None = None
) -> list[Candidate]:
    """Best-effort numerical search for real singular points of a quartic.

    Newton runs in each of the four affine charts from ``search.seed_count``
    random seeds in [-1, 1]^3 (every real point lies in a chart where its
    other coordinates are bounded by 1).  Converged solutions are clustered
    projectively, rounded by continued fractions with denominators at most
    ``search.max_height`` and re-certified exactly.  A candidate whose
    rounding is not an exact singular point keeps ``mode = Numerical``.
    """
    cfg = search or SearchConfig()
    if F.degree != 4:
        raise ValueError("the singular point search is for quartic surfaces")
    if F.is_zero():
        raise ZeroPolynomialError("cannot search the zero polynomial")
    rng = rng if rng is not None else np.random.default_rng(cfg.seed)
    f, g, h = _numeric_system(F)

    sols = []
    for chart in range(NVARS):
        seeds = rng.uniform(-1.0, 1.0, size=(cfg.seed_count, NVARS - 1))
        sols.append(_newton_chart(g, h, chart, seeds, cfg))
    P = np.concatenate(sols, axis=0) if sols else np.empty((0, NVARS))
    if P.shape[0] == 0:
        return []

    P = P / np.linalg.norm(P, axis=1)[:, None]
    lead = np.argmax(np.abs(P), axis=1)
    P *= np.sign(P[np.arange(P.shape[0]), lead])[:, None]

    reps: list[np.ndarray] = []
    sizes: list[int] = []
    for v in P:
        for i, r in enumerate(reps):
            if min(np.linalg.norm(v - r), np.linalg.norm(v + r)) < cfg.cluster_radius:
                sizes[i] += 1
                break
        else:
            reps.append(v)
            sizes.append(1)

    out: dict[ProjPointQ, Candidate] = {}
    for v, n in zip(reps, sizes):
        q = _rationalize(v, cfg.max_height)
        if q is None:
            continue
        rep = certify_point(F, q)
        if not (rep.on_surface and rep.gradient_vanishes):
            rep = SingularPointReport(
                rep.point, rep.on_surface, rep.gradient_vanishes, rep.hessian_rank,
                rep.classification, Mode.NUMERICAL,
            )
        V = v[None, :]
        cand = Candidate(
            q, rep, tuple(float(x) for x in v),
            float(abs(f(V)[0])),
            float(np.linalg.norm([gi(V)[0] for gi in g])),
            n,
        )
        if q in out:
            prev = out[q]
            cand = Candidate(prev.point, prev.report, prev.approx, prev.residual_value,
                             prev.residual_gradient, prev.cluster_size + n)
        out[q] = cand
    return [out[q] for q in sorted(out)]


def certified_nodes(candidates: Sequence[Candidate]) -> list[ProjPointQ]:
    return [c.point for c in candidates if c.report.is_node]
