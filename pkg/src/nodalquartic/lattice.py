"""Rational quadratic-space model of the degree-2 cohomology of a nearby smooth quartic.

The nodal model of a delta-nodal quartic is Q^22 with Gram matrix
diag(-2 I_delta, 4, I_{21-delta}): the first delta basis vectors are the
vanishing cycles (self-pairing -2, pairwise orthogonal), the next one is the
polarization h with h.h = 4 and h orthogonal to every vanishing cycle.  The
remaining identity block is a stand-in for the rest of the K3 lattice; only
pairings among the vanishing cycles and h enter any rank computed here, so
any nondegenerate completion, the genuine K3 Gram matrix included, gives
the same answers.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DegeneratePairingError, DimensionMismatchError, NodalQuarticError, OutOfRangeError

H2_RANK = 22
MAX_NODES = 16


def _frac(x) -> Fraction:
    return Fraction(x) if not isinstance(x, str) else Fraction(x.strip())


@dataclass(frozen=True)
class QuadraticSpace:
    dim: int
    gram: tuple

    def __post_init__(self):
        G = tuple(tuple(_frac(x) for x in row) for row in self.gram)
        if self.dim <= 0:
            raise ValueError("dimension must be positive")
        if len(G) != self.dim or any(len(row) != self.dim for row in G):
            raise DimensionMismatchError(f"gram matrix is not {self.dim}x{self.dim}")
        if any(G[i][j] != G[j][i] for i in range(self.dim) for j in range(i)):
            raise ValueError("gram matrix is not symmetric")
        if linalg.det(G) == 0:
            raise DegeneratePairingError("gram matrix is degenerate")
        object.__setattr__(self, "gram", G)

    def pair(self, u: Sequence, v: Sequence) -> Fraction:
        G = self.gram
        return sum((Fraction(u[i]) * G[i][j] * Fraction(v[j])
                    for i in range(self.dim) if u[i] for j in range(self.dim) if G[i][j]), Fraction(0))

    def lower(self, v: Sequence) -> list[Fraction]:
        """G v, the linear form <., v> as a row vector."""
        return linalg.matvec(self.gram, v)


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple

    def __post_init__(self):
        B = tuple(tuple(Fraction(x) for x in v) for v in self.basis)
        if any(len(v) != self.ambient_dim for v in B):
            raise DimensionMismatchError("basis vectors have the wrong length")
        if B and linalg.rank(B) != len(B):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", B)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls(ambient_dim, ())
        cols = linalg.column_basis(linalg.vectors_to_columns(vecs, ambient_dim))
        return cls(ambient_dim, tuple(zip(*cols)) if cols and cols[0] else ())

    def contains(self, v: Sequence) -> bool:
        if not self.basis:
            return all(x == 0 for x in v)
        return linalg.rank(list(self.basis) + [list(v)]) == self.dim

    def same_as(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        return all(self.contains(v) for v in other.basis)


@dataclass(frozen=True)
class CycleConfiguration:
    space: QuadraticSpace
    sigmas: tuple
    polarization: tuple | None = None

    def __post_init__(self):
        n = self.space.dim
        sig = tuple(tuple(_frac(x) for x in s) for s in self.sigmas)
        if any(len(s) != n for s in sig):
            raise DimensionMismatchError("vanishing cycle of the wrong length")
        object.__setattr__(self, "sigmas", sig)
        if self.polarization is not None:
            h = tuple(_frac(x) for x in self.polarization)
            if len(h) != n:
                raise DimensionMismatchError("polarization of the wrong length")
            object.__setattr__(self, "polarization", h)

    @property
    def delta(self) -> int:
        return len(self.sigmas)

    def nodal_violations(self) -> list[str]:
        """Pairing conventions of the nodal model that this configuration breaks."""
        out = []
        S, h = self.sigmas, self.polarization
        pair = self.space.pair
        for a in range(len(S)):
            if pair(S[a], S[a]) != -2:
                out.append(f"<sigma_{a}, sigma_{a}> != -2")
            for b in range(a):
                if pair(S[a], S[b]) != 0:
                    out.append(f"<sigma_{a}, sigma_{b}> != 0")
            if h is not None and pair(h, S[a]) != 0:
                out.append(f"<h, sigma_{a}> != 0")
        if h is not None and pair(h, h) != 4:
            out.append("<h, h> != 4")
        return out

    def to_json_dict(self) -> dict:
        return {
            "dim": self.space.dim,
            "gram": [[str(x) for x in row] for row in self.space.gram],
            "sigmas": [[str(x) for x in s] for s in self.sigmas],
            "h": None if self.polarization is None else [str(x) for x in self.polarization],
        }

    @classmethod
    def from_json_dict(cls, data) -> "CycleConfiguration":
        try:
            space = QuadraticSpace(int(data["dim"]), tuple(tuple(row) for row in data["gram"]))
            h = data.get("h")
            return cls(space, tuple(tuple(s) for s in data.get("sigmas", [])),
                       None if h is None else tuple(h))
        except (KeyError, TypeError, ZeroDivisionError) as exc:
            raise NodalQuarticError(f"malformed configuration document: {exc}") from exc
        except ValueError as exc:
            if isinstance(exc, NodalQuarticError):
                raise
            raise NodalQuarticError(f"malformed configuration document: {exc}") from exc


def load_config(path) -> CycleConfiguration:
    with open(path, encoding="utf-8") as fh:
        return CycleConfiguration.from_json_dict(json.load(fh))


def nodal_model(delta: int) -> CycleConfiguration:
    if not 0 <= delta <= MAX_NODES:
        raise OutOfRangeError(f"delta must lie in 0..{MAX_NODES}, got {delta}")
    n = H2_RANK
    diag = [-2] * delta + [4] + [1] * (n - delta - 1)
    gram = tuple(tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n))

    def e(i):
        return tuple(int(i == j) for j in range(n))

    return CycleConfiguration(QuadraticSpace(n, gram), tuple(e(i) for i in range(delta)), e(delta))


def pl_operator(config: CycleConfiguration, rho: int) -> list[list[Fraction]]:
    """Matrix of psi -> <psi, sigma_rho> sigma_rho."""
    if not 0 <= rho < config.delta:
        raise IndexError(f"no vanishing cycle with index {rho}")
    s = config.sigmas[rho]
    g = config.space.lower(s)
    return [[si * gj for gj in g] for si in s]


def pl_operators(config: CycleConfiguration) -> list[list[list[Fraction]]]:
    return [pl_operator(config, r) for r in range(config.delta)]


def orthogonal_complement(space: QuadraticSpace, vectors: Sequence[Sequence]) -> Subspace:
    rows = [space.lower(v) for v in vectors]
    return Subspace(space.dim, tuple(tuple(v) for v in linalg.nullspace(rows, space.dim)))


def sigma_splitting(config: CycleConfiguration) -> tuple[Subspace, Subspace, Subspace]:
    """(Sigma, Sigma-perp, primitive part of Sigma-perp) for the configuration.

    Sigma is the span of the vanishing cycles, Sigma-perp its orthogonal
    complement for the Gram form, and the primitive part is the orthogonal
    complement of h inside Sigma-perp.
    """
    if config.polarization is None:
        raise ValueError("the splitting needs the polarization h")
    space = config.space
    sigma = Subspace.span(space.dim, config.sigmas)
    if sigma.dim:
        restricted = [[space.pair(u, v) for v in sigma.basis] for u in sigma.basis]
        if linalg.det(restricted) == 0:
            raise DegeneratePairingError("the form restricted to Sigma is degenerate")
    perp = orthogonal_complement(space, sigma.basis)
    prim = orthogonal_complement(space, list(sigma.basis) + [config.polarization])
    return sigma, perp, prim


def splitting_dims(config: CycleConfiguration) -> tuple[int, int, int]:
    return tuple(s.dim for s in sigma_splitting(config))
