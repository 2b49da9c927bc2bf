"""Stalks of the intersection complex from local monodromy logarithms.

Given operators N_1..N_delta on a fibre R, the complex

    B^p = (+)_{i_1 < ... < i_p}  N_{i_1} ... N_{i_p} R

has differential sending the summand indexed by I minus i_r to the summand
indexed by I via (-1)^(r-1) N_{i_r}.  Its cohomology is the stalk cohomology
of the intersection complex at a normal-crossings point.  Summands are kept
as exact column bases, so families whose products drop rank are handled
correctly.  Nothing here is floating point.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .errors import DimensionMismatchError, NodalQuarticError, NotAComplexError, OutOfRangeError
from .lattice import H2_RANK, MAX_NODES, CycleConfiguration, nodal_model, pl_operators


@dataclass(frozen=True)
class OperatorFamily:
    ambient_dim: int
    operators: tuple
    label: str = ""

    def __post_init__(self):
        n = self.ambient_dim
        if n <= 0:
            raise DimensionMismatchError("ambient dimension must be positive")
        ops = []
        for k, N in enumerate(self.operators):
            if len(N) != n or any(len(row) != n for row in N):
                raise DimensionMismatchError(f"operator {k} is not {n}x{n}")
            ops.append(tuple(tuple(Fraction(x) for x in row) for row in N))
        object.__setattr__(self, "operators", tuple(ops))

    @property
    def delta(self) -> int:
        return len(self.operators)

    @cached_property
    def commuting(self) -> bool:
        ops = self.operators
        return all(
            linalg.matmul(ops[a], ops[b]) == linalg.matmul(ops[b], ops[a])
            for a in range(len(ops)) for b in range(a)
        )

    def to_json_dict(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "operators": [[[str(x) for x in row] for row in N] for N in self.operators],
            "label": self.label,
        }

    @classmethod
    def from_json_dict(cls, data) -> "OperatorFamily":
        try:
            ops = tuple(
                tuple(tuple(Fraction(str(x)) for x in row) for row in N) for N in data["operators"]
            )
            return cls(int(data["dim"]), ops, str(data.get("label", "")))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, NodalQuarticError):
                raise
            raise NodalQuarticError(f"malformed operator family: {exc}") from exc


def load_family(path) -> OperatorFamily:
    with open(path, encoding="utf-8") as fh:
        return OperatorFamily.from_json_dict(json.load(fh))


def family_from_config(config: CycleConfiguration, label: str = "") -> OperatorFamily:
    return OperatorFamily(config.space.dim, tuple(pl_operators(config)), label)


@dataclass
class BComplex:
    family: OperatorFamily
    # summands[p] maps an increasing index tuple to an ambient x k basis matrix
    summands: list
    differentials: list = field(default_factory=list)

    @property
    def delta(self) -> int:
        return self.family.delta

    @property
    def top(self) -> int:
        """Largest degree with a nonzero summand; higher degrees vanish identically."""
        return len(self.summands) - 1

    def summand_dim(self, p: int, index: tuple) -> int:
        B = self.summands[p][index]
        return len(B[0]) if B else 0

    def dims(self) -> list[int]:
        out = []
        for p in range(self.delta + 1):
            if p < len(self.summands):
                out.append(sum(self.summand_dim(p, I) for I in self.summands[p]))
            else:
                out.append(0)
        return out

    def offsets(self, p: int) -> dict:
        off, pos = {}, 0
        for I in self.summands[p]:
            off[I] = pos
            pos += self.summand_dim(p, I)
        return off

    @property
    def euler(self) -> int:
        return sum((-1) ** p * d for p, d in enumerate(self.dims()))


def _product_summands(family: OperatorFamily) -> list[dict]:
    n, ops = family.ambient_dim, family.operators
    summands = [{(): linalg.identity(n)}]
    for p in range(1, family.delta + 1):
        level = {}
        nonzero = False
        for I in combinations(range(family.delta), p):
            tail = summands[p - 1][I[1:]]
            if tail and tail[0]:
                B = linalg.column_basis(linalg.matmul(ops[I[0]], tail))
            else:
                B = [[] for _ in range(n)]
            nonzero = nonzero or bool(B and B[0])
            level[I] = B
        if not nonzero:
            break
        summands.append(level)
    return summands


def build_bcomplex(family: OperatorFamily) -> BComplex:
    """Assemble the summand bases and the signed differentials, checking d o d = 0.

    Commuting families always give a complex.  Anything else is rejected with
    ``NotAComplexError``: on the summand of a pair (a, b), d^1 d^0 is
    +-(N_a N_b - N_b N_a), so no non-commuting family survives the checks.
    """
    n, ops = family.ambient_dim, family.operators
    b = BComplex(family, _product_summands(family))
    dims = b.dims()
    inverses = {}
    for p in range(b.top + 1):
        src = b.summands[p]
        src_off = b.offsets(p)
        q = p + 1
        if q > family.delta:
            break
        tgt = b.summands[q] if q <= b.top else None
        tgt_off = b.offsets(q) if tgt is not None else {}
        D = linalg.zeros(dims[q], dims[p])
        for I in combinations(range(family.delta), q):
            TB = tgt[I] if tgt is not None else [[] for _ in range(n)]
            k_t = len(TB[0]) if TB else 0
            if k_t and (q, I) not in inverses:
                inverses[q, I] = linalg.left_inverse(TB)
            for r, i in enumerate(I):
                J = I[:r] + I[r + 1:]
                SB = src[J]
                if not (SB and SB[0]):
                    continue
                image = linalg.matmul(ops[i], SB)
                try:
                    X = linalg.coordinates(TB, image, inverses.get((q, I)))
                except ValueError:
                    raise NotAComplexError(
                        f"N_{i} maps summand {J} outside summand {I}; "
                        "the family does not commute on these images"
                    ) from None
                if not k_t:
                    continue
                sign = 1 if r % 2 == 0 else -1
                r0, c0 = tgt_off[I], src_off[J]
                for a, row in enumerate(X):
                    for c, x in enumerate(row):
                        D[r0 + a][c0 + c] = sign * x
        b.differentials.append(D)
    for p in range(len(b.differentials) - 1):
        d0, d1 = b.differentials[p], b.differentials[p + 1]
        if d0 and d1 and d1[0] and not linalg.is_zero(linalg.matmul(d1, d0)):
            pairs = [(a, c) for a in range(len(ops)) for c in range(a + 1, len(ops))
                     if linalg.matmul(ops[a], ops[c]) != linalg.matmul(ops[c], ops[a])]
            raise NotAComplexError(f"d^{p + 1} o d^{p} != 0; non-commuting pairs {pairs}")
    return b


@dataclass(frozen=True)
class StalkCohomology:
    dims: tuple
    euler: int
    commuting: bool = True

    def to_json_dict(self) -> dict:
        return {"dims": list(self.dims), "euler": self.euler, "commuting": self.commuting}

    @property
    def higher_vanish(self) -> bool:
        return all(d == 0 for d in self.dims[1:])


def _rank(M) -> int:
    return linalg.rank(M) if M and M[0] else 0


def cohomology(b: BComplex) -> StalkCohomology:
    dims = b.dims()
    ranks = [_rank(D) for D in b.differentials]
    ranks += [0] * (len(dims) - len(ranks))
    h = [dims[p] - ranks[p] - (ranks[p - 1] if p else 0) for p in range(len(dims))]
    euler = b.euler
    if sum((-1) ** p * x for p, x in enumerate(h)) != euler:
        raise RuntimeError("Euler characteristic mismatch between complex and cohomology")
    return StalkCohomology(tuple(h), euler, b.family.commuting)


def stalk(family: OperatorFamily) -> StalkCohomology:
    return cohomology(build_bcomplex(family))


def invariant_kernel(family: OperatorFamily) -> list[list[Fraction]]:
    """Basis of the common kernel of all N_rho (the expected H^0)."""
    rows = [list(row) for N in family.operators for row in N]
    return linalg.nullspace(rows, family.ambient_dim)


def two_term_prediction(family: OperatorFamily) -> tuple[int, int]:
    """(H^0, H^1) of R -> (+) N_rho R, valid when all pairwise products vanish."""
    n = family.ambient_dim
    stacked = [list(row) for N in family.operators for row in N]
    r = _rank(stacked)
    return n - r, sum(_rank(N) for N in family.operators) - r


def nodal_family(delta: int) -> OperatorFamily:
    return family_from_config(nodal_model(delta), label=f"nodal delta={delta}")


def nodal_stalk(delta: int) -> StalkCohomology:
    """Stalk cohomology for the nodal model with delta vanishing cycles.

    The B-complex result is cross-checked against the two-term sequence
    0 -> H^0 -> R -> (+) N_rho R -> H^1 -> 0.
    """
    family = nodal_family(delta)
    coh = stalk(family)
    h0, h1 = two_term_prediction(family)
    if coh.dims[0] != h0 or (delta and coh.dims[1] != h1) or any(coh.dims[2:]):
        raise RuntimeError(f"B-complex {coh.dims} disagrees with the two-term sequence ({h0}, {h1})")
    return coh


def betti_nodal_quartic(delta: int) -> tuple[int, int, int, int, int]:
    """Betti numbers b0..b4 of a quartic surface with delta nodes."""
    if not 0 <= delta <= MAX_NODES:
        raise OutOfRangeError(f"delta must lie in 0..{MAX_NODES}, got {delta}")
    return (1, 0, H2_RANK - delta, 0, 1)
