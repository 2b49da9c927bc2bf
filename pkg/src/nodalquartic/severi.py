"""Independence of nodes with respect to quartic forms.

Nodes p_1..p_delta impose independent conditions on quartics exactly when
the delta x 35 matrix of degree-4 monomial values at the nodes has rank
delta.  The quartics through the nodes then form a space of dimension
35 - delta, and its projectivization, the tangent space of the locus of
delta-nodal quartics, has dimension 34 - delta.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import DuplicateNodeError, NotANodeError
from .nodal import ProjPointQ, certify_point
from .qpoly import HomogPoly, monomial_basis

QUARTIC_DIM = 35
MAX_NODES = 16


@dataclass(frozen=True)
class NodeSet:
    """Distinct projective points, optionally carrying their node reports."""

    nodes: tuple
    reports: tuple | None = None

    def __post_init__(self):
        pts = tuple(p if isinstance(p, ProjPointQ) else ProjPointQ(tuple(p)) for p in self.nodes)
        seen = set()
        for p in pts:
            if p in seen:
                raise DuplicateNodeError(f"node {p} listed twice")
            seen.add(p)
        object.__setattr__(self, "nodes", pts)

    @classmethod
    def certify(cls, F: HomogPoly, points: Iterable) -> "NodeSet":
        ns = cls(tuple(points))
        reports = []
        for p in ns.nodes:
            rep = certify_point(F, p)
            if not rep.is_node:
                raise NotANodeError(p, rep)
            reports.append(rep)
        return cls(ns.nodes, tuple(reports))

    @property
    def delta(self) -> int:
        return len(self.nodes)

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)


@dataclass(frozen=True)
class SeveriReport:
    delta: int
    eval_rank: int
    independent: bool
    ideal_dim: int
    severi_tangent_dim: int
    bound_ok: bool

    @classmethod
    def from_rank(cls, delta: int, eval_rank: int) -> "SeveriReport":
        return cls(
            delta=delta,
            eval_rank=eval_rank,
            independent=eval_rank == delta,
            ideal_dim=QUARTIC_DIM - eval_rank,
            severi_tangent_dim=QUARTIC_DIM - 1 - eval_rank,
            bound_ok=delta <= MAX_NODES,
        )

    @property
    def violation(self) -> bool:
        """True when the report contradicts what holds for any nodal quartic."""
        return not (self.independent and self.bound_ok)

    def to_json_dict(self) -> dict:
        return asdict(self)


def _as_nodeset(nodes) -> NodeSet:
    return nodes if isinstance(nodes, NodeSet) else NodeSet(tuple(nodes))


def evaluation_matrix(nodes: NodeSet | Sequence[ProjPointQ]) -> list[list[int]]:
    """Row per node, column per quartic monomial (graded-lex), integer entries."""
    ns = _as_nodeset(nodes)
    basis = monomial_basis(4)
    rows = []
    for p in ns.nodes:
        x = p.coords
        rows.append([x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2] * x[3] ** e[3] for e in basis])
    return rows


def severi_report(nodes: NodeSet | Sequence[ProjPointQ]) -> SeveriReport:
    """Rank bookkeeping only; the points are not checked to be nodes of anything."""
    ns = _as_nodeset(nodes)
    M = evaluation_matrix(ns)
    return SeveriReport.from_rank(ns.delta, linalg.rank(M) if M else 0)


def independence_test(F: HomogPoly, nodes: NodeSet | Sequence[ProjPointQ]) -> SeveriReport:
    """Re-certify every point as a node of F, then report the evaluation rank.

    Raises ``NotANodeError`` for the first point that is not an exact node.
    """
    ns = _as_nodeset(nodes)
    ns = NodeSet.certify(F, ns.nodes)
    return severi_report(ns)

