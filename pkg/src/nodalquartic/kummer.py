"""Kummer quartic fixtures with sixteen rational nodes.

For the genus-2 curve y^2 = f(x) = f0 + f1 x + ... + f6 x^6 the Kummer
surface of its Jacobian is the quartic

    K(k1, k2, k3, k4) = K2 k4^2 + K1 k4 + K0

in the Cassels-Flynn coordinates.  Its sixteen nodes are the images of the
2-torsion points: (0:0:0:1) for the origin and, for each pair {a, b} of
roots of f, a point over (1 : a+b : ab) where K, as a quadratic in k4, has a
double root.  When f splits over Q all sixteen are rational, so every node
is certified exactly.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import CertificationFailureError, NotSplitError, RepeatedRootError
from .nodal import ProjPointQ, SingularPointReport, certify_point
from .qpoly import HomogPoly, evaluate, variables


@dataclass(frozen=True)
class SexticCurve:
    """y^2 = f(x) with f given by its coefficients f0..f6 (ascending)."""

    coefficients: tuple
    roots: tuple | None = None

    def __post_init__(self):
        c = tuple(Fraction(x) for x in self.coefficients)
        if len(c) != 7:
            raise ValueError("a sextic has seven coefficients f0..f6")
        if all(x == 0 for x in c):
            raise ValueError("f must not vanish identically")
        object.__setattr__(self, "coefficients", c)
        if self.roots is not None:
            roots = tuple(Fraction(r) for r in self.roots)
            if len(set(roots)) != len(roots):
                raise RepeatedRootError(f"roots are not distinct: {roots}")
            expected = _expand(roots, c[len(roots)] if len(roots) <= 6 else 0)
            if len(roots) > 6 or expected[: len(roots) + 1] != list(c[: len(roots) + 1]) or any(c[len(roots) + 1:]):
                raise ValueError("roots do not reproduce f up to its leading coefficient")
            object.__setattr__(self, "roots", roots)

    @classmethod
    def from_roots(cls, roots: Sequence, leading=1) -> "SexticCurve":
        roots = tuple(Fraction(r) for r in roots)
        if len(set(roots)) != len(roots):
            raise RepeatedRootError(f"roots are not distinct: {roots}")
        if len(roots) > 6:
            raise ValueError("a sextic has at most six roots")
        coeffs = _expand(roots, Fraction(leading))
        coeffs += [Fraction(0)] * (7 - len(coeffs))
        return cls(tuple(coeffs), roots)

    def __call__(self, x) -> Fraction:
        return sum(c * Fraction(x) ** i for i, c in enumerate(self.coefficients))


def _expand(roots, leading) -> list[Fraction]:
    """Ascending coefficients of leading * prod(x - r)."""
    poly = [Fraction(leading)]
    for r in roots:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i + 1] += a
            nxt[i] -= r * a
        poly = nxt
    return poly


def kummer_components(f: Sequence) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
    """The forms K2 (degree 2), K1 (degree 3) and K0 (degree 4) in k1, k2, k3.

    The fourth variable (w, i.e. k4) does not occur in them.
    """
    f0, f1, f2, f3, f4, f5, f6 = (Fraction(c) for c in f)
    k1, k2, k3, _ = variables()
    K2 = k2**2 - 4 * k1 * k3
    K1 = -2 * (
        2 * f0 * k1**3 + f1 * k1**2 * k2 + 2 * f2 * k1**2 * k3 + f3 * k1 * k2 * k3
        + 2 * f4 * k1 * k3**2 + f5 * k2 * k3**2 + 2 * f6 * k3**3
    )
    K0 = (
        (f1**2 - 4 * f0 * f2) * k1**4
        - 4 * f0 * f3 * k1**3 * k2
        - 2 * f1 * f3 * k1**3 * k3
        - 4 * f0 * f4 * k1**2 * k2**2
        + 4 * (f0 * f5 - f1 * f4) * k1**2 * k2 * k3
        + (f3**2 + 2 * f1 * f5 - 4 * f2 * f4 - 4 * f0 * f6) * k1**2 * k3**2
        - 4 * f0 * f5 * k1 * k2**3
        + 4 * (2 * f0 * f6 - f1 * f5) * k1 * k2**2 * k3
        + 4 * (f1 * f6 - f2 * f5) * k1 * k2 * k3**2
        - 2 * f3 * f5 * k1 * k3**3
        - 4 * f0 * f6 * k2**4
        - 4 * f1 * f6 * k2**3 * k3
        - 4 * f2 * f6 * k2**2 * k3**2
        - 4 * f3 * f6 * k2 * k3**3
        + (f5**2 - 4 * f4 * f6) * k3**4
    )
    return K2, K1, K0


def kummer_quartic(f: Sequence) -> HomogPoly:
    K2, K1, K0 = kummer_components(f)
    k4 = variables()[3]
    return K2 * k4**2 + K1 * k4 + K0


@dataclass(frozen=True)
class KummerOutput:
    curve: SexticCurve
    quartic: HomogPoly
    node_candidates: tuple
    reports: tuple

    @property
    def all_nodes(self) -> bool:
        return len(set(self.node_candidates)) == 16 and all(r.is_node for r in self.reports)


def node_candidates(curve: SexticCurve) -> list[ProjPointQ]:
    """(0:0:0:1) followed by one point per root pair, in lexicographic pair order."""
    roots = _split_roots(curve)
    K2, K1, _ = kummer_components(curve.coefficients)
    pts = [ProjPointQ((0, 0, 0, 1))]
    for a, b in combinations(roots, 2):
        base = (1, a + b, a * b, 0)
        k4 = -evaluate(K1, base) / (2 * evaluate(K2, base))
        pts.append(ProjPointQ((1, a + b, a * b, k4)))
    return pts


def _split_roots(curve: SexticCurve) -> tuple:
    if curve.roots is None or len(curve.roots) != 6:
        raise NotSplitError("kummer_from_sextic needs f with six distinct rational roots")
    if curve.coefficients[6] == 0:
        raise NotSplitError("f must have degree 6")
    return curve.roots


def kummer_from_sextic(curve: SexticCurve, check: bool = True) -> KummerOutput:
    """Kummer quartic of y^2 = f(x) and its sixteen exactly certified nodes.

    With ``check`` (the default) a candidate that is not an exact node raises
    ``CertificationFailureError``.
    """
    F = kummer_quartic(curve.coefficients)
    pts = node_candidates(curve)
    reports = []
    for p in pts:
        rep = certify_point(F, p)
        if check and not rep.is_node:
            raise CertificationFailureError(p, rep)
        reports.append(rep)
    return KummerOutput(curve, F, tuple(pts), tuple(reports))


def one_node_example() -> tuple[HomogPoly, ProjPointQ]:
    """x^4 + y^4 + z^4 - w^2 (x^2 + y^2 + z^2), whose only singular point is (0:0:0:1)."""
    x, y, z, w = variables()
    F = x**4 + y**4 + z**4 - w**2 * (x**2 + y**2 + z**2)
    return F, ProjPointQ((0, 0, 0, 1))


def fermat_quartic() -> HomogPoly:
    x, y, z, w = variables()
    return x**4 + y**4 + z**4 + w**4


def write_fixture(out: KummerOutput, surface_path, nodes_path) -> None:
    from .nodal import dump_points
    from .qpoly import dump_poly

    dump_poly(out.quartic, surface_path)
    dump_points(out.node_candidates, nodes_path)


def load_reports_roundtrip(out: KummerOutput) -> list[SingularPointReport]:
    """Serialize the fixture to JSON text and certify again from the parsed copy."""
    F = HomogPoly.from_json_dict(json.loads(json.dumps(out.quartic.to_json_dict())))
    pts = [ProjPointQ.from_json_dict(d) for d in json.loads(json.dumps([p.to_json_dict() for p in out.node_candidates]))]
    return [certify_point(F, p) for p in pts]
