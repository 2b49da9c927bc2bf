import json
import random
from fractions import Fraction

import pytest

from nodalquartic.errors import CertificationFailureError, NotSplitError, RepeatedRootError
from nodalquartic.kummer import (
    SexticCurve, fermat_quartic, kummer_from_sextic, kummer_quartic, load_reports_roundtrip,
    node_candidates, one_node_example, write_fixture,
)
from nodalquartic.nodal import Classification, SearchConfig, certified_nodes, certify_point, find_singular_numeric, load_points
from nodalquartic.qpoly import HomogPoly, evaluate, load_poly
from nodalquartic.severi import independence_test


def _random_roots(rng, k=6):
    roots = set()
    while len(roots) < k:
        roots.add(Fraction(rng.randint(-12, 12), rng.randint(1, 5)))
    return sorted(roots)


def test_standard_fixture():
    out = kummer_from_sextic(SexticCurve.from_roots(range(6)))
    assert out.quartic.degree == 4
    assert len(out.node_candidates) == 16 == len(set(out.node_candidates))
    assert all(r.classification is Classification.NODE for r in out.reports)
    assert out.all_nodes
    rep = independence_test(out.quartic, out.node_candidates)
    assert (rep.eval_rank, rep.ideal_dim) == (16, 19)


def test_random_split_sextics_certify():
    rng = random.Random(99)
    for _ in range(6):
        roots = _random_roots(rng)
        lead = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 7]))
        out = kummer_from_sextic(SexticCurve.from_roots(roots, leading=lead))
        assert out.all_nodes
        # 1 node at (0:0:0:1) plus one per root pair
        assert len(out.node_candidates) - 1 == 15


def test_fixture_roundtrip(tmp_path):
    out = kummer_from_sextic(SexticCurve.from_roots([-3, -1, 0, 2, Fraction(5, 2), 7]))
    assert load_reports_roundtrip(out) == list(out.reports)
    write_fixture(out, tmp_path / "s.json", tmp_path / "n.json")
    F = load_poly(tmp_path / "s.json")
    pts = load_points(tmp_path / "n.json")
    assert F == out.quartic and pts == list(out.node_candidates)
    assert [certify_point(F, p) for p in pts] == list(out.reports)


def _mobius(r, a, b, c, d):
    return (a * r + b) / (c * r + d)


def test_mobius_invariance_of_severi_report():
    rng = random.Random(31)
    base_roots = [Fraction(r) for r in range(6)]
    base = kummer_from_sextic(SexticCurve.from_roots(base_roots))
    base_rep = independence_test(base.quartic, base.node_candidates)
    done = 0
    while done < 4:
        a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
        if a * d - b * c == 0 or any(c * r + d == 0 for r in base_roots):
            continue
        roots = [_mobius(r, a, b, c, d) for r in base_roots]
        out = kummer_from_sextic(SexticCurve.from_roots(roots))
        assert out.quartic != base.quartic
        assert independence_test(out.quartic, out.node_candidates) == base_rep
        done += 1


def test_error_paths():
    with pytest.raises(RepeatedRootError):
        SexticCurve.from_roots([0, 1, 1, 2, 3, 4])
    with pytest.raises(NotSplitError):
        kummer_from_sextic(SexticCurve.from_roots([0, 1, 2, 3, 4]))
    with pytest.raises(NotSplitError):
        kummer_from_sextic(SexticCurve((1, 0, 0, 0, 0, 0, 1)))
    with pytest.raises(ValueError):
        SexticCurve((0,) * 7)
    with pytest.raises(ValueError):
        SexticCurve((1, 2, 3, 4, 5, 6, 1), roots=(0, 1, 2, 3, 4, 5))


def test_certification_guard_catches_a_wrong_quartic(monkeypatch):
    import nodalquartic.kummer as km

    real = km.kummer_quartic

    def perturbed(f):
        x = HomogPoly.variable(0)
        return real(f) + x**4
    monkeypatch.setattr(km, "kummer_quartic", perturbed)
    with pytest.raises(CertificationFailureError) as info:
        km.kummer_from_sextic(SexticCurve.from_roots(range(6)))
    assert not info.value.report.is_node
    out = km.kummer_from_sextic(SexticCurve.from_roots(range(6)), check=False)
    assert not out.all_nodes


def test_one_node_example_and_fermat():
    F, p = one_node_example()
    assert certify_point(F, p).classification is Classification.NODE
    assert independence_test(F, [p]).ideal_dim == 34
    G = fermat_quartic()
    assert certified_nodes(find_singular_numeric(G, SearchConfig(seed_count=50))) == []
    # exact spot checks: the gradient 4(x^3, y^3, z^3, w^3) only vanishes at 0
    for q in [(1, 0, 0, 0), (1, 1, 0, 0), (1, -1, 1, -1)]:
        assert certify_point(G, type(p)(q)).classification in (Classification.NOT_ON_SURFACE, Classification.SMOOTH)


def test_candidates_lie_on_the_quartic():
    curve = SexticCurve.from_roots(range(6))
    F = kummer_quartic(curve.coefficients)
    for q in node_candidates(curve):
        assert evaluate(F, q.coords) == 0
