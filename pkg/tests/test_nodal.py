import json
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_invertible
from nodalquartic import linalg
from nodalquartic.errors import NodalQuarticError, ZeroPolynomialError
from nodalquartic.kummer import SexticCurve, fermat_quartic, kummer_from_sextic, one_node_example
from nodalquartic.nodal import (
    Classification, Mode, ProjPointQ, SearchConfig, certified_nodes, certify_point, classify,
    dump_points, find_singular_numeric, hessian_at, load_points,
)
from nodalquartic.qpoly import HomogPoly, evaluate, gradient, variables

x, y, z, w = variables()
ONE_NODE = x**4 + y**4 + z**4 - w**2 * (x**2 + y**2 + z**2)
XYZW = x * y * z * w


def test_one_node_example_is_a_node():
    rep = certify_point(ONE_NODE, ProjPointQ((0, 0, 0, 1)))
    assert rep.classification is Classification.NODE
    assert rep.on_surface and rep.gradient_vanishes and rep.hessian_rank == 3
    assert rep.mode is Mode.EXACT and rep.is_node
    # affine quadratic part at the node is -(x^2 + y^2 + z^2)
    assert hessian_at(ONE_NODE, (0, 0, 0, 1)) == [[-2, 0, 0, 0], [0, -2, 0, 0], [0, 0, -2, 0], [0, 0, 0, 0]]


def test_coordinate_hyperplanes_meet_in_worse_singularities():
    rep = certify_point(XYZW, ProjPointQ((1, 1, 0, 0)))
    assert rep.classification is Classification.NON_NODE_SINGULAR
    assert rep.hessian_rank == 2


def test_fermat_point_is_off_the_surface():
    rep = certify_point(fermat_quartic(), ProjPointQ((1, 0, 0, 0)))
    assert rep.classification is Classification.NOT_ON_SURFACE
    assert not rep.on_surface


def test_smooth_point():
    F = x**4 - y**4 + z * w**3
    rep = certify_point(F, ProjPointQ((1, 1, 0, 0)))
    assert rep.on_surface and not rep.gradient_vanishes
    assert rep.classification is Classification.SMOOTH


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomialError):
        certify_point(HomogPoly(4), ProjPointQ((1, 0, 0, 0)))


def test_classify_table():
    assert classify(False, False, 4) is Classification.NOT_ON_SURFACE
    assert classify(True, False, 4) is Classification.SMOOTH
    assert classify(True, True, 3) is Classification.NODE
    for r in (0, 1, 2):
        assert classify(True, True, r) is Classification.NON_NODE_SINGULAR


def test_projpoint_normalization():
    p = ProjPointQ((Fraction(-1, 2), Fraction(3, 4), 0, 5))
    assert p.coords == (2, -3, 0, -20)
    assert ProjPointQ((0, -6, 4, 2)).coords == (0, 3, -2, -1)
    assert ProjPointQ((0, 0, 0, -7)) == ProjPointQ((0, 0, 0, 1))
    with pytest.raises(ValueError):
        ProjPointQ((0, 0, 0, 0))
    with pytest.raises(ValueError):
        ProjPointQ((1, 2, 3))


def test_points_file_roundtrip(tmp_path):
    pts = [ProjPointQ((1, 2, 3, 4)), ProjPointQ((1, 0, 0, 10**30 + 1))]
    dump_points(pts, tmp_path / "p.json")
    assert load_points(tmp_path / "p.json") == pts
    assert json.loads((tmp_path / "p.json").read_text())[1]["coords"][3] == str(10**30 + 1)
    (tmp_path / "bad.json").write_text('{"coords": ["1"]}')
    with pytest.raises(NodalQuarticError):
        load_points(tmp_path / "bad.json")


def _kummer():
    return kummer_from_sextic(SexticCurve.from_roots(range(6)))


def test_hessian_annihilates_singular_points():
    out = _kummer()
    cases = [(out.quartic, p) for p in out.node_candidates]
    cases += [(ONE_NODE, ProjPointQ((0, 0, 0, 1))), (XYZW, ProjPointQ((1, 1, 0, 0))), (XYZW, ProjPointQ((0, 0, 1, 0)))]
    for F, p in cases:
        rep = certify_point(F, p)
        assert rep.gradient_vanishes
        H = hessian_at(F, p.coords)
        assert all(v == 0 for v in linalg.matvec(H, p.coords))
        assert rep.hessian_rank <= 3


def test_rescaling_invariance():
    out = _kummer()
    rng = random.Random(11)
    for p in out.node_candidates[:6]:
        base = certify_point(out.quartic, p)
        c = Fraction(rng.choice([-7, -2, 3, 5]), rng.choice([1, 3, 11]))
        scaled = certify_point(out.quartic.scale(c), ProjPointQ(tuple(c * v for v in p.coords)))
        assert scaled == base


def _transformed_reports(F, pts, M):
    Minv = linalg.inverse(M)
    G = F.compose_linear(M)
    return [certify_point(G, p.transform(Minv)) for p in pts]


def test_pgl4_equivariance_on_fixtures():
    rng = random.Random(7)
    out = _kummer()
    fixtures = [
        (out.quartic, out.node_candidates[:4]),
        (ONE_NODE, [ProjPointQ((0, 0, 0, 1)), ProjPointQ((1, 0, 0, 1))]),
        (XYZW, [ProjPointQ((1, 1, 0, 0)), ProjPointQ((1, 1, 1, 1))]),
    ]
    for _ in range(5):
        M = random_invertible(rng)
        for F, pts in fixtures:
            before = [certify_point(F, p) for p in pts]
            after = _transformed_reports(F, pts, M)
            for a, b in zip(before, after):
                assert (a.classification, a.hessian_rank) == (b.classification, b.hessian_rank)


def test_search_finds_the_known_node():
    cands = find_singular_numeric(ONE_NODE, SearchConfig(seed_count=60))
    assert ProjPointQ((0, 0, 0, 1)) in certified_nodes(cands)


def test_search_on_fermat_is_empty():
    cands = find_singular_numeric(fermat_quartic(), SearchConfig(seed_count=60))
    assert certified_nodes(cands) == []


def test_search_on_coordinate_tetrahedron_certifies_no_node():
    cands = find_singular_numeric(XYZW, SearchConfig(seed_count=60))
    assert cands
    assert certified_nodes(cands) == []
    for c in cands:
        if c.report.mode is Mode.EXACT:
            assert c.report.classification is Classification.NON_NODE_SINGULAR


def test_search_is_reproducible():
    F, _ = one_node_example()
    cfg = SearchConfig(seed_count=30, seed=5)
    a = [c.to_json_dict() for c in find_singular_numeric(F, cfg)]
    b = [c.to_json_dict() for c in find_singular_numeric(F, cfg, rng=np.random.default_rng(5))]
    assert a == b


def test_search_config_validation():
    assert SearchConfig.from_json_dict({"seed_count": 3}).seed_count == 3
    with pytest.raises(NodalQuarticError):
        SearchConfig.from_json_dict({"seeds": 3})
    assert SearchConfig().to_json_dict() == {
        "seed_count": 200, "max_steps": 100, "tolerance": 1e-10,
        "cluster_radius": 1e-6, "max_height": 10**6, "seed": 0,
    }


def test_search_recovers_kummer_nodes():
    out = _kummer()
    found = set(certified_nodes(find_singular_numeric(out.quartic, SearchConfig(seed_count=100))))
    assert found <= set(out.node_candidates)
    assert len(found) >= 8
