import random

import pytest

from conftest import random_invertible
from nodalquartic import fixtures, linalg
from nodalquartic.errors import DuplicateNodeError, NotANodeError
from nodalquartic.kummer import SexticCurve, kummer_from_sextic, one_node_example
from nodalquartic.nodal import ProjPointQ
from nodalquartic.qpoly import monomial_basis, variables
from nodalquartic.severi import NodeSet, SeveriReport, evaluation_matrix, independence_test, severi_report
from oracles import sympy_rank

x, y, z, w = variables()


@pytest.fixture(scope="module")
def kummer():
    return kummer_from_sextic(SexticCurve.from_roots(range(6)))


def test_single_node_row_hits_only_w4():
    M = evaluation_matrix([ProjPointQ((0, 0, 0, 1))])
    assert len(M) == 1 and len(M[0]) == 35
    nz = [j for j, v in enumerate(M[0]) if v]
    assert nz == [monomial_basis(4).index((0, 0, 0, 4))]


def test_two_coordinate_points_rank_two():
    rep = severi_report([ProjPointQ((1, 0, 0, 0)), ProjPointQ((0, 1, 0, 0))])
    assert rep.eval_rank == 2 and rep.independent


def test_kummer_rank(kummer):
    M = evaluation_matrix(kummer.node_candidates)
    assert linalg.rank(M) == sympy_rank(M) == 16
    rep = independence_test(kummer.quartic, kummer.node_candidates)
    assert (rep.delta, rep.eval_rank, rep.ideal_dim, rep.severi_tangent_dim) == (16, 16, 19, 18)
    assert rep.independent and rep.bound_ok and not rep.violation


def test_one_node():
    F, p = one_node_example()
    rep = independence_test(F, [p])
    assert (rep.delta, rep.eval_rank, rep.ideal_dim, rep.severi_tangent_dim) == (1, 1, 34, 33)


def test_empty_set():
    F, _ = one_node_example()
    rep = independence_test(F, [])
    assert (rep.delta, rep.eval_rank, rep.ideal_dim, rep.severi_tangent_dim) == (0, 0, 35, 34)
    assert rep.independent and rep.bound_ok


def test_report_json_field_names():
    rep = SeveriReport.from_rank(3, 2)
    assert set(rep.to_json_dict()) == {
        "delta", "eval_rank", "independent", "ideal_dim", "severi_tangent_dim", "bound_ok",
    }
    assert rep.violation and not rep.independent


def test_duplicate_nodes_rejected():
    with pytest.raises(DuplicateNodeError):
        NodeSet((ProjPointQ((1, 2, 3, 4)), ProjPointQ((-2, -4, -6, -8))))


def test_non_node_rejected_on_recertification():
    F, p = one_node_example()
    with pytest.raises(NotANodeError) as info:
        independence_test(F, [p, ProjPointQ((1, 0, 0, 0))])
    assert info.value.point == ProjPointQ((1, 0, 0, 0))
    with pytest.raises(NotANodeError):
        independence_test(x * y * z * w, [ProjPointQ((1, 1, 0, 0))])


def test_guard_seventeen():
    pts = fixtures.guard_points()
    assert len(pts) == 17
    rep = severi_report(pts)
    assert not rep.bound_ok and rep.violation
    assert rep.eval_rank == 17


def test_rank_bounds_and_monotonicity():
    rng = random.Random(2)
    for _ in range(20):
        pts = []
        seen = set()
        while len(pts) < 20:
            c = tuple(rng.randint(-3, 3) for _ in range(4))
            if not any(c) or ProjPointQ(c) in seen:
                continue
            seen.add(ProjPointQ(c))
            pts.append(ProjPointQ(c))
        prev = 0
        for k in range(len(pts) + 1):
            r = severi_report(pts[:k]).eval_rank
            assert 0 <= r <= min(k, 35)
            assert r >= prev
            prev = r


def test_pgl4_invariance_of_rank(kummer):
    rng = random.Random(4)
    F, nodes = kummer.quartic, kummer.node_candidates
    base = independence_test(F, nodes)
    for _ in range(3):
        M = random_invertible(rng)
        Minv = linalg.inverse(M)
        rep = independence_test(F.compose_linear(M), [p.transform(Minv) for p in nodes])
        assert rep == base


def test_committed_fixtures_are_consistent():
    F = fixtures.load_surface("kummer_012345")
    nodes = fixtures.load_nodes("kummer_012345")
    assert independence_test(F, nodes).ideal_dim == 19
    F1 = fixtures.load_surface("one_node")
    assert independence_test(F1, fixtures.load_nodes("one_node")).ideal_dim == 34
    assert fixtures.load_nodes("fermat") == []
