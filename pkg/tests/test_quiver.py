import pytest

from arquiver.errors import CoreCycle, Disconnected, EmptyPeriod
from arquiver.quiver import (
    a_biinf,
    a_inf,
    build_quiver,
    core_v,
    d_inf,
    finite_quiver,
    kronecker_quiver,
    qc_quiver,
    tail_v,
)

from oracles import brute_predecessor_growth


def test_a_inf_canonical_line():
    q = a_inf()
    assert [q.label(q.chart().vertex(n)) for n in range(4)] == ["0", "1", "2", "3"]
    assert len(q.paths_between(q.vertex_by_label(0), q.vertex_by_label(3))) == 1
    assert q.paths_between(q.vertex_by_label(2), q.vertex_by_label(2)) == [()]
    assert q.paths_between(q.vertex_by_label(3), q.vertex_by_label(0)) == []


def test_left_infinite_line():
    q = a_inf(period=["in"])
    # ... -> 2 -> 1 -> 0
    assert len(q.paths_between(q.vertex_by_label(2), q.vertex_by_label(0))) == 1
    prof = q.infinite_path_profile()
    assert prof["has_left_infinite"] and not prof["has_right_infinite"]


def test_core_cycle_rejected():
    with pytest.raises(CoreCycle):
        finite_quiver(["a", "b"], [("a", "b"), ("b", "a")])


def test_empty_period_rejected():
    with pytest.raises(EmptyPeriod):
        build_quiver({"core": {"vertices": ["a"]}, "tails": [{"attach": "a", "period": []}]})


def test_kronecker_two_paths():
    q = kronecker_quiver()
    assert len(q.paths_between(core_v("a"), core_v("b"))) == 2
    assert q.classify() == ("FiniteEuclidean", "A~1")


def test_profile_examples():
    assert a_inf().infinite_path_profile()["has_right_infinite"]
    zig = a_inf(period=["out", "in"])
    p = zig.infinite_path_profile()
    assert not p["has_left_infinite"] and not p["has_right_infinite"]
    p = qc_quiver().infinite_path_profile()
    assert p["has_left_infinite"] and p["has_right_infinite"]


def test_qplus_examples(qf):
    comps = qf.q_plus_components()
    assert [c["vertices"] for c in comps] == [["0"], ["2", "3", "4"]]
    # A_inf with no left infinite path: everything, one component
    zig = a_inf(period=["out", "in"])
    comps = zig.q_plus_components()
    assert len(comps) == 1 and comps[0]["rays"] == ["ray"]
    # left infinite path quiver: empty
    assert a_inf(period=["in"]).q_plus_components() == []


def test_qplus_brute_force_agreement(qf):
    samples = [qf, qc_quiver(), a_inf(prefix=["in", "out"], period=["out", "in"])]
    for q in samples:
        core = len(q.core_vertices)
        r = 3 * max(len(t.word.period) for t in q.tails) + max(
            len(t.word.prefix) for t in q.tails
        ) + core + 2
        for v in q.window_vertices(3):
            before, after = brute_predecessor_growth(q, v, r)
            assert q.in_q_plus(v) == (before == after), q.label(v)


def test_classify_examples():
    assert d_inf().classify() == ("InfDynkin", "D_inf")
    assert finite_quiver([1, 2, 3], [(1, 2), (2, 3)]).classify() == ("FiniteDynkin", "A_3")
    # Kronecker + an out-tail: a double edge is not a Dynkin diagram
    gen = build_quiver(
        {
            "core": {
                "vertices": ["a", "b"],
                "arrows": [
                    {"from": "a", "to": "b", "label": "x"},
                    {"from": "a", "to": "b", "label": "y"},
                ],
            },
            "tails": [{"attach": "b", "period": ["out"]}],
        }
    )
    assert gen.classify() == ("InfiniteGeneral", None)
    d4 = finite_quiver([0, 1, 2, 3], [(2, 0), (2, 1), (2, 3)])
    assert d4.classify() == ("FiniteDynkin", "D_4")
    e6 = finite_quiver(
        [1, 2, 3, 4, 5, 6], [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
    )
    assert e6.classify() == ("FiniteDynkin", "E_6")
    disc = finite_quiver([1, 2], [])
    with pytest.raises(Disconnected):
        disc.classify()


def test_opposite_involution(qf):
    # structural equality: the shorthand is presentation metadata and is not
    # carried through opposites
    def structure(q):
        j = q.to_json()
        j.pop("shorthand", None)
        return j

    for q in [qf, qc_quiver(), a_inf()]:
        assert structure(q.opposite().opposite()) == structure(q)


def test_opposite_path_counts(qf):
    qop = qf.opposite()
    for x in qf.window_vertices(3):
        for y in qf.window_vertices(3):
            assert len(qf.paths_between(x, y)) == len(qop.paths_between(y, x))


def test_path_determinism(qf):
    a = qf.paths_between(qf.vertex_by_label("3"), qf.vertex_by_label("1"))
    b = qf.paths_between(qf.vertex_by_label("3"), qf.vertex_by_label("1"))
    assert a == b
    assert all(
        len(p) <= len(q) for p, q in zip(a, a[1:])
    )


def test_right_infinite_spot_check():
    q = a_inf()  # all out: right infinite
    zero = q.vertex_by_label(0)
    for n in (10, 50, 200):
        assert len(q.paths_between(zero, tail_v(0, n))) == 1
    zig = a_inf(period=["out", "in"])
    z0 = zig.vertex_by_label(0)
    assert len(zig.paths_between(z0, tail_v(0, 50))) == 0


def test_tail_vertex_labels(qf):
    assert qf.label(tail_v(0, 2)) == "-2"
    assert qf.label(qf.vertex_by_label("-3")) == "-3"
    assert qf.label(tail_v(1, 3)) == "8"
