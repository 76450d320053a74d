import random

import pytest

from arquiver.errors import ReduciblePolynomial, WrongType
from arquiver.linalg import QQ, FieldFp, Matrix
from arquiver.quiver import (
    MINUS_INF,
    PLUS_INF,
    a_inf,
    core_v,
    d_inf,
    finite_quiver,
    kronecker_quiver,
    qc_quiver,
    tail_v,
)
from arquiver.reps import (
    DInfRep,
    InjRep,
    ProjRep,
    SimpleRep,
    StringRep,
    SubquiverSel,
    WindowRep,
    decompose,
    direct_sum,
    dualize,
    hom_dim,
    hom_ext_dims,
    is_indecomposable,
    is_isomorphic,
    kronecker_regular,
    rad_top_soc,
    rep_from_dims,
    restrict,
    string_rep_from_walk,
)

from oracles import euler_pairing


def random_window_rep(qu, verts, rng, max_dim=2):
    dims = {v: rng.randrange(0, max_dim + 1) for v in verts}
    f = qu.field
    mats = {}
    for a in qu.arrows_within(verts):
        ds, dt = dims[a[0]], dims[a[1]]
        if ds and dt:
            mats[a] = Matrix(
                f, dt, ds, [[rng.randrange(-2, 3) for _ in range(ds)] for _ in range(dt)]
            )
    return WindowRep(qu, verts, dims, mats)


def test_standard_dims_on_a_inf():
    q = a_inf()
    p0 = ProjRep(q, q.vertex_by_label(0))
    for n in range(6):
        assert p0.dim_at(q.vertex_by_label(n)) == 1
    assert p0.tail_word(0).word == (1,)
    i0 = InjRep(q, q.vertex_by_label(0))
    assert i0.dim_at(q.vertex_by_label(0)) == 1
    assert i0.dim_at(q.vertex_by_label(1)) == 0
    assert i0.total_dim() == 1  # I_0 = S_0 at a source


def test_i0_equals_s0_on_qf(qf):
    i0 = InjRep(qf, qf.vertex_by_label("0"))
    s0 = SimpleRep(qf, qf.vertex_by_label("0"))
    assert i0.dim_vector().eq(s0.dim_vector())
    assert is_isomorphic(i0, s0)


def test_proj_dims_on_qb(qb):
    p1 = ProjRep(qb, qb.vertex_by_label(1))
    assert p1.total_dim() == 2  # vertices 0 and 1
    p2 = ProjRep(qb, qb.vertex_by_label(2))
    assert p2.total_dim() == float("inf")
    assert p2.tail_word(0).word == (1,)


def test_string_reps_on_qc(qc):
    m = StringRep(qc, 3, 4)
    assert m.name() == "M(p_{4,3})"
    assert m.total_dim() == 2
    ray = StringRep(qc, MINUS_INF, 2)
    assert ray.name() == "M(p_inf)"
    assert ray.dim_at(qc.vertex_by_label("-5")) == 1
    assert ray.dim_at(qc.vertex_by_label("3")) == 0
    assert not ray.is_finite_dimensional()
    s = string_rep_from_walk(qc, ["5", "4", "3"])
    assert (s.lo, s.hi) == (3, 5)


def test_string_normalization_walk_vs_reverse(qc):
    a = string_rep_from_walk(qc, ["3", "4", "5"])
    b = string_rep_from_walk(qc, ["5", "4", "3"])
    assert (a.lo, a.hi) == (b.lo, b.hi)
    assert is_isomorphic(a, b)


def test_dinf_reps():
    q = d_inf()
    n01 = DInfRep(q, 0, 1)
    # dims 1,1,1 at the two fork leaves and the branch vertex; total 2+2i+j
    vals = {q.label(v): n01.dim_at(v) for v in q.window_vertices(3)}
    assert vals == {"0": 1, "1": 1, "2": 1, "3": 0, "4": 0, "5": 0}
    assert n01.total_dim() == 3
    for i in range(3):
        for j in range(1, 4):
            assert DInfRep(q, i, j).total_dim() == 2 + 2 * i + j
    ninf = DInfRep(q, 0, PLUS_INF)
    assert ninf.tail_word(0).word == (1,)
    w = DInfRep(q, 1, 2).materialize()
    assert is_indecomposable(w)


def test_dinf_all_orientations_indecomposable():
    for a0 in ("2->0", "0->2"):
        for a1 in ("2->1", "1->2"):
            for word in (["out"], ["in"], ["out", "in"]):
                q = d_inf(arrow0=a0, arrow1=a1, period=word)
                for (i, j) in [(0, 1), (1, 1), (2, 2)]:
                    w = DInfRep(q, i, j).materialize()
                    assert is_indecomposable(w), (a0, a1, word, i, j)


def test_dim_vector_recognition_roundtrip(qc):
    for rep in [
        StringRep(qc, 3, 4),
        StringRep(qc, MINUS_INF, 2),
        StringRep(qc, 5, 5),
        StringRep(qc, 1, 3),
    ]:
        back = rep_from_dims(qc, rep.dim_vector())
        assert (back.lo, back.hi) == (rep.lo, rep.hi)


def test_restrict_examples(qb):
    # QB = 0 <- 1 <- 2 -> 3 -> 4 -> ...; successors of 3 form {3,4,...}
    p2 = ProjRep(qb, qb.vertex_by_label(2))
    sel = SubquiverSel(qb, {tail_v(0, i) for i in range(1, 3)}, {0: True}, onset={0: 3})
    # selection {3,4,...}: tail vertices 1,2 are labels 1,2... build by labels
    sel = SubquiverSel.from_labels(qb, ["3", "4", "5"], tail_eventual={0: True})
    out = restrict(p2, sel)
    assert out.name() == "P(3)"
    # restrict to the full quiver is the identity
    full = SubquiverSel(qb, set(qb.window_vertices(8)), {0: True})
    assert restrict(p2, full) is p2
    # restrict a simple away from its support
    s0 = SimpleRep(qb, qb.vertex_by_label(0))
    off = SubquiverSel.from_labels(qb, ["3", "4"])
    assert restrict(s0, off).total_dim() == 0


def test_rad_top_soc_symbolic(qb):
    # rad P_x for a sink is zero
    p0 = ProjRep(qb, qb.vertex_by_label(0))
    rad, top, _ = rad_top_soc(p0)
    assert rad.total_dim() == 0
    assert top.name() == "S(0)"
    # one outgoing arrow: rad P_1 = P_0 on QB (arrow 1 -> 0)
    rad, top, _ = rad_top_soc(ProjRep(qb, qb.vertex_by_label(1)))
    assert rad.name() == "P(0)"
    q = d_inf()
    rad, _, _ = rad_top_soc(ProjRep(q, q.vertex_by_label(2)))
    assert sorted(p.name() for p in rad.parts) == ["P(0)", "P(1)", "P(3)"]
    i2 = InjRep(q, q.vertex_by_label(2))
    _, quo, soc = rad_top_soc(i2)
    assert soc.name() == "S(2)"


def test_rad_top_soc_window():
    a3 = finite_quiver([1, 2, 3], [(1, 2), (2, 3)])
    p1 = ProjRep(a3, core_v("1")).materialize()
    rad, top, soc = rad_top_soc(p1)
    assert {a3.label(v): d for v, d in rad.dims.items() if d} == {"2": 1, "3": 1}
    assert {a3.label(v): d for v, d in top.dims.items() if d} == {"1": 1}
    assert {a3.label(v): d for v, d in soc.dims.items() if d} == {"3": 1}


def test_dualize_statements(qb):
    q = a_inf()  # all out
    i0 = InjRep(q, q.vertex_by_label(0))
    d = dualize(i0)
    assert d.name() == "P(0)"
    # the opposite of all-out A_inf is the all-in one
    assert d.qu.infinite_path_profile()["has_left_infinite"]
    assert dualize(SimpleRep(q, q.vertex_by_label(3))).name() == "S(3)"


def test_dualize_involution_on_random_windows():
    a4 = finite_quiver([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    rng = random.Random(5)
    verts = a4.window_vertices(0)
    for _ in range(50):
        w = random_window_rep(a4, verts, rng)
        dd = dualize(dualize(w))
        assert dd.dims == w.dims
        assert all(dd.mat(a).a == w.mat(a).a for a in a4.core_arrows)


def test_hom_identities_small(qc):
    rng = random.Random(11)
    verts = qc.window_vertices(3)
    for _ in range(10):
        m = random_window_rep(qc, verts, rng)
        for lbl in ["0", "1", "2", "3"]:
            a = qc.vertex_by_label(lbl)
            assert hom_dim(ProjRep(qc, a), m) == m.dim_at(a)
            assert hom_dim(m, InjRep(qc, a)) == m.dim_at(a)


def test_hom_ext_example_a3():
    a3 = finite_quiver([1, 2, 3], [(1, 2), (2, 3)])
    s1 = SimpleRep(a3, core_v("1"))
    s2 = SimpleRep(a3, core_v("2"))
    assert hom_ext_dims(s1, s2) == (0, 1)
    assert hom_ext_dims(s2, s1) == (0, 0)


def test_euler_form_crosscheck():
    a4 = finite_quiver([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    rng = random.Random(17)
    verts = a4.window_vertices(0)
    for _ in range(25):
        m = random_window_rep(a4, verts, rng)
        n = random_window_rep(a4, verts, rng)
        hom, ext = hom_ext_dims(m, n)
        assert hom - ext == euler_pairing(a4, m.dims, n.dims, verts)


def test_decompose_examples():
    a3 = finite_quiver([1, 2, 3], [(1, 2), (2, 3)])
    s = SimpleRep(a3, core_v("1")).materialize()
    two = direct_sum([s, s])
    parts = decompose(two)
    assert len(parts) == 2 and all(p.total() == 1 for p in parts)
    p2 = ProjRep(a3, core_v("2")).materialize()
    assert len(decompose(p2)) == 1


def test_decompose_recovers_string_summands():
    a4 = finite_quiver([1, 2, 3, 4], [(1, 2), (3, 2), (3, 4)])
    def thin(support):
        dims = {v: (1 if a4.label(v) in support else 0) for v in a4.core_vertices}
        f = a4.field
        mats = {}
        for a in a4.core_arrows:
            if dims[a[0]] and dims[a[1]]:
                mats[a] = Matrix(f, 1, 1, [[1]])
        return WindowRep(a4, a4.core_vertices, dims, mats)

    parts = [thin({"1", "2"}), thin({"3", "4"}), thin({"2", "3"})]
    total = direct_sum(parts)
    summands = decompose(total)
    assert len(summands) == 3
    got = sorted(
        tuple(sorted(a4.label(v) for v, d in p.dims.items() if d)) for p in summands
    )
    assert got == [("1", "2"), ("2", "3"), ("3", "4")]


def test_is_isomorphic_examples(qc):
    m = StringRep(qc, 3, 4)
    s5 = SimpleRep(qc, qc.vertex_by_label(5))
    assert not is_isomorphic(m, s5)
    assert is_isomorphic(m, StringRep(qc, 3, 4))
    d = d_inf()
    assert not is_isomorphic(DInfRep(d, 1, 2), DInfRep(d, 2, 1))


def test_kronecker_regular():
    kr = kronecker_quiver()
    m = kronecker_regular(kr, [0, 1])  # p = x
    beta = [a for a in kr.core_arrows if a[2] == "beta"][0]
    assert m.mat(beta).is_zero()
    assert {kr.label(v): d for v, d in m.dims.items()} == {"a": 1, "b": 1}
    m1 = kronecker_regular(kr, [-1, 1])  # p = x - 1
    assert m1.mat(beta)[0, 0] == 1
    kr2 = kronecker_quiver(field=FieldFp(2))
    m2 = kronecker_regular(kr2, [1, 1, 1])
    beta2 = [a for a in kr2.core_arrows if a[2] == "beta"][0]
    assert m2.mat(beta2).a == [[0, 1], [1, 1]]
    with pytest.raises(ReduciblePolynomial):
        kronecker_regular(kr2, [1, 0, 1])  # x^2 + 1 = (x+1)^2 over F_2
    with pytest.raises(Exception):
        kronecker_regular(a_inf(), [0, 1])


def test_fp_certificates(qc, qb):
    from arquiver.reps import fp_certificate

    assert fp_certificate(ProjRep(qb, qb.vertex_by_label(0)))["kind"] in (
        "finite",
        "projective",
    )
    ray = StringRep(qc, MINUS_INF, 2)
    cert = fp_certificate(ray)
    assert cert["kind"] == "ray-projective"
    assert fp_certificate(StringRep(qc, 3, 4))["kind"] == "finite"
