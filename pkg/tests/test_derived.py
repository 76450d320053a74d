import pytest

from arquiver.ar import Unavailable
from arquiver.derived import (
    DerivedObject,
    connecting_window,
    derived_ar_triangle,
    derived_capabilities,
    derived_irr_shift,
)
from arquiver.quiver import (
    MINUS_INF,
    a_biinf,
    a_inf,
    build_quiver,
    core_v,
    finite_quiver,
    qc_quiver,
)
from arquiver.reps import InjRep, ProjRep, SimpleRep, StringRep, is_isomorphic


def section7_quiver():
    # ... -> -2 -> -1 -> 1 -> 2 -> ... with an extra arrow 0 -> 1
    return build_quiver(
        {
            "core": {
                "vertices": ["0", "1"],
                "arrows": [{"from": "0", "to": "1", "label": "v"}],
            },
            "tails": [
                {"attach": "1", "period": ["in"], "name": "L", "labels": {"a": -1, "b": 0}},
                {"attach": "1", "period": ["out"], "name": "R", "labels": {"a": 1, "b": 1}},
            ],
        }
    )


def test_connecting_triangle_a3():
    a3 = finite_quiver([1, 2, 3], [(1, 2), (2, 3)])
    tri = derived_ar_triangle(DerivedObject(ProjRep(a3, core_v("1"))), "ending_at")
    assert tri.family == "Connecting"
    assert tri.x.name() == "I(1)[-1]"
    assert tri.z.name() == "P(1)"
    # middle: (I_1/S_1)[-1] has no summands (1 is a source in A_3: no arrows
    # into 1) and rad P_1 = P_2 at shift 0
    assert [m.name() for m in tri.middle] == ["P(2)"]
    tri3 = derived_ar_triangle(DerivedObject(ProjRep(a3, core_v("3"))), "ending_at")
    names = sorted(m.name() for m in tri3.middle)
    assert names == ["I(2)[-1]"]  # 3 is a sink: rad P_3 = 0, I_3/S_3 = I_2


def test_from_ass_triangle(qc):
    obj = DerivedObject(StringRep(qc, MINUS_INF, 2))
    tri = derived_ar_triangle(obj, "ending_at")
    assert tri.family == "FromASS"
    assert tri.x.name() == "M(p_{4,3})"
    assert [m.name() for m in tri.middle] == ["M([-inf,4])"]


def test_shift_invariance(qc):
    base = DerivedObject(StringRep(qc, 3, 4))
    tris = {}
    for k in range(-2, 3):
        tri = derived_ar_triangle(base.shifted(k), "ending_at")
        tris[k] = tri
    for k in range(-2, 3):
        t0 = tris[0]
        tk = tris[k]
        assert tk.x.shift == t0.x.shift + k
        assert tk.z.shift == t0.z.shift + k
        assert [m.name() for m in tk.middle] == [
            m.shifted(k).name() for m in t0.middle
        ]


def test_unavailable_cases(qc):
    # pseudo-projective end
    out = derived_ar_triangle(DerivedObject(StringRep(qc, 5, 5)), "ending_at")
    assert isinstance(out, Unavailable) and out.reason == "PseudoProjective"
    # P_x with x not in Q^+ has no connecting triangle
    q7 = section7_quiver()
    out = derived_ar_triangle(DerivedObject(ProjRep(q7, q7.vertex_by_label("1"))), "ending_at")
    assert isinstance(out, Unavailable) and out.reason == "XNotInQPlus"
    # ... but P_0 does (0 is in Q^+)
    tri = derived_ar_triangle(DerivedObject(ProjRep(q7, q7.vertex_by_label("0"))), "ending_at")
    assert tri.family == "Connecting"
    # infinite dimensional starts have no triangle
    out = derived_ar_triangle(DerivedObject(StringRep(qc, MINUS_INF, 2)), "starting_at")
    assert isinstance(out, Unavailable) and out.reason == "InfiniteDimStart"


def test_derived_irr_shift():
    a3 = finite_quiver([1, 2, 3], [(1, 2), (2, 3)])
    i1 = InjRep(a3, core_v("1"))
    assert derived_irr_shift(i1, ProjRep(a3, core_v("2")))
    assert not derived_irr_shift(i1, ProjRep(a3, core_v("3")))
    assert not derived_irr_shift(ProjRep(a3, core_v("1")), ProjRep(a3, core_v("2")))
    assert not derived_irr_shift(i1, SimpleRep(a3, core_v("2")))


def test_connecting_window_section7_example():
    q7 = section7_quiver()
    cw = connecting_window(q7, depth=2, width=4)
    # the glued arrow I_0[-1] -> P_1 and the tau_D link P_0 ~~> I_0[-1]
    assert (("I:0", 0), ("P:1", 0), 1) in cw.arrows
    assert (("P:0", 0), ("I:0", 0)) in cw.tau_links
    # the P-row path: P_2 -> P_1 -> P_{-1} and P_1 -> P_0
    arrows = {(a, b) for a, b, _ in cw.arrows}
    assert (("P:2", 0), ("P:1", 0)) in arrows
    assert (("P:1", 0), ("P:-1", 0)) in arrows
    assert (("P:1", 0), ("P:0", 0)) in arrows
    assert cw.shape["tag"] == "Glued"


def test_connecting_shapes():
    zig = a_inf(period=["out", "in"])
    assert connecting_window(zig, depth=1, width=3).shape["tag"] == "ZQop"
    leftonly = a_inf(period=["in"])
    assert connecting_window(leftonly, depth=1, width=3).shape["tag"] == "ZQopRightStable"


def test_derived_capability_table(qc):
    rows = [
        (a_inf(period=["out", "in"]), True, True),
        (a_inf(), False, True),
        (a_inf(prefix=["out"], period=["in"]), True, False),
        (a_inf(period=["in"]), True, False),
        (a_biinf(neg=((), ("in",)), pos=((), ("out",))), False, False),
        (qc, False, False),
    ]
    for q, left, right in rows:
        caps = derived_capabilities(q)
        assert caps["left_AST"] == left, q.to_json()
        assert caps["right_AST"] == right
        assert caps["AST"] == (left and right)


def test_connecting_triangle_middle_dims(qc):
    # middle = I_x/S_x (+) (rad P_x)[1] exactly: dim check against I_x - S_x
    for q in (qc, a_inf(period=["out", "in"])):
        for v in q.window_vertices(2):
            if not q.in_q_plus(v):
                continue
            tri = derived_ar_triangle(DerivedObject(ProjRep(q, v)), "ending_at")
            shift0 = [m for m in tri.middle if m.shift == tri.x.shift]
            shift1 = [m for m in tri.middle if m.shift == tri.x.shift + 1]
            quo_dim = sum(m.rep.total_dim() for m in shift0)
            ix = InjRep(q, v)
            assert quo_dim == ix.total_dim() - 1
            rad_names = sorted(m.rep.name() for m in shift1)
            expected = sorted(f"P({q.label(a[1])})" for a in q.arrows_out(v))
            assert rad_names == expected
