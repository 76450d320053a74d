import pytest

from arquiver.components import (
    ar_capabilities,
    component_shape,
    knit_component,
    knit_preinjective,
    knit_preprojective,
    regular_census,
)
from arquiver.errors import BadSeed, Disconnected
from arquiver.quiver import (
    MINUS_INF,
    PLUS_INF,
    a_biinf,
    a_inf,
    build_quiver,
    d_inf,
    finite_quiver,
    kronecker_quiver,
    qc_quiver,
)
from arquiver.reps import SimpleRep, StringRep

INF = PLUS_INF


def test_qb_preprojective_figure(qb):
    cw = knit_preprojective(qb, depth=3, width=6)
    cells = {k: c.to_json() for k, c in cw.cells.items()}
    assert cells[("0", 0)]["dim"] == 1
    assert cells[("1", 0)]["dim"] == 2
    assert cells[("2", 0)]["infinite_dimensional"]
    assert cells[("0", 1)]["dim"] == 1
    assert cells[("1", 1)]["infinite_dimensional"]
    assert cells[("0", 2)]["infinite_dimensional"]
    assert ("0", 3) not in cells and ("1", 2) not in cells and ("2", 1) not in cells


def test_additivity_audit_on_finite_dynkin():
    a4 = finite_quiver([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)])
    cw = knit_preprojective(a4, depth=6, width=0)
    # every non-boundary mesh: f(tau X) + f(X) = sum of middle dims
    cells = cw.cells
    mids = {}
    for a, b, mult in cw.arrows:
        mids.setdefault(b, []).append((a, mult))
    for x, taux in cw.tau_links:
        left = cells[taux].dim_value + cells[x].dim_value
        right = sum(cells[a].dim_value * m for a, m in mids.get(x, []))
        assert left == right, (x, taux)


def test_finite_dynkin_counts():
    # knitting enumerates exactly n(n+1)/2 cells on A_n
    for n in (2, 3, 4):
        q = finite_quiver(list(range(1, n + 1)), [(i, i + 1) for i in range(1, n)])
        cw = knit_preprojective(q, depth=n + 2, width=0)
        assert cw.cell_count() == n * (n + 1) // 2
    d4 = finite_quiver([0, 1, 2, 3], [(2, 0), (2, 1), (2, 3)])
    cw = knit_preprojective(d4, depth=8, width=0)
    assert cw.cell_count() == 12


def test_qf_preinjective_components(qf):
    cw0 = knit_preinjective(qf, qf.vertex_by_label("0"))
    assert cw0.cell_count() == 1
    assert list(cw0.cells.values())[0].name == "I(0)"
    assert cw0.arrows == [] and cw0.tau_links == []
    cw = knit_preinjective(qf, qf.vertex_by_label("3"))
    assert cw.cell_count() == 4
    names = sorted(c.name for c in cw.cells.values())
    assert names == ["I(2)", "I(3)", "I(4)", "τ·I(3)"]
    assert len(cw.arrows) == 4 and len(cw.tau_links) == 1
    arrows = {(a, b) for a, b, _ in cw.arrows}
    assert arrows == {
        (("2", 0), ("3", 0)),
        (("4", 0), ("3", 0)),
        (("3", 1), ("2", 0)),
        (("3", 1), ("4", 0)),
    }
    with pytest.raises(BadSeed):
        knit_preinjective(qf, qf.vertex_by_label("1"))


def test_preinjective_count_matches_qplus_on_crafted_quivers(qf):
    crafted = [
        qf,
        a_inf(period=["out", "in"]),
        a_inf(),
        a_inf(period=["in"]),
        qc_quiver(),
        d_inf(period=["in"]),
    ]
    for q in crafted:
        comps = q.q_plus_components()
        # one preinjective component per Q^+ component: knit each root
        roots = [c["vertices"][0] for c in comps]
        for r in roots:
            cw = knit_preinjective(q, q.vertex_by_label(r), depth=2, width=4)
            assert cw.cell_count() >= 1


def test_wing_knit_exact(qc):
    cw = knit_component(qc, ("regular", StringRep(qc, MINUS_INF, 2)))
    assert cw.shape == {"tag": "Wing", "n": 3}
    assert cw.cell_count() == 6
    assert not cw.truncated
    names = sorted(c.name for c in cw.cells.values())
    assert names == [
        "Mець" if False else "M少" if False else "M([-inf,4])",
        "M([-inf,5])",
        "M([3,5])",
        "M(p_inf)",
        "M(p_{4,3})",
        "S(5)",
    ]
    # additivity at each interior mesh
    mids = {}
    for a, b, mult in cw.arrows:
        mids.setdefault(b, []).append((a, mult))
    for x, taux in cw.tau_links:
        lv = cw.cells[taux].dim_value
        xv = cw.cells[x].dim_value
        if lv == INF or xv == INF:
            continue
        tot = 0
        infinite = False
        for a, m in mids.get(x, []):
            if cw.cells[a].dim_value == INF:
                infinite = True
            else:
                tot += m * cw.cells[a].dim_value
        if not infinite:
            assert lv + xv == tot


def test_component_shapes(qc):
    assert component_shape(qc, StringRep(qc, 3, 4))["tag"] == "Wing"
    assert component_shape(qc, SimpleRep(qc, qc.vertex_by_label(0)))["tag"] == "ZAinf"
    # regular witnesses per orientation: a simple at a middle point when one
    # exists, else the string of a maximal arrow off the branch vertex
    for word, witness, shape in [
        (("out", "in"), ("string", 3, 4), "ZAinf"),
        (("in",), ("simple", 3), "NAinf"),
        (("out",), ("simple", 3), "NminusAinf"),
    ]:
        q = d_inf(period=list(word))
        if witness[0] == "simple":
            m = SimpleRep(q, q.vertex_by_label(witness[1]))
        else:
            m = StringRep(q, witness[1], witness[2])
        got = component_shape(q, m)
        assert got["tag"] == shape, (word, got)


def test_census_truth_table(qc):
    # A_inf, six orientations: always 0 regular
    orientations = [
        ((), ("out",)),
        ((), ("in",)),
        ((), ("out", "in")),
        ((), ("in", "out")),
        (("in", "in"), ("out",)),
        (("out",), ("in",)),
    ]
    for prefix, period in orientations:
        q = a_inf(prefix=prefix, period=period)
        c = regular_census(q)
        assert c["regular"] == 0, (prefix, period)
    # QC: wing + ZA_inf
    c = regular_census(qc)
    assert c["regular"] == 2
    shapes = sorted(b["shape"] for b in c["breakdown"])
    assert shapes == ["Wing", "ZAinf"]
    wing = [b for b in c["breakdown"] if b["shape"] == "Wing"][0]
    assert wing["n"] == 3
    # D_inf three profiles
    for word, shape in [
        (("out", "in"), "ZAinf"),
        (("in",), "NAinf"),
        (("out",), "NminusAinf"),
    ]:
        c = regular_census(d_inf(period=list(word)))
        assert c["regular"] == 1 and c["breakdown"][0]["shape"] == shape
    # a wild infinite sample with both-sided infinite paths: wing family
    wild = build_quiver(
        {
            "core": {
                "vertices": ["a", "b"],
                "arrows": [
                    {"from": "a", "to": "b", "label": "x"},
                    {"from": "a", "to": "b", "label": "y"},
                    {"from": "a", "to": "b", "label": "z"},
                ],
            },
            "tails": [
                {"attach": "a", "period": ["in"], "name": "in_t"},
                {"attach": "b", "period": ["out"], "name": "out_t"},
            ],
        }
    )
    c = regular_census(wild)
    assert c["regular"] == "infinite"
    assert c["breakdown"][0]["shape"] == "Wing"
    # finite types
    assert regular_census(finite_quiver([1, 2], [(1, 2)]))["regular"] == 0
    assert regular_census(kronecker_quiver())["breakdown"][0]["shape"] == "Tube"


def test_census_agrees_with_component_shape(qc):
    c = regular_census(qc)
    got = {component_shape(qc, StringRep(qc, 3, 4))["tag"], component_shape(qc, SimpleRep(qc, qc.vertex_by_label(1)))["tag"]}
    assert got == {b["shape"] for b in c["breakdown"]}


def test_capability_table(qc):
    rows = [
        (a_inf(period=["out", "in"]), True, True),  # no infinite path
        (a_inf(), False, True),  # right-only
        (a_inf(prefix=["out"], period=["in"]), True, False),  # left-only, not a path
        (a_inf(period=["in"]), True, True),  # the left infinite path itself
        (a_biinf(neg=((), ("in",)), pos=((), ("out",))), False, True),  # double path
        (qc, False, False),  # both-sided, not a path
    ]
    for q, left, right in rows:
        caps = ar_capabilities(q)
        assert caps["rep_plus_left_AR"] == left
        assert caps["rep_plus_right_AR"] == right
        assert caps["rep_plus_AR"] == (left and right)


def test_disconnected_errors():
    q = finite_quiver([1, 2], [])
    with pytest.raises(Disconnected):
        regular_census(q)
    with pytest.raises(Disconnected):
        ar_capabilities(q)
