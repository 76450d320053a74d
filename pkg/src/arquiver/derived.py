"""The bounded derived category layer: stalk objects M[i], the three
families of almost split triangles, shift-crossing irreducible morphisms,
the connecting component, and the existence predicates.

Every object splits into stalks (the category is hereditary), so no chain
complex machinery is needed: a derived object is a representation with an
integer shift, and Hom(X[i], Y[j]) vanishes unless i <= j <= i+1.
"""

from .ar import Unavailable, almost_split, ar_translate
from .components import CellInfo, ComponentWindow, knit_preinjective, knit_preprojective
from .errors import Disconnected, NotIndecomposable
from .quiver import PLUS_INF
from .reps import (
    InjRep,
    ProjRep,
    RepSum,
    SimpleRep,
    is_indecomposable,
    is_isomorphic,
    rad_top_soc,
)

INF = PLUS_INF


class DerivedObject:
    def __init__(self, rep, shift=0):
        self.rep = rep
        self.shift = shift

    def shifted(self, k):
        return DerivedObject(self.rep, self.shift + k)

    def name(self):
        base = self.rep.name()
        return base if self.shift == 0 else f"{base}[{self.shift}]"

    def to_json(self):
        return {"rep": self.rep.to_json(), "shift": self.shift, "name": self.name()}


class Triangle:
    """X -> Y -> Z -> X[1] with Y a list of derived-object summands."""

    def __init__(self, x, middle, z, family, sequence=None):
        self.x = x
        self.middle = middle
        self.z = z
        self.family = family  # "FromASS" | "Connecting"
        self.sequence = sequence  # underlying ARSequence for FromASS

    def shifted(self, k):
        return Triangle(
            self.x.shifted(k),
            [m.shifted(k) for m in self.middle],
            self.z.shifted(k),
            self.family,
            self.sequence,
        )

    def to_json(self):
        return {
            "family": self.family,
            "start": self.x.to_json(),
            "middle": [m.to_json() for m in self.middle],
            "end": self.z.to_json(),
            "shift_of_end": self.x.shift + 1,
        }


def _connecting_triangle(qu, x, shift):
    """I_x[shift] -> (I_x/S_x)[shift] (+) (rad P_x)[shift+1] -> P_x[shift+1]
    -> I_x[shift+1], for x in Q^+."""
    quo_parts = [InjRep(qu, a[0]) for a in sorted(qu.arrows_in(x), key=lambda a: a[2])]
    rad_parts = [ProjRep(qu, a[1]) for a in sorted(qu.arrows_out(x), key=lambda a: a[2])]
    middle = [DerivedObject(p, shift) for p in quo_parts] + [
        DerivedObject(p, shift + 1) for p in rad_parts
    ]
    return Triangle(
        DerivedObject(InjRep(qu, x), shift),
        middle,
        DerivedObject(ProjRep(qu, x), shift + 1),
        "Connecting",
    )


def derived_ar_triangle(obj, side="ending_at"):
    """The almost split triangle ending (or starting) at the given stalk."""
    m = obj.rep
    qu = m.qu
    if not is_indecomposable(m):
        raise NotIndecomposable("triangle endpoints must be indecomposable")
    if side == "ending_at":
        if isinstance(m, ProjRep):
            if not qu.in_q_plus(m.x):
                return Unavailable(
                    "XNotInQPlus",
                    detail=f"I({qu.label(m.x)}) is infinite dimensional",
                )
            # the connecting triangle, shifted to end at P_x[shift]
            return _connecting_triangle(qu, m.x, obj.shift - 1)
        seq = almost_split(m, "ending_at")
        if isinstance(seq, Unavailable):
            return seq
        return Triangle(
            DerivedObject(seq.left, obj.shift),
            [DerivedObject(p, obj.shift) for p in seq.middle],
            DerivedObject(seq.right, obj.shift),
            "FromASS",
            seq,
        )
    if side != "starting_at":
        raise ValueError(f"unknown side {side!r}")
    if isinstance(m, InjRep):
        if not qu.in_q_plus(m.x):
            return Unavailable("XNotInQPlus")
        return _connecting_triangle(qu, m.x, obj.shift)
    if not m.is_finite_dimensional():
        return Unavailable("InfiniteDimStart")
    seq = almost_split(m, "starting_at")
    if isinstance(seq, Unavailable):
        if seq.reason == "Injective":
            # a non-standard injective object of rep^+ cannot start a triangle
            return seq
        return seq
    return Triangle(
        DerivedObject(seq.left, obj.shift),
        [DerivedObject(p, obj.shift) for p in seq.middle],
        DerivedObject(seq.right, obj.shift),
        "FromASS",
        seq,
    )


def derived_irr_shift(m, n):
    """True iff D^b(rep^+) has an irreducible morphism M -> N[1]: exactly
    when M = I_x for some x in Q^+ and N is a summand of rad P_x."""
    qu = m.qu
    if not isinstance(m, InjRep):
        if isinstance(m, SimpleRep):
            # S_x = I_x exactly when x has no proper predecessor
            if not qu.arrows_in(m.x):
                m = InjRep(qu, m.x)
            else:
                return False
        else:
            return False
    if not qu.in_q_plus(m.x):
        return False
    for a in qu.arrows_out(m.x):
        cand = ProjRep(qu, a[1])
        try:
            if is_isomorphic(n, cand):
                return True
        except Exception:
            continue
    return False


# ---------------------------------------------------------------------------
# the connecting component
# ---------------------------------------------------------------------------


def connecting_window(qu, depth=3, width=6):
    """The preprojective component glued with the (-1)-shifted preinjective
    components: d_xy arrows I_x[-1] -> P_y per arrow x -> y with x in Q^+,
    and tau_D P_x = I_x[-1] for x in Q^+."""
    if not qu.is_connected():
        raise Disconnected("the connecting component needs a connected quiver")
    pre = knit_preprojective(qu, depth, width)
    shape = _connecting_shape(qu)
    cw = ComponentWindow("Connecting", shape)
    cw.truncated = pre.truncated
    for (lbl, n), cell in pre.cells.items():
        cw.add_cell(("P:" + lbl, n), cell)
    for a, b, mult in pre.arrows:
        cw.add_arrow(("P:" + a[0], a[1]), ("P:" + b[0], b[1]), mult)
    for a, b in pre.tau_links:
        cw.add_tau(("P:" + a[0], a[1]), ("P:" + b[0], b[1]))
    seen_roots = set()
    for comp in qu.q_plus_components(tail_depth=width):
        root = comp["vertices"][0]
        if root in seen_roots:
            continue
        seen_roots.add(root)
        inj = knit_preinjective(qu, qu.vertex_by_label(root), depth, width)
        cw.truncated = cw.truncated or inj.truncated
        for (lbl, n), cell in inj.cells.items():
            shifted = CellInfo(
                f"{cell.name}[-1]", cell.dim_value, dict(cell.flags), cell.rep
            )
            cw.add_cell(("I:" + lbl, n), shifted)
        for a, b, mult in inj.arrows:
            cw.add_arrow(("I:" + a[0], a[1]), ("I:" + b[0], b[1]), mult)
        for a, b in inj.tau_links:
            cw.add_tau(("I:" + a[0], a[1]), ("I:" + b[0], b[1]))
    # gluing arrows I_x[-1] -> P_y per arrow x -> y with x in Q^+
    for v in qu.window_vertices(width):
        if not qu.in_q_plus(v):
            continue
        for a in qu.arrows_out(v):
            y = a[1]
            cw.add_arrow(("I:" + qu.label(v), 0), ("P:" + qu.label(y), 0))
        # tau_D of P_x is I_x[-1]
        cw.add_tau(("P:" + qu.label(v), 0), ("I:" + qu.label(v), 0))
    return cw


def _connecting_shape(qu):
    if not qu.tails:
        return {"tag": "ZQop"}
    prof = qu.infinite_path_profile()
    if not prof["has_left_infinite"] and not prof["has_right_infinite"]:
        return {"tag": "ZQop"}
    if prof["has_right_infinite"] and not prof["has_left_infinite"]:
        return {"tag": "NminusDelta", "delta": "right-most section of the preprojective component"}
    if prof["has_left_infinite"] and not prof["has_right_infinite"]:
        return {"tag": "ZQopRightStable"}
    return {"tag": "Glued"}


def derived_capabilities(qu):
    """D^b(rep^+) has left (right) almost split triangles iff Q has no right
    (left) infinite path; both iff Q has no infinite path at all."""
    if not qu.is_connected():
        raise Disconnected("capabilities need a connected quiver")
    if not qu.tails:
        return {"left_AST": True, "right_AST": True, "AST": True}
    prof = qu.infinite_path_profile()
    left = not prof["has_right_infinite"]
    right = not prof["has_left_infinite"]
    return {"left_AST": left, "right_AST": right, "AST": left and right}
