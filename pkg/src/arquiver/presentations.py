"""Minimal projective presentations of finitely presented representations.

A presentation is the data of a minimal exact sequence
0 -> (+)_j P_{y_j} --f--> (+)_i P_{x_i} -> M -> 0 with im(f) inside the
radical; the (i, j) entry of f is a k-linear combination of paths
x_i ~> y_j.  Syzygy vertices outside supp M are exactly the immediate
successors of supp M (top generators of the kernel cannot sit farther out).
"""

from .errors import NotFinitelyPresented
from .linalg import Matrix, echelon, rank, rank_kernel, solve
from .quiver import MINUS_INF, OUT, PLUS_INF, is_tail
from .reps import (
    DInfRep,
    ProjRep,
    Rep,
    RepSum,
    SimpleRep,
    StringRep,
    WindowRep,
    ZeroRep,
    _rad_bases,
)


class Presentation:
    def __init__(self, qu, tops, gens, syzygies, entries, depth):
        self.qu = qu
        self.tops = list(tops)  # vertices (with multiplicity)
        self.gens = list(gens)  # per top: generator vector in M(x) coords
        self.syzygies = list(syzygies)
        self.entries = dict(entries)  # (i, j) -> [(coeff, path)]
        self.depth = dict(depth)

    def entry(self, i, j):
        return self.entries.get((i, j), [])

    def path_vertices(self):
        for combos in self.entries.values():
            for _, path in combos:
                for a in path:
                    yield a[0]
                    yield a[1]

    def to_json(self):
        return {
            "tops": [self.qu.label(x) for x in self.tops],
            "syzygies": [self.qu.label(y) for y in self.syzygies],
            "map": {
                f"{i},{j}": [
                    {"coeff": str(c), "path": [a[2] for a in p]} for c, p in combos
                ]
                for (i, j), combos in sorted(self.entries.items())
            },
        }


def minimal_presentation(m):
    """Dispatch on the representation family; raises NotFinitelyPresented
    when M has no finite presentation (e.g. infinite dimensional injectives)."""
    qu = m.qu
    if isinstance(m, ZeroRep):
        return Presentation(qu, [], [], [], {}, {t.tid: 1 for t in qu.tails})
    if isinstance(m, ProjRep):
        f = qu.field
        return Presentation(
            qu, [m.x], [[f.one]], [], {}, {t.tid: 1 for t in qu.tails}
        )
    if isinstance(m, RepSum):
        return _sum_presentation(m)
    if isinstance(m, StringRep) and qu.classify()[1] in ("A_inf", "A_biinf"):
        return _string_presentation_type_a(m)
    # generic window algorithm; valid when, beyond the window, every nonzero
    # tail of M is an eventually-constant all-out ray on which the structure
    # maps are isomorphisms (true for every fp family constructed here)
    for t in qu.tails:
        tw = m.tail_word(t.tid)
        if tw.is_zero():
            continue
        if len(set(tw.word)) != 1 or not t.word.eventually_constant(OUT):
            raise NotFinitelyPresented(
                "support runs along a tail that is not an eventual right "
                "infinite path",
                tail=t.name,
            )
    return _generic_presentation(m)


def _sum_presentation(m):
    parts = [minimal_presentation(p) for p in m.parts]
    qu = m.qu
    tops, gens, syzygies, entries = [], [], [], {}
    depth = {t.tid: 1 for t in qu.tails}
    for p in parts:
        ti = len(tops)
        sj = len(syzygies)
        tops.extend(p.tops)
        gens.extend(p.gens)
        syzygies.extend(p.syzygies)
        for (i, j), combos in p.entries.items():
            entries[(ti + i, sj + j)] = combos
        for tid, d in p.depth.items():
            depth[tid] = max(depth[tid], d)
    return Presentation(qu, tops, gens, syzygies, entries, depth)


def _string_presentation_type_a(m):
    """Interval rule on the canonical line: tops are the sources of Q(w);
    syzygies are the interior sinks plus, at each finite end with an arrow
    leaving the support, the immediate successor outside."""
    qu = m.qu
    ch = m.chart
    f = qu.field
    lo, hi = m.lo, m.hi
    # working bounds: beyond these every ray edge points toward the core, so
    # no further sources or sinks can occur (string validity guarantees this)
    wlo = int(lo) if lo != MINUS_INF else _ray_floor(ch, hi)
    whi = int(hi) if hi != PLUS_INF else _ray_ceil(ch, lo)

    def d(k):
        return ch.dir_right(k)

    sources = [
        s
        for s in range(wlo, whi + 1)
        if (s == lo or not d(s - 1)) and (s == hi or d(s))
    ]
    tops = [ch.vertex(s) for s in sources]
    gens = [[f.one] for _ in sources]
    syz = []
    entries = {}

    def add_entry(i, j, coeff, patharrows):
        entries.setdefault((i, j), []).append((f(coeff), tuple(patharrows)))

    j = 0
    # interior sinks between consecutive sources
    for k in range(len(sources) - 1):
        s0, s1 = sources[k], sources[k + 1]
        sinks = [t for t in range(s0 + 1, s1) if d(t - 1) and not d(t)]
        assert len(sinks) == 1, (sources, lo, hi)
        t = sinks[0]
        syz.append(ch.vertex(t))
        add_entry(k, j, 1, ch.path_arrows(s0, t))
        add_entry(k + 1, j, -1, ch.path_arrows(s1, t))
        j += 1
    # boundary syzygies at finite ends with an arrow leaving the support
    if lo != MINUS_INF and ch.in_range(lo - 1) and not d(lo - 1):
        syz.append(ch.vertex(lo - 1))
        add_entry(0, j, 1, ch.path_arrows(sources[0], lo - 1))
        j += 1
    if hi != PLUS_INF and d(hi):
        syz.append(ch.vertex(hi + 1))
        add_entry(len(sources) - 1, j, 1, ch.path_arrows(sources[-1], hi + 1))
        j += 1
    depth = {t.tid: m.stable_onset(t.tid) + 1 for t in qu.tails}
    return Presentation(qu, tops, gens, syz, entries, depth)


def _ray_floor(ch, hi):
    """A position below which every edge of the down-ray points down."""
    for t in ch.q.tails:
        sign, off = ch.tail_pos.get(t.tid, (None, None))
        if sign == -1:
            floor = off - (len(t.word.prefix) + len(t.word.period) + 1)
            cap = (int(hi) if hi != PLUS_INF else 0) - 1
            return min(floor, cap)
    raise AssertionError("no downward ray on this chart")


def _ray_ceil(ch, lo):
    """A position above which every edge of the up-ray points up."""
    for t in ch.q.tails:
        sign, off = ch.tail_pos.get(t.tid, (None, None))
        if sign == 1:
            ceil = off + len(t.word.prefix) + len(t.word.period) + 1
            cap = (int(lo) if lo != MINUS_INF else 0) + 1
            return max(ceil, cap)
    raise AssertionError("no upward ray on this chart")


def _generic_presentation(m):
    qu = m.qu
    f = qu.field
    depth = {t.tid: m.stable_onset(t.tid) + 1 for t in qu.tails}
    wm = m.materialize(depth)
    tops, gens = _top_generators(wm)
    if not tops:
        if any(d for d in wm.dims.values()):
            raise NotFinitelyPresented("no top generators found inside window")
        return Presentation(qu, [], [], [], {}, depth)
    # widen the window so the projective covers stabilize past it
    for x in tops:
        px = ProjRep(qu, x)
        for t in qu.tails:
            depth[t.tid] = max(depth[t.tid], px.stable_onset(t.tid) + 1)
    wm = m.materialize(depth)
    verts = list(wm.vertices)
    pms = [ProjRep(qu, x).materialize(depth) for x in tops]
    pbases = [
        {v: qu.paths_between(x, v) for v in verts} for x in tops
    ]

    def cover_matrix(z):
        cols = []
        for i, x in enumerate(tops):
            for rho in pbases[i][z]:
                vec = gens[i]
                for a in rho:
                    vec = wm.mat(a).apply(vec)
                cols.append(vec)
        mat = Matrix(f, wm.dims[z], len(cols))
        for j, col in enumerate(cols):
            for r, val in enumerate(col):
                mat[r, j] = val
        return mat

    kern = {}
    for z in verts:
        mat = cover_matrix(z)
        if mat.rows and rank(mat) < wm.dims[z]:
            raise NotFinitelyPresented("top generators do not cover M")
        _, kb = rank_kernel(mat)
        kern[z] = kb
    # rad K(z) = sum over arrows a: z' -> z of P0(a)(K(z'))
    p0 = None
    dims0 = {z: sum(len(pbases[i][z]) for i in range(len(tops))) for z in verts}

    def p0_mat(a):
        blocks = [pm.mat(a) for pm in pms]
        from .linalg import block_diag

        return block_diag(f, blocks)

    syz = []
    syzvecs = []
    for z in sorted(verts, key=qu.label):
        if not kern[z]:
            continue
        rows = []
        for a in qu.arrows_in(z):
            if a[0] not in wm.dims:
                continue
            if not kern[a[0]]:
                continue
            mat = p0_mat(a)
            for vec in kern[a[0]]:
                rows.append(mat.apply(vec))
        radk = []
        if rows:
            rmat = Matrix(f, len(rows), dims0[z])
            rmat.a = [r[:] for r in rows]
            _, radk = echelon(rmat)
        # K(z)-coordinates of rad K(z)
        in_k = []
        for rv in radk:
            kmat = Matrix(f, dims0[z], len(kern[z]))
            for j, b in enumerate(kern[z]):
                for i, x in enumerate(b):
                    kmat[i, j] = x
            sol = solve(kmat, rv)
            assert sol is not None
            in_k.append(sol)
        q = len(kern[z]) - len(in_k)
        if q == 0:
            continue
        # complement standard K-coordinates
        chosen = [r[:] for r in in_k]
        for j in range(len(kern[z])):
            e = [f.one if i == j else f.zero for i in range(len(kern[z]))]
            probe = Matrix(f, len(chosen) + 1, len(kern[z]))
            probe.a = [c[:] for c in chosen] + [e]
            if rank(probe) == len(chosen) + 1:
                chosen.append(e)
                syz.append(z)
                syzvecs.append(kern[z][j])
    entries = {}
    for j, (y, vec) in enumerate(zip(syz, syzvecs)):
        off = 0
        for i, x in enumerate(tops):
            for rho in pbases[i][y]:
                c = vec[off]
                off += 1
                if not f.eq(c, f.zero):
                    if not rho:
                        raise NotFinitelyPresented("kernel meets a top (non-minimal)")
                    entries.setdefault((i, j), []).append((c, rho))
    return Presentation(qu, tops, gens, syz, entries, depth)


def _top_generators(wm):
    """Deterministic lifted basis of top M = M / rad M."""
    f = wm.qu.field
    rad = _rad_bases(wm)
    tops, gens = [], []
    for v in sorted(wm.vertices, key=wm.qu.label):
        d = wm.dims[v]
        if d == 0:
            continue
        chosen = [b[:] for b in rad.get(v, [])]
        for j in range(d):
            e = [f.one if i == j else f.zero for i in range(d)]
            probe = Matrix(f, len(chosen) + 1, d)
            probe.a = [c[:] for c in chosen] + [e]
            if rank(probe) == len(chosen) + 1:
                chosen.append(e)
                tops.append(v)
                gens.append(e)
    return tops, gens


def presentation_audit(m, pres, depth=None):
    """Exactness audit: dim M(z) = sum dim P_x(z) - sum dim P_y(z) on a
    window, and the same for the exact tail words."""
    qu = m.qu
    dv = m.dim_vector(depth or 0)
    total = dv
    ok = True
    probe = {
        t.tid: max(pres.depth.get(t.tid, 1), m.stable_onset(t.tid)) + 1
        for t in qu.tails
    }
    for z in qu.window_vertices(probe):
        want = m.dim_at(z)
        got = sum(qu.count_paths(x, z) for x in pres.tops) - sum(
            qu.count_paths(y, z) for y in pres.syzygies
        )
        if want != got:
            ok = False
    return ok
