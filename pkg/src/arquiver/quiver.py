"""Finite encodings of (possibly infinite) strongly locally finite quivers.

A quiver is a finite acyclic core plus finitely many "tails": half-infinite
lines whose edge orientations are given by an eventually-periodic word over
{out, in} ("out" points away from the core).  This is the decidability
boundary of the package: every infinite quiver handled here is of this
ray-extended form.

Vertices are ("c", name) for core vertices and ("t", tail_index, i) with
i >= 1 for tail vertices; tail vertex 0 is identified with the attach point.
"""

from .errors import (
    CoreCycle,
    DanglingArrow,
    Disconnected,
    EmptyPeriod,
    UnknownVertex,
    WrongType,
)
from .linalg import QQ, field_from_name

OUT = "out"
IN = "in"

PLUS_INF = float("inf")
MINUS_INF = float("-inf")


def core_v(name):
    return ("c", str(name))


def tail_v(tid, i):
    assert i >= 1
    return ("t", tid, i)


def is_tail(v):
    return v[0] == "t"


class OrientationWord:
    """Eventually periodic word over {out, in}; letter(n) is edge n's direction."""

    def __init__(self, prefix, period):
        prefix = tuple(prefix)
        period = tuple(period)
        if not period:
            raise EmptyPeriod("tail orientation period must be nonempty")
        for c in prefix + period:
            if c not in (OUT, IN):
                raise EmptyPeriod(f"bad orientation letter {c!r}")
        self.prefix = prefix
        self.period = period

    def letter(self, n):
        if n < len(self.prefix):
            return self.prefix[n]
        return self.period[(n - len(self.prefix)) % len(self.period)]

    def flipped(self):
        flip = {OUT: IN, IN: OUT}
        return OrientationWord(
            [flip[c] for c in self.prefix], [flip[c] for c in self.period]
        )

    def first_at_least(self, n, letter):
        """Least index >= n whose letter equals `letter`, or None if none exists."""
        for k in range(n, len(self.prefix)):
            if self.prefix[k] == letter:
                return k
        if letter not in self.period:
            return None
        start = max(n, len(self.prefix))
        for k in range(start, start + len(self.period)):
            if self.letter(k) == letter:
                return k
        raise AssertionError

    def eventually_constant(self, letter):
        """True iff all letters from some point on equal `letter`."""
        other = OUT if letter == IN else IN
        return other not in self.period

    def all_equal(self, letter, lo, hi):
        """True iff letters lo..hi-1 all equal `letter` (hi may be inf)."""
        if hi == PLUS_INF:
            return self.eventually_constant(letter) and self.first_at_least(
                lo, OUT if letter == IN else IN
            ) is None
        return all(self.letter(k) == letter for k in range(lo, int(hi)))

    def to_json(self):
        return {"prefix": list(self.prefix), "period": list(self.period)}


class Tail:
    def __init__(self, tid, attach, word, label_a=None, label_b=None, name=None):
        self.tid = tid
        self.attach = attach  # a core vertex
        self.word = word
        # optional affine labelling: vertex i renders as label_a*i + label_b
        self.label_a = label_a
        self.label_b = label_b
        self.name = name if name is not None else f"t{tid}"

    def edge_arrow(self, n):
        """The arrow of edge n (connecting tail vertex n and n+1; vertex 0 = attach)."""
        lo = self.attach if n == 0 else tail_v(self.tid, n)
        hi = tail_v(self.tid, n + 1)
        label = f"{self.name}.{n}"
        if self.word.letter(n) == OUT:
            return (lo, hi, label)
        return (hi, lo, label)


class Quiver:
    """Validated ray-extended quiver.  Immutable after construction."""

    def __init__(self, core_vertices, core_arrows, tails, shorthand=None, field=QQ):
        self.core_vertices = [core_v(x) for x in core_vertices]
        self.core_names = [v[1] for v in self.core_vertices]
        self.core_arrows = list(core_arrows)  # (src, tgt, label) over core vertices
        self.tails = tails
        self.shorthand = shorthand
        self.field = field
        self._out = {v: [] for v in self.core_vertices}
        self._in = {v: [] for v in self.core_vertices}
        for a in self.core_arrows:
            self._out[a[0]].append(a)
            self._in[a[1]].append(a)
        self._validate()
        self._chart = None
        self._class = None

    # -- validation ---------------------------------------------------------

    def _validate(self):
        names = set()
        for v in self.core_vertices:
            if v[1] in names:
                raise DanglingArrow(f"duplicate core vertex {v[1]!r}")
            names.add(v[1])
        for a in self.core_arrows:
            for end in (a[0], a[1]):
                if end not in self._out:
                    raise DanglingArrow(f"arrow endpoint {end} not declared")
        for t in self.tails:
            if t.attach not in self._out:
                raise DanglingArrow(f"tail attach {t.attach} not declared")
        # core acyclicity (DFS with stack-based cycle witness)
        color = {}
        for start in self.core_vertices:
            if color.get(start):
                continue
            stack = [(start, iter(self._out[start]))]
            color[start] = 1
            path = [start]
            while stack:
                v, it = stack[-1]
                adv = next(it, None)
                if adv is None:
                    color[v] = 2
                    stack.pop()
                    path.pop()
                    continue
                w = adv[1]
                if color.get(w) == 1:
                    cyc = path[path.index(w) :] + [w]
                    raise CoreCycle(
                        "core has an oriented cycle",
                        cycle=[x[1] for x in cyc],
                    )
                if not color.get(w):
                    color[w] = 1
                    stack.append((w, iter(self._out[w])))
                    path.append(w)

    # -- basic structure ----------------------------------------------------

    def has_vertex(self, v):
        if v[0] == "c":
            return v in self._out
        return v[0] == "t" and 0 <= v[1] < len(self.tails) and v[2] >= 1

    def check_vertex(self, v):
        if not self.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v}")

    def arrows_out(self, v):
        out = []
        if v[0] == "c":
            out.extend(self._out[v])
            for t in self.tails:
                if t.attach == v:
                    a = t.edge_arrow(0)
                    if a[0] == v:
                        out.append(a)
        else:
            _, tid, i = v
            t = self.tails[tid]
            a = t.edge_arrow(i)
            if a[0] == v:
                out.append(a)
            b = t.edge_arrow(i - 1)
            if b[0] == v:
                out.append(b)
        return out

    def arrows_in(self, v):
        inn = []
        if v[0] == "c":
            inn.extend(self._in[v])
            for t in self.tails:
                if t.attach == v:
                    a = t.edge_arrow(0)
                    if a[1] == v:
                        inn.append(a)
        else:
            _, tid, i = v
            t = self.tails[tid]
            a = t.edge_arrow(i)
            if a[1] == v:
                inn.append(a)
            b = t.edge_arrow(i - 1)
            if b[1] == v:
                inn.append(b)
        return inn

    def weight(self, v):
        return len(self.arrows_out(v)) + len(self.arrows_in(v))

    # -- labels -------------------------------------------------------------

    def label(self, v):
        if v[0] == "c":
            return v[1]
        _, tid, i = v
        t = self.tails[tid]
        if t.label_a is not None:
            return str(t.label_a * i + t.label_b)
        return f"{t.name}:{i}"

    def vertex_by_label(self, s):
        s = str(s)
        if core_v(s) in self._out:
            return core_v(s)
        for t in self.tails:
            if t.label_a is not None:
                try:
                    n = int(s)
                except ValueError:
                    continue
                if (n - t.label_b) % t.label_a == 0:
                    i = (n - t.label_b) // t.label_a
                    if i >= 1:
                        return tail_v(t.tid, i)
            if s.startswith(t.name + ":"):
                i = int(s.split(":", 1)[1])
                if i >= 1:
                    return tail_v(t.tid, i)
        raise UnknownVertex(f"no vertex labelled {s!r}")

    # -- windows ------------------------------------------------------------

    def window_vertices(self, depth):
        """All core vertices plus tail vertices up to the given depth.

        depth is an int (uniform) or a dict tail id -> depth.
        """
        vs = list(self.core_vertices)
        for t in self.tails:
            d = depth if isinstance(depth, int) else depth.get(t.tid, 0)
            vs.extend(tail_v(t.tid, i) for i in range(1, d + 1))
        return vs

    def arrows_within(self, vertex_set):
        vset = set(vertex_set)
        arrows = [a for a in self.core_arrows if a[0] in vset and a[1] in vset]
        for t in self.tails:
            n = 0
            while True:
                a = t.edge_arrow(n)
                hi = tail_v(t.tid, n + 1)
                if hi not in vset:
                    break
                arrows.append(a)
                n += 1
        return arrows

    # -- paths ---------------------------------------------------------------

    def paths_between(self, x, y):
        """The full finite set Q(x, y), ordered by (length, arrow labels).

        A path is a tuple of arrows; the trivial path is the empty tuple and
        is returned exactly when x == y.
        """
        self.check_vertex(x)
        self.check_vertex(y)
        # region a path x ~> y may visit: core plus the tails of x and y,
        # truncated at their indices (paths along a tail are monotone)
        allowed_tail = {}
        for v in (x, y):
            if v[0] == "t":
                allowed_tail[v[1]] = max(allowed_tail.get(v[1], 0), v[2])
        results = []
        stack = [(x, [])]
        while stack:
            v, acc = stack.pop()
            if v == y:
                # acyclicity: no path leaves y and returns, so stop here
                results.append(tuple(acc))
                continue
            for a in self.arrows_out(v):
                w = a[1]
                if w[0] == "t":
                    cap = allowed_tail.get(w[1])
                    if cap is None or w[2] > cap:
                        continue
                stack.append((w, acc + [a]))
        results.sort(key=lambda p: (len(p), tuple(a[2] for a in p)))
        return results

    def count_paths(self, x, y):
        return len(self.paths_between(x, y))

    # -- infinite path analysis ----------------------------------------------

    def infinite_path_profile(self):
        """Flags for existence of right/left infinite paths, with witnesses.

        A tail carries a right (left) infinite path iff its orientation word
        is eventually constant out (in); the witness records the onset index.
        """
        right = []
        left = []
        for t in self.tails:
            if t.word.eventually_constant(OUT):
                onset = t.word.first_at_least(0, IN)
                onset = 0 if onset is None else _last_letter(t.word, IN) + 1
                right.append({"tail": t.name, "from_edge": onset})
            if t.word.eventually_constant(IN):
                onset = t.word.first_at_least(0, OUT)
                onset = 0 if onset is None else _last_letter(t.word, OUT) + 1
                left.append({"tail": t.name, "from_edge": onset})
        return {
            "has_right_infinite": bool(right),
            "has_left_infinite": bool(left),
            "right_witnesses": right,
            "left_witnesses": left,
        }

    # -- Q^+ ------------------------------------------------------------------

    def _feeding_tails(self):
        """Tails all of whose edges point in: they pour a left infinite path
        into their attach point."""
        return [
            t
            for t in self.tails
            if OUT not in t.word.prefix and t.word.eventually_constant(IN)
        ]

    def in_q_plus(self, v):
        """True iff v has finitely many predecessors (is in Q^+)."""
        self.check_vertex(v)
        feeders = self._feeding_tails()
        if v[0] == "t":
            _, tid, i = v
            t = self.tails[tid]
            # infinitely many predecessors within the tail itself
            if t.word.eventually_constant(IN) and t.word.first_at_least(i, OUT) is None:
                return False
            # reachable from the core at all?
            if not t.word.all_equal(OUT, 0, i):
                return True
            anchor = t.attach
        else:
            anchor = v
        for f in feeders:
            if self.count_paths(f.attach, anchor) > 0:
                return False
        return True

    def q_plus_components(self, tail_depth=6):
        """Connected components of Q^+ within a window.

        Returns a list of dicts {"vertices": [labels], "rays": [tail names]},
        where "rays" lists tails all of whose vertices past the window depth
        also belong to Q^+ (so the component continues along that ray).
        """
        verts = [v for v in self.window_vertices(tail_depth) if self.in_q_plus(v)]
        vset = set(verts)
        adj = {v: set() for v in verts}
        for a in self.arrows_within(vset):
            adj[a[0]].add(a[1])
            adj[a[1]].add(a[0])
        rays = {}
        for t in self.tails:
            deep = tail_v(t.tid, tail_depth)
            if deep in vset and self._tail_eventually_in_qplus(t, tail_depth):
                rays[deep] = t.name
        seen = set()
        comps = []
        for v in sorted(verts, key=lambda u: _label_sort_key(self.label(u))):
            if v in seen:
                continue
            comp = []
            comp_rays = []
            stack = [v]
            seen.add(v)
            while stack:
                w = stack.pop()
                comp.append(w)
                if w in rays:
                    comp_rays.append(rays[w])
                for u in adj[w]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            comps.append(
                {
                    "vertices": sorted(
                        (self.label(u) for u in comp), key=_label_sort_key
                    ),
                    "rays": sorted(comp_rays),
                }
            )
        return comps

    def _tail_eventually_in_qplus(self, t, depth):
        """True iff Tail(t, i) is in Q^+ for every i > depth."""
        # beyond the prefix the verdict of in_q_plus is constant in i once
        # i clears both the prefix and one period
        i = len(t.word.prefix) + len(t.word.period) + depth + 1
        return self.in_q_plus(tail_v(t.tid, i))

    # -- opposite -------------------------------------------------------------

    def opposite(self):
        tails = [
            Tail(t.tid, t.attach, t.word.flipped(), t.label_a, t.label_b, t.name)
            for t in self.tails
        ]
        q = Quiver(
            [v[1] for v in self.core_vertices],
            [(a[1], a[0], a[2]) for a in self.core_arrows],
            tails,
            shorthand=None,
            field=self.field,
        )
        return q

    # -- connectivity and classification --------------------------------------

    def is_connected(self):
        if not self.core_vertices:
            return False
        adj = {v: set() for v in self.core_vertices}
        for a in self.core_arrows:
            adj[a[0]].add(a[1])
            adj[a[1]].add(a[0])
        seen = {self.core_vertices[0]}
        stack = [self.core_vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.core_vertices)

    def classify(self):
        """Underlying-graph classification; requires connectivity."""
        if self._class is not None:
            return self._class
        if not self.is_connected():
            raise Disconnected("classification requires a connected quiver")
        self._class = self._classify()
        return self._class

    def _classify(self):
        deg = {v: 0 for v in self.core_vertices}
        multi = False
        edges = {}
        for a in self.core_arrows:
            deg[a[0]] += 1
            deg[a[1]] += 1
            key = tuple(sorted((a[0], a[1])))
            edges[key] = edges.get(key, 0) + 1
            if edges[key] > 1 or a[0] == a[1]:
                multi = True
        for t in self.tails:
            deg[t.attach] += 1
        if not self.tails:
            return self._classify_finite(deg, multi)
        if multi:
            return ("InfiniteGeneral", None)
        degs = sorted(deg.values(), reverse=True)
        leaves = [v for v, d in deg.items() if d <= 1]
        if len(self.tails) == 1:
            if degs[0] <= 2 and self._core_is_path():
                # degree bound forces the tail to sit at an end of the core path
                return ("InfDynkin", "A_inf")
            if degs[0] == 3 and degs.count(3) == 1:
                c = [v for v, d in deg.items() if d == 3][0]
                adj_leaves = [
                    v
                    for v in leaves
                    if any(
                        (a[0] == v and a[1] == c) or (a[1] == v and a[0] == c)
                        for a in self.core_arrows
                    )
                ]
                if len(adj_leaves) == 2 and self._dinf_spine_ok(c, adj_leaves):
                    return ("InfDynkin", "D_inf")
            return ("InfiniteGeneral", None)
        if len(self.tails) == 2:
            if degs[0] <= 2 and self._core_is_path():
                return ("InfDynkin", "A_biinf")
            return ("InfiniteGeneral", None)
        return ("InfiniteGeneral", None)

    def _core_is_path(self):
        # connected + acyclic underlying + max degree 2 => path graph
        und = {v: set() for v in self.core_vertices}
        ecount = 0
        for a in self.core_arrows:
            if a[1] in und[a[0]]:
                return False
            und[a[0]].add(a[1])
            und[a[1]].add(a[0])
            ecount += 1
        if ecount != len(self.core_vertices) - 1:
            return False
        return all(len(s) <= 2 for s in und.values())

    def _dinf_spine_ok(self, center, fork_leaves):
        # removing the two fork leaves must leave a path from center to the tail
        rest = [v for v in self.core_vertices if v not in fork_leaves]
        und = {v: set() for v in rest}
        for a in self.core_arrows:
            if a[0] in und and a[1] in und:
                und[a[0]].add(a[1])
                und[a[1]].add(a[0])
        if any(len(s) > 2 for s in und.values()):
            return False
        if len(und.get(center, ())) > 1:
            return False
        return self.tails[0].attach in rest

    def _classify_finite(self, deg, multi):
        n = len(self.core_vertices)
        e = len(self.core_arrows)
        if multi or e > n - 1:
            # underlying graph has a cycle or multi-edge
            if n == 2 and e == 2:
                return ("FiniteEuclidean", "A~1")
            if e == n:
                return ("FiniteEuclidean", "A~")
            return ("FiniteWild", None)
        degs = sorted(deg.values(), reverse=True)
        if degs[0] <= 2:
            return ("FiniteDynkin", f"A_{n}")
        if degs[0] == 4 and degs.count(4) == 1 and degs[1] <= 2:
            c = [v for v, d in deg.items() if d == 4][0]
            if sorted(self._arm_lengths(c)) == [1, 1, 1, 1]:
                return ("FiniteEuclidean", "D~4")
            return ("FiniteWild", None)
        if degs[0] == 3 and degs.count(3) == 1:
            c = [v for v, d in deg.items() if d == 3][0]
            arm_lengths = sorted(self._arm_lengths(c))
            if arm_lengths[0] == 1 and arm_lengths[1] == 1:
                return ("FiniteDynkin", f"D_{n}")
            if arm_lengths == [1, 2, 2]:
                return ("FiniteDynkin", "E_6")
            if arm_lengths == [1, 2, 3]:
                return ("FiniteDynkin", "E_7")
            if arm_lengths == [1, 2, 4]:
                return ("FiniteDynkin", "E_8")
            if arm_lengths == [2, 2, 2]:
                return ("FiniteEuclidean", "E~6")
            if arm_lengths == [1, 3, 3]:
                return ("FiniteEuclidean", "E~7")
            if arm_lengths == [1, 2, 5]:
                return ("FiniteEuclidean", "E~8")
            return ("FiniteWild", None)
        if degs[0] == 3 and degs.count(3) == 2:
            cs = [v for v, d in deg.items() if d == 3]
            if all(sorted(self._arm_lengths(c))[:2] == [1, 1] for c in cs):
                return ("FiniteEuclidean", f"D~{n - 1}")
            return ("FiniteWild", None)
        return ("FiniteWild", None)

    def _arm_lengths(self, center):
        und = {v: set() for v in self.core_vertices}
        for a in self.core_arrows:
            und[a[0]].add(a[1])
            und[a[1]].add(a[0])
        lengths = []
        for w in und[center]:
            ln = 1
            prev, cur = center, w
            while True:
                nxt = [u for u in und[cur] if u != prev]
                if len(nxt) != 1:
                    break
                prev, cur = cur, nxt[0]
                ln += 1
            lengths.append(ln)
        return lengths

    # -- canonical chart -------------------------------------------------------

    def chart(self):
        """Integer chart for infinite Dynkin quivers (see LineChart)."""
        if self._chart is None:
            kind, sub = self.classify()
            if kind != "InfDynkin":
                raise WrongType("canonical chart requires an infinite Dynkin quiver")
            self._chart = LineChart(self, sub)
        return self._chart

    # -- (de)serialization ------------------------------------------------------

    def to_json(self):
        out = {
            "core": {
                "vertices": [v[1] for v in self.core_vertices],
                "arrows": [
                    {"from": a[0][1], "to": a[1][1], "label": a[2]}
                    for a in self.core_arrows
                ],
            },
            "tails": [
                {
                    "attach": t.attach[1],
                    "prefix": list(t.word.prefix),
                    "period": list(t.word.period),
                    "name": t.name,
                    **(
                        {"labels": {"a": t.label_a, "b": t.label_b}}
                        if t.label_a is not None
                        else {}
                    ),
                }
                for t in self.tails
            ],
        }
        if self.shorthand:
            out["shorthand"] = self.shorthand
        return out


def _last_letter(word, letter):
    last = -1
    for k, c in enumerate(word.prefix):
        if c == letter:
            last = k
    return last


def _label_sort_key(s):
    try:
        return (0, int(s), s)
    except ValueError:
        return (1, 0, s)


class LineChart:
    """Integer coordinates on the line part of an infinite Dynkin quiver.

    For A_inf positions run over 0,1,2,..., for A_biinf over all of ZZ, and
    for D_inf over 2,3,4,... with the two fork vertices at labels 0 and 1.
    dir_right(n) tells whether the edge between n and n+1 points right
    (arrow n -> n+1).
    """

    def __init__(self, quiver, subtype):
        self.q = quiver
        self.subtype = subtype
        if subtype == "A_inf":
            self._init_a_inf()
        elif subtype == "A_biinf":
            self._init_a_biinf()
        else:
            self._init_d_inf()

    def _init_a_inf(self):
        deg = {v: 0 for v in self.q.core_vertices}
        for a in self.q.core_arrows:
            deg[a[0]] += 1
            deg[a[1]] += 1
        t = self.q.tails[0]
        deg[t.attach] += 1
        ends = [v for v, d in deg.items() if d <= 1]
        start = ends[0] if ends else t.attach
        self.core_order = self._walk_core(start)
        assert self.core_order[-1] == t.attach
        self.lo = 0
        self.tail_pos = {}  # tid -> (sign, offset)
        self.tail_pos[0] = (1, len(self.core_order) - 1)
        self.fork = {}

    def _init_a_biinf(self):
        t0, t1 = self.q.tails
        self.core_order = self._walk_core(t0.attach)
        assert self.core_order[-1] == t1.attach or len(self.core_order) == 1
        if self.q.shorthand and self.q.shorthand.get("type") == "A_biinf":
            origin = int(self.q.shorthand.get("origin", 0))
        else:
            # keep chart positions aligned with integer vertex labels
            try:
                origin = int(self.core_order[0][1])
            except ValueError:
                origin = 0
        # neg tail = tails[0] at core position 0, pos tail at the far end
        self.offset = origin
        self.lo = MINUS_INF
        self.tail_pos = {
            t0.tid: (-1, origin),
            t1.tid: (1, origin + len(self.core_order) - 1),
        }
        self.fork = {}

    def _init_d_inf(self):
        deg = {v: 0 for v in self.q.core_vertices}
        und = {v: set() for v in self.q.core_vertices}
        for a in self.q.core_arrows:
            deg[a[0]] += 1
            deg[a[1]] += 1
            und[a[0]].add(a[1])
            und[a[1]].add(a[0])
        t = self.q.tails[0]
        deg[t.attach] += 1
        center = [v for v, d in deg.items() if d == 3][0]
        leaves = sorted(
            [v for v in und[center] if deg[v] == 1], key=lambda v: _label_sort_key(v[1])
        )
        assert len(leaves) == 2
        self.fork = {0: leaves[0], 1: leaves[1]}
        spine = [center]
        prev, cur = None, center
        while True:
            nxt = [u for u in und[cur] if u != prev and u not in leaves]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            spine.append(cur)
        assert spine[-1] == t.attach
        self.core_order = spine
        self.lo = 2
        self.tail_pos = {0: (1, 1 + len(spine))}

    def _walk_core(self, start):
        und = {v: set() for v in self.q.core_vertices}
        for a in self.q.core_arrows:
            und[a[0]].add(a[1])
            und[a[1]].add(a[0])
        order = [start]
        prev, cur = None, start
        while True:
            nxt = [u for u in und[cur] if u != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            order.append(cur)
        return order

    # position <-> vertex

    def base(self):
        """Chart position of core_order[0]."""
        if self.subtype == "A_inf":
            return 0
        if self.subtype == "A_biinf":
            return self.offset
        return 2

    def vertex(self, n):
        base = self.base()
        k = n - base
        if 0 <= k < len(self.core_order):
            return self.core_order[k]
        for tid, (sign, off) in self.tail_pos.items():
            i = sign * (n - off)
            if i >= 1:
                return tail_v(tid, i)
        raise UnknownVertex(f"no chart position {n}")

    def position(self, v):
        """Chart position of v, or None for a fork vertex / off-chart vertex."""
        for f, w in self.fork.items():
            if v == w:
                return None
        base = self.base()
        if v[0] == "c":
            if v in self.core_order:
                return base + self.core_order.index(v)
            raise UnknownVertex(f"{v} not on chart")
        _, tid, i = v
        sign, off = self.tail_pos[tid]
        return off + sign * i

    def fork_vertex(self, f):
        return self.fork[f]

    def in_range(self, n):
        return n >= self.lo

    def edge_arrow(self, n):
        """The arrow object of the edge between positions n and n+1."""
        base = self.base()
        k = n - base
        if 0 <= k < len(self.core_order) - 1:
            u, w = self.core_order[k], self.core_order[k + 1]
            for a in self.q.core_arrows:
                if (a[0], a[1]) in ((u, w), (w, u)):
                    return a
            raise AssertionError
        for tid, (sign, off) in self.tail_pos.items():
            t = self.q.tails[tid]
            if sign == 1 and n >= off:
                return t.edge_arrow(n - off)
            if sign == -1 and n + 1 <= off:
                return t.edge_arrow(off - n - 1)
        raise UnknownVertex(f"no chart edge at {n}")

    def path_arrows(self, a, b):
        """The arrows of the unique monotone path from position a to b."""
        if a <= b:
            return tuple(self.edge_arrow(k) for k in range(a, b))
        return tuple(self.edge_arrow(k) for k in range(a - 1, b - 1, -1))

    def fork_arrow(self, f):
        """The arrow joining fork leaf f to the branch vertex (D_inf only)."""
        w = self.fork[f]
        for a in self.q.core_arrows:
            if a[0] == w or a[1] == w:
                return a
        raise AssertionError

    def dir_right(self, n):
        """True iff the edge between positions n and n+1 is the arrow n -> n+1."""
        base = self.base()
        k = n - base
        if 0 <= k < len(self.core_order) - 1:
            u, w = self.core_order[k], self.core_order[k + 1]
            for a in self.q.core_arrows:
                if (a[0], a[1]) == (u, w):
                    return True
                if (a[0], a[1]) == (w, u):
                    return False
            raise AssertionError
        for tid, (sign, off) in self.tail_pos.items():
            t = self.q.tails[tid]
            if sign == 1 and n >= off:
                return t.word.letter(n - off) == OUT
            if sign == -1 and n + 1 <= off:
                return t.word.letter(off - n - 1) == IN
        raise UnknownVertex(f"no chart edge at {n}")

    # reachability intervals (exact, using eventual periodicity)

    def first_dir_at_least(self, n, right):
        """Least k >= n with dir_right(k) == right, or None if none."""
        base = self.base()
        core_hi = base + len(self.core_order) - 1
        k = n
        while k < core_hi:
            if self.dir_right(k) == right:
                return k
            k += 1
        # on the positive tail
        for tid, (sign, off) in self.tail_pos.items():
            if sign != 1:
                continue
            t = self.q.tails[tid]
            letter = OUT if right else IN
            e = t.word.first_at_least(max(k - off, 0), letter)
            return None if e is None else off + e
        return None

    def last_dir_at_most(self, n, right):
        """Greatest k <= n with dir_right(k) == right, or None if none."""
        base = self.base()
        k = n
        # core and positive-tail region: scan explicitly (window-bounded)
        while k >= base:
            if self.dir_right(k) == right:
                return k
            k -= 1
        if self.lo != MINUS_INF:
            return None
        # negative tail: edge at position k is tail edge off-1-k
        for tid, (sign, off) in self.tail_pos.items():
            if sign != -1:
                continue
            t = self.q.tails[tid]
            letter = IN if right else OUT
            e = t.word.first_at_least(max(off - 1 - k, 0), letter)
            return None if e is None else off - 1 - e
        return None

    def reach_right(self, n):
        """Largest m with a path n -> n+1 -> ... -> m (possibly +inf)."""
        k = self.first_dir_at_least(n, right=False)
        return PLUS_INF if k is None else k

    def reach_left(self, n):
        """Smallest m with a path n -> n-1 -> ... -> m (possibly -inf)."""
        k = self.last_dir_at_most(n - 1, right=True)
        if k is None:
            return self.lo if self.lo != MINUS_INF else MINUS_INF
        return k + 1

    def coreach_right(self, n):
        """Largest m with a path m -> ... -> n coming from the right."""
        k = self.first_dir_at_least(n, right=True)
        return PLUS_INF if k is None else k

    def coreach_left(self, n):
        """Smallest m with a path m -> ... -> n coming from the left."""
        k = self.last_dir_at_most(n - 1, right=False)
        if k is None:
            return self.lo if self.lo != MINUS_INF else MINUS_INF
        return k + 1


# -- construction from JSON specs ---------------------------------------------


def _word_from_json(d):
    return OrientationWord(d.get("prefix", []), d["period"])


def _compile_shorthand(sh):
    kind = sh.get("type")
    if kind == "A_inf":
        word = _word_from_json(sh.get("word", sh))
        tails = [Tail(0, core_v(0), word, label_a=1, label_b=0, name="ray")]
        return ["0"], [], tails
    if kind == "A_biinf":
        origin = int(sh.get("origin", 0))
        neg = _word_from_json(sh["neg"])
        pos = _word_from_json(sh["pos"])
        tails = [
            Tail(0, core_v(origin), neg, label_a=-1, label_b=origin, name="neg"),
            Tail(1, core_v(origin), pos, label_a=1, label_b=origin, name="pos"),
        ]
        return [str(origin)], [], tails
    if kind == "D_inf":
        a0 = sh.get("arrow0", "2->0")
        a1 = sh.get("arrow1", "2->1")
        word = _word_from_json(sh.get("tail", sh.get("word", sh)))
        arrows = []
        for spec, label in ((a0, "f0"), (a1, "f1")):
            src, tgt = spec.split("->")
            arrows.append((core_v(src.strip()), core_v(tgt.strip()), label))
        tails = [Tail(0, core_v(2), word, label_a=1, label_b=2, name="spine")]
        return ["0", "1", "2"], arrows, tails
    raise WrongType(f"unknown shorthand type {kind!r}")


def build_quiver(spec, field=QQ):
    """Validate a quiver-spec dict (the documented JSON schema) into a Quiver."""
    if "shorthand" in spec and "core" not in spec:
        names, arrows, tails = _compile_shorthand(spec["shorthand"])
        return Quiver(names, arrows, tails, shorthand=spec["shorthand"], field=field)
    core = spec.get("core", {})
    names = [str(x) for x in core.get("vertices", [])]
    arrows = []
    for i, a in enumerate(core.get("arrows", [])):
        arrows.append(
            (core_v(a["from"]), core_v(a["to"]), str(a.get("label", f"a{i}")))
        )
    tails = []
    for i, t in enumerate(spec.get("tails", [])):
        labels = t.get("labels")
        tails.append(
            Tail(
                i,
                core_v(t["attach"]),
                OrientationWord(t.get("prefix", []), t["period"]),
                label_a=labels["a"] if labels else None,
                label_b=labels["b"] if labels else None,
                name=t.get("name", f"t{i}"),
            )
        )
    return Quiver(names, arrows, tails, shorthand=spec.get("shorthand"), field=field)


def a_inf(prefix=(), period=(OUT,), field=QQ):
    return build_quiver(
        {"shorthand": {"type": "A_inf", "word": {"prefix": list(prefix), "period": list(period)}}},
        field=field,
    )


def a_biinf(neg, pos, origin=0, field=QQ):
    return build_quiver(
        {
            "shorthand": {
                "type": "A_biinf",
                "origin": origin,
                "neg": {"prefix": list(neg[0]), "period": list(neg[1])},
                "pos": {"prefix": list(pos[0]), "period": list(pos[1])},
            }
        },
        field=field,
    )


def d_inf(arrow0="2->0", arrow1="2->1", prefix=(), period=(OUT,), field=QQ):
    return build_quiver(
        {
            "shorthand": {
                "type": "D_inf",
                "arrow0": arrow0,
                "arrow1": arrow1,
                "tail": {"prefix": list(prefix), "period": list(period)},
            }
        },
        field=field,
    )


def qc_quiver(field=QQ):
    """The worked A_biinf example: ... <-0 <-1 <-2 ->3 <-4 ->5 ->6 <-7 <-8 ..."""
    return a_biinf(
        neg=((), (OUT,)),
        pos=((OUT, IN, OUT, OUT), (IN,)),
        origin=2,
        field=field,
    )


def finite_quiver(vertices, arrows, field=QQ):
    """A finite quiver: arrows as (src_name, tgt_name[, label]) triples."""
    arrs = []
    for i, a in enumerate(arrows):
        label = a[2] if len(a) > 2 else f"a{i}"
        arrs.append((core_v(a[0]), core_v(a[1]), str(label)))
    return Quiver([str(v) for v in vertices], arrs, [], field=field)


def kronecker_quiver(field=QQ):
    return finite_quiver(["a", "b"], [("a", "b", "alpha"), ("a", "b", "beta")], field=field)
