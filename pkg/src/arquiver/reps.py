"""Representations: the standard families, strings, the D-infinity family,
window representations, dimension vectors with exact tail asymptotics, and
the basic functors (restriction, duality, Hom/Ext, decomposition).

Infinite-dimensional representations are kept symbolic; their dimension
vectors carry, per tail, an eventually periodic word that is computed
exactly from the tail's orientation word (never sampled with a cutoff).
"""

from fractions import Fraction

from .errors import (
    InvalidString,
    NotIndecomposable,
    ReduciblePolynomial,
    Undecided,
    UnknownVertex,
    UnboundedInteraction,
    WrongQuiver,
    WrongType,
)
from .linalg import Matrix, block_diag, echelon, invertible, rank, rank_kernel
from .quiver import (
    IN,
    MINUS_INF,
    OUT,
    PLUS_INF,
    core_v,
    is_tail,
    tail_v,
)

INF = PLUS_INF


class TailWord:
    """Values of a dimension vector along one tail from `onset` onwards:
    value(i) = word[(i - onset) % len(word)] for i >= onset."""

    __slots__ = ("onset", "word")

    def __init__(self, onset, word):
        self.onset = onset
        self.word = tuple(word)
        assert self.word

    @classmethod
    def zero(cls):
        return cls(1, (0,))

    @classmethod
    def constant(cls, c, onset=1):
        return cls(onset, (c,))

    def value(self, i):
        assert i >= self.onset
        return self.word[(i - self.onset) % len(self.word)]

    def is_zero(self):
        return all(x == 0 for x in self.word)

    def combine(self, other, fn):
        onset = max(self.onset, other.onset)
        n = _lcm(len(self.word), len(other.word))
        return TailWord(onset, [fn(self.value(onset + k), other.value(onset + k)) for k in range(n)])

    def eq(self, other):
        onset = max(self.onset, other.onset)
        n = _lcm(len(self.word), len(other.word))
        return all(self.value(onset + k) == other.value(onset + k) for k in range(n))

    def to_json(self):
        return {"onset": self.onset, "word": list(self.word)}


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


class DimVector:
    """Window values plus per-tail asymptotics.

    `values` maps vertices to ints and must cover every tail index below its
    word's onset; `tails` maps tail id -> TailWord.
    """

    def __init__(self, qu, values, tails):
        self.qu = qu
        self.values = dict(values)
        self.tails = dict(tails)
        for t in qu.tails:
            self.tails.setdefault(t.tid, TailWord.zero())

    def at(self, v):
        if v in self.values:
            return self.values[v]
        if is_tail(v):
            tw = self.tails[v[1]]
            if v[2] >= tw.onset:
                return tw.value(v[2])
        raise UnknownVertex(f"dimension at {v} not covered by this vector")

    def total(self):
        s = 0
        for tid, tw in self.tails.items():
            if not tw.is_zero():
                return INF
        for v, d in self.values.items():
            if not is_tail(v) or v[2] < self.tails[v[1]].onset:
                s += d
        return s

    def is_finite(self):
        return all(tw.is_zero() for tw in self.tails.values())

    def combine(self, other, fn):
        assert self.qu is other.qu
        tails = {
            tid: self.tails[tid].combine(other.tails[tid], fn) for tid in self.tails
        }
        verts = set(self.values) | set(other.values)
        values = {}
        for v in verts:
            values[v] = fn(self._at_or_word(v), other._at_or_word(v))
        return DimVector(self.qu, values, tails)

    def _at_or_word(self, v):
        try:
            return self.at(v)
        except UnknownVertex:
            raise

    def add(self, other):
        return self.combine(other, lambda a, b: a + b)

    def sub(self, other):
        return self.combine(other, lambda a, b: a - b)

    def eq(self, other):
        if self.qu is not other.qu and self.qu.to_json() != other.qu.to_json():
            return False
        for tid in self.tails:
            if not self.tails[tid].eq(other.tails[tid]):
                return False
        for v in set(self.values) | set(other.values):
            if self.at(v) != other.at(v):
                return False
        return True

    def support_values(self):
        return {v: d for v, d in self.values.items() if d}

    def min_value(self):
        vals = [d for d in self.values.values()]
        vals += [x for tw in self.tails.values() for x in tw.word]
        return min(vals) if vals else 0

    def to_json(self):
        vals = {
            self.qu.label(v): d
            for v, d in sorted(self.values.items(), key=lambda kv: self.qu.label(kv[0]))
            if d or not is_tail(v)
        }
        return {
            "window": vals,
            "tails": {
                self.qu.tails[tid].name: tw.to_json()
                for tid, tw in sorted(self.tails.items())
            },
        }


# ---------------------------------------------------------------------------
# representation variants
# ---------------------------------------------------------------------------


class Rep:
    kind = "abstract"

    def __init__(self, qu):
        self.qu = qu

    # window depth from which every tail word of this rep is stable
    def stable_onset(self, tid):
        raise NotImplementedError

    def dim_at(self, v):
        raise NotImplementedError

    def tail_word(self, tid):
        raise NotImplementedError

    def name(self):
        raise NotImplementedError

    def dim_vector(self, depth=0):
        d = {}
        for t in self.qu.tails:
            d[t.tid] = max(depth if isinstance(depth, int) else depth.get(t.tid, 0),
                           self.stable_onset(t.tid))
        values = {v: self.dim_at(v) for v in self.qu.window_vertices(d)}
        tails = {t.tid: self.tail_word(t.tid) for t in self.qu.tails}
        for t in self.qu.tails:
            tw = tails[t.tid]
            if tw.onset <= d[t.tid]:
                tails[t.tid] = TailWord(d[t.tid] + 1, [tw.value(d[t.tid] + 1 + k) for k in range(len(tw.word))])
        return DimVector(self.qu, values, tails)

    def is_finite_dimensional(self):
        return all(self.tail_word(t.tid).is_zero() for t in self.qu.tails)

    def total_dim(self):
        return self.dim_vector().total()

    def support_depths(self, extra=0):
        """Tail depths past which the dims are given by the tail word."""
        return {t.tid: self.stable_onset(t.tid) + extra for t in self.qu.tails}

    def materialize(self, depth=None):
        raise NotImplementedError

    def to_json(self):
        return {
            "kind": self.kind,
            "name": self.name(),
            "dim_vector": self.dim_vector().to_json(),
            "finite_dimensional": self.is_finite_dimensional(),
        }


class ZeroRep(Rep):
    kind = "zero"

    def stable_onset(self, tid):
        return 1

    def dim_at(self, v):
        return 0

    def tail_word(self, tid):
        return TailWord.zero()

    def name(self):
        return "0"

    def materialize(self, depth=None):
        return WindowRep(self.qu, self.qu.window_vertices(depth or 0), {}, {})


class ProjRep(Rep):
    kind = "proj"

    def __init__(self, qu, x):
        super().__init__(qu)
        qu.check_vertex(x)
        self.x = x

    def stable_onset(self, tid):
        t = self.qu.tails[tid]
        base = len(t.word.prefix) + len(t.word.period)
        if is_tail(self.x) and self.x[1] == tid:
            base = max(base, self.x[2] + 1)
        return base + 1

    def dim_at(self, v):
        return self.qu.count_paths(self.x, v)

    def tail_word(self, tid):
        onset = self.stable_onset(tid)
        t = self.qu.tails[tid]
        probe = self.dim_at(tail_v(tid, onset))
        if probe == 0:
            return TailWord(onset, (0,))
        # value stays while edges keep pointing out
        nxt_in = t.word.first_at_least(onset, IN)
        if nxt_in is None:
            return TailWord(onset, (probe,))
        return TailWord(nxt_in + 1, (0,))

    def name(self):
        return f"P({self.qu.label(self.x)})"

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        verts = self.qu.window_vertices(depth)
        basis = {v: self.qu.paths_between(self.x, v) for v in verts}
        dims = {v: len(basis[v]) for v in verts}
        mats = {}
        f = self.qu.field
        for a in self.qu.arrows_within(verts):
            src, tgt = a[0], a[1]
            if dims[src] == 0 or dims[tgt] == 0:
                continue
            m = Matrix(f, dims[tgt], dims[src])
            tindex = {p: i for i, p in enumerate(basis[tgt])}
            for j, p in enumerate(basis[src]):
                q = p + (a,)
                if q in tindex:
                    m[tindex[q], j] = f.one
            mats[a] = m
        return WindowRep(self.qu, verts, dims, mats)


class InjRep(Rep):
    kind = "inj"

    def __init__(self, qu, x):
        super().__init__(qu)
        qu.check_vertex(x)
        self.x = x

    def stable_onset(self, tid):
        t = self.qu.tails[tid]
        base = len(t.word.prefix) + len(t.word.period)
        if is_tail(self.x) and self.x[1] == tid:
            base = max(base, self.x[2] + 1)
        return base + 1

    def dim_at(self, v):
        return self.qu.count_paths(v, self.x)

    def tail_word(self, tid):
        onset = self.stable_onset(tid)
        t = self.qu.tails[tid]
        probe = self.dim_at(tail_v(tid, onset))
        if probe == 0:
            return TailWord(onset, (0,))
        nxt_out = t.word.first_at_least(onset, OUT)
        if nxt_out is None:
            return TailWord(onset, (probe,))
        return TailWord(nxt_out + 1, (0,))

    def name(self):
        return f"I({self.qu.label(self.x)})"

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        verts = self.qu.window_vertices(depth)
        basis = {v: self.qu.paths_between(v, self.x) for v in verts}
        dims = {v: len(basis[v]) for v in verts}
        mats = {}
        f = self.qu.field
        for a in self.qu.arrows_within(verts):
            src, tgt = a[0], a[1]
            if dims[src] == 0 or dims[tgt] == 0:
                continue
            # I_x(alpha): path starting with alpha maps to its tail, rest to 0
            m = Matrix(f, dims[tgt], dims[src])
            tindex = {p: i for i, p in enumerate(basis[tgt])}
            for j, p in enumerate(basis[src]):
                if p and p[0] == a:
                    m[tindex[p[1:]], j] = f.one
            mats[a] = m
        return WindowRep(self.qu, verts, dims, mats)


class SimpleRep(Rep):
    kind = "simple"

    def __init__(self, qu, x):
        super().__init__(qu)
        qu.check_vertex(x)
        self.x = x

    def stable_onset(self, tid):
        if is_tail(self.x) and self.x[1] == tid:
            return self.x[2] + 1
        return 1

    def dim_at(self, v):
        return 1 if v == self.x else 0

    def tail_word(self, tid):
        return TailWord(self.stable_onset(tid), (0,))

    def name(self):
        return f"S({self.qu.label(self.x)})"

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        verts = self.qu.window_vertices(depth)
        dims = {v: self.dim_at(v) for v in verts}
        return WindowRep(self.qu, verts, dims, {})


class StringRep(Rep):
    """Thin representation of a reduced walk on an infinite Dynkin quiver.

    Stored in a normalized chart form: a support interval [lo, hi] on the
    canonical integer chart (lo may be -inf, hi may be +inf) plus, on D_inf,
    an optional fork leaf (0 or 1).  M(w) = M(w^{-1}) holds by construction.
    """

    kind = "string"

    def __init__(self, qu, lo, hi, fork=None):
        super().__init__(qu)
        self.chart = qu.chart()
        kind, sub = qu.classify()
        self.lo = lo
        self.hi = hi
        self.fork = fork
        self._validate(sub)

    def _validate(self, sub):
        ch = self.chart
        if self.fork is not None:
            if sub != "D_inf":
                raise InvalidString("fork ends only exist on D_inf quivers")
            if self.hi != PLUS_INF and self.hi < 2:
                raise InvalidString("a fork string must cover the branch vertex")
            if self.lo != 2:
                raise InvalidString("a fork string starts at the branch vertex")
        if self.lo != MINUS_INF and not ch.in_range(self.lo):
            raise InvalidString(f"position {self.lo} not on the chart")
        if self.lo != MINUS_INF and self.hi != PLUS_INF and self.lo > self.hi:
            raise InvalidString("empty support")
        if self.lo == MINUS_INF and ch.lo != MINUS_INF:
            raise InvalidString("chart is bounded below")
        if self.lo == MINUS_INF and self.hi == PLUS_INF:
            raise InvalidString("a string may not be a double infinite walk")
        # an infinite end must eventually be a right infinite path (else the
        # walk either has a left infinite path or infinitely many sinks, and
        # M(w) would not be finitely presented)
        if self.lo == MINUS_INF and not self._tail_word_by_sign(-1).eventually_constant(OUT):
            raise InvalidString("walk has a left infinite path or infinitely many sinks")
        if self.hi == PLUS_INF and not self._tail_word_by_sign(1).eventually_constant(OUT):
            raise InvalidString("walk has a left infinite path or infinitely many sinks")

    def _tail_word_by_sign(self, sign):
        for t in self.qu.tails:
            s, _ = self.chart.tail_pos.get(t.tid, (None, None))
            if s == sign:
                return t.word
        raise InvalidString("no tail in that direction")

    def stable_onset(self, tid):
        t = self.qu.tails[tid]
        base = len(t.word.prefix) + len(t.word.period) + 1
        ch = self.chart
        sign, off = ch.tail_pos[tid]
        for b in (self.lo, self.hi):
            if b not in (MINUS_INF, PLUS_INF):
                i = sign * (b - off)
                base = max(base, i + 1)
        return base

    def _contains_pos(self, p):
        lo_ok = self.lo == MINUS_INF or p >= self.lo
        hi_ok = self.hi == PLUS_INF or p <= self.hi
        return lo_ok and hi_ok

    def dim_at(self, v):
        ch = self.chart
        for f, w in ch.fork.items():
            if v == w:
                return 1 if self.fork == f else 0
        p = ch.position(v)
        return 1 if self._contains_pos(p) else 0

    def tail_word(self, tid):
        onset = self.stable_onset(tid)
        return TailWord(onset, (self.dim_at(tail_v(tid, onset)),))

    def interval_str(self):
        lo = "-inf" if self.lo == MINUS_INF else str(self.lo)
        hi = "+inf" if self.hi == PLUS_INF else str(self.hi)
        if self.fork is not None:
            return f"{self.fork}|[{lo},{hi}]"
        return f"[{lo},{hi}]"

    def name(self):
        ch = self.chart
        if self.fork is None and self.lo == self.hi:
            return f"S({self.lo})"
        if self.fork is not None and self.lo > self.hi:
            return f"S({self.fork})"
        if self.fork is None:
            # a directed path renders in the paper's p_{start,end} style
            if self.lo != MINUS_INF and self.hi != PLUS_INF:
                dirs = {ch.dir_right(k) for k in range(self.lo, self.hi)}
                if dirs == {True}:
                    return f"M(p_{{{self.lo},{self.hi}}})"
                if dirs == {False}:
                    return f"M(p_{{{self.hi},{self.lo}}})"
            if self.lo == MINUS_INF and self._is_unique_ray():
                return "M(p_inf)"
        return f"M({self.interval_str()})"

    def _is_unique_ray(self):
        # ray going down from hi with all edges pointing down, and it is the
        # quiver's only maximal infinite path with a starting point
        ch = self.chart
        if ch.last_dir_at_most(self.hi - 1, right=True) is not None:
            return False
        prof = self.qu.infinite_path_profile()
        return len(prof["right_witnesses"]) == 1

    def walk_vertices(self, window=8):
        lo = self.lo if self.lo != MINUS_INF else min(self.hi, 0) - window
        hi = self.hi if self.hi != PLUS_INF else max(self.lo, 0) + window
        out = []
        if self.fork is not None:
            out.append(self.chart.fork_vertex(self.fork))
        out.extend(self.chart.vertex(k) for k in range(int(lo), int(hi) + 1))
        return out

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        verts = self.qu.window_vertices(depth)
        dims = {v: self.dim_at(v) for v in verts}
        f = self.qu.field
        mats = {}
        one = Matrix(f, 1, 1, [[f.one]])
        for a in self.qu.arrows_within(verts):
            if dims[a[0]] and dims[a[1]]:
                mats[a] = one.copy()
        return WindowRep(self.qu, verts, dims, mats)


class DInfRep(Rep):
    """The sincere indecomposables N_{i,j} (j may be +inf) on a D_inf quiver.

    Dimension vector: 1 at both fork leaves, 2 at spine positions 2..i+1,
    1 at the following j positions, 0 beyond.
    """

    kind = "dinf"

    def __init__(self, qu, i, j):
        super().__init__(qu)
        kind, sub = qu.classify()
        if sub != "D_inf":
            raise WrongType("N(i,j) lives on D_inf quivers")
        if i < 0 or (j != INF and j < 1):
            raise WrongType("need i >= 0 and j >= 1")
        if j == INF and not qu.infinite_path_profile()["has_right_infinite"]:
            raise WrongType("N(i,inf) requires a right infinite path")
        self.i = i
        self.j = j
        self.chart = qu.chart()

    def stable_onset(self, tid):
        t = self.qu.tails[tid]
        base = len(t.word.prefix) + len(t.word.period) + 1
        if self.j != INF:
            sign, off = self.chart.tail_pos[tid]
            base = max(base, self.i + int(self.j) + 2 - off + 1)
        return base

    def dim_at(self, v):
        ch = self.chart
        for f, w in ch.fork.items():
            if v == w:
                return 1
        p = ch.position(v)
        if p <= self.i + 1:
            return 2
        hi = INF if self.j == INF else self.i + 1 + self.j
        return 1 if p <= hi else 0

    def tail_word(self, tid):
        onset = self.stable_onset(tid)
        return TailWord(onset, (self.dim_at(tail_v(tid, onset)),))

    def name(self):
        j = "inf" if self.j == INF else str(self.j)
        return f"N({self.i},{j})"

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        verts = self.qu.window_vertices(depth)
        dims = {v: self.dim_at(v) for v in verts}
        f = self.qu.field
        ch = self.chart
        mats = {}
        for a in self.qu.arrows_within(verts):
            src, tgt = a[0], a[1]
            ds, dt = dims[src], dims[tgt]
            if ds == 0 or dt == 0:
                continue
            if ds == dt:
                mats[a] = Matrix.identity(f, ds)
                continue
            # boundary between the 2-run and a 1-dimensional end
            which = None
            for fk, w in ch.fork.items():
                if src == w or tgt == w:
                    which = fk
            if which is None:
                which = "run_end"
            col = {0: [[1], [0]], 1: [[0], [1]], "run_end": [[1], [1]]}[which]
            row = {0: [[0, 1]], 1: [[1, 0]], "run_end": [[1, 1]]}[which]
            if ds == 1 and dt == 2:
                mats[a] = Matrix(f, 2, 1, col)
            else:
                mats[a] = Matrix(f, 1, 2, row)
        return WindowRep(self.qu, verts, dims, mats)


class WindowRep(Rep):
    """Explicit finite-dimensional representation supported inside a window."""

    kind = "window"

    def __init__(self, qu, vertices, dims, mats, label=None):
        super().__init__(qu)
        self.vertices = tuple(vertices)
        self.dims = {v: dims.get(v, 0) for v in self.vertices}
        self.mats = {}
        for a, m in mats.items():
            if m is not None and m.rows and m.cols and not m.is_zero():
                self.mats[a] = m
        self._label = label

    def mat(self, a):
        m = self.mats.get(a)
        if m is None:
            return Matrix(self.qu.field, self.dims.get(a[1], 0), self.dims.get(a[0], 0))
        return m

    def stable_onset(self, tid):
        deep = 1
        for v in self.vertices:
            if is_tail(v) and v[1] == tid:
                deep = max(deep, v[2] + 1)
        return deep

    def dim_at(self, v):
        if v in self.dims:
            return self.dims[v]
        if is_tail(v) and v[2] >= self.stable_onset(v[1]):
            return 0
        raise UnknownVertex(f"{v} outside window")

    def tail_word(self, tid):
        return TailWord(self.stable_onset(tid), (0,))

    def name(self):
        if self._label:
            return self._label
        sup = sorted(
            (self.qu.label(v) for v, d in self.dims.items() if d),
        )
        return f"W({','.join(sup)})" if sup else "0"

    def with_label(self, label):
        return WindowRep(self.qu, self.vertices, self.dims, self.mats, label=label)

    def materialize(self, depth=None):
        if depth is None:
            return self
        verts = self.qu.window_vertices(depth)
        if set(verts) >= {v for v, d in self.dims.items() if d}:
            dims = {v: self.dims.get(v, 0) for v in verts}
            mats = {a: m for a, m in self.mats.items() if a[0] in set(verts) and a[1] in set(verts)}
            return WindowRep(self.qu, verts, dims, mats, label=self._label)
        raise UnknownVertex("window too small for this representation")

    def is_zero(self):
        return all(d == 0 for d in self.dims.values())

    def total(self):
        return sum(self.dims.values())


# ---------------------------------------------------------------------------
# constructors (the spec's operations)
# ---------------------------------------------------------------------------


def standard_rep(qu, kind, x):
    qu.check_vertex(x)
    if kind == "proj":
        return ProjRep(qu, x)
    if kind == "inj":
        return InjRep(qu, x)
    if kind == "simple":
        return SimpleRep(qu, x)
    raise WrongType(f"unknown standard kind {kind!r}")


def string_rep_from_interval(qu, lo, hi, fork=None):
    return StringRep(qu, lo, hi, fork)


def string_rep_from_walk(qu, walk_labels):
    """Build M(w) from a list of vertex labels tracing the walk."""
    verts = [qu.vertex_by_label(s) for s in walk_labels]
    if not verts:
        raise InvalidString("empty walk")
    ch = qu.chart()
    fork = None
    positions = []
    for v in verts:
        hit = [f for f, w in ch.fork.items() if w == v]
        if hit:
            fork = hit[0]
        else:
            positions.append(ch.position(v))
    if not positions:
        # a single fork vertex: S(fork)
        return SimpleRep(qu, verts[0])
    lo, hi = min(positions), max(positions)
    if sorted(set(positions)) != list(range(lo, hi + 1)):
        raise InvalidString("walk must traverse a chart interval")
    return StringRep(qu, lo, hi, fork)


def dinf_rep(qu, i, j):
    return DInfRep(qu, i, j)


def rep_from_dims(qu, dv):
    """Recognize the indecomposable with dimension vector dv on an infinite
    Dynkin quiver (sound and complete there by dim-vector determinacy)."""
    kind, sub = qu.classify()
    if kind != "InfDynkin":
        raise WrongType("dim-vector recognition needs an infinite Dynkin quiver")
    ch = qu.chart()
    if sub == "D_inf":
        return _dinf_from_dims(qu, dv)
    support = sorted(
        ch.position(v) for v, d in dv.values.items() if d and _on_word_window(dv, v)
    )
    words_nonzero = {tid for tid, tw in dv.tails.items() if not tw.is_zero()}
    if not support and not words_nonzero:
        return ZeroRep(qu)
    for tid in words_nonzero:
        if set(dv.tails[tid].word) - {0, 1}:
            raise WrongType("not a thin tail word")
    if any(dv.values[v] not in (0, 1) for v in dv.values):
        raise WrongType("not a thin dimension vector")
    lo = min(support) if support else None
    hi = max(support) if support else None
    for tid in words_nonzero:
        sign, off = ch.tail_pos[tid]
        if sign == -1:
            lo = MINUS_INF
        else:
            hi = PLUS_INF
    if lo is None or hi is None:
        # support entirely beyond the window on one tail
        raise WrongType("support not visible in window")
    return StringRep(qu, lo, hi)


def _on_word_window(dv, v):
    if not is_tail(v):
        return True
    return v[2] < dv.tails[v[1]].onset


def _dinf_from_dims(qu, dv):
    ch = qu.chart()
    f0 = dv.at(ch.fork_vertex(0))
    f1 = dv.at(ch.fork_vertex(1))
    if f0 > 0 and f1 > 0:
        if f0 != 1 or f1 != 1:
            raise WrongType("fork dims exceed 1")
        # N(i,j) pattern
        i = 0
        p = 2
        while dv.at(ch.vertex(p)) == 2:
            i += 1
            p += 1
        tid = qu.tails[0].tid
        tw = dv.tails[tid]
        if not tw.is_zero():
            if set(tw.word) != {1}:
                raise WrongType("bad tail word for N(i,inf)")
            return DInfRep(qu, i, INF)
        j = 0
        while True:
            try:
                d = dv.at(ch.vertex(p))
            except UnknownVertex:
                break
            if d == 1:
                j += 1
                p += 1
            elif d == 0:
                break
            else:
                raise WrongType("not an N(i,j) pattern")
        if j < 1:
            raise WrongType("not an N(i,j) pattern")
        return DInfRep(qu, i, j)
    fork = 0 if f0 else (1 if f1 else None)
    support = sorted(
        ch.position(v)
        for v, d in dv.values.items()
        if d and ch.position(v) is not None and _on_word_window(dv, v)
    )
    tid = qu.tails[0].tid
    hi = PLUS_INF if not dv.tails[tid].is_zero() else (max(support) if support else None)
    if fork is not None and not support and hi is None:
        return SimpleRep(qu, ch.fork_vertex(fork))
    lo = min(support) if support else 2
    if fork is not None:
        lo = 2
    if hi is None:
        raise WrongType("empty support")
    return StringRep(qu, lo, hi, fork)


# ---------------------------------------------------------------------------
# Kronecker regular representations
# ---------------------------------------------------------------------------


def _poly_is_irreducible(coeffs, field):
    """coeffs: monic polynomial, constant term first, leading 1 implied last.

    Over F_p: complete trial factorization.  Over Q: rational root test,
    complete for degree <= 3; higher degrees are trusted (flagged).
    """
    d = len(coeffs) - 1
    if d < 1:
        return False, True
    if d == 1:
        return True, True
    if field.char:
        p = field.char
        poly = [c % p for c in coeffs]

        def polymod(a, b):
            a = a[:]
            while len(a) >= len(b) and any(a):
                while a and a[-1] == 0:
                    a.pop()
                if len(a) < len(b):
                    break
                f = a[-1] * pow(b[-1], -1, p) % p
                off = len(a) - len(b)
                for i, c in enumerate(b):
                    a[off + i] = (a[off + i] - f * c) % p
                while a and a[-1] == 0:
                    a.pop()
            return a

        def all_monic(deg):
            if deg == 0:
                yield [1]
                return
            for tail in range(p**deg):
                cs = []
                t = tail
                for _ in range(deg):
                    cs.append(t % p)
                    t //= p
                yield cs + [1]

        for deg in range(1, d // 2 + 1):
            for g in all_monic(deg):
                if not polymod(poly[:], g):
                    return False, True
        return True, True
    # rational root test on monic integer-ish polynomial
    c0 = Fraction(coeffs[0])
    den = 1
    for c in coeffs:
        den = den * Fraction(c).denominator
    ints = [int(Fraction(c) * den) for c in coeffs]
    lead = ints[-1]
    const = ints[0]
    if const == 0:
        return (d == 1), True
    roots = set()
    for r in _divisors(abs(const)):
        for s in _divisors(abs(lead)):
            roots.add(Fraction(r, s))
            roots.add(Fraction(-r, s))
    for r in roots:
        if sum(Fraction(c) * r**i for i, c in enumerate(coeffs)) == 0:
            return False, True
    return True, d <= 3


def _divisors(n):
    out = []
    for k in range(1, n + 1):
        if n % k == 0:
            out.append(k)
    return out


def kronecker_regular(qu, coeffs):
    """M_p on the Kronecker quiver: M(a)=M(b)=k[x]/(p), alpha acts as the
    identity and beta as the companion matrix of p (constant term first,
    monic; the leading 1 must be included)."""
    if (
        len(qu.core_vertices) != 2
        or len(qu.core_arrows) != 2
        or qu.tails
        or len({(a[0], a[1]) for a in qu.core_arrows}) != 1
    ):
        raise WrongQuiver("not the Kronecker quiver")
    f = qu.field
    coeffs = [f(c) for c in coeffs]
    if not f.eq(coeffs[-1], f.one):
        raise ReduciblePolynomial("polynomial must be monic")
    irr, certain = _poly_is_irreducible(coeffs, f)
    if certain and not irr:
        raise ReduciblePolynomial("polynomial is reducible")
    d = len(coeffs) - 1
    src, tgt = qu.core_arrows[0][0], qu.core_arrows[0][1]
    alpha, beta = sorted(qu.core_arrows, key=lambda a: a[2])[:2]
    comp = Matrix(f, d, d)
    for i in range(1, d):
        comp[i, i - 1] = f.one
    for i in range(d):
        comp[i, d - 1] = f.neg(coeffs[i])
    dims = {src: d, tgt: d}
    mats = {alpha: Matrix.identity(f, d), beta: comp}
    w = WindowRep(qu, [src, tgt], dims, mats, label=f"M_p(deg {d})")
    w.irreducibility_certain = certain
    return w


# ---------------------------------------------------------------------------
# direct sums, sub/quotients, duality, restriction
# ---------------------------------------------------------------------------


def direct_sum(parts):
    assert parts
    qu = parts[0].qu
    mats = {}
    verts = list(parts[0].vertices)
    vset = set(verts)
    for p in parts[1:]:
        for v in p.vertices:
            if v not in vset:
                verts.append(v)
                vset.add(v)
    dims = {v: sum(p.dim_at(v) if v in p.dims else 0 for p in parts) for v in verts}
    f = qu.field
    for a in qu.arrows_within(verts):
        blocks = []
        nontrivial = False
        for p in parts:
            ds = p.dims.get(a[0], 0)
            dt = p.dims.get(a[1], 0)
            m = p.mats.get(a)
            if m is None:
                m = Matrix(f, dt, ds)
            else:
                nontrivial = True
            blocks.append(m)
        if nontrivial:
            mats[a] = block_diag(f, blocks)
    return WindowRep(qu, verts, dims, mats)


def dualize(m):
    """DM over the opposite quiver; DI_x = P_{x^o}, DP_x = I_{x^o}."""
    qop = m.qu.opposite()
    if isinstance(m, ProjRep):
        return InjRep(qop, m.x)
    if isinstance(m, InjRep):
        return ProjRep(qop, m.x)
    if isinstance(m, SimpleRep):
        return SimpleRep(qop, m.x)
    if isinstance(m, ZeroRep):
        return ZeroRep(qop)
    if isinstance(m, StringRep):
        return StringRep(qop, m.lo, m.hi, m.fork)
    if isinstance(m, DInfRep):
        return DInfRep(qop, m.i, m.j)
    assert isinstance(m, WindowRep)
    mats = {}
    for a, mat in m.mats.items():
        # arrow (s, t, label) becomes (t, s, label) in the opposite quiver
        mats[(a[1], a[0], a[2])] = mat.transpose()
    return WindowRep(qop, m.vertices, m.dims, mats, label=m._label)


class SubquiverSel:
    """A full-subquiver descriptor: explicit verdicts on a window plus one
    eventual verdict per tail."""

    def __init__(self, qu, window_included, tail_eventual, onset=None):
        self.qu = qu
        self.included = set(window_included)
        self.tail_eventual = dict(tail_eventual)  # tid -> bool
        self.onset = onset or {}

    def contains(self, v):
        if v in self.included:
            return True
        if is_tail(v):
            tid = v[1]
            onset = self.onset.get(tid, 1)
            if v[2] >= onset:
                return self.tail_eventual.get(tid, False)
        return False

    @classmethod
    def from_labels(cls, qu, labels, tail_eventual=None):
        verts = {qu.vertex_by_label(s) for s in labels}
        onset = {}
        for t in qu.tails:
            deep = 1
            for v in verts:
                if is_tail(v) and v[1] == t.tid:
                    deep = max(deep, v[2] + 1)
            onset[t.tid] = deep
        return cls(qu, verts, tail_eventual or {}, onset)


def restrict(m, sel):
    """The restriction M_Sigma (matrices zeroed outside the selection)."""
    if isinstance(m, WindowRep):
        dims = {v: (m.dims[v] if sel.contains(v) else 0) for v in m.vertices}
        mats = {
            a: mat
            for a, mat in m.mats.items()
            if sel.contains(a[0]) and sel.contains(a[1])
        }
        return WindowRep(m.qu, m.vertices, dims, mats)
    if isinstance(m, (ProjRep, InjRep, SimpleRep)):
        rec = _recognize_restricted_standard(m, sel)
        if rec is not None:
            return rec
    depth = m.support_depths(1)
    for t in m.qu.tails:
        if sel.tail_eventual.get(t.tid) and not m.tail_word(t.tid).is_zero():
            raise UnboundedInteraction(
                "restriction keeps an infinite part; use symbolic families"
            )
        depth[t.tid] = max(depth[t.tid], sel.onset.get(t.tid, 1))
    return restrict(m.materialize(depth), sel)


def _recognize_restricted_standard(m, sel):
    """P_x restricted to a successor-closed subquiver is a sum of projectives
    at the entry points (dually for injectives)."""
    qu = m.qu
    if isinstance(m, SimpleRep):
        return m if sel.contains(m.x) else ZeroRep(qu)
    if isinstance(m, ProjRep):
        if not _successor_closed(qu, sel):
            return None
        if sel.contains(m.x):
            return m
        entries = _entry_points(qu, m.x, sel, forward=True)
        if entries is None:
            return None
        parts = [ProjRep(qu, y) for y in entries]
        return parts[0] if len(parts) == 1 else RepSum(qu, parts)
    if isinstance(m, InjRep):
        if not _predecessor_closed(qu, sel):
            return None
        if sel.contains(m.x):
            return m
        entries = _entry_points(qu, m.x, sel, forward=False)
        if entries is None:
            return None
        parts = [InjRep(qu, y) for y in entries]
        return parts[0] if len(parts) == 1 else RepSum(qu, parts)
    return None


def _successor_closed(qu, sel):
    check = set(sel.included)
    for t in qu.tails:
        check.add(tail_v(t.tid, sel.onset.get(t.tid, 1)))
        check.add(tail_v(t.tid, sel.onset.get(t.tid, 1) + len(t.word.period)))
    for v in check:
        if not sel.contains(v):
            continue
        for a in qu.arrows_out(v):
            if not sel.contains(a[1]):
                return False
    return True


def _predecessor_closed(qu, sel):
    check = set(sel.included)
    for t in qu.tails:
        check.add(tail_v(t.tid, sel.onset.get(t.tid, 1)))
        check.add(tail_v(t.tid, sel.onset.get(t.tid, 1) + len(t.word.period)))
    for v in check:
        if not sel.contains(v):
            continue
        for a in qu.arrows_in(v):
            if not sel.contains(a[0]):
                return False
    return True


def _entry_points(qu, x, sel, forward):
    """Vertices where paths from x first enter the selection (multiset)."""
    entries = []
    seen = set()
    stack = [x]
    budget = 4000
    while stack:
        budget -= 1
        if budget < 0:
            return None
        v = stack.pop()
        arrows = qu.arrows_out(v) if forward else qu.arrows_in(v)
        for a in arrows:
            w = a[1] if forward else a[0]
            if is_tail(w):
                t = qu.tails[w[1]]
                onset = sel.onset.get(w[1], 1)
                if w[2] > onset + 2 * len(t.word.period) + len(t.word.prefix):
                    # deep in a tail with a constant verdict
                    if not sel.tail_eventual.get(w[1], False):
                        continue
            if sel.contains(w):
                entries.append(w)
            else:
                stack.append(w)
    return entries


class RepSum(Rep):
    """A formal direct sum of symbolic representations."""

    kind = "sum"

    def __init__(self, qu, parts):
        super().__init__(qu)
        self.parts = list(parts)

    def stable_onset(self, tid):
        return max(p.stable_onset(tid) for p in self.parts) if self.parts else 1

    def dim_at(self, v):
        return sum(p.dim_at(v) for p in self.parts)

    def tail_word(self, tid):
        tw = TailWord.zero()
        for p in self.parts:
            tw = tw.combine(p.tail_word(tid), lambda a, b: a + b)
        return tw

    def name(self):
        return " + ".join(p.name() for p in self.parts) if self.parts else "0"

    def materialize(self, depth=None):
        depth = depth if depth is not None else self.support_depths(1)
        return direct_sum([p.materialize(depth) for p in self.parts])


# ---------------------------------------------------------------------------
# rad / top / soc
# ---------------------------------------------------------------------------


def rad_top_soc(m):
    qu = m.qu
    if isinstance(m, ProjRep):
        rad_parts = []
        for a in qu.arrows_out(m.x):
            rad_parts.append(ProjRep(qu, a[1]))
        rad = (
            ZeroRep(qu)
            if not rad_parts
            else (rad_parts[0] if len(rad_parts) == 1 else RepSum(qu, rad_parts))
        )
        return rad, SimpleRep(qu, m.x), None
    if isinstance(m, InjRep):
        quo_parts = [InjRep(qu, a[0]) for a in qu.arrows_in(m.x)]
        quo = (
            ZeroRep(qu)
            if not quo_parts
            else (quo_parts[0] if len(quo_parts) == 1 else RepSum(qu, quo_parts))
        )
        return None, quo, SimpleRep(qu, m.x)
    w = m if isinstance(m, WindowRep) else m.materialize()
    rad_bases = _rad_bases(w)
    rad = _subrep_from_bases(w, rad_bases)
    top = _quotient_by_bases(w, rad_bases)
    soc = _soc_window(w)
    return rad, top, soc


def _rad_bases(w):
    """Per-vertex basis of rad M: the sum of incoming images."""
    f = w.qu.field
    bases = {}
    for v in w.vertices:
        rows = []
        for a in w.qu.arrows_in(v):
            if a in w.mats:
                rows.extend(w.mats[a].transpose().a)
        if rows:
            mat = Matrix(f, len(rows), w.dims[v])
            mat.a = [r[:] for r in rows]
            _, ech = echelon(mat)
            bases[v] = ech
        else:
            bases[v] = []
    return bases


def _soc_window(w):
    f = w.qu.field
    bases = {}
    for v in w.vertices:
        rows = []
        for a in w.qu.arrows_out(v):
            if a in w.mats:
                rows.extend(w.mats[a].a)
        if rows:
            mat = Matrix(f, len(rows), w.dims[v])
            mat.a = [r[:] for r in rows]
            _, ker = rank_kernel(mat)
            bases[v] = ker
        else:
            bases[v] = [
                [f.one if i == j else f.zero for j in range(w.dims[v])]
                for i in range(w.dims[v])
            ]
    return _subrep_from_bases(w, bases)


def _subrep_from_bases(w, bases):
    """Window rep on given per-vertex subspaces (columns in the new bases)."""
    f = w.qu.field
    dims = {v: len(bases[v]) for v in w.vertices}
    mats = {}
    for a, m in w.mats.items():
        src, tgt = a[0], a[1]
        if dims[src] == 0 or dims[tgt] == 0:
            continue
        cols = []
        for vec in bases[src]:
            img = m.apply(vec)
            sol = _solve_in_span(f, bases[tgt], img)
            cols.append(sol)
        mm = Matrix(f, dims[tgt], dims[src])
        for j, col in enumerate(cols):
            for i, x in enumerate(col):
                mm[i, j] = x
        mats[a] = mm
    return WindowRep(w.qu, w.vertices, dims, mats)


def _solve_in_span(f, basis, vec):
    if not basis:
        assert all(f.eq(x, f.zero) for x in vec)
        return []
    m = Matrix(f, len(vec), len(basis))
    for j, b in enumerate(basis):
        for i, x in enumerate(b):
            m[i, j] = x
    from .linalg import solve

    sol = solve(m, vec)
    assert sol is not None, "vector not in span"
    return sol


def _quotient_by_bases(w, bases, return_proj=False):
    """Quotient of w by the subrepresentation spanned by `bases` (a dict
    vertex -> list of vectors).  Coordinates on the quotient come from a
    complement basis chosen deterministically (first standard vectors that
    extend the subspace)."""
    f = w.qu.field
    proj = {}
    dims = {}
    for v in w.vertices:
        d = w.dims[v]
        sub = bases.get(v, [])
        if sub:
            # reduce a spanning set to an echelon basis
            smat = Matrix(f, len(sub), d)
            smat.a = [r[:] for r in sub]
            _, sub = echelon(smat)
        if d == 0:
            dims[v] = 0
            proj[v] = Matrix(f, 0, 0)
            continue
        # complete sub to a basis with standard vectors
        chosen = [b[:] for b in sub]
        compl = []
        for j in range(d):
            e = [f.one if i == j else f.zero for i in range(d)]
            probe = Matrix(f, len(chosen) + 1, d)
            probe.a = [c[:] for c in chosen] + [e]
            if rank(probe) == len(chosen) + 1:
                chosen.append(e)
                compl.append(j)
        # change of basis: F columns = sub then complement
        from .linalg import inverse

        F = Matrix(f, d, d)
        for j, b in enumerate(chosen):
            for i in range(d):
                F[i, j] = b[i]
        Finv = inverse(F)
        q = d - len(sub)
        p = Matrix(f, q, d)
        p.a = [Finv.a[len(sub) + i][:] for i in range(q)]
        proj[v] = p
        dims[v] = q
    mats = {}
    for a, m in w.mats.items():
        src, tgt = a[0], a[1]
        if dims[src] == 0 or dims[tgt] == 0:
            continue
        # induced map X with X . proj_src = proj_tgt . M(a); solve columnwise
        # on a complement section of proj_src
        pm = proj[tgt].mul(m)
        cols = []
        for j in range(dims[src]):
            # a preimage of quotient basis vector e_j under proj_src
            from .linalg import solve

            pre = solve(proj[src], [f.one if i == j else f.zero for i in range(dims[src])])
            cols.append(pm.apply(pre))
        x = Matrix(f, dims[tgt], dims[src])
        for j, col in enumerate(cols):
            for i, val in enumerate(col):
                x[i, j] = val
        mats[a] = x
    out = WindowRep(w.qu, w.vertices, dims, mats)
    if return_proj:
        return out, proj
    return out


# ---------------------------------------------------------------------------
# hom spaces, Ext, decomposition, isomorphism
# ---------------------------------------------------------------------------


def _interaction_window(m, n):
    qu = m.qu
    depth = {}
    for t in qu.tails:
        wm = m.tail_word(t.tid)
        wn = n.tail_word(t.tid)
        if not wm.is_zero() and not wn.is_zero():
            raise UnboundedInteraction(
                "supports interact along an entire tail", tail=t.name
            )
        depth[t.tid] = max(m.stable_onset(t.tid), n.stable_onset(t.tid)) + 1
    return depth


def hom_space(m, n):
    """Basis of Hom(M, N) as per-vertex matrix families, by linear solve.

    Requires the supports to interact in a finite window (always true when
    one of the two is finite dimensional)."""
    qu = m.qu
    depth = _interaction_window(m, n)
    wm = m.materialize(depth)
    wn = n.materialize(depth)
    verts = [v for v in wm.vertices if v in wn.dims]
    vars_at = {}
    offset = 0
    for v in verts:
        k = wm.dims.get(v, 0) * wn.dims.get(v, 0)
        if k:
            vars_at[v] = (offset, wn.dims[v], wm.dims[v])
            offset += k
    rows = []
    f = qu.field
    arrows = set(wm.mats) | set(wn.mats)
    for a in sorted(arrows, key=lambda a: a[2]):
        src, tgt = a[0], a[1]
        ms = wm.mat(a)
        nt = wn.mat(a)
        dms, dns = wm.dims.get(src, 0), wn.dims.get(src, 0)
        dmt, dnt = wm.dims.get(tgt, 0), wn.dims.get(tgt, 0)
        if dms == 0 or dnt == 0:
            continue
        # constraint: f(tgt) . M(a) = N(a) . f(src)   (dnt x dms equations)
        for i in range(dnt):
            for j in range(dms):
                row = [f.zero] * offset
                if tgt in vars_at:
                    off, rn, rm = vars_at[tgt]
                    for k in range(dmt):
                        row[off + i * rm + k] = f.add(row[off + i * rm + k], ms[k, j])
                if src in vars_at:
                    off, rn, rm = vars_at[src]
                    for k in range(dns):
                        row[off + k * rm + j] = f.sub(row[off + k * rm + j], nt[i, k])
                if any(not f.eq(x, f.zero) for x in row):
                    rows.append(row)
    if offset == 0:
        return [], vars_at, (wm, wn)
    if rows:
        mat = Matrix(f, len(rows), offset)
        mat.a = rows
        _, basis = rank_kernel(mat)
    else:
        basis = [
            [f.one if i == j else f.zero for j in range(offset)] for i in range(offset)
        ]
    return basis, vars_at, (wm, wn)


def hom_dim(m, n):
    basis, _, _ = hom_space(m, n)
    return len(basis)


def hom_vector_to_maps(vec, vars_at, wm, wn):
    f = wm.qu.field
    maps = {}
    for v, (off, rn, rm) in vars_at.items():
        mat = Matrix(f, rn, rm)
        for i in range(rn):
            for j in range(rm):
                mat[i, j] = vec[off + i * rm + j]
        maps[v] = mat
    return maps


def hom_ext_dims(m, n):
    """(dim Hom(M,N), dim Ext^1(M,N)) from a minimal presentation of M.

    The two-term complex 0 -> Hom(M,N) -> (+)_i N(x_i) -> (+)_j N(y_j)
    (Hom(P_a, N) = N(a)) has finite dimensional terms for any locally finite
    dimensional N, so no window blow-up can occur once M is fp."""
    from .presentations import minimal_presentation

    pres = minimal_presentation(m)
    f = m.qu.field
    depth = {t.tid: n.stable_onset(t.tid) + 1 for t in n.qu.tails}
    for v in list(pres.tops) + list(pres.syzygies) + list(pres.path_vertices()):
        if is_tail(v):
            depth[v[1]] = max(depth.get(v[1], 1), v[2] + 1)
    wn = n.materialize(depth)

    def ndim(v):
        try:
            return wn.dim_at(v)
        except UnknownVertex:
            return n.dim_at(v)

    dom = sum(ndim(x) for x in pres.tops)
    cod = sum(ndim(y) for y in pres.syzygies)
    mat = Matrix(f, cod, dom)
    roff = 0
    for j, y in enumerate(pres.syzygies):
        coff = 0
        for i, x in enumerate(pres.tops):
            # entry: a combination of paths x ~> y; acts as N(path)
            for coeff, path in pres.entry(i, j):
                block = _path_action(wn, n, path)
                for r in range(block.rows):
                    for c in range(block.cols):
                        mat[roff + r, coff + c] = f.add(
                            mat[roff + r, coff + c], f.mul(coeff, block[r, c])
                        )
            coff += ndim(x)
        roff += ndim(y)
    rk = rank(mat)
    return dom - rk, cod - rk


def _path_action(wn, n, path):
    """N(path) as a matrix N(s(path)) -> N(e(path)); paths here are always
    non-trivial (presentation entries land in the radical)."""
    f = wn.qu.field
    assert path
    src = path[0][0]
    m = Matrix.identity(f, wn.dim_at(src))
    for a in path:
        m = wn.mat(a).mul(m)
    return m


# -- endomorphisms and decomposition ----------------------------------------


def end_algebra(w):
    """Basis of End(W) for a window rep, as per-vertex matrix dicts."""
    basis, vars_at, (wm, wn) = hom_space(w, w)
    return [hom_vector_to_maps(vec, vars_at, wm, wn) for vec in basis]


def _endo_matrix_power_nilpotent(w, maps, nmax):
    cur = maps
    for _ in range(nmax.bit_length() + 1):
        cur = {v: cur[v].mul(cur[v]) for v in cur}
        if all(m.is_zero() for m in cur.values()):
            return True
    return all(m.is_zero() for m in cur.values())


def _fitting_split(w, maps):
    """Split W = ker(u^N) + im(u^N) if the endomorphism u is neither
    nilpotent nor invertible; returns (sub1, sub2) bases or None."""
    f = w.qu.field
    total = sum(w.dims.values())
    power = {v: Matrix.identity(f, w.dims[v]) for v in w.vertices if w.dims[v]}
    for _ in range(max(total, 1)):
        power = {v: maps.get(v, Matrix(f, w.dims[v], w.dims[v])).mul(power[v]) for v in power}
    kers = {}
    ims = {}
    kdim = idim = 0
    for v in w.vertices:
        if not w.dims[v]:
            kers[v] = []
            ims[v] = []
            continue
        mat = power[v]
        _, ker = rank_kernel(mat)
        kers[v] = ker
        cols = mat.transpose().a
        sp = Matrix(f, len(cols), w.dims[v])
        sp.a = [c[:] for c in cols]
        _, ech = echelon(sp)
        ims[v] = ech
        kdim += len(ker)
        idim += len(ech)
    if kdim == 0 or idim == 0:
        return None
    assert kdim + idim == total
    return kers, ims


def decompose(m):
    """Indecomposable summands of a finite dimensional representation,
    ordered by (total dim, dim vector); Fitting-lemma driven."""
    w = m if isinstance(m, WindowRep) else m.materialize()
    parts = _decompose_window(w)
    parts.sort(key=lambda p: (p.total(), sorted((w.qu.label(v), d) for v, d in p.dims.items())))
    return parts


def _decompose_window(w, depth_guard=0):
    if w.is_zero():
        return []
    if w.total() == 1 or depth_guard > 60:
        return [w]
    endos = end_algebra(w)
    if len(endos) == 1:
        return [w]
    candidates = list(endos)
    f = w.qu.field
    for i in range(len(endos)):
        for j in range(i + 1, len(endos)):
            candidates.append(
                {v: endos[i][v].add_mat(endos[j][v]) for v in endos[i]}
            )
    import random

    rng = random.Random(1729 + w.total())
    for _ in range(40):
        coeffs = [rng.randrange(0, 7) for _ in endos]
        cand = None
        for c, e in zip(coeffs, endos):
            scaled = {v: e[v].scale(c) for v in e}
            cand = scaled if cand is None else {v: cand[v].add_mat(scaled[v]) for v in cand}
        if cand:
            candidates.append(cand)
    for maps in candidates:
        full = {v: maps.get(v, Matrix(f, w.dims[v], w.dims[v])) for v in w.vertices}
        split = _fitting_split(w, full)
        if split is None:
            continue
        kers, ims = split
        sub1 = _subrep_from_bases(w, kers)
        sub2 = _subrep_from_bases(w, ims)
        return _decompose_window(sub1, depth_guard + 1) + _decompose_window(
            sub2, depth_guard + 1
        )
    return [w]


def is_indecomposable(m):
    if isinstance(m, (ProjRep, InjRep, SimpleRep, StringRep, DInfRep)):
        return True
    if isinstance(m, ZeroRep):
        return False
    if isinstance(m, RepSum):
        return len(m.parts) == 1 and is_indecomposable(m.parts[0])
    w = m if isinstance(m, WindowRep) else m.materialize()
    return len(_decompose_window(w)) == 1


def is_isomorphic(m, n):
    """Isomorphism test.

    On infinite Dynkin quivers indecomposables are determined by their
    dimension vectors, so the comparison there is exact dim-vector equality.
    Otherwise the problem reduces to a finite window and an invertibility
    search over Hom(M, N); a failed bounded search raises Undecided.
    """
    qu = m.qu
    dm, dn = m.dim_vector(), n.dim_vector()
    if not dm.eq(dn):
        return False
    kind, sub = qu.classify() if qu.is_connected() else (None, None)
    both_symbolic_indec = all(
        isinstance(x, (ProjRep, InjRep, SimpleRep, StringRep, DInfRep)) for x in (m, n)
    )
    if kind == "InfDynkin" and (both_symbolic_indec or _both_indec_fd(m, n)):
        return True
    if kind == "FiniteDynkin" and (both_symbolic_indec or _both_indec_fd(m, n)):
        # classically valid: finite Dynkin indecomposables are dim-determined
        return True
    if not (m.is_finite_dimensional() and n.is_finite_dimensional()):
        if both_symbolic_indec:
            return _symbolic_eq(m, n)
        raise Undecided("cannot compare infinite dimensional window data")
    basis, vars_at, (wm, wn) = hom_space(m, n)
    if not basis:
        return m.dim_vector().total() == 0
    f = qu.field
    cands = list(basis)
    import random

    rng = random.Random(99)
    for _ in range(60):
        vec = [f.zero] * len(basis[0])
        for b in basis:
            c = f(rng.randrange(0, 11))
            vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, b)]
        cands.append(vec)
    for vec in cands:
        maps = hom_vector_to_maps(vec, vars_at, wm, wn)
        ok = True
        for v in wm.vertices:
            dmv = wm.dims.get(v, 0)
            if dmv != wn.dims.get(v, 0):
                ok = False
                break
            if dmv == 0:
                continue
            mat = maps.get(v)
            if mat is None or not invertible(mat):
                ok = False
                break
        if ok:
            return True
    raise Undecided("no invertible morphism found within search budget")


def _both_indec_fd(m, n):
    try:
        return (
            m.is_finite_dimensional()
            and n.is_finite_dimensional()
            and is_indecomposable(m)
            and is_indecomposable(n)
        )
    except Exception:
        return False


def _symbolic_eq(m, n):
    if type(m) is not type(n):
        return m.dim_vector().eq(n.dim_vector())
    if isinstance(m, StringRep):
        return (m.lo, m.hi, m.fork) == (n.lo, n.hi, n.fork)
    if isinstance(m, DInfRep):
        return (m.i, m.j) == (n.i, n.j)
    if isinstance(m, (ProjRep, InjRep, SimpleRep)):
        return m.x == n.x
    return m.dim_vector().eq(n.dim_vector())


# ---------------------------------------------------------------------------
# finite presentation certificates
# ---------------------------------------------------------------------------


def fp_certificate(m):
    """A co-finite successor-closed subquiver Sigma of supp M with M_Sigma
    projective, or None with a witness when M is not finitely presented."""
    qu = m.qu
    if m.is_finite_dimensional():
        return {"kind": "finite", "sigma": [], "note": "finite support"}
    if isinstance(m, ProjRep):
        return {"kind": "projective", "sigma": "supp", "top": qu.label(m.x)}
    if isinstance(m, StringRep):
        ch = m.chart
        rays = []
        if m.lo == MINUS_INF:
            k = ch.last_dir_at_most(min(m.hi, 0) - 1, right=True)
            start = (min(m.hi, 0) - 1) if k is None else k
            rays.append(("down", start))
        if m.hi == PLUS_INF:
            k = ch.first_dir_at_least(max(m.lo, 0), right=False)
            start = max(m.lo, 0) if k is None else k + 1
            rays.append(("up", start))
        return {
            "kind": "ray-projective",
            "sigma_rays": [
                {"direction": d, "from_position": s, "projective_top": s}
                for d, s in rays
            ],
        }
    if isinstance(m, DInfRep) and m.j == INF:
        ch = m.chart
        k = ch.first_dir_at_least(m.i + 2, right=False)
        start = m.i + 2 if k is None else k + 1
        return {
            "kind": "ray-projective",
            "sigma_rays": [{"direction": "up", "from_position": start, "projective_top": start}],
        }
    if isinstance(m, InjRep):
        return None
    return None
