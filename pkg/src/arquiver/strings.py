"""The source-translation calculus on canonical type-A quivers.

Q_R collects the right-oriented maximal paths with a starting point together
with the trivial paths at middle points of left-oriented paths (and at a
weight-one sink); Q_L is the left-oriented mirror.  Ordered by starting
point, each carries the source-translation sigma whose links are witnessed
by double-hooks, and which realizes the AR translation on the corresponding
string representations.
"""

from .ar import DTR, TRD, ar_translate
from .errors import NotIndecomposable, NotMember, WrongType
from .quiver import MINUS_INF, PLUS_INF, is_tail
from .reps import (
    DInfRep,
    DimVector,
    InjRep,
    ProjRep,
    Rep,
    SimpleRep,
    StringRep,
    WindowRep,
    ZeroRep,
    decompose,
    rep_from_dims,
)

INF = PLUS_INF


class Member:
    """One element of Q_R or Q_L: a path start -> end on the chart (trivial
    when start == end; end may be +/-inf for ray members)."""

    __slots__ = ("side", "start", "end")

    def __init__(self, side, start, end):
        self.side = side
        self.start = start
        self.end = end

    @property
    def trivial(self):
        return self.start == self.end

    @property
    def finite(self):
        return self.end not in (PLUS_INF, MINUS_INF)

    def key(self):
        return (self.side, self.start, self.end)

    def __eq__(self, other):
        return isinstance(other, Member) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def name(self, unique_ray=True):
        if self.trivial:
            return f"ε_{self.start}"
        if not self.finite:
            return "p_∞" if unique_ray else f"p_{{{self.start},∞}}"
        return f"p_{{{self.start},{self.end}}}"

    def ascii_name(self, unique_ray=True):
        if self.trivial:
            return f"eps_{self.start}"
        if not self.finite:
            return "p_inf" if unique_ray else f"p_{self.start}_inf"
        return f"p_{self.start}_{self.end}"

    def interval(self):
        lo = min(self.start, self.end)
        hi = max(self.start, self.end)
        return lo, hi

    def to_json(self, unique_ray=True):
        return {
            "name": self.name(unique_ray),
            "start": None if self.start in (PLUS_INF, MINUS_INF) else self.start,
            "end": None if self.end in (PLUS_INF, MINUS_INF) else self.end,
            "trivial": self.trivial,
            "finite": self.finite,
        }


class QRQLSet:
    """The ordered system Q_R or Q_L of a canonical type-A quiver."""

    def __init__(self, qu, side):
        kind, sub = qu.classify()
        if sub not in ("A_inf", "A_biinf"):
            raise WrongType("Q_R/Q_L live on canonical A_inf or A_biinf quivers")
        self.qu = qu
        self.side = side
        self.ch = qu.chart()
        self._scan_bound = self._period_bound()

    def _period_bound(self):
        b = 4
        for t in self.qu.tails:
            b = max(b, 2 * (len(t.word.prefix) + len(t.word.period)) + 4)
        return b

    # -- membership --------------------------------------------------------

    def member_at(self, s):
        """The member starting at position s, or None."""
        ch = self.ch
        if not ch.in_range(s):
            return None

        def d(k):
            return ch.dir_right(k)

        bottom = ch.lo != MINUS_INF and s == ch.lo
        if self.side == "R":
            if d_exists(ch, s) and d(s) and (bottom or not d(s - 1)):
                e = ch.reach_right(s)
                return Member("R", s, e)
            mid = (not bottom) and (not d(s - 1)) and d_exists(ch, s) and not d(s)
            sink_w1 = bottom and d_exists(ch, s) and not d(s)
            if mid or sink_w1:
                return Member("R", s, s)
            return None
        # side L
        if (not bottom) and (not d(s - 1)) and (not d_exists(ch, s) or d(s)):
            e = ch.reach_left(s)
            return Member("L", s, e)
        mid = (not bottom) and d(s - 1) and d_exists(ch, s) and d(s)
        source_w1 = bottom and d_exists(ch, s) and d(s)
        if mid or source_w1:
            return Member("L", s, s)
        return None

    def contains(self, member):
        got = self.member_at(member.start)
        return got is not None and got == member

    def member_of_string(self, m):
        """The member whose string representation is M, or None."""
        if isinstance(m, SimpleRep):
            p = self.ch.position(m.x)
            mem = self.member_at(p)
            return mem if mem is not None and mem.trivial else None
        if isinstance(m, (ProjRep, InjRep)):
            return None
        if not isinstance(m, StringRep) or m.fork is not None:
            return None
        if m.lo == m.hi:
            mem = self.member_at(m.lo)
            return mem if mem is not None and mem.trivial else None
        candidates = []
        if m.hi != PLUS_INF:
            candidates.append(self.member_at(m.hi))
        if m.lo != MINUS_INF:
            candidates.append(self.member_at(m.lo))
        for mem in candidates:
            if mem is None or mem.trivial:
                continue
            lo, hi = mem.interval()
            if (lo, hi) == (m.lo, m.hi):
                return mem
        return None

    # -- the order and sigma -------------------------------------------------

    def prev_start(self, s):
        """Largest member start < s, or None (exact: scans one period past
        the prefix zone, beyond which membership is periodic)."""
        lo_lim = self.ch.lo if self.ch.lo != MINUS_INF else s - self._scan_bound
        k = s - 1
        while k >= lo_lim:
            if self.member_at(k) is not None:
                return k
            k -= 1
        if self.ch.lo != MINUS_INF:
            return None
        # periodic zone: if a full period had no member, none exists below
        return None

    def next_start(self, s):
        hi_lim = s + self._scan_bound
        k = s + 1
        while k <= hi_lim:
            if self.member_at(k) is not None:
                return k
            k += 1
        return None

    def sigma(self, member):
        if not self.contains(member):
            raise NotMember(f"{member.name()} is not in Q_{self.side}")
        s = self.prev_start(member.start)
        return None if s is None else self.member_at(s)

    def sigma_inv(self, member):
        if not self.contains(member):
            raise NotMember(f"{member.name()} is not in Q_{self.side}")
        s = self.next_start(member.start)
        return None if s is None else self.member_at(s)

    def translate(self, member, direction):
        """sigma / sigma^- with the double-hook witness; None when undefined
        (the rl-sigma criterion)."""
        if direction == "sigma":
            out = self.sigma(member)
        else:
            out = self.sigma_inv(member)
        if out is None:
            return None, None
        lower, upper = (out, member) if direction == "sigma" else (member, out)
        # R side: hook (q, alpha, p) = (lower, alpha, upper) at the arrow
        # s(p) -> s(p)-1; L side: hook (q, beta, p) = (upper, beta, lower)
        # at the arrow s(lower) -> s(lower)+1
        witness = None
        if self.side == "R" and lower.finite:
            witness = double_hook(self.qu, self.ch.edge_arrow(upper.start - 1))
        if self.side == "L" and upper.finite:
            witness = double_hook(self.qu, self.ch.edge_arrow(lower.start))
        return out, witness

    # -- window enumeration ---------------------------------------------------

    def members_in_window(self, wlo, whi):
        out = []
        lo = max(wlo, self.ch.lo) if self.ch.lo != MINUS_INF else wlo
        for s in range(int(lo), int(whi) + 1):
            mem = self.member_at(s)
            if mem is not None:
                out.append(mem)
        return out

    def eventual(self, direction):
        """'none', 'all_trivial', or 'periodic' past the prefix zone."""
        if direction == "down" and self.ch.lo != MINUS_INF:
            return "none"
        base = None
        period = 1
        for t in self.qu.tails:
            sign, off = self.ch.tail_pos.get(t.tid, (None, None))
            if sign == 1 and direction == "up":
                period = len(t.word.period)
                base = off + len(t.word.prefix) + 2
            if sign == -1 and direction == "down":
                period = len(t.word.period)
                base = off - len(t.word.prefix) - 2 - period
        assert base is not None
        kinds = []
        for k in range(period):
            mem = self.member_at(base + k)
            kinds.append(None if mem is None else ("trivial" if mem.trivial else "path"))
        if all(k is None for k in kinds):
            return "none"
        if all(k == "trivial" for k in kinds):
            return "all_trivial"
        return "periodic"

    def is_finite(self):
        return self.eventual("up") == "none" and self.eventual("down") == "none"

    def all_members(self, fallback_window=40):
        """The full member list when the set is finite."""
        assert self.is_finite()
        return self.members_in_window(-fallback_window - self._scan_bound,
                                      fallback_window + self._scan_bound)

    def unique_infinite(self):
        mems = self.members_in_window(-self._scan_bound, self._scan_bound)
        inf = [m for m in mems if not m.finite]
        return len(inf) == 1

    def string_rep(self, member):
        lo, hi = member.interval()
        if member.trivial:
            return StringRep(self.qu, member.start, member.start)
        return StringRep(self.qu, lo, hi)

    def chain_text(self, wlo=None, whi=None):
        """Paper-style dotted sigma chain, descending."""
        if self.is_finite():
            mems = self.all_members()
        else:
            mems = self.members_in_window(wlo if wlo is not None else -12,
                                          whi if whi is not None else 12)
        mems = sorted(mems, key=lambda m: -m.start)
        uniq = self.unique_infinite()
        text = " ⇢ ".join(m.name(uniq) for m in mems)
        if not self.is_finite():
            if self.eventual("up") != "none":
                text = "⋯ ⇢ " + text
            if self.eventual("down") != "none":
                text = text + " ⇢ ⋯"
        return text

    def to_json(self, wlo=-10, whi=10):
        uniq = self.unique_infinite()
        return {
            "side": self.side,
            "members": [m.to_json(uniq) for m in self.members_in_window(wlo, whi)],
            "eventual_below": self.eventual("down"),
            "eventual_above": self.eventual("up"),
            "finite": self.is_finite(),
        }


def d_exists(ch, k):
    try:
        ch.dir_right(k)
        return True
    except Exception:
        return False


def qr_ql_sets(qu):
    return QRQLSet(qu, "R"), QRQLSet(qu, "L")


# ---------------------------------------------------------------------------
# double-hooks
# ---------------------------------------------------------------------------


class DoubleHook:
    """(q, alpha, p): q the longest path ending in e(alpha) not ending with
    alpha, p the longest path starting in s(alpha) not starting with alpha."""

    def __init__(self, q_desc, alpha, p_desc):
        self.q = q_desc  # (start, end) chart positions, may be +/-inf
        self.alpha = alpha
        self.p = p_desc

    def q_finite(self):
        return all(x not in (PLUS_INF, MINUS_INF) for x in self.q)

    def to_json(self):
        def side(desc):
            s, e = desc
            return {
                "start": None if s in (PLUS_INF, MINUS_INF) else s,
                "end": None if e in (PLUS_INF, MINUS_INF) else e,
                "trivial": s == e,
            }

        return {"q": side(self.q), "alpha": self.alpha[2], "p": side(self.p)}


def double_hook(qu, alpha):
    """The double-hook of an arrow on a type-A quiver."""
    kind, sub = qu.classify()
    if sub not in ("A_inf", "A_biinf"):
        raise WrongType("double-hooks live on type-A quivers")
    ch = qu.chart()
    xpos = ch.position(alpha[0])
    ypos = ch.position(alpha[1])
    if abs(xpos - ypos) != 1:
        raise WrongType("not a chart edge")
    if ypos == xpos + 1:
        # right-oriented arrow x -> x+1: q comes down from above into y,
        # p goes down from x
        top = ch.coreach_right(ypos)
        q = (top, ypos) if top != ypos else (ypos, ypos)
        if ch.in_range(xpos - 1) if xpos - 1 != MINUS_INF else True:
            bot = ch.reach_left(xpos)
        else:
            bot = xpos
        p = (xpos, bot) if bot != xpos else (xpos, xpos)
    else:
        # left-oriented arrow x -> x-1 (y = x - 1): q comes up from below
        # into y, p goes up from x
        bot = ch.coreach_left(ypos)
        q = (bot, ypos) if bot != ypos else (ypos, ypos)
        top = ch.reach_right(xpos)
        p = (xpos, top) if top != xpos else (xpos, xpos)
    return DoubleHook(q, alpha, p)


# ---------------------------------------------------------------------------
# tau on strings
# ---------------------------------------------------------------------------


class TauUndefined:
    def __init__(self, reason):
        self.reason = reason

    def __repr__(self):
        return f"TauUndefined({self.reason})"

    def to_json(self):
        return {"undefined": self.reason}


def tau_string(qu, m, direction="tau"):
    """tau / tau^- on a string representation of a type-A quiver.

    For members of Q_R/Q_L this walks the sigma links (the path lemmas);
    in general it falls back on the translate's exact dimension vector and
    the dim-vector determinacy of infinite Dynkin indecomposables."""
    kind, sub = qu.classify()
    if sub not in ("A_inf", "A_biinf"):
        raise WrongType("tau_string needs a type-A quiver")
    if isinstance(m, SimpleRep):
        p = qu.chart().position(m.x)
        m = StringRep(qu, p, p)
    if not isinstance(m, StringRep):
        raise WrongType("tau_string needs a string representation")
    qr, ql = qr_ql_sets(qu)
    for s in (qr, ql):
        mem = s.member_of_string(m)
        if mem is None:
            continue
        if direction == "tau":
            # R side: tau M(p) = M(sigma(p)); L side: tau M(q) = M(sigma^-(q))
            out, _ = s.translate(mem, "sigma" if s.side == "R" else "sigma_inv")
        else:
            out, _ = s.translate(mem, "sigma_inv" if s.side == "R" else "sigma")
        if out is None:
            return _tau_undefined_reason(qu, m, direction)
        return s.string_rep(out)
    # general string: use the exact translate dimension vector
    if direction == "tau":
        r = ar_translate(m, DTR)
        if r.is_zero:
            return TauUndefined("Projective")
        if r.is_pseudo:
            return TauUndefined("PseudoProjective")
        return r.value
    if not m.is_finite_dimensional():
        return TauUndefined("InfiniteDimensional")
    r = ar_translate(m, TRD)
    if r.is_zero:
        return TauUndefined("Injective")
    return r.value


def _tau_undefined_reason(qu, m, direction):
    if direction == "tau":
        r = ar_translate(m, DTR)
        if r.is_zero:
            return TauUndefined("Projective")
        if r.is_pseudo:
            return TauUndefined("PseudoProjective")
        return TauUndefined("Undefined")
    if not m.is_finite_dimensional():
        return TauUndefined("InfiniteDimensional")
    r = ar_translate(m, TRD)
    if r.is_zero:
        return TauUndefined("Injective")
    return TauUndefined("Undefined")


# ---------------------------------------------------------------------------
# orbit classification
# ---------------------------------------------------------------------------


def orbit_classify(qu, m, budget=40):
    """Tag the tau-orbit of a string representation: the distinguished
    orbits O_R/O_L, preprojective/preinjective (tau-iteration terminates in
    a projective/injective), or regular with a quasi-length."""
    kind, sub = qu.classify()
    if sub not in ("A_inf", "A_biinf"):
        raise WrongType("orbit classification needs a type-A quiver")
    if isinstance(m, SimpleRep):
        p = qu.chart().position(m.x)
        m = StringRep(qu, p, p)
    qr, ql = qr_ql_sets(qu)
    for s in (qr, ql):
        mem = s.member_of_string(m)
        if mem is None:
            continue
        if s.side == "R":
            if sub == "A_inf":
                return {"tag": "Preprojective"}
            if s.is_finite() and _is_trivial_component(s, mem):
                return {"tag": "TrivialRegular"}
            return {"tag": "OrbitR"}
        if sub == "A_inf":
            return {"tag": "Preinjective"}
        if s.is_finite() and _is_trivial_component(s, mem):
            return {"tag": "TrivialRegular"}
        return {"tag": "OrbitL"}
    # tau-iterate toward a projective
    cur = m
    for n in range(budget):
        r = ar_translate(cur, DTR)
        if r.is_zero:
            return {"tag": "Preprojective", "power": n}
        if r.is_pseudo:
            break
        cur = r.value
    cur = m
    for n in range(budget):
        if not cur.is_finite_dimensional():
            break
        r = ar_translate(cur, TRD)
        if r.is_zero:
            return {"tag": "Preinjective", "power": n}
        if r.value is None:
            break
        cur = r.value
    ql_len, exact = _quasi_length(qu, m, budget)
    return {"tag": "RegularNonQuasiSimple", "quasi_length": ql_len, "exact": exact}


def _is_trivial_component(s, mem):
    """The single-member case where M(p) spans the whole quiver with the
    opposite hook side infinite: a trivial component of the AR quiver."""
    mems = s.all_members()
    return len(mems) == 1 and not mems[0].finite


def _member_inside(mem, m):
    lo, hi = mem.interval()
    lo_ok = (lo == MINUS_INF and m.lo == MINUS_INF) or (
        lo != MINUS_INF and (m.lo == MINUS_INF or lo >= m.lo)
    )
    hi_ok = (hi == PLUS_INF and m.hi == PLUS_INF) or (
        hi != PLUS_INF and (m.hi == PLUS_INF or hi <= m.hi)
    )
    return lo_ok and hi_ok


def _quasi_length(qu, m, budget):
    """Number of (necessarily consecutive) Q_R/Q_L members spanned by the
    string.  The cell of quasi-length l over orbit position o is the filled
    union of the member intervals sigma^o .. sigma^{o+l-1}, so the right
    side is the one whose inside-members tile m's interval end to end."""
    qr, ql = qr_ql_sets(qu)
    for s in (qr, ql):
        wlo = int(m.lo) if m.lo != MINUS_INF else -budget - s._scan_bound
        whi = int(m.hi) if m.hi != PLUS_INF else budget + s._scan_bound
        span = [
            mem
            for mem in s.members_in_window(wlo - 1, whi + 1)
            if _member_inside(mem, m)
        ]
        if not span:
            continue
        los = [mem.interval()[0] for mem in span]
        his = [mem.interval()[1] for mem in span]
        lo_match = m.lo in los or (m.lo == MINUS_INF and MINUS_INF in los)
        hi_match = m.hi in his or (m.hi == PLUS_INF and PLUS_INF in his)
        if lo_match and hi_match:
            return len(span), True
    return 1, False


# ---------------------------------------------------------------------------
# D_inf indecomposability test
# ---------------------------------------------------------------------------


def dinf_indec_test(qu, m_or_dims):
    """The D_inf trichotomy: a string, N(i,j), N(i,inf), or not
    indecomposable (any vertex dimension above 2 is immediately fatal)."""
    kind, sub = qu.classify()
    if sub != "D_inf":
        raise WrongType("this test is for D_inf quivers")
    if isinstance(m_or_dims, DimVector):
        dims = m_or_dims
    else:
        if isinstance(m_or_dims, WindowRep):
            if len(decompose(m_or_dims)) != 1:
                return {"tag": "NotIndecomposable"}
        dims = m_or_dims.dim_vector()
    for v, d in dims.values.items():
        if d > 2:
            return {"tag": "NotIndecomposable", "witness": qu.label(v)}
    for tw in dims.tails.values():
        if any(x > 2 for x in tw.word):
            return {"tag": "NotIndecomposable"}
    try:
        rep = rep_from_dims(qu, dims)
    except WrongType:
        return {"tag": "NotIndecomposable"}
    if isinstance(rep, DInfRep):
        return {
            "tag": "N",
            "i": rep.i,
            "j": None if rep.j == INF else rep.j,
            "infinite": rep.j == INF,
            "rep": rep,
        }
    if isinstance(rep, (StringRep, SimpleRep)):
        return {"tag": "String", "rep": rep}
    return {"tag": "NotIndecomposable"}
