"""The representation naming mini-language used by the CLI and the service.

Grammar (written by hand from worked examples):
  P(x) | I(x) | S(x)                 standard representations at a vertex
  N(i,j) | N(i,inf)                  the D_inf family
  M(p_inf)                           the unique maximal right infinite path
  M(p_{i,j}) | M(p_i_j)              the directed path from i to j
  M(eps_x)                           the trivial string at x (same as S(x))
  M([a,b]) | M([-inf,b]) | M([a,inf])   a string by its chart interval
  M(f|[2,b])                         a D_inf string through fork leaf f
  M(x-y-z-...)                       a string by the vertices of its walk
An optional [k] suffix shifts into the derived category.
"""

import re

from .errors import BadRepName
from .quiver import MINUS_INF, PLUS_INF
from .reps import (
    DInfRep,
    InjRep,
    ProjRep,
    SimpleRep,
    StringRep,
    string_rep_from_walk,
)

_SHIFT = re.compile(r"^(?P<body>.*?)\s*\[(?P<shift>-?\d+)\]$")


def parse_derived(qu, text):
    from .derived import DerivedObject

    text = text.strip()
    m = _SHIFT.match(text)
    shift = 0
    if m:
        shift = int(m.group("shift"))
        text = m.group("body")
    return DerivedObject(parse_rep(qu, text), shift)


def parse_rep(qu, text):
    text = text.strip()
    m = re.match(r"^([PISN])\((.*)\)$", text)
    if m:
        head, body = m.group(1), m.group(2).strip()
        if head == "P":
            return ProjRep(qu, qu.vertex_by_label(body))
        if head == "I":
            return InjRep(qu, qu.vertex_by_label(body))
        if head == "S":
            return SimpleRep(qu, qu.vertex_by_label(body))
        i_s, j_s = [s.strip() for s in body.split(",")]
        j = PLUS_INF if j_s in ("inf", "∞") else int(j_s)
        return DInfRep(qu, int(i_s), j)
    m = re.match(r"^M\((.*)\)$", text)
    if not m:
        raise BadRepName(f"cannot parse representation name {text!r}")
    body = m.group(1).strip()
    return _parse_string(qu, body)


def _bound(s):
    s = s.strip()
    if s in ("-inf", "-∞"):
        return MINUS_INF
    if s in ("inf", "+inf", "∞", "+∞"):
        return PLUS_INF
    return int(s)


def _parse_string(qu, body):
    if body in ("p_inf", "p_∞"):
        return _unique_ray(qu)
    m = re.match(r"^eps_(-?\d+)$|^ε_(-?\d+)$", body)
    if m:
        x = m.group(1) or m.group(2)
        return SimpleRep(qu, qu.vertex_by_label(x))
    m = re.match(r"^p_\{(-?\d+),(-?\d+)\}$|^p_(-?\d+)_(-?\d+)$", body)
    if m:
        i = int(m.group(1) or m.group(3))
        j = int(m.group(2) or m.group(4))
        return _directed_path(qu, i, j)
    m = re.match(r"^(\d)\|\[(.*),(.*)\]$", body)
    if m:
        fork = int(m.group(1))
        return StringRep(qu, _bound(m.group(2)), _bound(m.group(3)), fork)
    m = re.match(r"^\[(.*),(.*)\]$", body)
    if m:
        return StringRep(qu, _bound(m.group(1)), _bound(m.group(2)))
    if "-" in body or "," in body:
        walk = [s.strip() for s in re.split(r"[-,]", body) if s.strip()]
        return string_rep_from_walk(qu, walk)
    raise BadRepName(f"cannot parse string name {body!r}")


def _unique_ray(qu):
    prof = qu.infinite_path_profile()
    wits = prof["right_witnesses"]
    if len(wits) != 1:
        raise BadRepName(
            "p_inf requires a unique maximal right infinite path "
            f"(found {len(wits)})"
        )
    ch = qu.chart()
    name = wits[0]["tail"]
    tail = next(t for t in qu.tails if t.name == name)
    sign, off = ch.tail_pos[tail.tid]
    buffer = len(tail.word.prefix) + len(tail.word.period) + 2
    if sign == -1:
        # downward ray: starts at the first position above which an edge
        # points up (maximality), i.e. the lowest up-edge from below
        k = ch.first_dir_at_least(off - buffer, right=True)
        if k is None:
            raise BadRepName("the infinite path is not maximal (a double path)")
        return StringRep(qu, MINUS_INF, k)
    # upward ray: starts just above the last down-edge
    k = ch.last_dir_at_most(off + buffer, right=False)
    if k is not None:
        return StringRep(qu, k + 1, PLUS_INF)
    if ch.lo == MINUS_INF:
        raise BadRepName("the infinite path is not maximal (a double path)")
    return StringRep(qu, ch.lo, PLUS_INF)


def _directed_path(qu, i, j):
    ch = qu.chart()
    lo, hi = min(i, j), max(i, j)
    want_right = j > i
    for k in range(lo, hi):
        if ch.dir_right(k) != want_right:
            raise BadRepName(f"p_{{{i},{j}}} is not a path in this quiver")
    return StringRep(qu, lo, hi)
