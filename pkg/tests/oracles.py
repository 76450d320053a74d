"""Independent oracles kept deliberately naive: these re-derive expected
values by brute force so the main code paths are checked against a second
route, not against themselves."""

from fractions import Fraction


def naive_row_reduce(rows, p=None):
    """Plain Gaussian elimination (no pivot normalization tricks); returns
    the rank.  Over F_p when p is given, else over Q via Fractions."""
    if p is None:
        m = [[Fraction(x) for x in r] for r in rows]
    else:
        m = [[x % p for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, len(m)):
            if m[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = (
            Fraction(1, 1) / m[row][col]
            if p is None
            else pow(m[row][col], -1, p)
        )
        for i in range(len(m)):
            if i == row:
                continue
            f = m[i][col] * inv if p is None else m[i][col] * inv % p
            if f == 0:
                continue
            for c in range(ncols):
                if p is None:
                    m[i][c] -= f * m[row][c]
                else:
                    m[i][c] = (m[i][c] - f * m[row][c]) % p
        row += 1
        rank += 1
    return rank


def euler_pairing(qu, dm, dn, window):
    """The hereditary Euler form sum_x m_x n_x - sum_{a: x->y} m_x n_y,
    evaluated on finite windows (equals hom - ext for fd representations)."""
    total = 0
    for v in window:
        total += dm.get(v, 0) * dn.get(v, 0)
    for a in qu.arrows_within(window):
        total -= dm.get(a[0], 0) * dn.get(a[1], 0)
    return total


def count_positive_roots(qu):
    """Number of positive roots of the Tits form of a finite quiver: the
    brute-force census of indecomposables for Dynkin types (Gabriel)."""
    verts = list(qu.core_vertices)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}

    def q_form(d):
        total = sum(x * x for x in d)
        for a in qu.core_arrows:
            total -= d[idx[a[0]]] * d[idx[a[1]]]
        return total

    # entries of positive roots of Dynkin diagrams are bounded by 6 (E_8);
    # bound 3 covers A_n and D_n used in the tests
    bound = 3
    count = 0

    def rec(i, d):
        nonlocal count
        if i == n:
            if any(d) and q_form(d) == 1:
                count += 1
            return
        for val in range(bound + 1):
            rec(i + 1, d + [val])

    rec(0, [])
    return count


def brute_predecessor_growth(qu, v, radius):
    """(number of predecessors within radius-1, within radius): equality
    certifies finiteness of the predecessor set."""
    seen = {v}
    frontier = [v]
    sizes = []
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for a in qu.arrows_in(w):
                if a[0] not in seen:
                    seen.add(a[0])
                    nxt.append(a[0])
        frontier = nxt
        sizes.append(len(seen))
    return sizes[-2] if len(sizes) > 1 else sizes[-1], sizes[-1]
