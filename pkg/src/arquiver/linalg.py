"""Exact matrix kernel over Q and prime fields.

Everything here is exact: rationals use fractions.Fraction (with a
fraction-free Bareiss forward pass to control intermediate blowup), prime
fields use ints mod p.  Matrices are dense lists of lists; the windows this
package manipulates stay small, so clarity beats sparsity.
"""

from fractions import Fraction


class FieldQ:
    """The rationals."""

    name = "Q"
    char = 0

    def __call__(self, x):
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return a / b

    def neg(self, a):
        return -a

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, FieldQ)

    def __hash__(self):
        return hash("FieldQ")

    def __repr__(self):
        return "Q"


class FieldFp:
    """The prime field F_p; elements are ints in [0, p)."""

    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def __call__(self, x):
        if isinstance(x, Fraction):
            num, den = x.numerator, x.denominator
            return num * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return (-a) % self.p

    def eq(self, a, b):
        return a == b

    def __eq__(self, other):
        return isinstance(other, FieldFp) and other.p == self.p

    def __hash__(self):
        return hash(("FieldFp", self.p))

    def __repr__(self):
        return f"F_{self.p}"


QQ = FieldQ()


def field_from_name(name):
    if name in (None, "", "Q"):
        return QQ
    if name.startswith("Fp:"):
        return FieldFp(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown field {name!r}")


class Matrix:
    """A rows x cols matrix over a field.  Zero-sized matrices are legal."""

    __slots__ = ("field", "rows", "cols", "a")

    def __init__(self, field, rows, cols, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.a = [[field.zero] * cols for _ in range(rows)]
        else:
            assert len(entries) == rows
            self.a = [[field(x) for x in row] for row in entries]
            for row in self.a:
                assert len(row) == cols

    @classmethod
    def identity(cls, field, n):
        m = cls(field, n, n)
        for i in range(n):
            m.a[i][i] = field.one
        return m

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols)

    def copy(self):
        m = Matrix(self.field, self.rows, self.cols)
        m.a = [row[:] for row in self.a]
        return m

    def __getitem__(self, ij):
        return self.a[ij[0]][ij[1]]

    def __setitem__(self, ij, v):
        self.a[ij[0]][ij[1]] = self.field(v)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.rows == self.rows
            and other.cols == self.cols
            and other.a == self.a
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.a})"

    def transpose(self):
        m = Matrix(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                m.a[j][i] = self.a[i][j]
        return m

    def mul(self, other):
        assert self.cols == other.rows
        f = self.field
        out = Matrix(f, self.rows, other.cols)
        for i in range(self.rows):
            ai = self.a[i]
            oi = out.a[i]
            for k in range(self.cols):
                x = ai[k]
                if f.eq(x, f.zero):
                    continue
                bk = other.a[k]
                for j in range(other.cols):
                    oi[j] = f.add(oi[j], f.mul(x, bk[j]))
        return out

    def add_mat(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        f = self.field
        out = Matrix(f, self.rows, self.cols)
        for i in range(self.rows):
            out.a[i] = [f.add(x, y) for x, y in zip(self.a[i], other.a[i])]
        return out

    def scale(self, c):
        f = self.field
        c = f(c)
        out = Matrix(f, self.rows, self.cols)
        for i in range(self.rows):
            out.a[i] = [f.mul(c, x) for x in self.a[i]]
        return out

    def neg_mat(self):
        return self.scale(-1 if self.field.char == 0 else self.field.char - 1)

    def apply(self, vec):
        """Matrix times column vector (a list)."""
        f = self.field
        assert len(vec) == self.cols
        out = []
        for i in range(self.rows):
            s = f.zero
            for j, v in enumerate(vec):
                s = f.add(s, f.mul(self.a[i][j], v))
            out.append(s)
        return out

    def is_zero(self):
        z = self.field.zero
        return all(self.field.eq(x, z) for row in self.a for x in row)

    def hstack(self, other):
        assert self.rows == other.rows
        m = Matrix(self.field, self.rows, self.cols + other.cols)
        for i in range(self.rows):
            m.a[i] = self.a[i][:] + other.a[i][:]
        return m

    def vstack(self, other):
        assert self.cols == other.cols
        m = Matrix(self.field, self.rows + other.rows, self.cols)
        m.a = [r[:] for r in self.a] + [r[:] for r in other.a]
        return m

    def submatrix(self, row_idx, col_idx):
        m = Matrix(self.field, len(row_idx), len(col_idx))
        for i, r in enumerate(row_idx):
            m.a[i] = [self.a[r][c] for c in col_idx]
        return m


def block_diag(field, blocks):
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    m = Matrix(field, rows, cols)
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            m.a[r0 + i][c0 : c0 + b.cols] = b.a[i][:]
        r0 += b.rows
        c0 += b.cols
    return m


def _echelon_q(mat):
    """Row echelon form over Q via fraction-free (Bareiss) elimination.

    Rows are first scaled to integers; the forward pass then stays in ZZ.
    Returns (pivot column list, echelon rows as Fractions, normalized so the
    pivot entries are 1).
    """
    rows = []
    for row in mat.a:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    ncols = mat.cols
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pc = rows[r][c]
        # Bareiss: every lower row is rescaled by the pivot each step; the
        # running division by the previous pivot is then exact (Sylvester)
        for i in range(r + 1, len(rows)):
            ric = rows[i][c]
            rows[i] = [
                (pc * rows[i][j] - ric * rows[r][j]) // prev for j in range(ncols)
            ]
        pivots.append(c)
        prev = pc
        r += 1
    ech = []
    for i, c in enumerate(pivots):
        pe = Fraction(rows[i][c])
        ech.append([Fraction(x) / pe for x in rows[i]])
    return pivots, ech


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


def _echelon_fp(mat):
    """Row echelon form over F_p, pivots normalized to 1."""
    p = mat.field.p
    rows = [row[:] for row in mat.a]
    ncols = mat.cols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots, [rows[i] for i in range(len(pivots))]


def echelon(mat):
    """Reduced row echelon form: (pivot columns, rows with pivot entries 1).

    Deterministic: first nonzero candidate is always chosen as pivot.
    """
    if mat.field.char == 0:
        pivots, ech = _echelon_q(mat)
        # back-substitute to reduced form
        for i in range(len(pivots) - 1, -1, -1):
            c = pivots[i]
            for k in range(i):
                f = ech[k][c]
                if f:
                    ech[k] = [x - f * y for x, y in zip(ech[k], ech[i])]
        return pivots, ech
    return _echelon_fp(mat)


def rank(mat):
    return len(echelon(mat)[0])


def rank_kernel(mat):
    """(rank, kernel basis) with echelon-normalized basis columns.

    Basis vectors have a 1 in their free coordinate and are listed by
    increasing free column, so output is deterministic; rank + len(basis)
    always equals mat.cols.
    """
    f = mat.field
    pivots, ech = echelon(mat)
    rk = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(mat.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [f.zero] * mat.cols
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(ech[i][fc])
        basis.append(v)
    return rk, basis


def cokernel_basis(mat):
    """Functionals spanning (target space)/im(mat): rows of a projection.

    The returned rows are a basis of the left kernel of mat, i.e. each row r
    satisfies r . mat = 0, and they descend to a basis of the cokernel.
    """
    _, basis = rank_kernel(mat.transpose())
    return basis


def solve(mat, target):
    """One solution x of mat . x = target, or None if inconsistent."""
    f = mat.field
    aug = mat.hstack(Matrix(f, mat.rows, 1, [[t] for t in target]))
    pivots, ech = echelon(aug)
    if mat.cols in pivots:
        return None
    x = [f.zero] * mat.cols
    for i, c in enumerate(pivots):
        x[c] = ech[i][mat.cols]
    return x


def invertible(mat):
    return mat.rows == mat.cols and rank(mat) == mat.rows


def inverse(mat):
    assert mat.rows == mat.cols
    f = mat.field
    n = mat.rows
    aug = mat.hstack(Matrix.identity(f, n))
    pivots, ech = echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    inv = Matrix(f, n, n)
    for i in range(n):
        inv.a[i] = ech[i][n:]
    return inv


def intersect_rowspaces(field, rows_a, rows_b, ncols):
    """Basis of the intersection of two row spaces (each a list of rows)."""
    if not rows_a or not rows_b:
        return []
    m = Matrix(field, len(rows_a) + len(rows_b), ncols)
    m.a = [r[:] for r in rows_a] + [r[:] for r in rows_b]
    _, ker = rank_kernel(m.transpose())
    # kernel of transpose = relations between all rows; extract a-part combos
    out = []
    for rel in ker:
        v = [field.zero] * ncols
        for i, c in enumerate(rel[: len(rows_a)]):
            if not field.eq(c, field.zero):
                v = [field.add(x, field.mul(c, y)) for x, y in zip(v, rows_a[i])]
        if any(not field.eq(x, field.zero) for x in v):
            out.append(v)
    sp = Matrix(field, len(out), ncols)
    sp.a = out
    pivots, ech = echelon(sp)
    return ech
