"""Exact linear algebra over the rationals.

Everything downstream computes with `fractions.Fraction`, so every equality
test in the package is exact.  Matrices are immutable (tuples of tuples) and
all functions are pure.  Subspaces are stored through a canonical reduced
row-echelon basis, so two subspaces are equal as sets iff their stored bases
compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Q = Fraction

QZERO = Q(0)
QONE = Q(1)


def qstr(x: Fraction) -> str:
    """Render a rational as 'p' or 'p/q'."""
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_scalar(s) -> Fraction:
    """Parse 'p', 'p/q' or an int into a Fraction; reject zero denominators."""
    if isinstance(s, bool):
        raise ValueError("boolean is not a scalar")
    if isinstance(s, int):
        return Q(s)
    if isinstance(s, Fraction):
        return s
    if not isinstance(s, str):
        raise ValueError("scalar must be an integer or a string, got %r" % (s,))
    txt = s.strip()
    if "/" in txt:
        num, _, den = txt.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError("zero denominator in scalar %r" % s)
        return Q(int(num), d)
    return Q(int(txt))


def vec(entries) -> tuple:
    return tuple(Q(x) for x in entries)


def zero_vec(n: int) -> tuple:
    return (QZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    return tuple(QONE if j == i else QZERO for j in range(n))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a):
    if c == 0:
        return (QZERO,) * len(a)
    return tuple(c * x for x in a)


def vdot(a, b):
    s = QZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def is_zero_vec(a) -> bool:
    return all(x == 0 for x in a)


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        rows = tuple(tuple(Q(x) for x in row) for row in data)
        self.data = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != self.cols:
                raise ValueError("ragged matrix rows")

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix([(QZERO,) * cols] * rows) if rows else Matrix._empty(cols)

    @staticmethod
    def _empty(cols: int) -> "Matrix":
        m = Matrix.__new__(Matrix)
        m.data = ()
        m.rows = 0
        m.cols = cols
        return m

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([unit_vec(n, i) for i in range(n)]) if n else Matrix._empty(0)

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "Matrix":
        rows = list(rows)
        if not rows:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            return Matrix._empty(cols)
        return Matrix(rows)

    @staticmethod
    def column(entries) -> "Matrix":
        return Matrix([(Q(x),) for x in entries])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i) -> tuple:
        return self.data[i]

    def col(self, j) -> tuple:
        return tuple(row[j] for row in self.data)

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix addition")
        return Matrix.from_rows(
            [vadd(r, s) for r, s in zip(self.data, other.data)], self.cols
        )

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix subtraction")
        return Matrix.from_rows(
            [vsub(r, s) for r, s in zip(self.data, other.data)], self.cols
        )

    def __neg__(self):
        return Matrix.from_rows([vscale(Q(-1), r) for r in self.data], self.cols)

    def scale(self, c) -> "Matrix":
        c = Q(c)
        return Matrix.from_rows([vscale(c, r) for r in self.data], self.cols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                "shape mismatch: (%d x %d) * (%d x %d)"
                % (self.rows, self.cols, other.rows, other.cols)
            )
        out = []
        for row in self.data:
            acc = [QZERO] * other.cols
            for k, c in enumerate(row):
                if c:
                    orow = other.data[k]
                    for j, v in enumerate(orow):
                        if v:
                            acc[j] += c * v
            out.append(tuple(acc))
        return Matrix.from_rows(out, other.cols)

    def apply(self, v) -> tuple:
        """Matrix times coordinate column, given and returned as a tuple."""
        if self.cols != len(v):
            raise ValueError("shape mismatch in matrix application")
        acc = [QZERO] * self.rows
        for i, row in enumerate(self.data):
            s = QZERO
            for c, x in zip(row, v):
                if c and x:
                    s += c * x
            acc[i] = s
        return tuple(acc)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix.from_rows([()] * self.cols, 0)
        return Matrix.from_rows([self.col(j) for j in range(self.cols)], self.rows)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def flatten(self) -> tuple:
        out = []
        for row in self.data:
            out.extend(row)
        return tuple(out)

    def __repr__(self):
        body = "; ".join(" ".join(qstr(x) for x in row) for row in self.data)
        return "Matrix[%s]" % body


def mat_from_flat(flat, rows: int, cols: int) -> Matrix:
    if len(flat) != rows * cols:
        raise ValueError("flat entry count does not match shape")
    return Matrix.from_rows(
        [tuple(flat[i * cols : (i + 1) * cols]) for i in range(rows)], cols
    )


def _rref_rows(rows, width):
    """Reduce a list of row lists in place; return pivot column list."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(width):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        if pv != 1:
            inv = QONE / pv
            rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> Matrix:
    """Canonical reduced row-echelon form with zero rows dropped."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(rows, m.cols)
    return Matrix.from_rows([tuple(r) for r in rows[: len(pivots)]], m.cols)


def rref_keep_zeros(m: Matrix) -> Matrix:
    """Reduced row-echelon form with the original row count preserved."""
    rows = [list(r) for r in m.data]
    _rref_rows(rows, m.cols)
    return Matrix.from_rows([tuple(r) for r in rows], m.cols)


def rank(m: Matrix) -> int:
    return rref(m).rows


def pivot_columns(m: Matrix):
    """Pivot columns of an already reduced matrix."""
    pivots = []
    for row in m.data:
        for j, x in enumerate(row):
            if x != 0:
                pivots.append(j)
                break
    return pivots


def inverse(m: Matrix) -> Matrix | None:
    """Two-sided inverse of a square matrix, or None if singular."""
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    if n == 0:
        return Matrix._empty(0)
    aug = [list(m.data[i]) + list(unit_vec(n, i)) for i in range(n)]
    pivots = _rref_rows(aug, 2 * n)
    if pivots != list(range(n)):
        return None
    return Matrix.from_rows([tuple(row[n:]) for row in aug], n)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product with index convention (i, j) -> i * dim_b + j."""
    out = []
    for arow in a.data:
        for brow in b.data:
            line = []
            for x in arow:
                if x == 0:
                    line.extend([QZERO] * len(brow))
                else:
                    line.extend([x * y for y in brow])
            out.append(tuple(line))
    return Matrix.from_rows(out, a.cols * b.cols)


@dataclass(frozen=True)
class Subspace:
    """Subspace of K^n given by its canonical RREF basis (rows)."""

    ambient_dim: int
    basis: Matrix

    @staticmethod
    def from_spanning(vectors, ambient_dim: int) -> "Subspace":
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError("spanning vector has wrong dimension")
        reduced = rref(Matrix.from_rows(vectors, ambient_dim))
        return Subspace(ambient_dim, reduced)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix._empty(ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def contains(self, v) -> bool:
        v = list(v)
        if len(v) != self.ambient_dim:
            raise ValueError("vector has wrong ambient dimension")
        for row in self.basis.data:
            pc = next((j for j, x in enumerate(row) if x != 0), None)
            if pc is None:
                continue
            f = v[pc]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return all(x == 0 for x in v)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis.data)

    def coordinates(self, v):
        """Coefficients of v in the stored basis, or None if v is outside."""
        v = list(v)
        coeffs = [QZERO] * self.basis.rows
        for i, row in enumerate(self.basis.data):
            pc = next(j for j, x in enumerate(row) if x != 0)
            f = v[pc]
            if f:
                coeffs[i] = f
                v = [a - f * b for a, b in zip(v, row)]
        if any(x != 0 for x in v):
            return None
        return tuple(coeffs)

    def add(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_spanning(
            list(self.basis.data) + list(other.basis.data), self.ambient_dim
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via the kernel of [B1; B2] stacking."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # Solve x*B1 = y*B2: kernel of the matrix [B1^t | -B2^t].
        b1t = self.basis.transpose()
        b2t = other.basis.transpose()
        cols = self.dim + other.dim
        stacked = Matrix.from_rows(
            [
                tuple(b1t.data[i]) + tuple(-x for x in b2t.data[i])
                for i in range(self.ambient_dim)
            ],
            cols,
        )
        ker = kernel(stacked)
        vecs = []
        for krow in ker.basis.data:
            coeff = krow[: self.dim]
            v = zero_vec(self.ambient_dim)
            for c, brow in zip(coeff, self.basis.data):
                if c:
                    v = vadd(v, vscale(c, brow))
            vecs.append(v)
        return Subspace.from_spanning(vecs, self.ambient_dim)

    def __contains__(self, v):
        return self.contains(v)


def kernel(m: Matrix) -> Subspace:
    """Null space of m (solutions of m x = 0) as a canonical subspace."""
    n = m.cols
    red = rref(m)
    pivots = pivot_columns(red)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    basis = []
    for f in free:
        v = [QZERO] * n
        v[f] = QONE
        for i, pc in enumerate(pivots):
            v[pc] = -red.data[i][f]
        basis.append(tuple(v))
    return Subspace.from_spanning(basis, n)


def image(m: Matrix) -> Subspace:
    """Column space of m as a canonical subspace of K^rows."""
    return Subspace.from_spanning([m.col(j) for j in range(m.cols)], m.rows)


def row_space(m: Matrix) -> Subspace:
    return Subspace.from_spanning(list(m.data), m.cols)


def solve_affine(a: Matrix, b):
    """Solve a x = b exactly.

    Returns (particular, kernel_subspace) or None when b is outside the
    column space.  The particular solution sets every free variable to zero,
    so it is deterministic.
    """
    b = tuple(b)
    if a.rows != len(b):
        raise ValueError("right-hand side has wrong dimension")
    n = a.cols
    aug = [list(row) + [bv] for row, bv in zip(a.data, b)]
    pivots = _rref_rows(aug, n + 1)
    if n in pivots:
        return None
    particular = [QZERO] * n
    for i, pc in enumerate(pivots):
        particular[pc] = aug[i][n]
    return tuple(particular), kernel(a)


def solve_unique(a: Matrix, b):
    """Solve a x = b expecting a unique solution; None if absent or ambiguous."""
    res = solve_affine(a, b)
    if res is None:
        return None
    particular, ker = res
    if ker.dim != 0:
        return None
    return particular


def form_inverse(q: Matrix) -> Matrix | None:
    """Inverse coefficient matrix of a nondegenerate bilinear pairing.

    For a pairing V1 x V2 -> K with Gram matrix q[i][j] against chosen bases,
    the returned p[j][k] are the coefficients of the dual tensor in V2 (x) V1
    with q.p = p.q = identity.  Returns None when the pairing is degenerate.
    """
    if not q.is_square():
        return None
    return inverse(q)
