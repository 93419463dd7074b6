"""Dense exact linear algebra over any tower level.

Matrices store integer-encoded entries row-major; Gaussian elimination with
first-nonzero pivoting is the only algorithm used, so every result is exact
and canonical.  Subspaces are kept in reduced row echelon form, which makes
equality a tuple comparison.
"""

from __future__ import annotations

from .errors import AmbientMismatch, FieldMismatch, NotInvertible
from .field_tower import FieldElement, FieldSpec, expansion, subfield_spec


class GFMatrix:
    """Immutable dense matrix over a FieldSpec."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldSpec, rows: int, cols: int, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        data = tuple(data)
        if len(data) != rows * cols:
            raise ValueError("data length does not match shape")
        self.data = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_rows(cls, field, row_lists):
        row_lists = [list(r) for r in row_lists]
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for r in row_lists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            for v in r:
                flat.append(v.val if isinstance(v, FieldElement) else int(v))
        return cls(field, rows, cols, flat)

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [1 if i == j else 0 for i in range(n) for j in range(n)])

    # -- basic access ---------------------------------------------------------

    def row(self, i) -> tuple:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def get(self, i, j) -> FieldElement:
        return FieldElement(self.field, self.data[i * self.cols + j])

    def is_zero(self) -> bool:
        return not any(self.data)

    def __eq__(self, other):
        return (
            isinstance(other, GFMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"GFMatrix({self.field.p}^{self.field.h}, {self.rows}x{self.cols})"

    # -- arithmetic -------------------------------------------------------------

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return GFMatrix(
            self.field, self.rows, self.cols,
            [add(a, b) for a, b in zip(self.data, other.data)],
        )

    def __sub__(self, other):
        self._check(other)
        f = self.field
        return GFMatrix(
            self.field, self.rows, self.cols,
            [f.sub(a, b) for a, b in zip(self.data, other.data)],
        )

    def __neg__(self):
        f = self.field
        return GFMatrix(self.field, self.rows, self.cols, [f.neg(a) for a in self.data])

    def scale(self, c) -> "GFMatrix":
        c = c.val if isinstance(c, FieldElement) else int(c)
        mul = self.field.mul
        return GFMatrix(self.field, self.rows, self.cols, [mul(c, a) for a in self.data])

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        f = self.field
        mul, add = f.mul, f.add
        n, k, m = self.rows, self.cols, other.cols
        out = [0] * (n * m)
        for i in range(n):
            arow = self.data[i * k : (i + 1) * k]
            for t, a in enumerate(arow):
                if a:
                    brow = other.data[t * m : (t + 1) * m]
                    base = i * m
                    for j in range(m):
                        b = brow[j]
                        if b:
                            out[base + j] = add(out[base + j], mul(a, b))
        return GFMatrix(f, n, m, out)

    def transpose(self) -> "GFMatrix":
        out = [0] * (self.rows * self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out[j * self.rows + i] = self.data[i * self.cols + j]
        return GFMatrix(self.field, self.cols, self.rows, out)

    def vec(self) -> tuple:
        """Row-major flattening."""
        return self.data

    # -- elimination -----------------------------------------------------------

    def rref(self):
        rows, pivots = rref_rows(self.field, self.row_lists())
        return GFMatrix.from_rows(self.field, rows) if rows else GFMatrix(
            self.field, 0, self.cols, ()
        ), pivots

    def rank(self) -> int:
        _, pivots = rref_rows(self.field, self.row_lists())
        return len(pivots)

    def kernel(self) -> "GFSubspace":
        """Right kernel {v : Mv = 0} as a canonical subspace of F^cols."""
        f = self.field
        rows, pivots = rref_rows(f, self.row_lists())
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.cols
            v[fc] = 1
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(rows[r][fc])
            basis.append(v)
        return GFSubspace.from_span(f, self.cols, basis)

    def solve(self, rhs):
        """One solution x of Mx = rhs, or None when inconsistent."""
        f = self.field
        aug = [list(self.row(i)) + [rhs[i] if not isinstance(rhs[i], FieldElement) else rhs[i].val] for i in range(self.rows)]
        rows, pivots = rref_rows(f, aug)
        x = [0] * self.cols
        for r, pc in enumerate(pivots):
            if pc == self.cols:
                return None
            x[pc] = rows[r][self.cols]
        return tuple(x)

    def inverse(self) -> "GFMatrix":
        if self.rows != self.cols:
            raise NotInvertible("only square matrices can be inverted")
        f = self.field
        n = self.rows
        aug = [list(self.row(i)) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
        rows, pivots = rref_rows(f, aug)
        if list(pivots) != list(range(n)):
            raise NotInvertible("matrix is singular")
        return GFMatrix.from_rows(f, [r[n:] for r in rows])

    # -- text format: rows ';', entries ',', entry digits 'c0.c1...' -------------

    def format(self) -> str:
        fmt = self.field.format_element
        return ";".join(
            ",".join(fmt(v) for v in self.row(i)) for i in range(self.rows)
        )


def parse_matrix(field: FieldSpec, text: str) -> GFMatrix:
    rows = []
    for row_s in text.strip().split(";"):
        rows.append([field.parse_element(e) for e in row_s.split(",")])
    return GFMatrix.from_rows(field, rows)


def rref_rows(field: FieldSpec, rows):
    """In-place reduced row echelon form; returns (nonzero rows, pivot cols)."""
    if not rows:
        return [], ()
    mul, add, inv, neg = field.mul, field.add, field.inv, field.neg
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            s = inv(lead)
            rows[r] = [mul(s, v) for v in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = neg(rows[i][c])
                ri = rows[i]
                rows[i] = [add(a, mul(f, b)) for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], tuple(pivots)


class GFSubspace:
    """A subspace of F^n held as a reduced-row-echelon basis.

    Two subspaces are equal exactly when their basis matrices are identical,
    so equality and set membership are cheap.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, basis: GFMatrix, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_span(cls, field, ambient_dim, vectors) -> "GFSubspace":
        rows = [[v.val if isinstance(v, FieldElement) else int(v) for v in vec] for vec in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise AmbientMismatch("vector length does not match ambient dimension")
        red, pivots = rref_rows(field, rows)
        mat = GFMatrix.from_rows(field, red) if red else GFMatrix(field, 0, ambient_dim, ())
        return cls(field, ambient_dim, mat, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls.from_span(field, ambient_dim, [])

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, GFMatrix.identity(field, ambient_dim), range(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        return (
            isinstance(other, GFSubspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis.data == other.basis.data
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis.data))

    def __repr__(self):
        return f"GFSubspace(dim {self.dim} of F^{self.ambient_dim})"

    def contains(self, vec) -> bool:
        f = self.field
        v = [x.val if isinstance(x, FieldElement) else int(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient dimension")
        for r, pc in enumerate(self.pivots):
            if v[pc]:
                c = f.neg(v[pc])
                row = self.basis.row(r)
                v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
        return not any(v)

    def reduce(self, vec):
        """Residue of vec after elimination against the basis."""
        f = self.field
        v = [x.val if isinstance(x, FieldElement) else int(x) for x in vec]
        for r, pc in enumerate(self.pivots):
            if v[pc]:
                c = f.neg(v[pc])
                row = self.basis.row(r)
                v = [f.add(a, f.mul(c, b)) for a, b in zip(v, row)]
        return tuple(v)

    def _check(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("subspaces live in different ambients")

    def sum(self, other) -> "GFSubspace":
        self._check(other)
        return GFSubspace.from_span(
            self.field, self.ambient_dim,
            self.basis.row_lists() + other.basis.row_lists(),
        )

    def intersect(self, other) -> "GFSubspace":
        """Zassenhaus: row-reduce [A|A; B|0], read rows with zero left half."""
        self._check(other)
        n = self.ambient_dim
        rows = []
        for r in self.basis.row_lists():
            rows.append(r + list(r))
        for r in other.basis.row_lists():
            rows.append(r + [0] * n)
        red, _ = rref_rows(self.field, rows)
        inter = [r[n:] for r in red if not any(r[:n])]
        return GFSubspace.from_span(self.field, n, inter)

    def orthogonal_complement(self) -> "GFSubspace":
        """{v : b . v = 0 for all basis rows b} under the standard dot product."""
        if self.dim == 0:
            return GFSubspace.full(self.field, self.ambient_dim)
        return self.basis.kernel()

    def enumerate_vectors(self):
        """All q^dim vectors; intended for small spaces only."""
        f = self.field
        rows = self.basis.row_lists()
        n = self.ambient_dim

        def rec(i, acc):
            if i == len(rows):
                yield tuple(acc)
                return
            row = rows[i]
            for c in f.elements():
                if c:
                    nxt = [f.add(a, f.mul(c, b)) for a, b in zip(acc, row)]
                else:
                    nxt = acc
                yield from rec(i + 1, nxt)

        yield from rec(0, [0] * n)


def restrict_scalars(space: GFSubspace, q0: int, basis=None) -> GFSubspace:
    """View a subspace of F_{q^m}^k as an F_{q0}-subspace of F_{q0}^(k*m).

    Coordinates expand through the power basis of the tower generator unless
    an explicit basis is given; the point set is unchanged.
    """
    field = space.field
    exp = expansion(field, q0, basis)
    sub = subfield_spec(field, q0)
    k = space.ambient_dim
    vecs = []
    for row in space.basis.row_lists():
        for b in exp.basis:
            scaled = [field.mul(b, v) for v in row]
            flat = []
            for v in scaled:
                flat.extend(exp.to_coords(v))
            vecs.append(flat)
    return GFSubspace.from_span(sub, k * exp.m, vecs)


def rank_of_int_rows_gf2(rows) -> int:
    """GF(2) rank of bit-packed integer rows (the hot kernel for weights)."""
    basis = {}
    r = 0
    for v in rows:
        while v:
            top = v.bit_length()
            b = basis.get(top)
            if b is None:
                basis[top] = v
                r += 1
                break
            v ^= b
    return r
