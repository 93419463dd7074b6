"""Rank metric codes in three views: matrix spaces, vector codes, polynomial codes.

The three views interconvert through gamma (coordinate expansion), ev
(evaluation at a basis), and the matrix bridge of linearized polynomials.
Weight data comes from full enumeration, which is the cost center: the
enumeration kernels below work on integer-encoded entries with a bit-packed
fast path in characteristic 2.  A code caches its spectrum after the first
computation, and conversions hand the cache over since every conversion here
preserves weights.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    BadSubfieldSize,
    FieldMismatch,
    NotABasis,
    SearchSpaceTooLarge,
    TooLarge,
    ZeroCode,
)
from .field_tower import (
    FieldElement,
    FieldSpec,
    default_modulus,
    expansion,
    is_irreducible_over,
    make_field,
    power_basis,
    subfield_spec,
    tower_embedding,
)
from .linpoly import (
    LinPoly,
    MultiLinPoly,
    from_matrix,
    interpolate,
    minterpolate,
    mto_matrix,
    standard_points,
    to_matrix,
)
from .matspace import GFMatrix, GFSubspace, rank_of_int_rows_gf2, rref_rows

DEFAULT_MAX_ENUM = 2**24


# ---------------------------------------------------------------------------
# weight spectrum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightSpectrum:
    counts: tuple  # sorted tuple of (weight, count)

    @classmethod
    def from_counter(cls, counter):
        return cls(tuple(sorted(counter.items())))

    def as_dict(self) -> dict:
        return dict(self.counts)

    @property
    def cardinality(self) -> int:
        return sum(c for _, c in self.counts)

    def nonzero_weights(self) -> tuple:
        return tuple(w for w, _ in self.counts if w > 0)

    def divisibility_index(self) -> int:
        import math

        weights = self.nonzero_weights()
        if not weights:
            raise ZeroCode("the zero code has no nonzero weights")
        g = 0
        for w in weights:
            g = math.gcd(g, w)
        return g

    def max_weight(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    def second_largest_weight(self) -> Optional[int]:
        ws = self.nonzero_weights()
        mx = self.max_weight()
        lower = [w for w in ws if w < mx]
        return max(lower) if lower else None

    def min_distance(self) -> int:
        ws = self.nonzero_weights()
        if not ws:
            raise ZeroCode("the zero code has no minimum distance")
        return min(ws)


# ---------------------------------------------------------------------------
# the three code views
# ---------------------------------------------------------------------------


class MatrixCode:
    """F_q-subspace of F_q^(m x n), given by an F_q-basis of matrices."""

    def __init__(self, field: FieldSpec, m: int, n: int, basis, check=True):
        basis = tuple(basis)
        for B in basis:
            if B.field != field or B.rows != m or B.cols != n:
                raise FieldMismatch("basis matrix with wrong field or shape")
        if check and basis:
            rows = [list(B.vec()) for B in basis]
            _, pivots = rref_rows(field, [r[:] for r in rows])
            if len(pivots) != len(basis):
                raise NotABasis("matrices are F_q-linearly dependent")
        self.field = field
        self.m = m
        self.n = n
        self.basis = basis
        self._spectrum: Optional[WeightSpectrum] = None

    @classmethod
    def from_span(cls, field, m, n, mats):
        rows = [list(B.vec()) for B in mats]
        red, _ = rref_rows(field, rows)
        basis = [GFMatrix(field, m, n, r) for r in red]
        return cls(field, m, n, basis, check=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return self.field.order**self.dim

    def members(self):
        """All codewords; intended for small codes."""
        f = self.field

        def rec(i, acc):
            if i == self.dim:
                yield GFMatrix(f, self.m, self.n, acc)
                return
            vec = self.basis[i].vec()
            for c in f.elements():
                if c:
                    nxt = [f.add(a, f.mul(c, b)) for a, b in zip(acc, vec)]
                else:
                    nxt = list(acc)
                yield from rec(i + 1, nxt)

        yield from rec(0, [0] * (self.m * self.n))

    def span_key(self) -> tuple:
        rows = [list(B.vec()) for B in self.basis]
        red, _ = rref_rows(self.field, rows)
        return tuple(tuple(r) for r in red)

    def contains(self, M: GFMatrix) -> bool:
        space = GFSubspace.from_span(
            self.field, self.m * self.n, [B.vec() for B in self.basis]
        )
        return space.contains(M.vec())

    def __repr__(self):
        return f"MatrixCode({self.m}x{self.n} over F_{self.field.order}, dim {self.dim})"


class VectorCode:
    """F_{q^m}-subspace of F_{q^m}^n with generator matrix G, base field F_{q0}."""

    def __init__(self, field: FieldSpec, q0: int, G: GFMatrix, check=True):
        field.subfield_exponent(q0)
        if G.field != field:
            raise FieldMismatch("generator matrix over the wrong field")
        if check:
            rows = G.row_lists()
            _, pivots = rref_rows(field, [r[:] for r in rows])
            if len(pivots) != G.rows:
                raise NotABasis("generator matrix does not have full row rank")
        self.field = field
        self.q0 = q0
        self.G = G
        self._spectrum: Optional[WeightSpectrum] = None

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def m(self) -> int:
        return self.field.h // self.field.subfield_exponent(self.q0)

    @property
    def cardinality(self) -> int:
        return self.field.order**self.k

    def span_key(self) -> tuple:
        red, _ = rref_rows(self.field, self.G.row_lists())
        return tuple(tuple(r) for r in red)

    def __repr__(self):
        return (
            f"VectorCode([{self.n},{self.k}] over "
            f"F_{self.field.order}/F_{self.q0})"
        )


class PolyCode:
    """F_{q^m}-span of linearized polynomials (one or several variables)."""

    def __init__(self, field: FieldSpec, q0: int, gens, check=True):
        gens = tuple(gens)
        if not gens:
            raise ZeroCode("a polynomial code needs at least one generator")
        multi = isinstance(gens[0], MultiLinPoly)
        for g in gens:
            if g.field != field or g.q0 != q0:
                raise FieldMismatch("generator over the wrong field or base")
            if isinstance(g, MultiLinPoly) != multi:
                raise FieldMismatch("mixed univariate and multivariate generators")
        self.field = field
        self.q0 = q0
        self.gens = gens
        self.nvars = gens[0].nvars if multi else 1
        if check:
            rows = [list(self._flat(g)) for g in gens]
            _, pivots = rref_rows(field, [r[:] for r in rows])
            if len(pivots) != len(gens):
                raise NotABasis("generators are F_{q^m}-linearly dependent")
        self._spectrum: Optional[WeightSpectrum] = None

    @staticmethod
    def _flat(g):
        return g.coeffs if isinstance(g, LinPoly) else g.flat()

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def m(self) -> int:
        return self.field.h // self.field.subfield_exponent(self.q0)

    @property
    def cardinality(self) -> int:
        return self.field.order**self.k

    def canonical(self) -> "PolyCode":
        """Generators replaced by the reduced row echelon basis over F_{q^m}."""
        rows = [list(self._flat(g)) for g in self.gens]
        red, _ = rref_rows(self.field, rows)
        if self.nvars == 1:
            gens = [LinPoly(self.field, self.q0, r) for r in red]
        else:
            m = self.m
            gens = [
                MultiLinPoly(
                    self.field, self.q0,
                    [r[j * m : (j + 1) * m] for j in range(self.nvars)],
                )
                for r in red
            ]
        out = PolyCode(self.field, self.q0, gens, check=False)
        out._spectrum = self._spectrum
        return out

    def span_key(self) -> tuple:
        rows = [list(self._flat(g)) for g in self.gens]
        red, _ = rref_rows(self.field, rows)
        return tuple(tuple(r) for r in red)

    def fq_basis(self):
        """An F_q-basis of the code: scalar multiples of the generators."""
        pb = power_basis(self.field, self.q0)
        return [g.scale(b) for g in self.gens for b in pb]

    def __repr__(self):
        kind = f"{self.nvars}-var " if self.nvars > 1 else ""
        return f"PolyCode({kind}dim {self.k} over F_{self.field.order}/F_{self.q0})"


# ---------------------------------------------------------------------------
# weight kernels
# ---------------------------------------------------------------------------


def _rank_digit_rows(rows, p):
    """Rank of rows of base-p digit lists (in place)."""
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p) if p > 2 else 1
        if inv != 1:
            rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] % p
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def make_weight_fn(field: FieldSpec, q0: int):
    """weight(entries) = dim over F_{q0} of the span of the entries."""
    exp = expansion(field, q0)
    if field.p == 2 and q0 == 2:
        mm = field.h + 1

        def wt2(entries):
            basis = [0] * mm
            r = 0
            for v in entries:
                while v:
                    t = v.bit_length()
                    b = basis[t]
                    if not b:
                        basis[t] = v
                        r += 1
                        break
                    v ^= b
            return r

        return wt2
    if q0 == field.p:
        p = field.p
        coeffs = field.coeffs

        def wtp(entries):
            return _rank_digit_rows([list(coeffs(v)) for v in entries if v], p)

        return wtp
    sub = exp.sub

    def wtgen(entries):
        rows = [list(exp.to_coords(v)) for v in entries if v]
        _, pivots = rref_rows(sub, rows)
        return len(pivots)

    return wtgen


def vector_weight(field: FieldSpec, q0: int, entries) -> int:
    vals = [e.val if isinstance(e, FieldElement) else int(e) for e in entries]
    return make_weight_fn(field, q0)(vals)


def _spectrum_vector(code: VectorCode, cap: int) -> WeightSpectrum:
    field, q0 = code.field, code.q0
    Q = field.order
    k, n = code.k, code.n
    if Q**k > cap:
        raise TooLarge(f"{Q}^{k} codewords exceed the enumeration cap {cap}")
    wt = make_weight_fn(field, q0)
    mul = field.mul
    rows = code.G.row_lists()
    scaled = [[[mul(s, v) for v in row] for s in range(Q)] for row in rows]
    counts: Counter = Counter()
    xor = field.p == 2
    add = field.add

    def rec(level, acc):
        tab = scaled[level]
        if level == k - 1:
            if xor:
                for s in range(Q):
                    if s:
                        row = tab[s]
                        counts[wt([a ^ b for a, b in zip(acc, row)])] += 1
                    else:
                        counts[wt(acc)] += 1
            else:
                for s in range(Q):
                    if s:
                        row = tab[s]
                        counts[wt([add(a, b) for a, b in zip(acc, row)])] += 1
                    else:
                        counts[wt(acc)] += 1
            return
        for s in range(Q):
            if s:
                row = tab[s]
                if xor:
                    rec(level + 1, [a ^ b for a, b in zip(acc, row)])
                else:
                    rec(level + 1, [add(a, b) for a, b in zip(acc, row)])
            else:
                rec(level + 1, acc)

    rec(0, [0] * n)
    return WeightSpectrum.from_counter(counts)


def _spectrum_matrix(code: MatrixCode, cap: int) -> WeightSpectrum:
    field = code.field
    q = field.order
    if code.dim and q**code.dim > cap:
        raise TooLarge(f"{q}^{code.dim} codewords exceed the enumeration cap {cap}")
    m, n = code.m, code.n
    counts: Counter = Counter()
    if not code.dim:
        counts[0] = 1
        return WeightSpectrum.from_counter(counts)
    mul, add = field.mul, field.add
    vecs = [B.vec() for B in code.basis]
    scaled = [[[mul(s, v) for v in vec] for s in range(q)] for vec in vecs]
    gf2 = field.p == 2 and field.h == 1

    def rank_of(flat):
        if gf2:
            rows = []
            for i in range(m):
                acc = 0
                for j in range(n):
                    acc = (acc << 1) | flat[i * n + j]
                rows.append(acc)
            return rank_of_int_rows_gf2(rows)
        rows = [list(flat[i * n : (i + 1) * n]) for i in range(m)]
        _, pivots = rref_rows(field, rows)
        return len(pivots)

    k = code.dim

    def rec(level, acc):
        tab = scaled[level]
        if level == k - 1:
            for s in range(q):
                if s:
                    row = tab[s]
                    counts[rank_of([add(a, b) for a, b in zip(acc, row)])] += 1
                else:
                    counts[rank_of(acc)] += 1
            return
        for s in range(q):
            if s:
                row = tab[s]
                rec(level + 1, [add(a, b) for a, b in zip(acc, row)])
            else:
                rec(level + 1, acc)

    rec(0, [0] * (m * n))
    return WeightSpectrum.from_counter(counts)


def weight_spectrum(code, max_enum: int = DEFAULT_MAX_ENUM) -> WeightSpectrum:
    """Exact weight multiset by full enumeration (cached on the code)."""
    if code._spectrum is not None:
        return code._spectrum
    if isinstance(code, MatrixCode):
        spec = _spectrum_matrix(code, max_enum)
    elif isinstance(code, VectorCode):
        spec = _spectrum_vector(code, max_enum)
    elif isinstance(code, PolyCode):
        vc = ev_basis(code)
        spec = _spectrum_vector(vc, max_enum)
    else:
        raise TypeError(f"not a code: {code!r}")
    code._spectrum = spec
    return spec


def divisibility_index(code, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """gcd of all nonzero codeword weights; the code is e-divisible iff e | index."""
    return weight_spectrum(code, max_enum).divisibility_index()


# ---------------------------------------------------------------------------
# conversions between views
# ---------------------------------------------------------------------------


def gamma(field: FieldSpec, q0: int, vector, basis=None) -> GFMatrix:
    """Column-expand a vector of F_{q^m}^n to an m x n matrix over F_q."""
    exp = expansion(field, q0, basis)
    vals = [v.val if isinstance(v, FieldElement) else int(v) for v in vector]
    cols = [exp.to_coords(v) for v in vals]
    m, n = exp.m, len(vals)
    return GFMatrix(exp.sub, m, n, [cols[j][i] for i in range(m) for j in range(n)])


def gamma_inv(M: GFMatrix, field: FieldSpec, q0: int, basis=None) -> tuple:
    """Recombine matrix columns into a vector over F_{q^m}."""
    exp = expansion(field, q0, basis)
    if M.rows != exp.m or M.field != exp.sub:
        raise FieldMismatch("matrix does not match the expansion")
    out = []
    for j in range(M.cols):
        col = [M.data[i * M.cols + j] for i in range(M.rows)]
        out.append(exp.from_coords(col))
    return tuple(out)


def code_of_system(system) -> VectorCode:
    """The code associated with a system: G's columns are an F_q-basis of U.

    Inverse (up to equivalence) of qsystem.system_of.
    """
    amb = system.ambient
    cols = [amb.lift(r) for r in system.U.basis.row_lists()]
    rows = [[c[i] for c in cols] for i in range(amb.k)]
    return VectorCode(amb.field, amb.q0, GFMatrix.from_rows(amb.field, rows))


def vector_code_to_matrix_code(code: VectorCode, basis=None) -> MatrixCode:
    field, q0 = code.field, code.q0
    pb = power_basis(field, q0)
    mats = []
    for row in code.G.row_lists():
        for b in pb:
            mats.append(gamma(field, q0, [field.mul(b, v) for v in row], basis))
    sub = subfield_spec(field, q0)
    out = MatrixCode(sub, code.m, code.n, mats)
    out._spectrum = code._spectrum
    return out


def ev_basis(code: PolyCode, points=None) -> VectorCode:
    """Evaluation at an F_q-basis; entry (i, j) of G is gens[i](points[j])."""
    field, q0 = code.field, code.q0
    if code.nvars == 1:
        pts = tuple(points) if points is not None else power_basis(field, q0)
        rows = [[g.eval_i(b) for b in pts] for g in code.gens]
    else:
        pts = (
            tuple(points)
            if points is not None
            else standard_points(field, q0, code.nvars)
        )
        rows = [[g.meval_i(pt) for pt in pts] for g in code.gens]
    G = GFMatrix.from_rows(field, rows)
    out = VectorCode(field, q0, G)
    out._spectrum = code._spectrum
    return out


def poly_code_from_vector(code: VectorCode) -> PolyCode:
    """Interpolate rows of G against the standard points (n must be l*m)."""
    field, q0 = code.field, code.q0
    m = code.m
    if code.n % m != 0:
        raise BadSubfieldSize(f"length {code.n} is not a multiple of m = {m}")
    ell = code.n // m
    if ell == 1:
        gens = [interpolate(field, q0, row) for row in code.G.row_lists()]
    else:
        gens = [minterpolate(field, q0, ell, row) for row in code.G.row_lists()]
    out = PolyCode(field, q0, gens)
    out._spectrum = code._spectrum
    return out


def poly_code_to_matrix_code(code: PolyCode, basis=None, points=None) -> MatrixCode:
    """Matrices over F_q of an F_q-basis of the code."""
    field, q0 = code.field, code.q0
    mats = []
    if code.nvars == 1:
        for g in code.fq_basis():
            mats.append(to_matrix(g, basis))
    else:
        for g in code.fq_basis():
            mats.append(mto_matrix(g, points))
    sub = subfield_spec(field, q0)
    m = code.m
    out = MatrixCode(sub, m, m * code.nvars, mats)
    out._spectrum = code._spectrum
    return out


# ---------------------------------------------------------------------------
# the field-reduction embedding
# ---------------------------------------------------------------------------


def em_embed_matrix(A: GFMatrix, q0: int, col_basis=None, row_basis=None) -> GFMatrix:
    """Expand each F_{q^e} entry to the e x e matrix of its multiplication map."""
    big = A.field
    exp_col = expansion(big, q0, col_basis)
    exp_row = expansion(big, q0, row_basis)
    e = exp_col.m
    sub = exp_col.sub
    m, n = A.rows, A.cols
    out = [0] * (e * m * e * n)
    width = e * n
    for i in range(m):
        for j in range(n):
            a = A.data[i * n + j]
            if not a:
                continue
            for t in range(e):
                col = exp_col.to_coords(big.mul(a, exp_row.basis[t]))
                for s in range(e):
                    out[(i * e + s) * width + j * e + t] = col[s]
    return GFMatrix(sub, e * m, width, out)


def em_embed(
    code: MatrixCode,
    q0: int | None = None,
    col_basis=None,
    row_basis=None,
    emb=None,
) -> MatrixCode:
    """Field reduction of a matrix code over F_{q^e} down to base F_{q0}.

    The output basis consists of the embedded images of an F_q-expansion of
    the input basis; every rank is multiplied by e = [F_{q^e} : F_{q0}].
    The base level can be named either by its order q0 (canonical spec) or
    by an explicit tower embedding whose sub spec the output code will use.
    """
    big = code.field
    if emb is not None:
        if emb.sup != big:
            raise FieldMismatch("embedding does not target the code's field")
        q0 = emb.sub.order
    if q0 is None:
        raise BadSubfieldSize("em_embed needs a base order or an embedding")
    pb = power_basis(big, q0)
    mats = []
    for B in code.basis:
        for lam in pb:
            mats.append(em_embed_matrix(B.scale(lam), q0, col_basis, row_basis))
    sub = subfield_spec(big, q0)
    if emb is not None and emb.sub != sub:
        canon = tower_embedding(sub, big)
        mats = [
            GFMatrix(
                emb.sub, M.rows, M.cols,
                [emb.pull_back(canon.apply(v)) for v in M.data],
            )
            for M in mats
        ]
        sub = emb.sub
    e = len(pb)
    if not mats:
        return MatrixCode(sub, e * code.m, e * code.n, ())
    return MatrixCode(sub, e * code.m, e * code.n, mats)


# ---------------------------------------------------------------------------
# idealizers and linearity
# ---------------------------------------------------------------------------


def _matrix_code_idealizer_basis(code: MatrixCode):
    field = code.field
    m, n = code.m, code.n
    span = GFSubspace.from_span(field, m * n, [B.vec() for B in code.basis])
    checker = span.orthogonal_complement().basis  # rows P with P.vec(w)=0 <=> w in span
    mul, add = field.mul, field.add
    eq_rows = []
    for B in code.basis:
        brows = B.row_lists()
        for r in range(checker.rows):
            prow = checker.row(r)
            # coefficient of X[a][b]: dot(prow[a*n:(a+1)*n], B.row(b))
            row = []
            for a in range(m):
                seg = prow[a * n : (a + 1) * n]
                for b in range(m):
                    acc = 0
                    for x, y in zip(seg, brows[b]):
                        if x and y:
                            acc = add(acc, mul(x, y))
                    row.append(acc)
            eq_rows.append(row)
    if not eq_rows:
        space = GFSubspace.full(field, m * m)
    else:
        space = GFMatrix.from_rows(field, eq_rows).kernel()
    return [GFMatrix(field, m, m, v) for v in space.basis.row_lists()]


def left_idealizer(code):
    """F_q-basis of {X : X * C is contained in C}, a unital algebra.

    The identity and multiplicative closure of the result are asserted on
    every call; both are cheap at this scale.
    """
    if isinstance(code, PolyCode):
        mat_code = poly_code_to_matrix_code(code)
        mats = _matrix_code_idealizer_basis(mat_code)
        _assert_idealizer_algebra(mats, mat_code.field)
        return [from_matrix(M, code.field, code.q0) for M in mats]
    mats = _matrix_code_idealizer_basis(code)
    _assert_idealizer_algebra(mats, code.field)
    return mats


def _assert_idealizer_algebra(mats, field):
    if not mats:
        raise AssertionError("left idealizer does not contain the identity")
    m = mats[0].rows
    span = GFSubspace.from_span(field, m * m, [M.vec() for M in mats])
    ident = GFMatrix.identity(field, m)
    assert span.contains(ident.vec()), "left idealizer misses the identity"
    for A in mats:
        for B in mats:
            assert span.contains((A @ B).vec()), "left idealizer is not closed"


def centralizer(code):
    """F_q-basis of {h : h o f = f o h for all f in the code}.

    Accepts a PolyCode (centralizes its whole F_{q^m}-span) or a plain list
    of univariate polynomials (centralizes their F_q-span).
    """
    if isinstance(code, PolyCode):
        if code.nvars != 1:
            raise FieldMismatch("the centralizer is defined for univariate codes")
        field, q0 = code.field, code.q0
        gens = code.fq_basis()
    else:
        gens = list(code)
        field, q0 = gens[0].field, gens[0].q0
    mats = [to_matrix(g) for g in gens]
    sub = mats[0].field
    m = mats[0].rows
    mul, sub_f = sub.mul, sub.sub
    eq_rows = []
    for M in mats:
        mm = M.row_lists()
        for r in range(m):
            for c in range(m):
                row = [0] * (m * m)
                # (H M)[r][c] = sum_b H[r][b] M[b][c]
                for b in range(m):
                    row[r * m + b] = sub.add(row[r * m + b], mm[b][c])
                # -(M H)[r][c] = -sum_a M[r][a] H[a][c]
                for a in range(m):
                    row[a * m + c] = sub_f(row[a * m + c], mm[r][a])
                eq_rows.append(row)
    space = GFMatrix.from_rows(sub, eq_rows).kernel()
    return [
        from_matrix(GFMatrix(sub, m, m, v), field, q0)
        for v in space.basis.row_lists()
    ]


def minimal_polynomial(A: GFMatrix) -> tuple:
    """Monic minimal polynomial coefficients (c_0, ..., c_d = 1) over A's field."""
    field = A.field
    n = A.rows
    powers = [GFMatrix.identity(field, n)]
    while True:
        powers.append(powers[-1] @ A)
        j = len(powers) - 1
        rows = [list(powers[i].vec()) for i in range(j)]
        target = powers[j].vec()
        M = GFMatrix.from_rows(field, rows).transpose()
        sol = M.solve(target)
        if sol is not None:
            coeffs = [field.neg(c) for c in sol] + [1]
            return tuple(coeffs)


class IdealizerFieldSearch(NamedTuple):
    element: object  # GFMatrix or LinPoly or None
    minpoly: Optional[tuple]
    exhaustive: bool
    idealizer_dim: int


def find_field_in_idealizer(
    code,
    m: int,
    seed: int = 0,
    n_random: int = 1000,
    exhaust_cap: int = 2**16,
) -> IdealizerFieldSearch:
    """Search L(C) for a generator of a field of order q^m.

    Deterministic order: single basis elements, seeded random F_q-combinations,
    then the whole span when it fits under the cap.  `exhaustive` reports
    whether a negative answer is definitive.
    """
    ideal = left_idealizer(code)
    poly_view = isinstance(code, PolyCode)
    if poly_view:
        mats = [to_matrix(g) for g in ideal]
    else:
        mats = ideal
    if not mats:
        return IdealizerFieldSearch(None, None, True, 0)
    field = mats[0].field
    dim = len(mats)

    def check(M):
        mu = minimal_polynomial(M)
        if len(mu) - 1 != m:
            return None
        if not is_irreducible_over(field, mu):
            return None
        return mu

    def lift(M):
        if poly_view:
            return from_matrix(M, code.field, code.q0)
        return M

    for M in mats:
        mu = check(M)
        if mu:
            return IdealizerFieldSearch(lift(M), mu, True, dim)
    rng = random.Random(seed)
    q = field.order
    for _ in range(n_random):
        coeffs = [rng.randrange(q) for _ in range(dim)]
        M = GFMatrix.zero(field, mats[0].rows, mats[0].cols)
        for c, B in zip(coeffs, mats):
            if c:
                M = M + B.scale(c)
        mu = check(M)
        if mu:
            return IdealizerFieldSearch(lift(M), mu, True, dim)
    if q**dim <= exhaust_cap:
        span = GFSubspace.from_span(field, mats[0].rows * mats[0].cols,
                                    [M.vec() for M in mats])
        for vec in span.enumerate_vectors():
            M = GFMatrix(field, mats[0].rows, mats[0].cols, vec)
            mu = check(M)
            if mu:
                return IdealizerFieldSearch(lift(M), mu, True, dim)
        return IdealizerFieldSearch(None, None, True, dim)
    return IdealizerFieldSearch(None, None, False, dim)


def scalar_multiplication_matrix(fqm: FieldSpec, q0: int, alpha: int) -> GFMatrix:
    """Matrix over F_q of x -> alpha * x in the power basis of F_{q^m}."""
    return to_matrix(LinPoly.monomial(fqm, q0, 0, alpha))


class NormalizedCode(NamedTuple):
    H: GFMatrix
    code: MatrixCode
    fqm: FieldSpec
    alpha: int


def normalize_linearity(code: MatrixCode, A: GFMatrix) -> NormalizedCode:
    """Conjugate the code so its idealizer contains the standard scalar algebra.

    A must generate a field of order q^m inside L(C); H solves A H = H A_std
    for the multiplication matrix A_std of a root of A's minimal polynomial,
    and the result is H^-1 C.
    """
    from .errors import ConjugationFailed

    field = code.field
    m = code.m
    mu = minimal_polynomial(A)
    if len(mu) - 1 != m or not is_irreducible_over(field, mu):
        raise ConjugationFailed(
            "element does not generate a field of the full degree"
        )
    fqm = make_field(field.p, default_modulus(field.p, field.h * m))
    emb = tower_embedding(field, fqm)
    mu_emb = [emb.apply(c) for c in mu]
    roots = []
    for cand in range(fqm.order):
        acc = 0
        for c in reversed(mu_emb):
            acc = fqm.add(fqm.mul(acc, cand), c)
        if acc == 0:
            roots.append(cand)
    alpha = min(roots, key=fqm.coeffs)
    A_std_raw = scalar_multiplication_matrix(fqm, field.order, alpha)
    # translate entries into the code's own copy of F_q
    canon = A_std_raw.field
    if canon == field:
        A_std = A_std_raw
    else:
        emb_c = tower_embedding(canon, fqm)
        A_std = GFMatrix(
            field, m, m, [emb.pull_back(emb_c.apply(v)) for v in A_std_raw.data]
        )
    # solve A H = H A_std
    mul, sub_f = field.mul, field.sub
    arows = A.row_lists()
    srows = A_std.row_lists()
    eq_rows = []
    for r in range(m):
        for c in range(m):
            row = [0] * (m * m)
            for b in range(m):
                row[b * m + c] = field.add(row[b * m + c], arows[r][b])
            for a in range(m):
                row[r * m + a] = sub_f(row[r * m + a], srows[a][c])
            eq_rows.append(row)
    space = GFMatrix.from_rows(field, eq_rows).kernel()
    H = None
    for vec in space.enumerate_vectors():
        cand = GFMatrix(field, m, m, vec)
        if not cand.is_zero() and cand.rank() == m:
            H = cand
            break
    if H is None:
        raise ConjugationFailed("no invertible intertwiner exists")
    Hinv = H.inverse()
    out = MatrixCode(field, m, code.n, [Hinv @ B for B in code.basis], check=False)
    out._spectrum = code._spectrum
    return NormalizedCode(H, out, fqm, alpha)


# ---------------------------------------------------------------------------
# degeneracy and equivalence
# ---------------------------------------------------------------------------


def is_nondegenerate(code: VectorCode) -> bool:
    """True iff the columns of G are F_q-linearly independent."""
    field, q0 = code.field, code.q0
    exp = expansion(field, q0)
    rows = []
    for j in range(code.n):
        flat = []
        for i in range(code.k):
            flat.extend(exp.to_coords(code.G.data[i * code.n + j]))
        rows.append(flat)
    _, pivots = rref_rows(exp.sub, rows)
    return len(pivots) == code.n


def code_equal(c1, c2) -> bool:
    """Canonical span comparison inside one view."""
    if type(c1) is not type(c2):
        raise FieldMismatch("codes in different views")
    if isinstance(c1, MatrixCode):
        same = c1.field == c2.field and (c1.m, c1.n) == (c2.m, c2.n)
    elif isinstance(c1, VectorCode):
        same = (c1.field, c1.q0, c1.n) == (c2.field, c2.q0, c2.n)
    else:
        same = (c1.field, c1.q0, c1.nvars) == (c2.field, c2.q0, c2.nvars)
    return same and c1.span_key() == c2.span_key()


def _gl_count(n, q):
    total = 1
    for i in range(n):
        total *= q**n - q**i
    return total


def enumerate_gl(field: FieldSpec, n: int):
    """All invertible n x n matrices; guarded by callers."""
    out = []
    q = field.order

    def rec(i, rows):
        if i == n:
            M = GFMatrix.from_rows(field, rows)
            if M.rank() == n:
                out.append(M)
            return
        for vals in _tuples(q, n):
            rec(i + 1, rows + [list(vals)])

    rec(0, [])
    return out


def _tuples(q, n):
    if n == 0:
        yield ()
        return
    for rest in _tuples(q, n - 1):
        for v in range(q):
            yield (v,) + rest


def code_equivalent(c1: MatrixCode, c2: MatrixCode, max_gl_product: int = 10**7):
    """Search for X, Y with X C1 Y = C2; returns (decision, witness or None)."""
    if c1.field != c2.field or (c1.m, c1.n) != (c2.m, c2.n):
        return False, None
    if c1.dim != c2.dim:
        return False, None
    q = c1.field.order
    if c1.m * c1.n > 16 or _gl_count(c1.m, q) * _gl_count(c1.n, q) > max_gl_product:
        raise SearchSpaceTooLarge("equivalence search space over budget")
    if weight_spectrum(c1).counts != weight_spectrum(c2).counts:
        return False, None
    gl_m = enumerate_gl(c1.field, c1.m)
    gl_n = enumerate_gl(c1.field, c1.n)
    targets = {}
    for Y in gl_n:
        key = MatrixCode.from_span(
            c2.field, c2.m, c2.n, [B @ Y for B in c2.basis]
        ).span_key()
        targets.setdefault(key, Y)
    for X in gl_m:
        key = MatrixCode.from_span(
            c1.field, c1.m, c1.n, [X @ B for B in c1.basis]
        ).span_key()
        Yinv = targets.get(key)
        if Yinv is not None:
            return True, (X, Yinv.inverse())
    return False, None


# ---------------------------------------------------------------------------
# analysis report (the JSON schema of the CLI)
# ---------------------------------------------------------------------------


def analyze_code(code, max_enum: int = DEFAULT_MAX_ENUM, seed: int = 0) -> dict:
    spec = weight_spectrum(code, max_enum)
    report: dict = {}
    if isinstance(code, MatrixCode):
        report["view"] = "matrix"
        report["shape"] = [code.m, code.n]
        report["k"] = code.dim
        m_lin = code.m
    elif isinstance(code, VectorCode):
        report["view"] = "vector"
        report["shape"] = [code.m, code.n]
        report["k"] = code.k
        m_lin = code.m
    else:
        report["view"] = "poly"
        report["shape"] = [code.m, code.m * code.nvars]
        report["k"] = code.k
        m_lin = code.m
    report["spectrum"] = {str(w): c for w, c in spec.counts}
    try:
        report["divisibility_index"] = spec.divisibility_index()
    except ZeroCode:
        report["divisibility_index"] = None
    search_target = code if not isinstance(code, VectorCode) else vector_code_to_matrix_code(code)
    if isinstance(code, VectorCode):
        report["fqm_linear"] = {"linear": True, "witness_minpoly": None,
                                "exhaustive": True}
        report["idealizer_dim"] = len(left_idealizer(search_target))
    else:
        found = find_field_in_idealizer(search_target, m_lin, seed=seed)
        report["idealizer_dim"] = found.idealizer_dim
        report["fqm_linear"] = {
            "linear": found.element is not None,
            "witness_minpoly": list(found.minpoly) if found.minpoly else None,
            "exhaustive": found.exhaustive,
        }
    return report
