"""Linearized polynomials over F_{q^m}, univariate and multivariate.

A univariate polynomial sum f_i x^(q^i) is stored as its full coefficient
vector of length m = [F_{q^m} : F_q], i.e. already reduced modulo
x^(q^m) - x.  Composition works directly on the coefficient grid through
the twisted monomial rule; the matrix bridge provides an independent route
used by the tests to cross-check the twist.
"""

from __future__ import annotations

import re

from .errors import (
    ArityMismatch,
    BadDivisor,
    FieldMismatch,
    NotABasis,
    NotInvertible,
)
from .field_tower import (
    FieldElement,
    FieldSpec,
    expansion,
    power_basis,
    subfield_embedding,
)
from .matspace import GFMatrix, GFSubspace


class LinPoly:
    """f(x) = sum_i coeffs[i] * x^(q0^i) over F_{q^m}, reduced mod x^(q^m)-x."""

    __slots__ = ("field", "q0", "coeffs")

    def __init__(self, field: FieldSpec, q0: int, coeffs):
        e = field.subfield_exponent(q0)
        m = field.h // e
        coeffs = tuple(
            c.val if isinstance(c, FieldElement) else int(c) for c in coeffs
        )
        if len(coeffs) != m:
            raise ArityMismatch(f"expected {m} coefficients, got {len(coeffs)}")
        self.field = field
        self.q0 = q0
        self.coeffs = coeffs

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field, q0):
        m = field.h // field.subfield_exponent(q0)
        return cls(field, q0, (0,) * m)

    @classmethod
    def monomial(cls, field, q0, i, coeff=1):
        m = field.h // field.subfield_exponent(q0)
        c = [0] * m
        c[i % m] = coeff.val if isinstance(coeff, FieldElement) else int(coeff)
        return cls(field, q0, c)

    @classmethod
    def identity(cls, field, q0):
        return cls.monomial(field, q0, 0, 1)

    # -- structure ---------------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def q_degree(self) -> int:
        for i in range(self.m - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if self.field != other.field or self.q0 != other.q0:
            raise FieldMismatch("polynomials over different fields or bases")

    def __eq__(self, other):
        return (
            isinstance(other, LinPoly)
            and self.field == other.field
            and self.q0 == other.q0
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.q0, self.coeffs))

    def __repr__(self):
        return f"LinPoly({format_linpoly(self)!r})"

    # -- algebra -------------------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return LinPoly(
            self.field, self.q0, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __sub__(self, other):
        self._check(other)
        f = self.field
        return LinPoly(
            self.field, self.q0, [f.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def scale(self, c) -> "LinPoly":
        """Multiply every coefficient by c in F_{q^m} (the F_{q^m}-action)."""
        c = c.val if isinstance(c, FieldElement) else int(c)
        mul = self.field.mul
        return LinPoly(self.field, self.q0, [mul(c, a) for a in self.coeffs])

    def eval_i(self, a: int) -> int:
        f, q0 = self.field, self.q0
        acc = 0
        t = a
        for c in self.coeffs:
            if c:
                acc = f.add(acc, f.mul(c, t))
            t = f.pow(t, q0)
        return acc

    def __call__(self, a):
        if isinstance(a, FieldElement):
            if a.field != self.field:
                raise FieldMismatch("argument lives in a different field")
            return FieldElement(self.field, self.eval_i(a.val))
        return self.eval_i(int(a))

    def compose(self, other: "LinPoly") -> "LinPoly":
        """self after other: (f_i x^(q^i)) o (g_j x^(q^j)) = f_i g_j^(q^i) x^(q^(i+j))."""
        self._check(other)
        f, q0, m = self.field, self.q0, self.m
        out = [0] * m
        for i, fi in enumerate(self.coeffs):
            if not fi:
                continue
            for j, gj in enumerate(other.coeffs):
                if not gj:
                    continue
                k = (i + j) % m
                out[k] = f.add(out[k], f.mul(fi, f.pow(gj, q0**i)))
        return LinPoly(f, q0, out)

    def value_table(self):
        """eval_i over the whole field (used by enumeration-heavy callers)."""
        return [self.eval_i(a) for a in range(self.field.order)]


def eval_poly(f: LinPoly, a: FieldElement) -> FieldElement:
    return f(a)


def compose(f: LinPoly, g: LinPoly) -> LinPoly:
    return f.compose(g)


def to_matrix(f: LinPoly, basis=None) -> GFMatrix:
    """m x m matrix over F_q of the map; column j holds coords of f(basis[j])."""
    exp = expansion(f.field, f.q0, basis)
    sub = exp.sub
    cols = [exp.to_coords(f.eval_i(b)) for b in exp.basis]
    m = exp.m
    return GFMatrix(sub, m, m, [cols[j][i] for i in range(m) for j in range(m)])


_MOORE_CACHE: dict = {}


def _moore_inverse(field: FieldSpec, q0: int, points: tuple) -> GFMatrix:
    """Inverse of the interpolation matrix for univariate values at points."""
    key = (field, q0, points)
    inv = _MOORE_CACHE.get(key)
    if inv is None:
        m = len(points)
        rows = [[field.pow(b, q0**i) for i in range(m)] for b in points]
        try:
            inv = GFMatrix.from_rows(field, rows).inverse()
        except NotInvertible:
            raise NotABasis("interpolation points are not an F_q basis")
        _MOORE_CACHE[key] = inv
    return inv


def interpolate(field: FieldSpec, q0: int, values, basis=None) -> LinPoly:
    """The unique f with f(basis[j]) = values[j]."""
    pts = tuple(basis) if basis is not None else power_basis(field, q0)
    inv = _moore_inverse(field, q0, pts)
    vals = [v.val if isinstance(v, FieldElement) else int(v) for v in values]
    coeffs = []
    mul, add = field.mul, field.add
    for i in range(len(pts)):
        acc = 0
        for j, v in enumerate(vals):
            acc = add(acc, mul(inv.data[i * len(pts) + j], v))
        coeffs.append(acc)
    return LinPoly(field, q0, coeffs)


def from_matrix(M: GFMatrix, field: FieldSpec, q0: int, basis=None) -> LinPoly:
    """Lift an m x m matrix over F_q back to the polynomial it represents."""
    exp = expansion(field, q0, basis)
    if M.rows != exp.m or M.cols != exp.m or M.field != exp.sub:
        raise FieldMismatch("matrix shape or field does not match the expansion")
    values = []
    for j in range(exp.m):
        col = [M.data[i * exp.m + j] for i in range(exp.m)]
        values.append(exp.from_coords(col))
    return interpolate(field, q0, values, exp.basis)


def poly_rank(f: LinPoly) -> int:
    return to_matrix(f).rank()


def poly_kernel(f: LinPoly) -> GFSubspace:
    """Kernel as an F_q-subspace of F_q^m (coordinates in the power basis)."""
    return to_matrix(f).kernel()


def kernel_elements(f: LinPoly):
    """Kernel as field elements (enumerates the kernel subspace)."""
    exp = expansion(f.field, f.q0)
    return [exp.from_coords(v) for v in poly_kernel(f).enumerate_vectors()]


def invert(f: LinPoly) -> LinPoly:
    """Compositional inverse, through the matrix bridge."""
    M = to_matrix(f)
    try:
        Minv = M.inverse()
    except NotInvertible:
        raise NotInvertible("polynomial has nontrivial kernel")
    return from_matrix(Minv, f.field, f.q0)


def is_subfield_linear(f, e: int) -> bool:
    """True when f is F_{q^e}-linear, read off the coefficient support."""
    m = f.m if isinstance(f, LinPoly) else f.m
    if e <= 0 or m % e != 0:
        raise BadDivisor(f"{e} does not divide {m}")
    if isinstance(f, LinPoly):
        return all(c == 0 or i % e == 0 for i, c in enumerate(f.coeffs))
    return all(
        c == 0 or i % e == 0 for row in f.coeffs for i, c in enumerate(row)
    )


def is_subfield_linear_pointwise(f, e: int) -> bool:
    """Same decision by testing f(lambda a) = lambda f(a) on basis pairs.

    Independent of the support test; the two are cross-checked in the suite.
    """
    field, q0 = f.field, f.q0
    m = f.m
    if e <= 0 or m % e != 0:
        raise BadDivisor(f"{e} does not divide {m}")
    emb = subfield_embedding(field, q0**e)
    sub_e = emb.sub
    lambdas = [emb.apply(sub_e.pow(sub_e.p, t) if t else 1) for t in range(sub_e.h)]
    if isinstance(f, LinPoly):
        points = power_basis(field, q0)
        for lam in lambdas:
            for a in points:
                if f.eval_i(field.mul(lam, a)) != field.mul(lam, f.eval_i(a)):
                    return False
        return True
    for lam in lambdas:
        for j in range(f.nvars):
            for a in power_basis(field, q0):
                arg = [0] * f.nvars
                arg[j] = field.mul(lam, a)
                ref = [0] * f.nvars
                ref[j] = a
                if f.meval_i(arg) != field.mul(lam, f.meval_i(ref)):
                    return False
    return True


class MultiLinPoly:
    """f(x_1..x_l) = sum_j sum_i coeffs[j][i] x_j^(q0^i) over F_{q^m}."""

    __slots__ = ("field", "q0", "nvars", "coeffs")

    def __init__(self, field: FieldSpec, q0: int, coeffs):
        e = field.subfield_exponent(q0)
        m = field.h // e
        grid = tuple(
            tuple(c.val if isinstance(c, FieldElement) else int(c) for c in row)
            for row in coeffs
        )
        if any(len(row) != m for row in grid):
            raise ArityMismatch("coefficient grid rows must have length m")
        self.field = field
        self.q0 = q0
        self.nvars = len(grid)
        self.coeffs = grid

    @classmethod
    def zero(cls, field, q0, nvars):
        m = field.h // field.subfield_exponent(q0)
        return cls(field, q0, [[0] * m for _ in range(nvars)])

    @classmethod
    def variable(cls, field, q0, nvars, j, i=0, coeff=1):
        m = field.h // field.subfield_exponent(q0)
        grid = [[0] * m for _ in range(nvars)]
        grid[j][i % m] = coeff.val if isinstance(coeff, FieldElement) else int(coeff)
        return cls(field, q0, grid)

    @classmethod
    def from_univariate(cls, f: LinPoly, nvars: int, j: int):
        grid = [[0] * f.m for _ in range(nvars)]
        grid[j] = list(f.coeffs)
        return cls(f.field, f.q0, grid)

    @property
    def m(self) -> int:
        return len(self.coeffs[0]) if self.coeffs else 0

    def is_zero(self):
        return not any(any(row) for row in self.coeffs)

    def flat(self) -> tuple:
        return tuple(c for row in self.coeffs for c in row)

    def _check(self, other):
        if (
            self.field != other.field
            or self.q0 != other.q0
            or self.nvars != other.nvars
        ):
            raise ArityMismatch("incompatible multivariate polynomials")

    def __eq__(self, other):
        return (
            isinstance(other, MultiLinPoly)
            and self.field == other.field
            and self.q0 == other.q0
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.q0, self.coeffs))

    def __repr__(self):
        return f"MultiLinPoly({format_linpoly(self)!r})"

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        return MultiLinPoly(
            self.field, self.q0,
            [
                [add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeffs, other.coeffs)
            ],
        )

    def __sub__(self, other):
        self._check(other)
        f = self.field
        return MultiLinPoly(
            self.field, self.q0,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.coeffs, other.coeffs)
            ],
        )

    def scale(self, c) -> "MultiLinPoly":
        c = c.val if isinstance(c, FieldElement) else int(c)
        mul = self.field.mul
        return MultiLinPoly(
            self.field, self.q0, [[mul(c, a) for a in row] for row in self.coeffs]
        )

    def meval_i(self, args) -> int:
        f, q0 = self.field, self.q0
        acc = 0
        for j, row in enumerate(self.coeffs):
            t = args[j]
            for c in row:
                if c:
                    acc = f.add(acc, f.mul(c, t))
                t = f.pow(t, q0)
        return acc

    def __call__(self, args):
        vals = [a.val if isinstance(a, FieldElement) else int(a) for a in args]
        if len(vals) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} arguments")
        return FieldElement(self.field, self.meval_i(vals))


def meval(f: MultiLinPoly, args) -> FieldElement:
    return f(args)


def mcompose(f: MultiLinPoly, phis) -> MultiLinPoly:
    """f(phi_1(x), ..., phi_l(x)); phis has one component per variable of f."""
    phis = tuple(phis)
    if len(phis) != f.nvars:
        raise ArityMismatch("component count does not match f's arity")
    for p in phis:
        if p.field != f.field or p.q0 != f.q0:
            raise FieldMismatch("components over a different field")
    field, q0, m = f.field, f.q0, f.m
    nv = phis[0].nvars
    out = [[0] * m for _ in range(nv)]
    for j, row in enumerate(f.coeffs):
        grid = phis[j].coeffs
        for i, c in enumerate(row):
            if not c:
                continue
            qi = q0**i
            for t in range(nv):
                for s in range(m):
                    d = grid[t][s]
                    if d:
                        k = (s + i) % m
                        out[t][k] = field.add(out[t][k], field.mul(c, field.pow(d, qi)))
    return MultiLinPoly(field, q0, out)


def standard_points(field: FieldSpec, q0: int, nvars: int) -> tuple:
    """Default F_q-basis of F_{q^m}^l: power basis in each slot, slot-major."""
    pb = power_basis(field, q0)
    pts = []
    for j in range(nvars):
        for b in pb:
            v = [0] * nvars
            v[j] = b
            pts.append(tuple(v))
    return tuple(pts)


def mto_matrix(f: MultiLinPoly, points=None, codomain_basis=None) -> GFMatrix:
    """m x (m*l) matrix over F_q; column t holds coords of f(points[t])."""
    field, q0 = f.field, f.q0
    pts = tuple(points) if points is not None else standard_points(field, q0, f.nvars)
    exp = expansion(field, q0, codomain_basis)
    cols = [exp.to_coords(f.meval_i(pt)) for pt in pts]
    m, n = exp.m, len(pts)
    if n != exp.m * f.nvars:
        raise NotABasis(f"expected {exp.m * f.nvars} points, got {n}")
    return GFMatrix(exp.sub, m, n, [cols[t][i] for i in range(m) for t in range(n)])


def mkernel(f: MultiLinPoly) -> GFSubspace:
    """Common-coordinates kernel as a subspace of F_q^(m*l)."""
    return mto_matrix(f).kernel()


_MOORE_MULTI_CACHE: dict = {}


def minterpolate(field: FieldSpec, q0: int, nvars: int, values, points=None) -> MultiLinPoly:
    """The unique multivariate polynomial taking the given basis values."""
    pts = tuple(points) if points is not None else standard_points(field, q0, nvars)
    key = (field, q0, nvars, pts)
    inv = _MOORE_MULTI_CACHE.get(key)
    m = field.h // field.subfield_exponent(q0)
    if inv is None:
        rows = []
        for pt in pts:
            row = []
            for j in range(nvars):
                for s in range(m):
                    row.append(field.pow(pt[j], q0**s))
            rows.append(row)
        try:
            inv = GFMatrix.from_rows(field, rows).inverse()
        except NotInvertible:
            raise NotABasis("interpolation points are not an F_q basis of F_{q^m}^l")
        _MOORE_MULTI_CACHE[key] = inv
    vals = [v.val if isinstance(v, FieldElement) else int(v) for v in values]
    n = len(pts)
    mul, add = field.mul, field.add
    flat = []
    for r in range(n):
        acc = 0
        for c in range(n):
            acc = add(acc, mul(inv.data[r * n + c], vals[c]))
        flat.append(acc)
    grid = [flat[j * m : (j + 1) * m] for j in range(nvars)]
    return MultiLinPoly(field, q0, grid)


def from_matrix_multi(M: GFMatrix, field: FieldSpec, q0: int, nvars: int) -> MultiLinPoly:
    """Lift an m x (m*l) matrix over F_q to the multivariate polynomial."""
    exp = expansion(field, q0)
    m = exp.m
    if M.rows != m or M.cols != m * nvars or M.field != exp.sub:
        raise FieldMismatch("matrix shape or field does not match")
    values = []
    for t in range(M.cols):
        col = [M.data[i * M.cols + t] for i in range(m)]
        values.append(exp.from_coords(col))
    return minterpolate(field, q0, nvars, values)


def mtuple_invert(phis) -> tuple:
    """Inverse of the joint map (phi_1..phi_l) : F_{q^m}^l -> F_{q^m}^l."""
    phis = tuple(phis)
    ell = len(phis)
    field, q0 = phis[0].field, phis[0].q0
    for p in phis:
        if p.nvars != ell or p.field != field or p.q0 != q0:
            raise ArityMismatch("need l polynomials in l variables over one field")
    exp = expansion(field, q0)
    m = exp.m
    pts = standard_points(field, q0, ell)
    cols = []
    for pt in pts:
        col = []
        for p in phis:
            col.extend(exp.to_coords(p.meval_i(pt)))
        cols.append(col)
    n = m * ell
    J = GFMatrix(exp.sub, n, n, [cols[c][r] for r in range(n) for c in range(n)])
    try:
        Jinv = J.inverse()
    except NotInvertible:
        raise NotInvertible("the joint map has a nontrivial kernel")
    # column t of Jinv = coordinates of the inverse image of the t-th basis point
    out = []
    for r in range(ell):
        values = []
        for t in range(n):
            col = [Jinv.data[i * n + t] for i in range(n)]
            values.append(exp.from_coords(col[r * m : (r + 1) * m]))
        out.append(minterpolate(field, q0, ell, values))
    return tuple(out)


# ---------------------------------------------------------------------------
# text format: c0 + c1*X^q + c2*X^q2 + ... ; multivariate uses X1, X2, ...
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*(?P<coeff>[0-9.]+)\s*(?:\*\s*X(?P<var>\d*)\s*(?:\^q(?P<exp>\d*))?)?\s*$"
)


def format_linpoly(f) -> str:
    field = f.field

    def term(c, i, var=None):
        head = field.format_element(c)
        x = f"X{var}" if var is not None else "X"
        if i == 0:
            return head if var is None else f"{head}*{x}"
        if i == 1:
            return f"{head}*{x}^q"
        return f"{head}*{x}^q{i}"

    parts = []
    if isinstance(f, LinPoly):
        for i, c in enumerate(f.coeffs):
            if c:
                parts.append(term(c, i))
    else:
        for j, row in enumerate(f.coeffs):
            for i, c in enumerate(row):
                if c:
                    parts.append(term(c, i, var=j + 1))
    return " + ".join(parts) if parts else "0"


def parse_linpoly(field: FieldSpec, q0: int, text: str, nvars: int | None = None):
    """Parse the polynomial text format; nvars selects the multivariate type."""
    m = field.h // field.subfield_exponent(q0)
    text = text.strip()
    terms = [] if text == "0" else text.split("+")
    entries = []
    max_var = 0
    for t in terms:
        mobj = _TERM_RE.match(t)
        if not mobj:
            raise ArityMismatch(f"cannot parse polynomial term {t!r}")
        c = field.parse_element(mobj.group("coeff"))
        var_s = mobj.group("var")
        if mobj.group("var") is None and "*" not in t:
            # bare constant term: coefficient of x^(q^0)
            entries.append((1, 0, c))
            max_var = max(max_var, 1)
            continue
        var = int(var_s) if var_s else 1
        exp_s = mobj.group("exp")
        if mobj.group("exp") is None and "^" not in t:
            i = 0
        else:
            i = int(exp_s) if exp_s else 1
        if i >= m:
            raise ArityMismatch(f"exponent q^{i} is not reduced (m = {m})")
        entries.append((var, i, c))
        max_var = max(max_var, var)
    if nvars is None:
        nvars = max_var if max_var > 1 else 1
    if nvars == 1:
        coeffs = [0] * m
        for var, i, c in entries:
            if var != 1:
                raise ArityMismatch("multivariate term in a univariate polynomial")
            coeffs[i] = field.add(coeffs[i], c)
        return LinPoly(field, q0, coeffs)
    grid = [[0] * m for _ in range(nvars)]
    for var, i, c in entries:
        grid[var - 1][i] = field.add(grid[var - 1][i], c)
    return MultiLinPoly(field, q0, grid)
