"""q-systems, the weight/hyperplane correspondence, trace duality, directions.

A system is an F_q-subspace U of F_{q^m}^k with full F_{q^m}-span; weights of
the associated vector code are read off intersections of U with hyperplanes.
The direction census implements the classification of graphs of functions by
their direction count, verified numerically on every instance it is given.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

from .errors import (
    AmbientMismatch,
    DegenerateCode,
    DegenerateForm,
    TheoremViolation,
    TooFewPoints,
    ZeroVector,
)
from .field_tower import (
    FieldElement,
    FieldSpec,
    expansion,
    power_basis,
    subfield_embedding,
    trace_i,
)
from .linpoly import LinPoly
from .matspace import GFMatrix, GFSubspace, rref_rows


# ---------------------------------------------------------------------------
# the ambient F_{q^m}^k viewed over F_q
# ---------------------------------------------------------------------------


class ExtensionAmbient:
    """F_{q^m}^k with its F_q-coordinate expansion (power basis per slot)."""

    def __init__(self, field: FieldSpec, q0: int, k: int):
        self.field = field
        self.q0 = q0
        self.k = k
        self.exp = expansion(field, q0)
        self.m = self.exp.m
        self.fq_dim = k * self.m
        self.sub = self.exp.sub

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionAmbient)
            and (self.field, self.q0, self.k) == (other.field, other.q0, other.k)
        )

    def __hash__(self):
        return hash((self.field, self.q0, self.k))

    def expand(self, vec) -> list:
        """F_q coordinates (length k*m) of a vector in F_{q^m}^k."""
        out = []
        for v in vec:
            v = v.val if isinstance(v, FieldElement) else int(v)
            out.extend(self.exp.to_coords(v))
        return out

    def lift(self, coords) -> tuple:
        m = self.m
        return tuple(
            self.exp.from_coords(coords[i * m : (i + 1) * m]) for i in range(self.k)
        )

    def subspace_from_vectors(self, vectors) -> GFSubspace:
        return GFSubspace.from_span(
            self.sub, self.fq_dim, [self.expand(v) for v in vectors]
        )

    def fqm_subspace_over_fq(self, rows) -> GFSubspace:
        """F_q-subspace underlying the F_{q^m}-span of the given vectors."""
        pb = power_basis(self.field, self.q0)
        mul = self.field.mul
        vecs = []
        for row in rows:
            vals = [v.val if isinstance(v, FieldElement) else int(v) for v in row]
            for b in pb:
                vecs.append(self.expand([mul(b, v) for v in vals]))
        return GFSubspace.from_span(self.sub, self.fq_dim, vecs)

    def line(self, w) -> GFSubspace:
        """<w>_{F_{q^m}} as an F_q-subspace (dimension m for w != 0)."""
        return self.fqm_subspace_over_fq([w])

    def hyperplane_perp(self, x) -> GFSubspace:
        """x-perp = {y : x . y = 0}, an F_{q^m}-subspace, over F_q."""
        vals = [v.val if isinstance(v, FieldElement) else int(v) for v in x]
        M = GFMatrix.from_rows(self.field, [vals])
        ker = M.kernel()
        return self.fqm_subspace_over_fq(ker.basis.row_lists())


@dataclass(frozen=True)
class QSystem:
    ambient: ExtensionAmbient
    U: GFSubspace

    def __post_init__(self):
        amb = self.ambient
        if self.U.ambient_dim != amb.fq_dim or self.U.field != amb.sub:
            raise AmbientMismatch("subspace does not live in the declared ambient")
        lifted = [amb.lift(r) for r in self.U.basis.row_lists()]
        if lifted:
            _, pivots = rref_rows(amb.field, [list(v) for v in lifted])
            if len(pivots) != amb.k:
                raise DegenerateCode("system does not span F_{q^m}^k")

    @property
    def n(self) -> int:
        return self.U.dim


def system_of(code) -> QSystem:
    """The F_q-span of the columns of a generator matrix of a vector code."""
    from .rmcode import VectorCode, is_nondegenerate

    assert isinstance(code, VectorCode)
    if not is_nondegenerate(code):
        raise DegenerateCode("the code has F_q-dependent generator columns")
    amb = ExtensionAmbient(code.field, code.q0, code.k)
    cols = []
    for j in range(code.n):
        cols.append([code.G.data[i * code.n + j] for i in range(code.k)])
    U = amb.subspace_from_vectors(cols)
    return QSystem(amb, U)


def weight_via_system(x, system: QSystem) -> int:
    """w(xG) = n - dim(U intersect x-perp), computed as a rank.

    The intersection dimension is the kernel dimension of u -> x . u on U,
    so the weight is the rank of that map; this avoids a subspace
    intersection per codeword.
    """
    amb = system.ambient
    vals = [v.val if isinstance(v, FieldElement) else int(v) for v in x]
    if not any(vals):
        raise ZeroVector("weight of the zero combination is not defined here")
    field = amb.field
    mul, add = field.mul, field.add
    rows = []
    for row in system.U.basis.row_lists():
        u = amb.lift(row)
        acc = 0
        for a, b in zip(vals, u):
            if a and b:
                acc = add(acc, mul(a, b))
        rows.append(list(amb.exp.to_coords(acc)))
    _, pivots = rref_rows(amb.sub, rows)
    return len(pivots)


# ---------------------------------------------------------------------------
# trace duality
# ---------------------------------------------------------------------------


def dual_perp(system_or_ambient, U: Optional[GFSubspace] = None, gram=None) -> GFSubspace:
    """Orthogonal complement of U under Tr_{q^m/q} of a bilinear form.

    The form defaults to the standard dot product; a custom Gram matrix over
    F_{q^m} must be invertible.
    """
    if isinstance(system_or_ambient, QSystem):
        amb = system_or_ambient.ambient
        U = system_or_ambient.U
    else:
        amb = system_or_ambient
    field = amb.field
    k, m = amb.k, amb.m
    if gram is None:
        gram_rows = [
            [1 if i == j else 0 for j in range(k)] for i in range(k)
        ]
    else:
        gram_rows = gram.row_lists() if isinstance(gram, GFMatrix) else [list(r) for r in gram]
        gm = GFMatrix.from_rows(field, gram_rows)
        if gm.rank() != k:
            raise DegenerateForm("the bilinear form is degenerate")
    pb = power_basis(field, amb.q0)
    mul, add = field.mul, field.add
    rows = []
    for urow in U.basis.row_lists():
        u = amb.lift(urow)
        z = []
        for i in range(k):
            acc = 0
            for j in range(k):
                g = gram_rows[j][i]
                if g and u[j]:
                    acc = add(acc, mul(u[j], g))
            z.append(acc)
        row = []
        for i in range(k):
            zi = z[i]
            for b in pb:
                row.append(trace_i(field, mul(zi, b), amb.q0))
        rows.append(row)
    if not rows:
        return GFSubspace.full(amb.sub, amb.fq_dim)
    return GFMatrix.from_rows(amb.sub, rows).kernel()


def check_weight_dual(ambient: ExtensionAmbient, U: GFSubspace, W: GFSubspace, gram=None):
    """Both sides of the duality dimension identity for (U, W).

    W is an F_{q^m}-subspace given canonically over F_{q^m}; returns
    (lhs, rhs) where lhs = dim(U' meet W-perp) and rhs is the dimension
    bookkeeping on the primal side.  Tests assert lhs == rhs.
    """
    if W.field != ambient.field or W.ambient_dim != ambient.k:
        raise AmbientMismatch("W must be an F_{q^m}-subspace of the ambient")
    U_perp = dual_perp(ambient, U, gram)
    Wmat = GFMatrix.from_rows(ambient.field, W.basis.row_lists()) if W.dim else None
    if Wmat is None:
        W_perp_rows = GFMatrix.identity(ambient.field, ambient.k).row_lists()
    else:
        W_perp_rows = Wmat.kernel().basis.row_lists()
    W_perp_fq = ambient.fqm_subspace_over_fq(W_perp_rows)
    W_fq = ambient.fqm_subspace_over_fq(W.basis.row_lists())
    lhs = U_perp.intersect(W_perp_fq).dim
    rhs = (
        U.intersect(W_fq).dim
        + ambient.fq_dim
        - U.dim
        - W_fq.dim
    )
    return lhs, rhs


# ---------------------------------------------------------------------------
# directions of point sets and graphs of functions
# ---------------------------------------------------------------------------


def normalize_direction(field: FieldSpec, d) -> tuple:
    vals = [v.val if isinstance(v, FieldElement) else int(v) for v in d]
    for i, v in enumerate(vals):
        if v:
            inv = field.inv(v)
            return tuple(field.mul(inv, x) for x in vals)
    raise ZeroVector("zero vector has no direction")


def directions(field: FieldSpec, points) -> set:
    """Directions determined by a point set in AG(n, q): normalized P - Q."""
    pts = [tuple(v.val if isinstance(v, FieldElement) else int(v) for v in p) for p in points]
    if len(pts) < 2:
        raise TooFewPoints("need at least two points")
    sub = field.sub
    out = set()
    for i in range(len(pts)):
        pi = pts[i]
        for j in range(i + 1, len(pts)):
            pj = pts[j]
            out.add(normalize_direction(field, [sub(a, b) for a, b in zip(pi, pj)]))
    return out


def graph_points(field: FieldSpec, table) -> list:
    return [(x, table[x]) for x in range(field.order)]


@dataclass(frozen=True)
class DirectionReport:
    N: int
    s: int
    branch: int
    subfield_linear: Optional[int]  # e with the graph F_{p^e}-linear, when verified
    note: str = ""

    def as_json(self) -> dict:
        return {
            "N": self.N,
            "s": self.s,
            "branch": self.branch,
            "subfield_linear": self.subfield_linear,
            "note": self.note,
        }


def _vp(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _slope_census_additive(field: FieldSpec, table):
    """Slopes and incidence counts for an additive function.

    For additive f the slopes are f(z)/z over z != 0 and every incident line
    with slope a meets the graph in exactly |ker(f - a x)| points, so one
    pass over the nonzero elements yields both N and s.
    """
    counter: Counter = Counter()
    div = field.div
    for z in range(1, field.order):
        counter[div(table[z], z)] += 1
    # count+1 is the kernel size q^(d_a) of f - a x for slope a
    sizes = [c + 1 for c in counter.values()]
    return set(counter.keys()), sizes


def _slope_census_table(field: FieldSpec, table):
    """Generic path: slopes from all pairs, counts from line fibers."""
    sub = field.sub
    div = field.div
    slopes = set()
    order = field.order
    for x in range(order):
        fx = table[x]
        for y in range(x + 1, order):
            slopes.add(div(sub(fx, table[y]), sub(x, y)))
    sizes = []
    for a in slopes:
        fibers: Counter = Counter()
        mul = field.mul
        for x in range(order):
            fibers[sub(table[x], mul(a, x))] += 1
        sizes.extend(c for c in fibers.values() if c)
    return slopes, sizes


def _graph_subfield_linear(field: FieldSpec, table, s: int, additive: bool) -> bool:
    """Is the graph of f a coset of an F_s-subspace of F_q^2?

    The graph is translated by (0, f(0)) first, so constant shifts of
    F_s-linear maps pass as they must.
    """
    if additive:
        shifted = table
    else:
        c = table[0]
        shifted = [field.sub(v, c) for v in table]
    emb = subfield_embedding(field, s)
    lambdas = [emb.apply(v) for v in range(emb.sub.order)]
    mul = field.mul
    for lam in lambdas:
        for x in range(field.order):
            if shifted[mul(lam, x)] != mul(lam, shifted[x]):
                return False
    if not additive:
        add = field.add
        for x in range(field.order):
            for y in range(field.order):
                if shifted[add(x, y)] != add(shifted[x], shifted[y]):
                    return False
    return True


def verify_direction_theorem(field: FieldSpec, f) -> DirectionReport:
    """Direction census of the graph of f with the branch classification.

    f is a value table over the field or a LinPoly on it.  Exactly one of
    the three classification branches must hold; a violation raises, it is
    never an expected outcome.  For s > 2 the graph is additionally checked
    to be F_s-linear; s = 2 leaves linearity unasserted.
    """
    additive = isinstance(f, LinPoly)
    if additive:
        if f.field != field:
            raise AmbientMismatch("polynomial over a different field")
        table = f.value_table()
        slopes, sizes = _slope_census_additive(field, table)
    else:
        table = list(f)
        if len(table) != field.order:
            raise AmbientMismatch("table length does not match the field order")
        slopes, sizes = _slope_census_table(field, table)
    p, h, order = field.p, field.h, field.order
    if not slopes:
        raise TooFewPoints("graph determined no directions")
    N = len(slopes)
    e_s = min(_vp(c, p) for c in sizes)
    s = p**e_s
    b1 = s == 1 and 2 * N >= order + 3 and N <= order + 1
    b2 = s > 1 and h % e_s == 0 and N >= order // s + 1 and N * (s - 1) <= order - 1
    b3 = s == order and N == 1
    matched = [i for i, b in enumerate((b1, b2, b3), start=1) if b]
    if len(matched) != 1:
        raise TheoremViolation(
            f"branches {matched} matched for N={N}, s={s}, q={order}"
        )
    branch = matched[0]
    subfield_linear = None
    note = ""
    if s > 2:
        if not _graph_subfield_linear(field, table, s, additive):
            raise TheoremViolation(
                f"graph not F_{s}-linear although s = {s} > 2"
            )
        subfield_linear = e_s
    elif s == 2:
        note = "linearity not implied"
    return DirectionReport(N=N, s=s, branch=branch, subfield_linear=subfield_linear, note=note)


@dataclass(frozen=True)
class HigherDirectionReport:
    n_points: int
    n_directions: int
    hypothesis_met: bool
    e: Optional[int]
    subfield_linear: Optional[int]
    note: str = ""

    def as_json(self) -> dict:
        return {
            "points": self.n_points,
            "N": self.n_directions,
            "hypothesis_met": self.hypothesis_met,
            "e": self.e,
            "subfield_linear": self.subfield_linear,
            "note": self.note,
        }


def _all_projective_directions(field: FieldSpec, dim: int):
    out = []
    for rep in _proj_reps(field, dim):
        out.append(rep)
    return out


def _proj_reps(field: FieldSpec, dim: int):
    # representatives with first nonzero coordinate = 1
    for lead in range(dim):
        prefix = (0,) * lead + (1,)
        yield from _extend(field, prefix, dim)


def _extend(field, prefix, dim):
    if len(prefix) == dim:
        yield prefix
        return
    for v in range(field.order):
        yield from _extend(field, prefix + (v,), dim)


def verify_higher_direction_theorem(field: FieldSpec, points) -> HigherDirectionReport:
    """Line-incidence divisibility for a point set of size q^(n-1) in AG(n, q).

    When the direction-count hypothesis fails, the report records that and
    asserts nothing.  Otherwise every incident line must either meet the set
    once (direction not determined) or in a multiple of p^(e_l); the gcd e of
    the exponents must make the translated set F_{p^e}-linear.
    """
    pts = [tuple(v.val if isinstance(v, FieldElement) else int(v) for v in p) for p in points]
    nd = len(pts[0])
    order = field.order
    if len(pts) != order ** (nd - 1):
        raise TooFewPoints(f"expected {order ** (nd - 1)} points, got {len(pts)}")
    D = directions(field, pts)
    bound2 = (order + 3) * order ** (nd - 2) + 2 * sum(
        order**i for i in range(1, nd - 2)
    )
    hypothesis = 2 * len(D) <= bound2
    if not hypothesis:
        return HigherDirectionReport(
            len(pts), len(D), False, None, None, "hypothesis not met"
        )
    p, h = field.p, field.h
    sub_f = field.sub
    div = field.div
    e_values = []
    pset = set(pts)
    for d in _all_projective_directions(field, nd):
        lead = next(i for i, v in enumerate(d) if v)
        groups: Counter = Counter()
        for s in pts:
            lam = div(s[lead], d[lead])
            rep = tuple(sub_f(a, field.mul(lam, b)) for a, b in zip(s, d))
            groups[rep] += 1
        determined = d in D
        for count in groups.values():
            if not determined:
                if count != 1:
                    raise TheoremViolation(
                        f"undetermined direction {d} on a line with {count} points"
                    )
                continue
            el = _vp(count, p)
            if el == 0:
                raise TheoremViolation(
                    f"incident line count {count} not divisible by p for {d}"
                )
            # largest divisor of h with p^e' | count
            el = max(e for e in range(1, el + 1) if h % e == 0)
            e_values.append(el)
    import math

    e = 0
    for el in e_values:
        e = math.gcd(e, el)
    linear = None
    if e:
        base = pts[0]
        shifted = set(
            tuple(sub_f(a, b) for a, b in zip(s, base)) for s in pts
        )
        emb = subfield_embedding(field, p**e)
        ok = True
        for lam_s in range(emb.sub.order):
            lam = emb.apply(lam_s)
            for s in shifted:
                if tuple(field.mul(lam, v) for v in s) not in shifted:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for a in shifted:
                for b in shifted:
                    if tuple(field.add(x, y) for x, y in zip(a, b)) not in shifted:
                        ok = False
                        break
                if not ok:
                    break
        if not ok:
            raise TheoremViolation(f"set not F_{p**e}-linear although e = {e}")
        linear = e
    return HigherDirectionReport(len(pts), len(D), True, e or None, linear)
