"""Generators for the code families used across the suite.

Block repetitions, alternating matrix spaces, the two-slot product systems
that give divisible codes refusing to arise over the larger field, random
equivalence scrambles for round-trip tests, and seeded random codes used as
test raw material.  All constructors are pure and deterministic given their
seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadParams, NotSquare
from .field_tower import (
    FieldSpec,
    default_modulus,
    make_field,
    power_basis,
    tower_embedding,
    _factor_prime_power,
)
from .linpoly import LinPoly, MultiLinPoly
from .matspace import GFMatrix
from .qsystem import ExtensionAmbient, QSystem
from .rmcode import MatrixCode, PolyCode, VectorCode


# ---------------------------------------------------------------------------
# simple families
# ---------------------------------------------------------------------------


def block_repetition(code: MatrixCode, e: int) -> MatrixCode:
    """diag(C, ..., C) with e copies; every rank is multiplied by e."""
    if code.m != code.n:
        raise NotSquare("block repetition needs a square code")
    if e < 1:
        raise BadParams("e must be positive")
    m = code.m
    field = code.field
    out = []
    for B in code.basis:
        big = [0] * (e * m * e * m)
        for t in range(e):
            for i in range(m):
                row = B.row(i)
                for j in range(m):
                    big[(t * m + i) * e * m + t * m + j] = row[j]
        out.append(GFMatrix(field, e * m, e * m, big))
    return MatrixCode(field, e * m, e * m, out, check=False)


def alternating_code(m: int, field: FieldSpec) -> MatrixCode:
    """Span of E_ij - E_ji for i < j; every member has even rank."""
    if m < 2:
        raise BadParams("need m >= 2")
    basis = []
    for i in range(m):
        for j in range(i + 1, m):
            flat = [0] * (m * m)
            flat[i * m + j] = 1
            flat[j * m + i] = field.neg(1)
            basis.append(GFMatrix(field, m, m, flat))
    return MatrixCode(field, m, m, basis, check=False)


def gabidulin_like(n: int, k: int, field: FieldSpec, q0: int) -> VectorCode:
    """Evaluation of x, x^q, ..., x^(q^(k-1)) at the first n power-basis points."""
    pb = power_basis(field, q0)
    m = len(pb)
    if not (1 <= k <= n <= m):
        raise BadParams(f"need 1 <= k <= n <= m = {m}")
    rows = []
    for i in range(k):
        f = LinPoly.monomial(field, q0, i)
        rows.append([f.eval_i(b) for b in pb[:n]])
    return VectorCode(field, q0, GFMatrix.from_rows(field, rows))


# ---------------------------------------------------------------------------
# the two-slot product system
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CounterexampleParams:
    q: int
    t: int
    ell: int
    e: int
    g: int

    def __post_init__(self):
        for name in ("q", "t", "ell", "e", "g"):
            if getattr(self, name) < 1:
                raise BadParams(f"{name} must be a positive integer")
        _factor_prime_power(self.q)  # q must be a prime power
        if self.e >= self.t:
            raise BadParams("e must be less than t")
        if self.g * self.e > self.t * self.ell:
            raise BadParams("ge must not exceed t*ell")
        if (self.g * self.e) % self.t:
            raise BadParams(
                "t must divide ge (the second slot is an F_{q^t}-subspace)"
            )
        if (self.t * self.ell) % self.e == 0:
            raise BadParams("e must not divide t*ell for the non-arising family")

    @property
    def m(self) -> int:
        return self.t * self.ell

    @property
    def n(self) -> int:
        return self.e + self.g * self.e


def _tower_fields(params: CounterexampleParams):
    p, hq = _factor_prime_power(params.q)
    fq = make_field(p, default_modulus(p, hq))
    fqt = make_field(p, default_modulus(p, hq * params.t))
    fqm = make_field(p, default_modulus(p, hq * params.m))
    return fq, fqt, fqm


def counterexample_system(
    params: CounterexampleParams, s1_basis=None, s2_basis=None, validate: bool = True
) -> QSystem:
    """U = S_1 x S_2 inside F_{q^(t*ell)}^2.

    S_1 defaults to the span of the first e power-basis elements of F_{q^t}
    (which contains 1); S_2 to the F_{q^t}-span of the first ge/t power-basis
    elements of the top field.  Every one-dimensional F_{q^m}-subspace meets
    U in dimension 0, e, or ge, which is checked exhaustively unless
    disabled.
    """
    q, t, ell, e, g = params.q, params.t, params.ell, params.e, params.g
    fq, fqt, fqm = _tower_fields(params)
    emb_t = tower_embedding(fqt, fqm)
    if s1_basis is None:
        s1_basis = [emb_t.apply(b) for b in power_basis(fqt, q)[:e]]
    if s2_basis is None:
        top_over_t = power_basis(fqm, fqt.order)
        s2_gens = top_over_t[: (g * e) // t]
        s2_basis = [
            fqm.mul(emb_t.apply(b), w)
            for w in s2_gens
            for b in power_basis(fqt, q)
        ]
    amb = ExtensionAmbient(fqm, q, 2)
    vectors = [(s, 0) for s in s1_basis] + [(0, s) for s in s2_basis]
    U = amb.subspace_from_vectors(vectors)
    if U.dim != params.n:
        raise BadParams(
            f"slots span dimension {U.dim}, expected {params.n}; bad custom bases"
        )
    system = QSystem(amb, U)
    if validate:
        dims = intersection_profile(system)
        allowed = {0, e, g * e}
        bad = {d for d in dims.values() if d not in allowed}
        if bad:
            raise BadParams(f"intersection dimensions {sorted(bad)} outside {allowed}")
    return system


def intersection_profile(system: QSystem) -> dict:
    """dim(U meet <w>) for every projective point w of the ambient line(s)."""
    amb = system.ambient
    field = amb.field
    out = {}
    for rep in _projective_points(field, amb.k):
        line = amb.line(rep)
        out[rep] = system.U.intersect(line).dim
    return out


def _projective_points(field: FieldSpec, k: int):
    def rec(prefix):
        if len(prefix) == k:
            yield prefix
            return
        for v in range(field.order):
            yield from rec(prefix + (v,))

    for lead in range(k):
        base = (0,) * lead + (1,)
        yield from rec(base)


def counterexample_code(params: CounterexampleParams, validate: bool = True) -> VectorCode:
    """The [e+ge, 2] code associated with the product system."""
    from .rmcode import code_of_system

    return code_of_system(counterexample_system(params, validate=validate))


# ---------------------------------------------------------------------------
# seeded randomness
# ---------------------------------------------------------------------------


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> GFMatrix:
    q = field.order
    while True:
        M = GFMatrix(field, n, n, [rng.randrange(q) for _ in range(n * n)])
        if M.rank() == n:
            return M


def random_equivalence(code: MatrixCode, seed: int):
    """(X C Y, X, Y) for seeded invertible X, Y; spectrum preserved."""
    rng = random.Random(seed)
    X = random_invertible(code.field, code.m, rng)
    Y = random_invertible(code.field, code.n, rng)
    basis = [X @ B @ Y for B in code.basis]
    out = MatrixCode(code.field, code.m, code.n, basis, check=False)
    out._spectrum = code._spectrum
    return out, X, Y


def random_matrix_code(
    field: FieldSpec, m: int, n: int, dim: int, seed: int
) -> MatrixCode:
    """A random F_q-matrix code of the exact given dimension."""
    if dim > m * n:
        raise BadParams(f"dimension {dim} exceeds the ambient {m}x{n}")
    rng = random.Random(seed)
    q = field.order
    while True:
        mats = [
            GFMatrix(field, m, n, [rng.randrange(q) for _ in range(m * n)])
            for _ in range(dim)
        ]
        try:
            return MatrixCode(field, m, n, mats)
        except Exception:
            continue


def random_fqm_poly_code(
    field: FieldSpec,
    q0: int,
    k: int,
    seed: int,
    nvars: int = 1,
    want_invertible: bool = False,
    want_trivial_kernel: bool = False,
) -> PolyCode:
    """A random F_{q^m}-linear polynomial code, optionally with extras.

    want_invertible retries until some generator is invertible (univariate);
    want_trivial_kernel retries until the generators share no kernel vector.
    """
    from .linpoly import mto_matrix, to_matrix
    from .matspace import rref_rows
    from .field_tower import subfield_spec

    rng = random.Random(seed)
    Q = field.order
    m = field.h // field.subfield_exponent(q0)
    if k > m * nvars:
        raise BadParams(
            f"{k} independent generators cannot exist in a {m * nvars}-dim space"
        )
    if want_trivial_kernel and k < nvars:
        raise BadParams(
            f"{k} generators in {nvars} variables always share a kernel vector"
        )
    while True:
        gens = []
        for _ in range(k):
            if nvars == 1:
                gens.append(LinPoly(field, q0, [rng.randrange(Q) for _ in range(m)]))
            else:
                gens.append(
                    MultiLinPoly(
                        field, q0,
                        [[rng.randrange(Q) for _ in range(m)] for _ in range(nvars)],
                    )
                )
        try:
            code = PolyCode(field, q0, gens)
        except Exception:
            continue
        if want_invertible and nvars == 1:
            if not any(to_matrix(g).rank() == m for g in gens):
                continue
        if want_trivial_kernel and nvars > 1:
            rows = []
            for g in gens:
                rows.extend(mto_matrix(g).row_lists())
            _, pivots = rref_rows(subfield_spec(field, q0), rows)
            if len(pivots) != m * nvars:
                continue
        return code
