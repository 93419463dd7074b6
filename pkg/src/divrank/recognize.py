"""Recognition of codes that arise from a larger field, with witnesses.

The decision pipeline: divisibility pre-checks, normalization of the
idealizer to the standard scalar algebra, canonicalization so that the
identity maps generate the first slots, then a coefficient-support test on
the remaining generators.  Every positive answer carries a witness over the
small field, and the witness is re-embedded and compared against the
canonical form before the answer is returned.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .errors import (
    CommonKernelNonzero,
    NoInvertibleElement,
    NotFqmLinear,
    SearchBudgetExceeded,
    TheoremViolation,
    TooLarge,
    WrongDimension,
    ZeroCode,
)
from .field_tower import (
    FieldSpec,
    power_basis,
    product_basis,
    subfield_spec,
    tower_embedding,
)
from .linpoly import (
    LinPoly,
    MultiLinPoly,
    from_matrix,
    from_matrix_multi,
    invert,
    is_subfield_linear,
    mcompose,
    mto_matrix,
    mtuple_invert,
    to_matrix,
)
from .matspace import GFMatrix, rref_rows
from .rmcode import (
    DEFAULT_MAX_ENUM,
    MatrixCode,
    PolyCode,
    VectorCode,
    code_equal,
    divisibility_index,
    em_embed,
    find_field_in_idealizer,
    normalize_linearity,
    poly_code_from_vector,
    weight_spectrum,
)

UNDECIDED = "undecided"


@dataclass
class RecognitionWitness:
    H: Optional[GFMatrix]
    f1: Optional[LinPoly]
    phi: Optional[tuple]
    canonical: PolyCode
    small_gens: tuple
    small_code: MatrixCode
    reembedded: MatrixCode
    canonical_matrix: MatrixCode


@dataclass
class RecognitionResult:
    arises: object  # True, False, or "undecided"
    e: int
    reason: Optional[str] = None
    witness: Optional[RecognitionWitness] = None
    divisibility_index: Optional[int] = None

    def as_json(self) -> dict:
        out = {
            "arises": self.arises,
            "e": self.e,
            "reason": self.reason,
            "divisibility_index": self.divisibility_index,
        }
        if self.witness is not None:
            from .linpoly import format_linpoly

            w = self.witness
            out["witness"] = {
                "H": w.H.format() if w.H is not None else None,
                "f1": format_linpoly(w.f1) if w.f1 is not None else None,
                "phi": [format_linpoly(p) for p in w.phi] if w.phi else None,
                "small_field": w.small_code.field.order,
                "small_generators": [B.format() for B in w.small_code.basis],
                "canonical_generators": [format_linpoly(g) for g in w.canonical.gens],
            }
        else:
            out["witness"] = None
        return out


# ---------------------------------------------------------------------------
# the square-case operations
# ---------------------------------------------------------------------------


def second_weight_divisor(code: PolyCode, max_enum: int = DEFAULT_MAX_ENUM) -> int:
    """e = m - (second largest weight) of a 2-dimensional univariate code.

    Requires an invertible element (detected as a weight-m codeword); the
    derived e must divide m and every weight, which is asserted.
    """
    if code.nvars != 1 or code.k != 2:
        raise WrongDimension("second_weight_divisor needs a 2-dimensional code")
    spec = weight_spectrum(code, max_enum)
    m = code.m
    if spec.max_weight() != m:
        raise NoInvertibleElement("the code has no invertible element")
    second = spec.second_largest_weight()
    if second is None:
        raise TheoremViolation("2-dimensional code with a single nonzero weight")
    e = m - second
    if m % e:
        raise TheoremViolation(f"derived divisor {e} does not divide m = {m}")
    for w in spec.nonzero_weights():
        if w % e:
            raise TheoremViolation(f"weight {w} is not divisible by {e}")
    return e


def find_invertible(
    code: PolyCode,
    seed: int = 0,
    n_random: int = 1000,
    exhaust_cap: int = 2**20,
):
    """An invertible element of a univariate code, plus a definitiveness flag.

    Search order: the basis generators, seeded random F_{q^m}-combinations,
    then the whole code when its size fits under the cap.  Returns
    (poly or None, exhausted).
    """
    if code.nvars != 1:
        raise WrongDimension("invertibility search is for univariate codes")
    m = code.m

    def inv_ok(g):
        return not g.is_zero() and to_matrix(g).rank() == m

    for g in code.gens:
        if inv_ok(g):
            return g, True
    field = code.field
    Q = field.order
    rng = random.Random(seed)
    for _ in range(n_random):
        g = LinPoly.zero(field, code.q0)
        for gen in code.gens:
            c = rng.randrange(Q)
            if c:
                g = g + gen.scale(c)
        if inv_ok(g):
            return g, True
    if Q**code.k <= exhaust_cap:
        for coeffs in itertools.product(range(Q), repeat=code.k):
            g = LinPoly.zero(field, code.q0)
            for c, gen in zip(coeffs, code.gens):
                if c:
                    g = g + gen.scale(c)
            if inv_ok(g):
                return g, True
        return None, True
    return None, False


def canonical_form_square(code: PolyCode, seed: int = 0):
    """Compose the code with the inverse of one invertible member.

    Returns (canonical code containing the identity, the member used).  The
    weight spectrum is compared before and after whenever it is cheap to
    enumerate, since the composition must be an isometry.
    """
    f1, exhausted = find_invertible(code, seed=seed)
    if f1 is None:
        raise NoInvertibleElement(
            "no invertible element found"
            + (" (exhaustive)" if exhausted else " under budget")
        )
    f1_inv = invert(f1)
    gens = [g.compose(f1_inv) for g in code.gens]
    out = PolyCode(code.field, code.q0, gens).canonical()
    _check_spectrum_preserved(code, out)
    ident = LinPoly.identity(code.field, code.q0)
    assert out.gens[0] == ident, "canonical form does not start with the identity"
    return out, f1


def _check_spectrum_preserved(before, after, cap: int = 2**16):
    try:
        s1 = weight_spectrum(before, cap)
        s2 = weight_spectrum(after, cap)
    except TooLarge:
        return
    if s1.counts != s2.counts:
        raise TheoremViolation("canonicalization changed the weight spectrum")


# ---------------------------------------------------------------------------
# the rectangular-case operations
# ---------------------------------------------------------------------------


def _joint_rank(gens) -> int:
    rows = []
    for g in gens:
        rows.extend(mto_matrix(g).row_lists())
    sub = subfield_spec(gens[0].field, gens[0].q0)
    _, pivots = rref_rows(sub, rows)
    return len(pivots)


def _combine(gens, coeffs):
    field, q0 = gens[0].field, gens[0].q0
    out = MultiLinPoly.zero(field, q0, gens[0].nvars)
    for c, g in zip(coeffs, gens):
        if c:
            out = out + g.scale(c)
    return out


def disjoint_kernel_basis(
    code: PolyCode,
    seed: int = 0,
    retries: int = 200,
    exhaust_cap: int = 2**16,
):
    """l independent members of the code whose kernels meet trivially.

    Follows the combination recipe: a full-rank l x k matrix over F_{q^m}
    applied to the generators, retried with seeded randomness and falling
    back to exhaustive reduced-echelon candidates under the cap.
    """
    if code.nvars == 1:
        raise WrongDimension("disjoint_kernel_basis expects a multivariate code")
    ell, k = code.nvars, code.k
    if k < ell:
        raise WrongDimension(f"need at least {ell} generators, have {k}")
    field = code.field
    mdim = code.m * ell
    if _joint_rank(code.gens) != mdim:
        raise CommonKernelNonzero("the generators share a nonzero kernel vector")
    if k == ell:
        return tuple(code.gens)

    def try_rows(rows):
        gens = [_combine(code.gens, r) for r in rows]
        if _joint_rank(gens) == mdim:
            return tuple(gens)
        return None

    rng = random.Random(seed)
    Q = field.order
    for _ in range(retries):
        rows = [[rng.randrange(Q) for _ in range(k)] for _ in range(ell)]
        _, pivots = rref_rows(field, [list(r) for r in rows])
        if len(pivots) != ell:
            continue
        found = try_rows(rows)
        if found:
            return found
    # exhaustive over reduced-echelon full-rank row patterns
    total = 0
    for pivots in itertools.combinations(range(k), ell):
        free = [
            (r, c)
            for r in range(ell)
            for c in range(k)
            if c not in pivots and c > pivots[r]
        ]
        total += Q ** len(free)
        if total > exhaust_cap:
            raise SearchBudgetExceeded("echelon candidate space over the cap")
    for pivots in itertools.combinations(range(k), ell):
        free = [
            (r, c)
            for r in range(ell)
            for c in range(k)
            if c not in pivots and c > pivots[r]
        ]
        for vals in itertools.product(range(Q), repeat=len(free)):
            rows = [[0] * k for _ in range(ell)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            found = try_rows(rows)
            if found:
                return found
    raise SearchBudgetExceeded("no kernel-disjoint family found (exhausted)")


def canonical_form_rect(code: PolyCode, seed: int = 0):
    """Compose with the inverse of a kernel-disjoint tuple from the code.

    Returns (canonical code whose first l generators are the coordinate
    maps, the tuple used).
    """
    phi = disjoint_kernel_basis(code, seed=seed)
    phi_inv = mtuple_invert(phi)
    gens = [mcompose(g, phi_inv) for g in code.gens]
    out = PolyCode(code.field, code.q0, gens).canonical()
    _check_spectrum_preserved(code, out)
    for j in range(code.nvars):
        expected = MultiLinPoly.variable(code.field, code.q0, code.nvars, j)
        assert expected in out.gens, "canonical form misses a coordinate map"
    return out, phi


# ---------------------------------------------------------------------------
# the main decision
# ---------------------------------------------------------------------------


def _matrix_to_poly_view(code: MatrixCode, seed: int):
    """Normalize a matrix code and lift it to an F_{q^m}-polynomial code."""
    q = code.field.order
    m = code.m
    if code.dim % m:
        raise NotFqmLinear(
            f"F_q-dimension {code.dim} is not a multiple of m = {m}"
        )
    search = find_field_in_idealizer(code, m, seed=seed)
    if search.element is None:
        if search.exhaustive:
            raise NotFqmLinear("the idealizer contains no field of order q^m")
        return None, None, "F_{q^m}-linearity not decided under the search budget"
    H, normalized, fqm, _ = normalize_linearity(code, search.element)
    canon_sub = subfield_spec(fqm, q)
    ell = code.n // m
    polys = []
    for B in normalized.basis:
        B = _translate_entries(B, canon_sub, fqm)
        if ell == 1:
            polys.append(from_matrix(B, fqm, q))
        else:
            polys.append(from_matrix_multi(B, fqm, q, ell))
    rows = [list(PolyCode._flat(g)) for g in polys]
    red, _ = rref_rows(fqm, rows)
    k = code.dim // m
    assert len(red) == k, "lifted code is not an F_{q^m}-space of the right size"
    if ell == 1:
        gens = [LinPoly(fqm, q, r) for r in red]
    else:
        gens = [
            MultiLinPoly(fqm, q, [r[j * m : (j + 1) * m] for j in range(ell)])
            for r in red
        ]
    out = PolyCode(fqm, q, gens, check=False)
    out._spectrum = code._spectrum
    return out, H, None


def _translate_entries(B: GFMatrix, target: FieldSpec, fqm: FieldSpec) -> GFMatrix:
    if B.field == target:
        return B
    emb_src = tower_embedding(B.field, fqm)
    emb_dst = tower_embedding(target, fqm)
    data = [emb_dst.pull_back(emb_src.apply(v)) for v in B.data]
    return GFMatrix(target, B.rows, B.cols, data)


def _product_points(fqm: FieldSpec, qe: int, q0: int, nvars: int) -> tuple:
    pb = product_basis(fqm, qe, q0)
    pts = []
    for j in range(nvars):
        for b in pb:
            v = [0] * nvars
            v[j] = b
            pts.append(tuple(v))
    return tuple(pts)


def _build_witness(canonical: PolyCode, e: int, H, f1, phi) -> RecognitionWitness:
    """Read the small-field code off the canonical form and re-embed it."""
    fqm, q0 = canonical.field, canonical.q0
    m = canonical.m
    qe = q0**e
    field_e = subfield_spec(fqm, qe)
    small_m = m // e
    ell = canonical.nvars
    # the canonical generators as q^e-polynomials over F_{q^m}/F_{q^e}
    small_gens = []
    for g in canonical.gens:
        if ell == 1:
            coeffs = [g.coeffs[e * j] for j in range(small_m)]
            small_gens.append(LinPoly(fqm, qe, coeffs))
        else:
            grid = [
                [g.coeffs[v][e * j] for j in range(small_m)] for v in range(ell)
            ]
            small_gens.append(MultiLinPoly(fqm, qe, grid))
    # F_{q^e}-basis of the code, as matrices over F_{q^e}
    pb_e = power_basis(fqm, qe)
    small_mats = []
    for g in small_gens:
        for b in pb_e:
            gb = g.scale(b)
            if ell == 1:
                small_mats.append(to_matrix(gb))
            else:
                small_mats.append(mto_matrix(gb))
    small_code = MatrixCode(field_e, small_m, small_m * ell, small_mats)
    reembedded = em_embed(small_code, q0)
    # the canonical form over the matching product basis
    if ell == 1:
        basis_q = product_basis(fqm, qe, q0)
        canon_mats = [to_matrix(g, basis_q) for g in canonical.fq_basis()]
    else:
        basis_q = product_basis(fqm, qe, q0)
        pts = _product_points(fqm, qe, q0, ell)
        canon_mats = [
            mto_matrix(g, pts, codomain_basis=basis_q) for g in canonical.fq_basis()
        ]
    sub0 = subfield_spec(fqm, q0)
    canonical_matrix = MatrixCode(sub0, m, m * ell, canon_mats, check=False)
    if not code_equal(
        MatrixCode.from_span(sub0, m, m * ell, reembedded.basis),
        MatrixCode.from_span(sub0, m, m * ell, canonical_matrix.basis),
    ):
        raise TheoremViolation("re-embedded witness differs from the canonical form")
    return RecognitionWitness(
        H=H,
        f1=f1,
        phi=phi,
        canonical=canonical,
        small_gens=tuple(small_gens),
        small_code=small_code,
        reembedded=reembedded,
        canonical_matrix=canonical_matrix,
    )


def arises_over(
    code,
    e: int,
    seed: int = 0,
    max_enum: int = DEFAULT_MAX_ENUM,
) -> RecognitionResult:
    """Decide whether the code arises from a code over F_{q^e}.

    Answers True with a verified witness, False with the blocking reason,
    or "undecided" when the applicable classification does not cover the
    instance (no invertible element found, base field too small in the
    rectangular case, or a search budget ran out).
    """
    if isinstance(code, MatrixCode):
        q0 = code.field.order
        m, n = code.m, code.n
        if code.dim == 0:
            raise ZeroCode("recognition of the zero code is not meaningful")
    elif isinstance(code, VectorCode):
        q0, m, n = code.q0, code.m, code.n
    elif isinstance(code, PolyCode):
        q0, m, n = code.q0, code.m, code.m * code.nvars
    else:
        raise TypeError(f"not a code: {code!r}")
    if e < 1:
        raise WrongDimension("e must be a positive integer")
    idx = divisibility_index(code, max_enum)
    if m % e:
        return RecognitionResult(
            False, e, reason="e does not divide m", divisibility_index=idx
        )
    if n % e:
        return RecognitionResult(
            False, e, reason="e does not divide n", divisibility_index=idx
        )
    if idx % e:
        return RecognitionResult(
            False, e, reason="not e-divisible", divisibility_index=idx
        )
    if n % m:
        return RecognitionResult(
            UNDECIDED, e,
            reason="n is not a multiple of m; no decision procedure applies",
            divisibility_index=idx,
        )
    # normalize to the polynomial view
    H = None
    if isinstance(code, MatrixCode):
        poly, H, pending = _matrix_to_poly_view(code, seed)
        if poly is None:
            return RecognitionResult(
                UNDECIDED, e, reason=pending, divisibility_index=idx
            )
    elif isinstance(code, VectorCode):
        poly = poly_code_from_vector(code)
    else:
        poly = code
    ell = poly.nvars
    if ell == 1:
        try:
            canonical, f1 = canonical_form_square(poly, seed=seed)
        except NoInvertibleElement as err:
            return RecognitionResult(
                UNDECIDED, e, reason=str(err), divisibility_index=idx
            )
        phi = None
    else:
        try:
            canonical, phi = canonical_form_rect(poly, seed=seed)
        except CommonKernelNonzero:
            return RecognitionResult(
                UNDECIDED, e,
                reason="the generators share a common kernel vector",
                divisibility_index=idx,
            )
        except SearchBudgetExceeded as err:
            return RecognitionResult(
                UNDECIDED, e, reason=str(err), divisibility_index=idx
            )
        f1 = None
    bad = [g for g in canonical.gens if not is_subfield_linear(g, e)]
    if bad:
        if ell > 1 and q0 == 2:
            return RecognitionResult(
                UNDECIDED, e,
                reason="theorem hypothesis q > 2 not met in the rectangular case",
                divisibility_index=idx,
            )
        raise TheoremViolation(
            "e-divisible code with hypotheses met has a non-F_{q^e}-linear "
            "canonical generator"
        )
    witness = _build_witness(canonical, e, H, f1, phi)
    return RecognitionResult(
        True, e, witness=witness, divisibility_index=idx
    )


def arises_over_divisors(code, seed: int = 0, max_enum: int = DEFAULT_MAX_ENUM) -> dict:
    """Convenience sweep: the decision for every divisor of the index."""
    idx = divisibility_index(code, max_enum)
    out = {}
    for e in range(1, idx + 1):
        if idx % e == 0:
            out[e] = arises_over(code, e, seed=seed, max_enum=max_enum)
    return out
