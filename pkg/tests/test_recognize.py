"""Canonical forms and the arises-over decision with witnesses."""

import random

import pytest

from divrank.errors import (
    CommonKernelNonzero,
    NoInvertibleElement,
    NotFqmLinear,
    WrongDimension,
)
from divrank.field_tower import field_of_order
from divrank.linpoly import LinPoly, MultiLinPoly
from divrank.matspace import GFMatrix
from divrank import constructions as cons
from divrank.recognize import (
    arises_over,
    arises_over_divisors,
    canonical_form_rect,
    canonical_form_square,
    disjoint_kernel_basis,
    find_invertible,
    second_weight_divisor,
)
from divrank.rmcode import (
    MatrixCode,
    PolyCode,
    code_equal,
    divisibility_index,
    em_embed,
    poly_code_to_matrix_code,
    weight_spectrum,
)

F4 = field_of_order(4)
F9 = field_of_order(9)
F16 = field_of_order(16)
F81 = field_of_order(81)
OMEGA = 2


class TestSecondWeightDivisor:
    def test_frobenius_pair_gives_one(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2), LinPoly.monomial(F16, 2, 1)])
        assert second_weight_divisor(code) == 1

    def test_subfield_pair_gives_two(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2), LinPoly.monomial(F16, 2, 2)])
        assert second_weight_divisor(code) == 2

    def test_wrong_dimension(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        with pytest.raises(WrongDimension):
            second_weight_divisor(code)

    def test_divides_everything_exhaustive_small(self):
        # exhaustive over F_4/F_2; capped sweeps over F_9/F_3 and F_16/F_2
        import itertools

        for field, q0, cap in ((F4, 2, None), (F9, 3, 300), (F16, 2, 300)):
            x = LinPoly.identity(field, q0)
            m = field.h
            count = 0
            for coeffs in itertools.product(range(field.order), repeat=m):
                g = LinPoly(field, q0, coeffs)
                try:
                    code = PolyCode(field, q0, [x, g])
                except Exception:
                    continue
                e = second_weight_divisor(code)
                spec = weight_spectrum(code)
                assert m % e == 0
                assert all(w % e == 0 for w in spec.nonzero_weights())
                count += 1
                if cap is not None and count >= cap:
                    break


class TestFindInvertible:
    def test_basis_element_found(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        g, exhausted = find_invertible(code)
        assert g is not None and exhausted

    def test_combination_needed(self):
        # both generators singular but a combination is invertible
        f1 = LinPoly(F16, 2, [F16.neg(1), 1, 0, 0])  # x^q - x
        f2 = LinPoly(F16, 2, [0, 1, 0, 0])           # x^q
        code = PolyCode(F16, 2, [f1, f2])
        g, _ = find_invertible(code, seed=1)
        assert g is not None
        from divrank.linpoly import poly_rank

        assert poly_rank(g) == 4


class TestCanonicalSquare:
    def test_identity_code(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        out, f1 = canonical_form_square(code)
        assert out.gens[0] == LinPoly.identity(F16, 2)
        assert f1 == LinPoly.identity(F16, 2)

    def test_frobenius_generator(self):
        xq = LinPoly.monomial(F4, 2, 1)
        code = PolyCode(F4, 2, [xq])
        out, f1 = canonical_form_square(code)
        assert out.gens[0] == LinPoly.identity(F4, 2)
        assert f1 == xq

    def test_scaled_pair(self):
        # <a x, a x^q> composes to the span of {x, a^(1-q) x^q}
        a = 5
        f1 = LinPoly(F16, 2, [a, 0, 0, 0])
        f2 = LinPoly(F16, 2, [0, a, 0, 0])
        code = PolyCode(F16, 2, [f1, f2])
        out, used = canonical_form_square(code, seed=0)
        assert out.gens[0] == LinPoly.identity(F16, 2)
        twisted_coeff = F16.mul(a, F16.inv(F16.pow(a, 2)))  # a^(1-q)
        expected = PolyCode(
            F16, 2,
            [LinPoly.identity(F16, 2), LinPoly(F16, 2, [0, twisted_coeff, 0, 0])],
        )
        assert code_equal(out, expected)

    def test_spectrum_preserved(self):
        rng = random.Random(4)
        for seed in range(10):
            code = cons.random_fqm_poly_code(F16, 2, 2, seed=seed, want_invertible=True)
            out, _ = canonical_form_square(code, seed=seed)
            assert weight_spectrum(code).counts == weight_spectrum(out).counts

    def test_no_invertible_element(self):
        # <x^q - x> over F_4: both members singular
        code = PolyCode(F4, 2, [LinPoly(F4, 2, [1, 1])])
        g, exhausted = find_invertible(code)
        if g is None:
            with pytest.raises(NoInvertibleElement):
                canonical_form_square(code)


class TestDisjointKernel:
    def test_already_disjoint(self):
        gens = [
            MultiLinPoly.variable(F16, 2, 2, 0),
            MultiLinPoly.variable(F16, 2, 2, 1),
            MultiLinPoly(F16, 2, [[0, 1, 0, 0], [OMEGA, 0, 0, 0]]),
        ]
        code = PolyCode(F16, 2, gens)
        out = disjoint_kernel_basis(code, seed=0)
        assert len(out) == 2
        from divrank.recognize import _joint_rank

        assert _joint_rank(out) == 8

    def test_verified_by_kernels(self):
        gens = [
            MultiLinPoly(F16, 2, [[1, 0, 0, 0], [1, 0, 0, 0]]),  # x1 + x2
            MultiLinPoly.variable(F16, 2, 2, 1),                 # x2
            MultiLinPoly.variable(F16, 2, 2, 0, i=1),            # x1^q
        ]
        code = PolyCode(F16, 2, gens)
        out = disjoint_kernel_basis(code, seed=0)
        from divrank.recognize import _joint_rank

        assert _joint_rank(out) == 8

    def test_common_kernel_detected(self):
        # all generators kill (1, 1, 0-padding) style vectors: use x1 - x2 twice
        gens = [
            MultiLinPoly(F16, 2, [[1, 0, 0, 0], [F16.neg(1), 0, 0, 0]]),
            MultiLinPoly(F16, 2, [[0, 1, 0, 0], [0, F16.neg(1), 0, 0]]),
            MultiLinPoly(F16, 2, [[0, 0, 1, 0], [0, 0, F16.neg(1), 0]]),
        ]
        code = PolyCode(F16, 2, gens)
        with pytest.raises(CommonKernelNonzero):
            disjoint_kernel_basis(code)


class TestCanonicalRect:
    def test_coordinate_maps_present(self):
        gens = [
            MultiLinPoly.variable(F16, 2, 2, 1),
            MultiLinPoly.variable(F16, 2, 2, 0),
            MultiLinPoly(F16, 2, [[0, 1, 0, 0], [1, 0, 0, 0]]),
        ]
        code = PolyCode(F16, 2, gens)
        out, phi = canonical_form_rect(code, seed=0)
        for j in range(2):
            assert MultiLinPoly.variable(F16, 2, 2, j) in out.gens

    def test_twisted_first_slot(self):
        gens = [
            MultiLinPoly.variable(F4, 2, 2, 0, i=1),  # x1^q
            MultiLinPoly.variable(F4, 2, 2, 1),
            MultiLinPoly(F4, 2, [[1, 0], [0, 1]]),
        ]
        code = PolyCode(F4, 2, gens)
        out, phi = canonical_form_rect(code, seed=0)
        for j in range(2):
            assert MultiLinPoly.variable(F4, 2, 2, j) in out.gens


class TestArisesOver:
    def test_identity_trivial_e1(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        res = arises_over(code, 1)
        assert res.arises is True
        assert res.witness is not None

    def test_e_not_dividing_m(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        res = arises_over(code, 3)
        assert res.arises is False and res.reason == "e does not divide m"

    def test_not_divisible(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2), LinPoly.monomial(F16, 2, 1)])
        res = arises_over(code, 2)
        assert res.arises is False and res.reason == "not e-divisible"

    def test_subfield_generated_code(self):
        # <x, x^(q^2)> over F_16 is F_4-linear and 2-divisible
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2), LinPoly.monomial(F16, 2, 2)])
        res = arises_over(code, 2)
        assert res.arises is True
        w = res.witness
        assert w.small_code.field.order == 4
        assert w.small_code.m == 2 and w.small_code.n == 2

    def test_counterexample_family(self):
        params = cons.CounterexampleParams(2, 3, 3, 2, 3)
        code = cons.counterexample_code(params, validate=False)
        res = arises_over(code, 2)
        assert res.arises is False
        assert res.reason == "e does not divide m"
        assert res.divisibility_index == 2

    def test_divisor_sweep(self):
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2), LinPoly.monomial(F16, 2, 2)])
        sweep = arises_over_divisors(code)
        assert set(sweep) == {1, 2}
        assert sweep[1].arises is True and sweep[2].arises is True

    def test_no_invertible_element_is_undecided(self):
        # an embedded singular code is 2-divisible yet has no invertible
        # member; the square classification does not apply, so: undecided
        singular = LinPoly(F16, 4, [F16.neg(1), 1])  # x^4 - x over F_16/F_4
        small = PolyCode(F16, 4, [singular])
        em = em_embed(poly_code_to_matrix_code(small), 2)
        assert divisibility_index(em) % 2 == 0
        res = arises_over(em, 2, seed=0)
        assert res.arises == "undecided"
        assert "exhaustive" in res.reason

    def test_e_equals_m_full_field_witness(self):
        # e = m: the witness is a 1x1 code over the whole field
        code = PolyCode(F16, 2, [LinPoly.identity(F16, 2)])
        res = arises_over(code, 4)
        assert res.arises is True
        assert res.witness.small_code.field.order == 16
        assert res.witness.small_code.m == res.witness.small_code.n == 1
        # matrix input through normalization, scrambled
        mat = poly_code_to_matrix_code(code)
        scrambled, X, Y = cons.random_equivalence(mat, seed=3)
        res2 = arises_over(scrambled, 4, seed=3)
        assert res2.arises is True, res2.reason


class TestRoundTrips:
    """Completeness at desk scale: embed + scramble always recovers."""

    @pytest.mark.parametrize("m,k", [(2, 1), (4, 1), (4, 2)])
    def test_square_q2_e2(self, m, k):
        fqm = field_of_order(2**m)
        qe = 4
        trials = 100
        good = 0
        for seed in range(trials):
            small = cons.random_fqm_poly_code(fqm, qe, k, seed=seed,
                                              want_invertible=True)
            small_mat = poly_code_to_matrix_code(small)
            em = em_embed(small_mat, 2)
            scrambled, X, Y = cons.random_equivalence(em, seed=seed + 1000)
            res = arises_over(scrambled, 2, seed=seed)
            assert res.arises is True, (seed, res.reason)
            reembedded = MatrixCode.from_span(
                res.witness.reembedded.field, m, m, res.witness.reembedded.basis
            )
            canonical = MatrixCode.from_span(
                res.witness.canonical_matrix.field, m, m,
                res.witness.canonical_matrix.basis,
            )
            assert code_equal(reembedded, canonical)
            good += 1
        assert good == trials

    @pytest.mark.parametrize("m,ell,k", [(2, 4, 4), (4, 2, 3)])
    def test_rect_q2_e2(self, m, ell, k):
        fqm = field_of_order(2**m)
        qe = 4
        trials = 100
        for seed in range(trials):
            small = cons.random_fqm_poly_code(
                fqm, qe, k, seed=seed, nvars=ell, want_trivial_kernel=True
            )
            small_mat = poly_code_to_matrix_code(small)
            em = em_embed(small_mat, 2)
            scrambled, X, Y = cons.random_equivalence(em, seed=seed + 2000)
            res = arises_over(scrambled, 2, seed=seed)
            assert res.arises is True, (seed, res.reason)

    def test_q3_square(self):
        # odd characteristic square case: F_81/F_3, e = 2
        for seed in range(20):
            small = cons.random_fqm_poly_code(F81, 9, 1, seed=seed,
                                              want_invertible=True)
            small_mat = poly_code_to_matrix_code(small)
            em = em_embed(small_mat, 3)
            scrambled, X, Y = cons.random_equivalence(em, seed=seed)
            res = arises_over(scrambled, 2, seed=seed)
            assert res.arises is True, (seed, res.reason)

    def test_q3_rect(self):
        # rectangular with q = 3 > 2: the classification applies directly
        for seed in range(10):
            small = cons.random_fqm_poly_code(
                F9, 9, 2, seed=seed, nvars=2, want_trivial_kernel=True
            )
            small_mat = poly_code_to_matrix_code(small)
            em = em_embed(small_mat, 3)
            scrambled, X, Y = cons.random_equivalence(em, seed=seed)
            res = arises_over(scrambled, 2, seed=seed)
            assert res.arises is True, (seed, res.reason)

    def test_divisibility_necessity(self):
        for seed in range(10):
            small = cons.random_fqm_poly_code(F16, 4, 1, seed=seed,
                                              want_invertible=True)
            em = em_embed(poly_code_to_matrix_code(small), 2)
            assert divisibility_index(em) % 2 == 0


class TestCustomModulusField:
    def test_recognition_over_alternative_spec(self):
        # the same code expressed over a non-default F_9 spec still recognizes
        from divrank.field_tower import make_field, tower_embedding

        F9alt = make_field(3, (2, 1, 1))  # x^2 + x + 2, irreducible over F_3
        emb_canon = tower_embedding(F9, F81)
        emb_alt = tower_embedding(F9alt, F81)

        def translate(v):
            return emb_alt.pull_back(emb_canon.apply(v))

        small = cons.random_fqm_poly_code(F81, 9, 1, seed=2, want_invertible=True)
        mat = poly_code_to_matrix_code(small)  # 2x2 over canonical F_9
        alt_basis = [
            GFMatrix(F9alt, 2, 2, [translate(v) for v in B.data]) for B in mat.basis
        ]
        alt_code = MatrixCode(F9alt, 2, 2, alt_basis)
        res = arises_over(alt_code, 2, seed=0)
        assert res.arises is True, res.reason
        assert res.witness.small_code.field.order == 81


class TestMatrixInputEdgeCases:
    def test_not_fqm_linear_dimension(self):
        F2 = field_of_order(2)
        # dimension 3 is not a multiple of m = 4, and the code is 2-divisible
        alt = cons.alternating_code(4, F2)
        sub = MatrixCode(F2, 4, 4, alt.basis[:3])
        if divisibility_index(sub) % 2 == 0:
            with pytest.raises(NotFqmLinear):
                arises_over(sub, 2)

    def test_alternating_not_fqm_linear(self):
        F2 = field_of_order(2)
        alt = cons.alternating_code(3, F2)
        res_e = divisibility_index(alt)
        assert res_e == 2
        # e = 2 does not divide m = 3, so the decision is a clean False
        res = arises_over(alt, 2)
        assert res.arises is False and res.reason == "e does not divide m"
