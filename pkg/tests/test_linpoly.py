"""Linearized polynomial algebra: evaluation, composition, matrix bridge."""

import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from divrank.errors import BadDivisor, NotInvertible
from divrank.field_tower import field_of_order
from divrank.matspace import GFMatrix
from divrank.linpoly import (
    LinPoly,
    MultiLinPoly,
    format_linpoly,
    from_matrix,
    interpolate,
    invert,
    is_subfield_linear,
    is_subfield_linear_pointwise,
    kernel_elements,
    mcompose,
    minterpolate,
    mkernel,
    mto_matrix,
    mtuple_invert,
    parse_linpoly,
    poly_kernel,
    poly_rank,
    standard_points,
    to_matrix,
)

F2 = field_of_order(2)
F4 = field_of_order(4)
F8 = field_of_order(8)
F9 = field_of_order(9)
F16 = field_of_order(16)
OMEGA = 2


def rand_poly(field, q0, rng):
    m = field.h // field.subfield_exponent(q0)
    return LinPoly(field, q0, [rng.randrange(field.order) for _ in range(m)])


class TestEval:
    def test_identity(self):
        f = LinPoly.identity(F4, 2)
        for a in range(4):
            assert f.eval_i(a) == a

    def test_frobenius_monomial(self):
        f = LinPoly(F4, 2, [0, 1])  # x^2
        assert f.eval_i(OMEGA) == F4.add(OMEGA, 1)

    def test_sum_of_terms(self):
        f = LinPoly(F4, 2, [OMEGA, 1])  # omega x + x^2
        assert f.eval_i(1) == F4.add(OMEGA, 1)

    def test_additive(self):
        rng = random.Random(3)
        for _ in range(20):
            f = rand_poly(F16, 2, rng)
            a, b = rng.randrange(16), rng.randrange(16)
            assert f.eval_i(F16.add(a, b)) == F16.add(f.eval_i(a), f.eval_i(b))


class TestCompose:
    def test_xq_xq_reduces(self):
        xq = LinPoly.monomial(F4, 2, 1)
        assert xq.compose(xq).coeffs == (1, 0)

    def test_scalar_then_frobenius(self):
        g = LinPoly(F4, 2, [OMEGA, 0])
        f = LinPoly(F4, 2, [0, 1])
        assert g.compose(f).coeffs == (0, OMEGA)           # omega x o x^2
        assert f.compose(g).coeffs == (0, F4.mul(OMEGA, OMEGA))  # twist by q

    def test_matches_pointwise(self):
        rng = random.Random(5)
        for _ in range(50):
            f, g = rand_poly(F16, 2, rng), rand_poly(F16, 2, rng)
            h = f.compose(g)
            for a in range(16):
                assert h.eval_i(a) == f.eval_i(g.eval_i(a))

    def test_associative_random(self):
        rng = random.Random(11)
        for field in (F4, F8, F9):
            for _ in range(334):
                f, g, h = (rand_poly(field, field.p, rng) for _ in range(3))
                assert f.compose(g).compose(h) == f.compose(g.compose(h))

    def test_identity_two_sided(self):
        rng = random.Random(13)
        for field in (F4, F8, F9):
            x = LinPoly.identity(field, field.p)
            for _ in range(50):
                f = rand_poly(field, field.p, rng)
                assert f.compose(x) == f and x.compose(f) == f

    @given(
        st.lists(st.integers(0, 8), min_size=2, max_size=2),
        st.lists(st.integers(0, 8), min_size=2, max_size=2),
        st.lists(st.integers(0, 8), min_size=2, max_size=2),
    )
    def test_associative_hypothesis_f9(self, a, b, c):
        f, g, h = (LinPoly(F9, 3, coeffs) for coeffs in (a, b, c))
        assert f.compose(g).compose(h) == f.compose(g.compose(h))

    @given(
        st.lists(st.integers(0, 15), min_size=4, max_size=4),
        st.integers(0, 15),
        st.integers(0, 15),
    )
    def test_eval_fq_linear_hypothesis(self, coeffs, a, b):
        f = LinPoly(F16, 2, coeffs)
        assert f.eval_i(F16.add(a, b)) == F16.add(f.eval_i(a), f.eval_i(b))


class TestToMatrix:
    def test_identity(self):
        assert to_matrix(LinPoly.identity(F4, 2)) == GFMatrix.identity(F2, 2)

    def test_frobenius_f4(self):
        assert to_matrix(LinPoly(F4, 2, [0, 1])).data == (1, 1, 0, 1)

    def test_scalar_f4(self):
        assert to_matrix(LinPoly(F4, 2, [OMEGA, 0])).data == (0, 1, 1, 1)

    def test_algebra_isomorphism_exhaustive_m2(self):
        # all pairs over F_4/F_2
        polys = [LinPoly(F4, 2, [a, b]) for a in range(4) for b in range(4)]
        for f in polys:
            for g in polys:
                assert to_matrix(f.compose(g)) == to_matrix(f) @ to_matrix(g)
                assert to_matrix(f + g) == _madd(to_matrix(f), to_matrix(g))

    def test_algebra_isomorphism_random_f16(self):
        rng = random.Random(17)
        for _ in range(200):
            f, g = rand_poly(F16, 2, rng), rand_poly(F16, 2, rng)
            assert to_matrix(f.compose(g)) == to_matrix(f) @ to_matrix(g)

    def test_eval_agrees_with_matrix(self):
        rng = random.Random(19)
        exp_coords = F16.coeffs
        for _ in range(50):
            f = rand_poly(F16, 2, rng)
            M = to_matrix(f)
            for a in range(16):
                coords = exp_coords(a)
                out = []
                for i in range(4):
                    acc = 0
                    for j in range(4):
                        acc ^= M.data[i * 4 + j] * coords[j] & 1
                    out.append(acc)
                assert tuple(out) == exp_coords(f.eval_i(a))

    def test_from_matrix_roundtrip(self):
        rng = random.Random(23)
        for field, q0 in ((F16, 2), (F16, 4), (F9, 3), (F8, 2)):
            for _ in range(30):
                f = rand_poly(field, q0, rng)
                assert from_matrix(to_matrix(f), field, q0) == f


def _madd(A, B):
    return A + B


class TestKernelRank:
    def test_identity_full_rank(self):
        assert poly_rank(LinPoly.identity(F16, 2)) == 4

    def test_zero(self):
        assert poly_rank(LinPoly.zero(F16, 2)) == 0

    def test_frobenius_fixed_field(self):
        f = LinPoly(F16, 2, [F16.neg(1), 1, 0, 0])  # x^q - x
        assert poly_kernel(f).dim == 1
        assert sorted(kernel_elements(f)) == [0, 1]

    def test_rank_nullity(self):
        rng = random.Random(29)
        for _ in range(50):
            f = rand_poly(F16, 2, rng)
            assert poly_rank(f) + poly_kernel(f).dim == 4

    def test_kernel_closed(self):
        rng = random.Random(31)
        for _ in range(20):
            f = rand_poly(F9, 3, rng)
            ker = kernel_elements(f)
            for a in ker:
                for b in ker:
                    assert F9.add(a, b) in ker


class TestInvert:
    def test_identity(self):
        x = LinPoly.identity(F4, 2)
        assert invert(x) == x

    def test_scalar(self):
        a = 3
        f = LinPoly(F16, 2, [a, 0, 0, 0])
        assert invert(f).coeffs == (F16.inv(a), 0, 0, 0)

    def test_frobenius_over_fq2(self):
        xq = LinPoly.monomial(F4, 2, 1)
        assert invert(xq) == xq

    def test_not_invertible(self):
        with pytest.raises(NotInvertible):
            invert(LinPoly(F16, 2, [F16.neg(1), 1, 0, 0]))

    def test_roundtrip_random(self):
        rng = random.Random(37)
        x = LinPoly.identity(F16, 2)
        found = 0
        while found < 20:
            f = rand_poly(F16, 2, rng)
            if poly_rank(f) != 4:
                continue
            g = invert(f)
            assert f.compose(g) == x and g.compose(f) == x
            found += 1


class TestSubfieldLinear:
    def test_monomial_q_e(self):
        f = LinPoly.monomial(F16, 2, 2)
        assert is_subfield_linear(f, 2)

    def test_q_not_multiple(self):
        f = LinPoly.monomial(F16, 2, 1)
        assert not is_subfield_linear(f, 2)

    def test_support_0_2(self):
        f = LinPoly(F16, 2, [1, 0, 1, 0])
        assert is_subfield_linear(f, 2)

    def test_bad_divisor(self):
        with pytest.raises(BadDivisor):
            is_subfield_linear(LinPoly.identity(F16, 2), 3)

    def test_support_agrees_with_pointwise(self):
        # exhaustive for m = 2, 10^4 seeded samples for m = 4
        for a in range(4):
            for b in range(4):
                f = LinPoly(F4, 2, [a, b])
                for e in (1, 2):
                    assert is_subfield_linear(f, e) == is_subfield_linear_pointwise(f, e)
        rng = random.Random(41)
        for _ in range(10_000):
            f = rand_poly(F16, 2, rng)
            for e in (1, 2, 4):
                assert is_subfield_linear(f, e) == is_subfield_linear_pointwise(f, e)

    def test_multivariate(self):
        g = MultiLinPoly(F16, 2, [[1, 0, 0, 0], [0, 0, OMEGA, 0]])
        assert is_subfield_linear(g, 2)
        assert is_subfield_linear_pointwise(g, 2)
        g2 = MultiLinPoly(F16, 2, [[1, 0, 0, 0], [0, 1, 0, 0]])
        assert not is_subfield_linear(g2, 2)


class TestMultivariate:
    def test_projection(self):
        x1 = MultiLinPoly.variable(F4, 2, 2, 0)
        assert x1.meval_i([3, 1]) == 3

    def test_mkernel_projection(self):
        x1 = MultiLinPoly.variable(F4, 2, 2, 0)
        assert mkernel(x1).dim == 2  # {0} x F_4 has F_2-dimension 2

    def test_meval_example(self):
        f = MultiLinPoly(F4, 2, [[1, 0], [0, OMEGA]])  # x1 + omega x2^2
        assert f.meval_i([1, 1]) == F4.add(1, OMEGA)

    def test_mcompose_identity(self):
        f = MultiLinPoly(F9, 3, [[1, 2], [0, 1]])
        idt = tuple(MultiLinPoly.variable(F9, 3, 2, j) for j in range(2))
        assert mcompose(f, idt) == f

    def test_mcompose_swap(self):
        x1 = MultiLinPoly.variable(F4, 2, 2, 0)
        swap = (
            MultiLinPoly.variable(F4, 2, 2, 1),
            MultiLinPoly.variable(F4, 2, 2, 0),
        )
        assert mcompose(x1, swap) == MultiLinPoly.variable(F4, 2, 2, 1)

    def test_mcompose_substitution(self):
        # (x1 + x2) o (x1^q, omega x2) = x1^q + omega x2
        f = MultiLinPoly(F4, 2, [[1, 0], [1, 0]])
        phi = (
            MultiLinPoly.variable(F4, 2, 2, 0, i=1),
            MultiLinPoly.variable(F4, 2, 2, 1, coeff=OMEGA),
        )
        out = mcompose(f, phi)
        assert out == MultiLinPoly(F4, 2, [[0, 1], [OMEGA, 0]])

    def test_mcompose_pointwise(self):
        rng = random.Random(43)
        for _ in range(30):
            f = MultiLinPoly(F9, 3, [[rng.randrange(9) for _ in range(2)] for _ in range(2)])
            phi = tuple(
                MultiLinPoly(F9, 3, [[rng.randrange(9) for _ in range(2)] for _ in range(2)])
                for _ in range(2)
            )
            h = mcompose(f, phi)
            for a in product(range(9), repeat=2):
                inner = [p.meval_i(a) for p in phi]
                assert h.meval_i(a) == f.meval_i(inner)

    def test_tuple_invert_identity(self):
        idt = tuple(MultiLinPoly.variable(F4, 2, 3, j) for j in range(3))
        assert mtuple_invert(idt) == idt

    def test_tuple_invert_swap(self):
        swap = (
            MultiLinPoly.variable(F4, 2, 2, 1),
            MultiLinPoly.variable(F4, 2, 2, 0),
        )
        assert mtuple_invert(swap) == swap

    def test_tuple_invert_shear(self):
        # (x1^q, x1 + x2) over F_{q^2} inverts to (x1^q, x2 - x1^q)
        p1 = MultiLinPoly.variable(F4, 2, 2, 0, i=1)
        p2 = MultiLinPoly(F4, 2, [[1, 0], [1, 0]])
        inv = mtuple_invert((p1, p2))
        assert inv[0] == MultiLinPoly.variable(F4, 2, 2, 0, i=1)
        expected = MultiLinPoly(F4, 2, [[0, F4.neg(1)], [1, 0]])
        assert inv[1] == expected
        for j, pj in enumerate((p1, p2)):
            assert mcompose(pj, inv) == MultiLinPoly.variable(F4, 2, 2, j)

    def test_minterpolate_roundtrip(self):
        rng = random.Random(47)
        pts = standard_points(F9, 3, 2)
        for _ in range(20):
            f = MultiLinPoly(F9, 3, [[rng.randrange(9) for _ in range(2)] for _ in range(2)])
            vals = [f.meval_i(p) for p in pts]
            assert minterpolate(F9, 3, 2, vals) == f

    def test_mto_matrix_rank_nullity(self):
        rng = random.Random(53)
        for _ in range(20):
            f = MultiLinPoly(F4, 2, [[rng.randrange(4) for _ in range(2)] for _ in range(2)])
            M = mto_matrix(f)
            assert M.rank() + mkernel(f).dim == 4


class TestTextFormat:
    @given(st.lists(st.integers(0, 15), min_size=4, max_size=4))
    def test_roundtrip_univariate(self, coeffs):
        f = LinPoly(F16, 2, coeffs)
        assert parse_linpoly(F16, 2, format_linpoly(f)) == f

    def test_roundtrip_multivariate(self):
        f = MultiLinPoly(F4, 2, [[1, OMEGA], [0, 3]])
        assert parse_linpoly(F4, 2, format_linpoly(f), nvars=2) == f

    def test_zero(self):
        assert parse_linpoly(F4, 2, "0") == LinPoly.zero(F4, 2)

    def test_spec_shape(self):
        s = format_linpoly(LinPoly(F16, 2, [1, 0, 3, 0]))
        assert s == "1.0.0.0 + 1.1.0.0*X^q2"
