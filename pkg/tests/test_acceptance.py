"""Acceptance criteria, one test per criterion, exact tolerances.

Each test prints a single pass/fail line with its wall time; run with
`pytest tests/test_acceptance.py -s` (or scripts/run_acceptance.py) to see
them.  Runtime budgets are part of the criteria and are asserted.
"""

import random
import time
from itertools import product

from divrank.field_tower import field_of_order
from divrank.linpoly import LinPoly, to_matrix
from divrank.matspace import GFMatrix, GFSubspace
from divrank import constructions as cons
from divrank import qsystem as qs
from divrank.recognize import arises_over
from divrank.rmcode import (
    MatrixCode,
    VectorCode,
    code_equal,
    divisibility_index,
    em_embed,
    find_field_in_idealizer,
    is_nondegenerate,
    left_idealizer,
    poly_code_to_matrix_code,
    vector_weight,
    weight_spectrum,
)

F2 = field_of_order(2)
F4 = field_of_order(4)
F8 = field_of_order(8)
F9 = field_of_order(9)
F16 = field_of_order(16)


class _Budget:
    def __init__(self, number, name, seconds):
        self.number = number
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[{status}] criterion {self.number:02d} {self.name} ({elapsed:.1f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"criterion {self.number} exceeded its {self.seconds}s budget "
                f"({elapsed:.1f}s)"
            )
        return False


def test_criterion_01_em_divisibility():
    """Every codeword of an F_4 -> F_2 embedding has even rank."""
    with _Budget(1, "em divisibility", 10):
        rng = random.Random(101)
        for trial in range(50):
            m = rng.randrange(1, 3)
            n = rng.randrange(1, 5)
            dim = rng.randrange(1, min(2, m * n) + 1)
            code = cons.random_matrix_code(F4, m, n, dim, seed=trial)
            em = em_embed(code, 2)
            for M in em.members():
                assert M.rank() % 2 == 0


def test_criterion_02_round_trip_recognition():
    """Scrambled embeddings are recognized with a verified witness."""
    with _Budget(2, "round-trip recognition", 60):
        for seed in range(100):
            k = 1 + seed % 2
            small = cons.random_fqm_poly_code(F16, 4, k, seed=seed,
                                              want_invertible=True)
            small_mat = poly_code_to_matrix_code(small)
            em = em_embed(small_mat, 2)
            scrambled, X, Y = cons.random_equivalence(em, seed=seed + 10_000)
            res = arises_over(scrambled, 2, seed=seed)
            assert res.arises is True, (seed, res.reason)
            w = res.witness
            assert code_equal(
                MatrixCode.from_span(w.reembedded.field, 4, 4, w.reembedded.basis),
                MatrixCode.from_span(w.canonical_matrix.field, 4, 4,
                                     w.canonical_matrix.basis),
            )


def test_criterion_03_counterexample_reproduction():
    """The (2,3,3,2,3) family: [8,2] code, weights in {2,6,8}, non-arising."""
    with _Budget(3, "counterexample reproduction", 60):
        params = cons.CounterexampleParams(2, 3, 3, 2, 3)
        code = cons.counterexample_code(params, validate=False)
        assert code.field.order == 2**9 and code.q0 == 2
        assert code.k == 2 and code.n == 8
        spec = weight_spectrum(code)  # full enumeration of 2^18 codewords
        assert spec.cardinality == 2**18
        assert set(spec.nonzero_weights()) <= {2, 6, 8}
        assert spec.divisibility_index() == 2
        assert is_nondegenerate(code)
        res = arises_over(code, 2)
        assert res.arises is False
        assert res.reason == "e does not divide m"


def test_criterion_04_intersection_law():
    """dim(U meet point) in {0,2,6} over all 513 projective points."""
    with _Budget(4, "intersection law", 10):
        params = cons.CounterexampleParams(2, 3, 3, 2, 3)
        system = cons.counterexample_system(params, validate=False)
        profile = cons.intersection_profile(system)
        assert len(profile) == 2**9 + 1
        assert set(profile.values()) <= {0, 2, 6}
        assert sum(2**d - 1 for d in profile.values()) == 2**8 - 1


def test_criterion_05_direction_conformance():
    """Every F_16 q-polynomial and 10^4 random F_8 tables classify legally."""
    with _Budget(5, "direction conformance", 300):
        for coeffs in product(range(16), repeat=4):
            qs.verify_direction_theorem(F16, LinPoly(F16, 2, coeffs))
        rng = random.Random(105)
        for _ in range(10_000):
            table = [rng.randrange(8) for _ in range(8)]
            qs.verify_direction_theorem(F8, table)


def test_criterion_06_duality_identity():
    """10^3 random (U, W) pairs satisfy the dimension identity exactly."""
    with _Budget(6, "duality identity", 10):
        rng = random.Random(106)
        for amb in (qs.ExtensionAmbient(F8, 2, 2), qs.ExtensionAmbient(F4, 2, 3)):
            field, k = amb.field, amb.k
            for _ in range(500):
                nv = rng.randrange(0, amb.fq_dim)
                U = amb.subspace_from_vectors(
                    [[rng.randrange(field.order) for _ in range(k)]
                     for _ in range(nv)]
                )
                wdim = rng.randrange(0, k + 1)
                W = GFSubspace.from_span(
                    field, k,
                    [[rng.randrange(field.order) for _ in range(k)]
                     for _ in range(wdim)],
                )
                lhs, rhs = qs.check_weight_dual(amb, U, W)
                assert lhs == rhs


def _random_nondegenerate_vector_code(field, q0, k, n, seed):
    rng = random.Random(seed)
    while True:
        G = GFMatrix(field, k, n,
                     [rng.randrange(field.order) for _ in range(k * n)])
        try:
            code = VectorCode(field, q0, G)
        except Exception:
            continue
        if is_nondegenerate(code):
            return code


def test_criterion_07_weight_correspondence():
    """System weights equal direct weights on every codeword of 20 codes."""
    with _Budget(7, "weight correspondence", 60):
        F256 = field_of_order(256)
        profiles = (
            [(F256, 2, 2, 5)] * 2   # 2^16 codewords, at the cap
            + [(F16, 2, 4, 4)] * 2  # 2^16 codewords
            + [(F16, 2, 2, 4)] * 4
            + [(F8, 2, 2, 3)] * 4
            + [(F8, 2, 2, 5)] * 2
            + [(F9, 3, 2, 3)] * 4
            + [(F4, 2, 3, 4)] * 2
        )
        for idx, (field, q0, k, n) in enumerate(profiles):
            code = _random_nondegenerate_vector_code(field, q0, k, n, seed=700 + idx)
            assert code.cardinality <= 2**16
            system = qs.system_of(code)
            order = field.order
            G = code.G.data
            for x in product(range(order), repeat=k):
                if not any(x):
                    continue
                xg = []
                for j in range(n):
                    acc = 0
                    for i in range(k):
                        acc = field.add(acc, field.mul(x[i], G[i * n + j]))
                    xg.append(acc)
                assert vector_weight(field, q0, xg) == qs.weight_via_system(x, system)


def test_criterion_08_block_repetition_idealizer():
    """L(diag-repetition) is exactly the diagonal copy of L(C')."""
    with _Budget(8, "block repetition idealizer", 60):
        rng = random.Random(108)
        done = 0
        attempt = 0
        while done < 50:
            attempt += 1
            inv = cons.random_invertible(F2, 2, rng)
            dim = rng.randrange(1, 3)
            mats = [inv]
            if dim == 2:
                other = GFMatrix(F2, 2, 2, [rng.randrange(2) for _ in range(4)])
                try:
                    code = MatrixCode(F2, 2, 2, [inv, other])
                except Exception:
                    continue
            else:
                code = MatrixCode(F2, 2, 2, mats)
            rep = cons.block_repetition(code, 2)
            inner = left_idealizer(code)
            outer = left_idealizer(rep)
            expected = GFSubspace.from_span(
                F2, 16,
                [cons.block_repetition(
                    MatrixCode(F2, 2, 2, [A], check=False), 2).basis[0].vec()
                 for A in inner],
            )
            actual = GFSubspace.from_span(F2, 16, [M.vec() for M in outer])
            assert expected == actual
            done += 1


def test_criterion_09_algebra_isomorphism():
    """The matrix bridge respects composition."""
    with _Budget(9, "algebra isomorphism", 10):
        rng = random.Random(109)
        for _ in range(1000):
            f = LinPoly(F16, 2, [rng.randrange(16) for _ in range(4)])
            g = LinPoly(F16, 2, [rng.randrange(16) for _ in range(4)])
            assert to_matrix(f.compose(g)) == to_matrix(f) @ to_matrix(g)
        for fc in product(range(4), repeat=2):
            for gc in product(range(4), repeat=2):
                f, g = LinPoly(F4, 2, fc), LinPoly(F4, 2, gc)
                assert to_matrix(f.compose(g)) == to_matrix(f) @ to_matrix(g)


def test_criterion_10_alternating_obstruction():
    """The 3x3 alternating space is 2-divisible but carries no F_8 subring."""
    with _Budget(10, "alternating obstruction", 10):
        alt = cons.alternating_code(3, F2)
        assert weight_spectrum(alt).as_dict() == {0: 1, 2: 7}
        assert divisibility_index(alt) == 2
        search = find_field_in_idealizer(alt, 3)
        assert search.element is None
        assert search.exhaustive
