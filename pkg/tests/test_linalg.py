import random
from fractions import Fraction as Q

import pytest

from superhc.builders import sl2
from superhc.linalg import (CommutationFailure, IrrationalSpectrum,
                            ScalarMatrix, char_poly, invert, nullspace, rank,
                            rational_roots, simultaneous_eigenspaces,
                            solve_membership, span_basis)


def test_nullspace_identity_is_trivial():
    assert nullspace(ScalarMatrix.identity(2)) == []


def test_nullspace_zero_matrix_is_standard_basis():
    kern = nullspace(ScalarMatrix(2, 2))
    assert kern == [(Q(1), Q(0)), (Q(0), Q(1))]


def test_nullspace_rank_one():
    m = ScalarMatrix.from_rows([[1, 2], [2, 4]])
    kern = nullspace(m)
    assert len(kern) == 1
    # oracle: direct multiplication annihilates the kernel vector
    v = kern[0]
    assert not any(m.apply(v))
    assert v[0] * Q(1) + v[1] * Q(2) == 0


def test_rank_nullity_randomized():
    rng = random.Random(7)
    for _ in range(150):
        n, m = rng.randint(1, 7), rng.randint(1, 7)
        rows = [{j: Q(rng.randint(-2, 2)) for j in range(n)
                 if rng.random() < 0.5} for _ in range(m)]
        rows = [{j: v for j, v in r.items() if v} for r in rows]
        mat = ScalarMatrix(m, n, rows)
        kern = nullspace(mat)
        assert rank(mat) + len(kern) == n
        for v in kern:
            assert not any(mat.apply(v))


def test_solve_membership_trivial_cases():
    basis = [(Q(1), Q(0), Q(2)), (Q(0), Q(1), Q(1))]
    assert solve_membership(basis[0], basis) == (Q(1), Q(0))
    assert solve_membership((Q(0),) * 3, basis) == (Q(0), Q(0))
    assert solve_membership((Q(0), Q(0), Q(1)), basis) is None


def test_solve_membership_roundtrip_randomized():
    rng = random.Random(3)
    for _ in range(150):
        n, k = rng.randint(1, 7), rng.randint(1, 5)
        basis = [tuple(Q(rng.randint(-3, 3)) for _ in range(n))
                 for _ in range(k)]
        coeffs = [Q(rng.randint(-3, 3)) for _ in range(k)]
        v = tuple(sum((c * b[i] for c, b in zip(coeffs, basis)), Q(0))
                  for i in range(n))
        sol = solve_membership(v, basis)
        assert sol is not None
        w = tuple(sum((c * b[i] for c, b in zip(sol, basis)), Q(0))
                  for i in range(n))
        assert w == v


def test_invert_and_char_poly():
    m = ScalarMatrix.from_rows([[2, 1], [1, 1]])
    inv = invert(m)
    assert m.mul(inv) == ScalarMatrix.identity(2)
    # char poly of [[2,1],[1,1]] is x^2 - 3x + 1
    assert char_poly(m) == [Q(1), Q(-3), Q(1)]


def test_rational_roots_full_split():
    # (x-1)(x+2)^2 = x^3 + 3x^2 - 4
    roots, remainder = rational_roots([Q(1), Q(3), Q(0), Q(-4)])
    assert remainder == 0
    assert sorted(roots) == [(Q(-2), 2), (Q(1), 1)]


def test_rational_roots_irrational_remainder():
    roots, remainder = rational_roots([Q(1), Q(0), Q(-2)])  # x^2 - 2
    assert roots == [] and remainder == 2


def test_simultaneous_eigenspaces_identity():
    blocks = simultaneous_eigenspaces([ScalarMatrix.identity(3)])
    assert len(blocks) == 1
    values, basis = blocks[0]
    assert values == (Q(1),) and len(basis) == 3


def test_simultaneous_eigenspaces_diagonal():
    m = ScalarMatrix.from_rows([[1, 0], [0, 2]])
    blocks = simultaneous_eigenspaces([m])
    assert sorted((v[0], len(b)) for v, b in blocks) == [(Q(1), 1), (Q(2), 1)]


def test_simultaneous_eigenspaces_sl2_cartan():
    # ad(h) on sl(2) has eigenvalues -2, 0, 2 with 1-dim blocks; the
    # brute-force oracle is the eigenvector check below
    g = sl2()
    m = g.ad_matrix(g.basis("h"))
    blocks = simultaneous_eigenspaces([m])
    assert sorted(v[0] for v, _ in blocks) == [Q(-2), Q(0), Q(2)]
    for values, basis in blocks:
        assert len(basis) == 1
        v = basis[0]
        assert m.apply(v) == tuple(values[0] * x for x in v)


def test_commutation_failure():
    a = ScalarMatrix.from_rows([[0, 1], [0, 0]])
    b = ScalarMatrix.from_rows([[0, 0], [1, 0]])
    with pytest.raises(CommutationFailure):
        simultaneous_eigenspaces([a, b])


def test_irrational_spectrum():
    m = ScalarMatrix.from_rows([[0, 2], [1, 0]])  # eigenvalues +-sqrt(2)
    with pytest.raises(IrrationalSpectrum):
        simultaneous_eigenspaces([m])


def test_span_basis_deterministic():
    vecs = [(Q(2), Q(4)), (Q(1), Q(2)), (Q(0), Q(1))]
    assert span_basis(vecs) == [(Q(1), Q(0)), (Q(0), Q(1))]


def test_simultaneous_eigenspaces_dimensions_fill_space():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 5)
        diag1 = [Q(rng.randint(-2, 2)) for _ in range(n)]
        diag2 = [Q(rng.randint(-2, 2)) for _ in range(n)]
        m1 = ScalarMatrix.from_rows(
            [[diag1[i] if i == j else 0 for j in range(n)] for i in range(n)])
        m2 = ScalarMatrix.from_rows(
            [[diag2[i] if i == j else 0 for j in range(n)] for i in range(n)])
        blocks = simultaneous_eigenspaces([m1, m2])
        assert sum(len(b) for _, b in blocks) == n
        tuples = [v for v, _ in blocks]
        assert len(set(tuples)) == len(tuples)
