import random

from weakhopf.exactlin import (
    Matrix,
    Q,
    Subspace,
    form_inverse,
    image,
    inverse,
    kernel,
    kron,
    parse_scalar,
    qstr,
    rank,
    row_space,
    rref,
    solve_affine,
)

import pytest


def test_scalar_parsing():
    assert parse_scalar("3/4") == Q(3, 4)
    assert parse_scalar("-7") == Q(-7)
    assert parse_scalar(5) == Q(5)
    assert qstr(Q(-3, 7)) == "-3/7"
    assert qstr(Q(4)) == "4"
    with pytest.raises(ValueError):
        parse_scalar("1/0")
    with pytest.raises(ValueError):
        parse_scalar(True)


def test_rref_rank_one():
    assert rref(Matrix([[1, 2], [2, 4]])) == Matrix([[1, 2]])


def test_rref_identity_fixed():
    assert rref(Matrix.identity(3)) == Matrix.identity(3)


def test_rref_permutation_rows():
    assert rref(Matrix([[0, 1], [1, 0]])) == Matrix.identity(2)


def test_rref_idempotent_random():
    rng = random.Random(7)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = Matrix([[Q(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)])
        r = rref(m)
        assert rref(r) == r
        assert row_space(m) == row_space(r)


def test_solve_affine_identity():
    particular, ker = solve_affine(Matrix.identity(2), (Q(3), Q(5)))
    assert particular == (Q(3), Q(5))
    assert ker.dim == 0


def test_solve_affine_underdetermined():
    particular, ker = solve_affine(Matrix([[1, 1]]), (Q(2),))
    assert particular == (Q(2), Q(0))
    assert ker.dim == 1
    assert ker.contains((Q(1), Q(-1)))


def test_solve_affine_inconsistent():
    assert solve_affine(Matrix([[1], [1]]), (Q(1), Q(2))) is None


def test_form_inverse_identity():
    assert form_inverse(Matrix.identity(4)) == Matrix.identity(4)


def test_form_inverse_degenerate():
    assert form_inverse(Matrix([[1, 1], [1, 1]])) is None


def test_form_inverse_two_sided():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = Matrix([[Q(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        p = form_inverse(m)
        if p is None:
            assert rank(m) < n
        else:
            assert m * p == Matrix.identity(n)
            assert p * m == Matrix.identity(n)


def test_kron_identity():
    assert kron(Matrix.identity(2), Matrix.identity(3)) == Matrix.identity(6)


def test_kron_zero():
    a = Matrix([[1, 2], [3, 4]])
    assert kron(a, Matrix.zero(2, 2)).is_zero()


def test_kron_scalar():
    assert kron(Matrix([[0, 1], [1, 0]]), Matrix([[2]])) == Matrix([[0, 2], [2, 0]])


def test_kron_mixed_product():
    rng = random.Random(3)
    for _ in range(10):
        a = Matrix([[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
        b = Matrix([[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)])
        c = Matrix([[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
        d = Matrix([[Q(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)])
        assert kron(a * c, b * d) == kron(a, b) * kron(c, d)


def test_kron_associative():
    rng = random.Random(5)
    a = Matrix([[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
    b = Matrix([[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
    c = Matrix([[Q(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)])
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


def test_subspace_canonical_equality():
    rng = random.Random(13)
    for _ in range(40):
        n = rng.randint(1, 5)
        k = rng.randint(1, n)
        vecs = [
            tuple(Q(rng.randint(-2, 2)) for _ in range(n)) for _ in range(k)
        ]
        s1 = Subspace.from_spanning(vecs, n)
        # scramble the spanning set: scale, permute, add multiples
        mixed = [tuple(Q(2) * x for x in v) for v in vecs]
        if len(vecs) >= 2:
            mixed.append(tuple(a + b for a, b in zip(vecs[0], vecs[1])))
        rng.shuffle(mixed)
        s2 = Subspace.from_spanning(mixed, n)
        assert s1 == s2
        for v in vecs:
            assert s1.contains(v)


def test_subspace_intersection_and_sum():
    s1 = Subspace.from_spanning([(1, 0, 0), (0, 1, 0)], 3)
    s2 = Subspace.from_spanning([(0, 1, 0), (0, 0, 1)], 3)
    inter = s1.intersect(s2)
    assert inter.dim == 1 and inter.contains((0, 1, 0))
    assert s1.add(s2) == Subspace.full(3)


def test_kernel_image_dims():
    m = Matrix([[1, 2, 3], [2, 4, 6]])
    assert kernel(m).dim == 2
    assert image(m).dim == 1
    assert inverse(Matrix([[1, 2], [2, 4]])) is None


def test_form_inverse_of_wedge_pairing():
    # Gram matrix of the counit pairing between the two factors of the
    # triangular catalog instance inverts onto its unit-coproduct tensor
    gram = Matrix([[1, -1, 0], [0, 1, 0], [0, 0, 1]])
    assert form_inverse(gram) == Matrix([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
