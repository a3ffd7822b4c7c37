import random

import pytest

from crcodes.field import GF
from crcodes.linalg import MatrixGF, gram, kernel, matmul, rref, transpose

from helpers import oracle_ops


def _random_matrix(rng, f, rows, cols):
    return MatrixGF.from_rows(
        f, [[rng.randrange(f.q) for _ in range(cols)] for _ in range(rows)]
    )


def test_from_rows_validation():
    f = GF.of(3)
    with pytest.raises(ValueError):
        MatrixGF.from_rows(f, [[0, 1], [0, 1, 2]])
    with pytest.raises(ValueError):
        MatrixGF.from_rows(f, [[0, 3]])
    with pytest.raises(ValueError):
        MatrixGF.from_rows(f, [[0, -1]])


def test_accessors():
    f = GF.of(5)
    m = MatrixGF.from_rows(f, [[1, 2, 3], [4, 0, 1]])
    assert m.at(1, 0) == 4
    assert m.row(0) == (1, 2, 3)
    assert m.row_lists() == [[1, 2, 3], [4, 0, 1]]
    assert not m.is_zero()
    assert MatrixGF.from_rows(f, [[0, 0]]).is_zero()


def test_transpose_involution():
    rng = random.Random(1)
    f = GF.of(4)
    m = _random_matrix(rng, f, 3, 5)
    assert transpose(transpose(m)) == m
    assert transpose(m).at(2, 1) == m.at(1, 2)


def test_matmul_matches_oracle():
    rng = random.Random(2)
    add, mul = oracle_ops(9)
    f = GF.of(9)
    for _ in range(10):
        a = _random_matrix(rng, f, 2, 3)
        b = _random_matrix(rng, f, 3, 4)
        c = matmul(a, b)
        for i in range(2):
            for j in range(4):
                acc = 0
                for l in range(3):
                    acc = add(acc, mul(a.at(i, l), b.at(l, j)))
                assert c.at(i, j) == acc


def test_gram_is_symmetric():
    rng = random.Random(3)
    f = GF.of(3)
    g = _random_matrix(rng, f, 3, 6)
    assert gram(g) == transpose(gram(g))


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_rref_properties(q):
    rng = random.Random(q)
    f = GF.of(q)
    for _ in range(20):
        m = _random_matrix(rng, f, rng.randrange(1, 5), rng.randrange(1, 7))
        r, rank, pivots = rref(m)
        assert len(pivots) == rank
        # pivot columns carry a single 1
        for i, c in enumerate(pivots):
            col = [r.at(j, c) for j in range(r.rows)]
            assert col[i] == 1 and sum(1 for x in col if x) == 1
        # idempotent
        r2, rank2, pivots2 = rref(r)
        assert (r2, rank2, pivots2) == (r, rank, pivots)
        # row space is preserved: stacking changes nothing
        stacked = MatrixGF.from_rows(f, m.row_lists() + r.row_lists())
        assert rref(stacked)[1] == rank


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_kernel_is_orthogonal_complement(q):
    rng = random.Random(10 + q)
    f = GF.of(q)
    for _ in range(20):
        m = _random_matrix(rng, f, rng.randrange(1, 4), rng.randrange(2, 7))
        ker = kernel(m)
        _, rank, _ = rref(m)
        assert ker.rows == m.cols - rank
        if ker.rows:
            assert matmul(m, transpose(ker)).is_zero()
            # kernel basis itself has full rank
            assert rref(ker)[1] == ker.rows
