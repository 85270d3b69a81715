import random
from fractions import Fraction

import pytest

from minsimplex.errors import InputError, InvariantError
from minsimplex.exactla import (
    RationalMatrix,
    nullspace_basis,
    primitive_integer_vector,
    rank,
    rational_from_string,
)

from support import random_rational


def test_rational_from_string():
    assert rational_from_string("3") == 3
    assert rational_from_string("-5/2") == Fraction(-5, 2)
    assert rational_from_string(" 7/14 ") == Fraction(1, 2)
    for bad in ("3.5", "1e3", "", "x", "1/0", "2/"):
        with pytest.raises(InputError):
            rational_from_string(bad)


def test_rank_identity():
    assert rank(RationalMatrix.identity(3)) == 3


def test_rank_zero_matrix():
    assert rank(RationalMatrix.zeros(2, 2)) == 0


def test_rank_three_vectors_in_plane():
    # det of the first two rows is 2*2 - 0*0 = 4 != 0, so rank is at least 2;
    # three vectors in R^2 cannot exceed 2.
    m = RationalMatrix.from_rows([[2, 0], [0, 2], [2, 1]])
    assert rank(m) == 2


def test_rank_rational_entries():
    m = RationalMatrix.from_rows([["1/2", "1/3"], ["3/2", "1"]])
    assert rank(m) == 1


def test_nullspace_identity_empty():
    assert nullspace_basis(RationalMatrix.identity(2)) == []


def test_nullspace_one_dim():
    basis = nullspace_basis(RationalMatrix.from_rows([[1, -1]]))
    assert basis == [(Fraction(1), Fraction(1))]


def test_nullspace_composition_example():
    # columns H2=(2,0), O2=(0,2), H2O=(2,1) over the universe [H, O];
    # by hand: 2a + 2c = 0 and 2b + c = 0 give the direction (1, 1/2, -1).
    m = RationalMatrix.from_rows([[2, 0, 2], [0, 2, 1]])
    basis = nullspace_basis(m)
    assert len(basis) == 1
    v = basis[0]
    direction = (Fraction(1), Fraction(1, 2), Fraction(-1))
    # parallel check: cross-ratios vanish
    assert all(v[i] * direction[j] == v[j] * direction[i] for i in range(3) for j in range(3))
    assert all(x == 0 for x in m.mat_vec(v))


def test_primitive_integer_vector_examples():
    assert primitive_integer_vector([Fraction(1), Fraction(1, 2), Fraction(-1)]) == [2, 1, -2]
    assert primitive_integer_vector([3, 6]) == [1, 2]
    assert primitive_integer_vector([0, -5]) == [0, 1]


def test_primitive_integer_vector_zero_errors():
    with pytest.raises(InvariantError, match="zero vector has no primitive form"):
        primitive_integer_vector([0, 0, 0])


def test_primitive_idempotent():
    rng = random.Random(7)
    for _ in range(50):
        v = [random_rational(rng) for _ in range(rng.randint(1, 5))]
        if all(x == 0 for x in v):
            continue
        p = primitive_integer_vector(v)
        assert primitive_integer_vector(p) == p


def test_rank_invariances_random():
    rng = random.Random(11)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = RationalMatrix.from_rows(
            [[random_rational(rng) for _ in range(cols)] for _ in range(rows)]
        )
        r = rank(m)
        assert r == rank(m.transpose())
        perm = list(range(rows))
        rng.shuffle(perm)
        shuffled = RationalMatrix.from_rows([list(m.row(i)) for i in perm])
        assert r == rank(shuffled)


def test_rank_plus_nullity_and_exact_kernel():
    rng = random.Random(13)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = RationalMatrix.from_rows(
            [[random_rational(rng) for _ in range(cols)] for _ in range(rows)]
        )
        basis = nullspace_basis(m)
        assert rank(m) + len(basis) == cols
        for b in basis:
            assert all(x == 0 for x in m.mat_vec(b))


def test_matrix_shape_validation():
    with pytest.raises(InvariantError):
        RationalMatrix(2, 2, [1, 2, 3])
    with pytest.raises(InvariantError):
        RationalMatrix.from_rows([[1, 2], [3]])


def test_float_entries_refused():
    with pytest.raises(InputError):
        RationalMatrix.from_rows([[0.5, 1]])
