from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from gclin.fields import QI, QQ, GaussianRational
from gclin.linalg import Matrix, Subspace


def laplace_det(rows):
    """Independent determinant oracle: cofactor expansion over exact ints."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for c in range(n):
        if rows[0][c] == 0:
            continue
        minor = [r[:c] + r[c + 1 :] for r in rows[1:]]
        term = rows[0][c] * laplace_det(minor)
        total += term if c % 2 == 0 else -term
    return total


def rank_by_minors(rows, cols_count):
    """Largest k with a nonzero k x k minor."""
    m = len(rows)
    for k in range(min(m, cols_count), 0, -1):
        for rsel in combinations(range(m), k):
            for csel in combinations(range(cols_count), k):
                sub = [[rows[r][c] for c in csel] for r in rsel]
                if laplace_det(sub) != 0:
                    return k
    return 0


def test_rref_identity():
    m = Matrix.identity(QQ, 3)
    red, pivots = m.rref()
    assert red == m
    assert pivots == [0, 1, 2]


def test_rref_dependent_rows():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    red, pivots = m.rref()
    assert red.data[0] == [QQ.one, QQ.coerce(2)]
    assert red.data[1] == [QQ.zero, QQ.zero]
    assert len(pivots) == 1


def test_rank_matches_minor_expansion_oracle():
    rng = Random(20240)
    for _ in range(25):
        rows = [[rng.randint(-3, 3) for _ in range(7)] for _ in range(5)]
        expected = rank_by_minors(rows, 7)
        assert Matrix(QQ, rows).rank() == expected


def test_rref_idempotent():
    rng = Random(7)
    for _ in range(20):
        m = Matrix(QQ, [[rng.randint(-4, 4) for _ in range(5)] for _ in range(4)])
        red, _ = m.rref()
        again, _ = red.rref()
        assert again == red


def test_kernel_zero_map():
    assert Matrix.zero(QQ, 2, 2).kernel() == Subspace.full(QQ, 2)


def test_kernel_identity():
    assert Matrix.identity(QQ, 2).kernel() == Subspace.zero(QQ, 2)


def test_kernel_gaussian_example():
    # [[1, i], [0, 0]] kills exactly the line through (-i, 1) = span (1, i)
    i = GaussianRational(0, 1)
    m = Matrix(QI, [[1, i], [0, 0]])
    ker = m.kernel()
    assert ker.dim == 1
    assert ker.contains([-i, QI.one])
    assert ker.basis.data[0] == [QI.one, i]


def test_kernel_dimension_rule():
    rng = Random(99)
    for _ in range(20):
        m = Matrix(QQ, [[rng.randint(-2, 2) for _ in range(6)] for _ in range(4)])
        assert m.kernel().dim == 6 - m.rank()


def test_annihilator_coordinate_example():
    w = Subspace.from_spanning(QQ, 2, [[1, 0]])
    assert w.annihilator() == Subspace.from_spanning(QQ, 2, [[0, 1]])


def test_grassmann_dimension_identity():
    rng = Random(5)
    for _ in range(30):
        a = _random_subspace(rng, 6)
        b = _random_subspace(rng, 6)
        assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim


def test_conjugate_example():
    i = GaussianRational(0, 1)
    s = Subspace.from_spanning(QI, 2, [[QI.one, i]])
    assert s.conjugate() == Subspace.from_spanning(QI, 2, [[QI.one, -i]])


def test_double_annihilator_is_identity():
    rng = Random(31)
    for _ in range(20):
        a = _random_subspace(rng, 5)
        assert a.annihilator().annihilator() == a


def test_real_iff_conjugation_stable():
    rng = Random(13)
    for _ in range(20):
        real = _random_subspace(rng, 5)
        lifted = real.to_gaussian()
        assert lifted.is_real()
        assert lifted.real_form() == real
    # a genuinely complex line is not conjugation stable
    i = GaussianRational(0, 1)
    line = Subspace.from_spanning(QI, 2, [[QI.one, i]])
    assert not line.is_real()
    with pytest.raises(ValueError):
        line.real_form()


def test_complement_is_deterministic_and_complementary():
    rng = Random(77)
    for _ in range(20):
        a = _random_subspace(rng, 6)
        c = a.complement()
        assert a.intersect(c).is_zero()
        assert a.sum(c) == Subspace.full(QQ, 6)
        assert c == a.complement()


def test_intersect_rejects_ambient_mismatch():
    a = Subspace.full(QQ, 2)
    b = Subspace.full(QQ, 3)
    with pytest.raises(ValueError):
        a.intersect(b)


def test_solve_consistent_and_inconsistent():
    m = Matrix(QQ, [[1, 2], [2, 4]])
    assert m.solve([1, 2]) is not None
    assert m.solve([1, 3]) is None
    sol = m.solve([3, 6])
    assert m.apply(sol) == [QQ.coerce(3), QQ.coerce(6)]


def test_inverse_round_trip():
    rng = Random(4)
    for _ in range(10):
        while True:
            m = Matrix(QQ, [[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
            if m.is_invertible():
                break
        assert m @ m.inverse() == Matrix.identity(QQ, 4)


def _random_subspace(rng, n):
    k = rng.randint(0, n)
    return Subspace.from_spanning(
        QQ, n, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(k)]
    )


small_entries = st.integers(min_value=-3, max_value=3)


@st.composite
def subspaces(draw, n=4):
    k = draw(st.integers(min_value=0, max_value=n))
    rows = draw(
        st.lists(
            st.lists(small_entries, min_size=n, max_size=n), min_size=k, max_size=k
        )
    )
    return Subspace.from_spanning(QQ, n, rows)


@settings(max_examples=40, deadline=None)
@given(subspaces())
def test_hyp_double_annihilator(a):
    assert a.annihilator().annihilator() == a


@settings(max_examples=40, deadline=None)
@given(subspaces(), subspaces())
def test_hyp_grassmann(a, b):
    assert a.dim + b.dim == a.sum(b).dim + a.intersect(b).dim


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(small_entries, min_size=5, max_size=5), min_size=3, max_size=3))
def test_hyp_rref_idempotent(rows):
    red, _ = Matrix(QQ, rows).rref()
    assert red.rref()[0] == red


@settings(max_examples=40, deadline=None)
@given(subspaces())
def test_hyp_sum_with_complement_full(a):
    assert a.sum(a.complement()) == Subspace.full(QQ, 4)
