from random import Random

import pytest

from gclin.core import (
    GCAut,
    IsotropicE,
    TwoForm,
    complex_structure,
    direct_sum,
    direct_sum_eigenspace,
    dualize,
    dualize_eigenspace,
    pairing,
    quadratic_form,
    swap_matrix,
    symplectic_structure,
    to_aut,
    to_eigenspace,
    twist,
    twisted_product,
    validate_aut,
    validate_eigenspace,
)
from gclin.fields import QI, QQ, GaussianRational
from gclin.linalg import Matrix, Subspace
from gclin.samples import (
    random_gcs,
    random_maximal_isotropic,
    random_symplectic_form,
)
from gclin.spinor import spinor_from_subspace

ROT = Matrix(QQ, [[0, -1], [1, 0]])
OMEGA2 = TwoForm(Matrix(QQ, [[0, -1], [1, 0]]))


def basis_vec(size, i, field=QQ):
    v = [field.zero] * size
    v[i] = field.one
    return v


class TestPairing:
    def test_vector_against_covector(self):
        # <e1, f1*> = -1/2
        x = basis_vec(4, 0)
        y = basis_vec(4, 2)
        assert pairing(x, y) == QQ.coerce("-1/2")

    def test_vectors_are_isotropic(self):
        assert pairing(basis_vec(4, 0), basis_vec(4, 1)) == 0

    def test_quadratic_form_value(self):
        x = [1, 0, 1, 0]  # e1 + f1*
        assert quadratic_form(x) == QQ.coerce(-1)

    def test_symmetry(self):
        rng = Random(2)
        for _ in range(10):
            x = [rng.randint(-3, 3) for _ in range(6)]
            y = [rng.randint(-3, 3) for _ in range(6)]
            assert pairing(x, y) == pairing(y, x)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            pairing([1, 0], [1, 0, 0, 0])


class TestValidation:
    def test_complex_passes(self):
        assert validate_aut(complex_structure(ROT)).ok

    def test_symplectic_passes(self):
        assert validate_aut(symplectic_structure(OMEGA2)).ok

    def test_non_skew_j2_reports_e6(self):
        j = symplectic_structure(OMEGA2)
        bad = GCAut(j.j1, Matrix(QQ, [[0, 1], [1, 0]]), j.j3, j.j4)
        res = validate_aut(bad)
        assert not res.ok
        assert "e:6" in res.violations

    def test_equations_match_direct_criteria(self):
        # independent oracle: square and Gram preservation on the full matrix
        rng = Random(8)
        for trial in range(60):
            j = random_gcs(rng, 4)
            if trial % 2:
                blocks = list(j.blocks())
                which = rng.randrange(4)
                m = blocks[which].copy()
                m.data[rng.randrange(4)][rng.randrange(4)] += QQ.one
                blocks[which] = m
                j = GCAut(*blocks)
            full = j.full()
            square_ok = full @ full == -Matrix.identity(QQ, 8)
            s = swap_matrix(QQ, 4)
            orth_ok = full.transpose() @ s @ full == s
            assert validate_aut(j).ok == (square_ok and orth_ok)


class TestEigenspaceConversion:
    def test_symplectic_eigenspace_is_graph(self):
        e = to_eigenspace(symplectic_structure(OMEGA2))
        i = GaussianRational(0, 1)
        expected = Subspace.from_spanning(
            QI, 4, [[1, 0, 0, -i], [0, 1, i, 0]]
        )
        assert e.e == expected

    def test_complex_eigenspace(self):
        e = to_eigenspace(complex_structure(ROT))
        i = GaussianRational(0, 1)
        expected = Subspace.from_spanning(
            QI, 4, [[1, -i, 0, 0], [0, 0, 1, -i]]
        )
        assert e.e == expected

    def test_round_trips_random(self):
        rng = Random(3)
        for n in (2, 4, 6):
            for _ in range(6):
                j = random_gcs(rng, n)
                e = to_eigenspace(j)
                assert validate_eigenspace(e).ok
                assert to_aut(e) == j

    def test_invalid_eigenspace_rejected(self):
        # V_C itself is maximally isotropic but equals its conjugate
        n = 2
        rows = [basis_vec(4, 0, QI), basis_vec(4, 1, QI)]
        e = IsotropicE(n, Subspace.from_spanning(QI, 4, rows))
        res = validate_eigenspace(e)
        assert not res.ok and "conjugate-intersection" in res.violations
        with pytest.raises(ValueError):
            to_aut(e)


class TestDuality:
    def test_involution(self):
        rng = Random(4)
        for _ in range(8):
            j = random_gcs(rng, 4)
            assert dualize(dualize(j)) == j

    def test_blocks_swap_and_validity(self):
        j = complex_structure(ROT)
        d = dualize(j)
        assert validate_aut(d).ok
        assert (d.j2, d.j3) == (j.j3, j.j2)
        assert (d.j1, d.j4) == (j.j4, j.j1)

    def test_eigenspace_version_matches(self):
        rng = Random(5)
        for _ in range(6):
            j = random_gcs(rng, 4)
            assert to_eigenspace(dualize(j)) == dualize_eigenspace(to_eigenspace(j))

    def test_dual_eigenspace_involution(self):
        rng = Random(6)
        j = random_gcs(rng, 4)
        e = to_eigenspace(j)
        assert dualize_eigenspace(dualize_eigenspace(e)) == e


class TestTwist:
    def test_twist_fixes_complex(self):
        j = complex_structure(ROT)
        assert twist(j) == j

    def test_twist_negates_symplectic(self):
        assert twist(symplectic_structure(OMEGA2)) == symplectic_structure(
            TwoForm(-OMEGA2.m)
        )

    def test_twist_involutive_and_valid(self):
        rng = Random(9)
        for _ in range(8):
            j = random_gcs(rng, 4)
            t = twist(j)
            assert validate_aut(t).ok
            assert twist(t) == j


class TestDirectSum:
    def test_symplectic_sum_is_block_symplectic(self):
        w1 = random_symplectic_form(Random(1), 2)
        w2 = random_symplectic_form(Random(2), 2)
        total = Matrix.from_blocks(
            QQ,
            [
                [w1.m, Matrix.zero(QQ, 2, 2)],
                [Matrix.zero(QQ, 2, 2), w2.m],
            ],
        )
        assert direct_sum(
            symplectic_structure(w1), symplectic_structure(w2)
        ) == symplectic_structure(TwoForm(total))

    def test_eigenspace_sum_matches(self):
        rng = Random(10)
        a, b = random_gcs(rng, 2), random_gcs(rng, 4)
        lhs = to_eigenspace(direct_sum(a, b))
        rhs = direct_sum_eigenspace(to_eigenspace(a), to_eigenspace(b))
        assert lhs == rhs

    def test_spinor_of_sum_is_product(self):
        rng = Random(11)
        a, b = random_gcs(rng, 2), random_gcs(rng, 2)
        ea, eb = to_eigenspace(a), to_eigenspace(b)
        la = spinor_from_subspace(ea.e).rep
        lb = spinor_from_subspace(eb.e).rep
        # pull back along the two projections: indices shift for the second factor
        from gclin.multivector import Multivector, mask_to_indices

        shifted = Multivector(
            4,
            {
                sum(1 << (i + 2) for i in mask_to_indices(m)): c
                for m, c in lb.terms.items()
            },
        )
        lifted = Multivector(4, dict(la.terms))
        product = lifted.wedge(shifted)
        expected = spinor_from_subspace(to_eigenspace(direct_sum(a, b)).e).rep
        assert product.proportional_to(expected)

    def test_zero_dimensional_identity(self):
        rng = Random(12)
        j = random_gcs(rng, 4)
        zero = GCAut(*(Matrix.zero(QQ, 0, 0) for _ in range(4)))
        assert direct_sum(j, zero) == j

    def test_twisted_product_definition(self):
        rng = Random(13)
        a, b = random_gcs(rng, 2), random_gcs(rng, 2)
        assert twisted_product(a, b) == direct_sum(twist(a), b)
        assert validate_aut(twisted_product(a, b)).ok


class TestEvenDimension:
    def test_odd_dimension_has_no_structure(self):
        rng = Random(14)
        for n in (1, 3):
            for _ in range(50):
                iso = random_maximal_isotropic(rng, n)
                assert not iso.intersect(iso.conjugate()).is_zero()
