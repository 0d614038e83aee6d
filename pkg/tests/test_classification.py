from random import Random

from gclin.classification import (
    build_graphnotsub_example,
    build_notquot_example,
    build_subnotquot_example,
    build_symplectic_with_t,
    canonical_c,
    canonical_s,
    decompose,
    reassemble,
)
from gclin.core import (
    TwoForm,
    complex_structure,
    direct_sum,
    dualize,
    symplectic_structure,
)
from gclin.fields import QQ
from gclin.linalg import Matrix, Subspace
from gclin.samples import (
    random_complex_matrix,
    random_gcs,
    random_subspace,
    random_symplectic_form,
    random_two_form,
)
from gclin.subspaces import induce_on_quotient, induce_on_subspace
from gclin.transforms import b_transform, classify_type

ROT = Matrix(QQ, [[0, -1], [1, 0]])
OMEGA2 = TwoForm(Matrix(QQ, [[0, -1], [1, 0]]))


class TestCanonicalS:
    def test_symplectic_gives_everything(self):
        assert canonical_s(symplectic_structure(OMEGA2)) == Subspace.full(QQ, 2)

    def test_complex_gives_nothing(self):
        assert canonical_s(complex_structure(ROT)) == Subspace.zero(QQ, 2)

    def test_sum_gives_symplectic_summand(self):
        rng = Random(1)
        j = direct_sum(
            symplectic_structure(random_symplectic_form(rng, 2)),
            complex_structure(random_complex_matrix(rng, 2)),
        )
        assert canonical_s(j) == Subspace.from_spanning(
            QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]]
        )

    def test_invariant_under_field_transforms(self):
        rng = Random(2)
        for _ in range(8):
            j = random_gcs(rng, 4)
            s = canonical_s(j)
            for _ in range(4):
                assert canonical_s(b_transform(j, random_two_form(rng, 4))) == s

    def test_maximality_probes(self):
        # every sampled subspace carrying a transformed-symplectic induced
        # structure sits inside the canonical one
        rng = Random(3)
        for _ in range(6):
            j = random_gcs(rng, 4)
            s = canonical_s(j)
            for _ in range(15):
                w = random_subspace(rng, 4)
                ind = induce_on_subspace(j, w)
                if ind.is_gc and classify_type(ind.jw).is_b_symplectic:
                    assert s.contains_subspace(w)


class TestCanonicalC:
    def test_complex_gives_everything(self):
        c, jc = canonical_c(complex_structure(ROT))
        assert c == Subspace.full(QQ, 2)
        assert jc == ROT

    def test_symplectic_gives_nothing(self):
        c, jc = canonical_c(symplectic_structure(OMEGA2))
        assert c.is_zero()

    def test_restricted_block_squares_to_minus_one(self):
        rng = Random(4)
        for _ in range(8):
            j = random_gcs(rng, 4)
            c, jc = canonical_c(j)
            if c.dim:
                assert jc @ jc == -Matrix.identity(QQ, c.dim)

    def test_duality_with_canonical_s(self):
        # the complex part corresponds to the annihilator of the dual
        # structure's symplectic part
        rng = Random(5)
        for _ in range(8):
            j = random_gcs(rng, 4)
            c, _ = canonical_c(j)
            s_dual = canonical_s(dualize(j))
            assert c.annihilator() == s_dual

    def test_invariant_under_bivector_transforms(self):
        from gclin.samples import random_bivector
        from gclin.transforms import beta_transform

        rng = Random(6)
        for _ in range(6):
            j = random_gcs(rng, 4)
            c, _ = canonical_c(j)
            for _ in range(3):
                moved = beta_transform(j, random_bivector(rng, 4))
                assert canonical_c(moved)[0] == c


class TestDecompose:
    def test_pure_symplectic(self):
        d = decompose(symplectic_structure(OMEGA2))
        assert d.s == Subspace.full(QQ, 2)
        assert d.w.is_zero()
        assert d.b.m.is_zero()
        assert d.omega.m == OMEGA2.m

    def test_pure_complex(self):
        d = decompose(complex_structure(ROT))
        assert d.s.is_zero()
        assert d.w == Subspace.full(QQ, 2)
        assert reassemble(d) == complex_structure(ROT)

    def test_round_trips(self):
        rng = Random(7)
        for n in (2, 4, 6):
            for _ in range(5):
                j = random_gcs(rng, n)
                d = decompose(j)
                assert reassemble(d) == j
                assert d.s.dim + d.w.dim == n
                assert d.omega.m.is_invertible()
                assert d.s.dim % 2 == 0 and d.w.dim % 2 == 0

    def test_already_split_input_keeps_symplectic_part(self):
        rng = Random(8)
        for _ in range(5):
            sym = symplectic_structure(random_symplectic_form(rng, 2))
            cpx = complex_structure(random_complex_matrix(rng, 2))
            j = b_transform(direct_sum(sym, cpx), random_two_form(rng, 4))
            d = decompose(j)
            assert d.s == Subspace.from_spanning(QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
            assert reassemble(d) == j

    def test_fixture_is_all_symplectic(self):
        structure, _, _, _ = build_subnotquot_example()
        d = decompose(structure)
        assert d.s == Subspace.full(QQ, 4)
        assert d.w.is_zero()


class TestFixtures:
    def test_notquot_kernel_facts(self):
        structure, omega, t = build_notquot_example()
        one_plus = Matrix.identity(QQ, 8) + t @ t
        ker = one_plus.kernel()
        image = Subspace.from_spanning(QQ, 8, one_plus.transpose().data)
        assert ker.dim == 4
        assert not ker.intersect(image).is_zero()
        # kernel and image are orthogonal for the symplectic form
        for x in ker.basis.data:
            for y in image.basis.data:
                assert omega.value(x, y) == 0
        assert not omega.restrict(ker.basis.data).m.is_invertible()
        c, _ = canonical_c(structure)
        assert c == ker
        assert not induce_on_subspace(structure, c).is_gc
        quot = induce_on_quotient(structure, c)
        assert quot.is_gc and classify_type(quot.jw).is_beta_symplectic

    def test_graphnotsub_consistency(self):
        structure, w, k = build_graphnotsub_example()
        assert classify_type(structure).is_b_symplectic
        assert classify_type(k).is_complex

    def test_symplectic_with_t_builder(self):
        rng = Random(9)
        from gclin.samples import random_matrix, random_skew

        a = random_matrix(rng, 2, 2)
        structure, omega, t = build_symplectic_with_t(
            a, random_skew(rng, 2), random_skew(rng, 2)
        )
        from gclin.transforms import satisfies_star

        assert satisfies_star(omega, t)
        assert classify_type(structure).is_b_symplectic


class TestEvenDimensions:
    def test_parts_have_even_dimension(self):
        rng = Random(10)
        for _ in range(6):
            j = random_gcs(rng, 4)
            assert canonical_s(j).dim % 2 == 0
            assert canonical_c(j)[0].dim % 2 == 0
