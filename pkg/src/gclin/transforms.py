"""B-field and beta-field transforms and structure-type detection.

A two-form B acts through the unipotent block matrix [[1,0],[B,1]] and a
bivector beta through [[1,beta],[0,1]]; both are orthogonal for the
standard pairing, so conjugation by them moves one valid structure to
another.  Types are read off the blocks (j2 = 0, j2 invertible, ...) and
independently cross-checked against the eigenspace criteria.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    BiVector,
    GCAut,
    IsotropicE,
    TwoForm,
    complex_structure,
    covector_summand,
    projection_matrix,
    symplectic_structure,
    to_eigenspace,
    validate_aut,
    vector_summand,
)
from .fields import QI, QQ, GaussianRational
from .linalg import Matrix
from .multivector import Multivector, two_form_from_coeff
from .spinor import SpinorLine, annihilator_subspace


def _b_matrix(b: TwoForm) -> Matrix:
    n = b.n
    one = Matrix.identity(QQ, n)
    z = Matrix.zero(QQ, n, n)
    return Matrix.from_blocks(QQ, [[one, z], [b.m, one]])


def _beta_matrix(beta: BiVector) -> Matrix:
    n = beta.n
    one = Matrix.identity(QQ, n)
    z = Matrix.zero(QQ, n, n)
    return Matrix.from_blocks(QQ, [[one, beta.m], [z, one]])


def b_transform(j: GCAut, b: TwoForm) -> GCAut:
    if b.n != j.n:
        raise ValueError("two-form dimension mismatch")
    m = _b_matrix(b)
    return GCAut.from_full(m @ j.full() @ _b_matrix(TwoForm(-b.m)))


def beta_transform(j: GCAut, beta: BiVector) -> GCAut:
    if beta.n != j.n:
        raise ValueError("bivector dimension mismatch")
    m = _beta_matrix(beta)
    return GCAut.from_full(m @ j.full() @ _beta_matrix(BiVector(-beta.m)))


def b_transform_eigenspace(e: IsotropicE, b: TwoForm) -> IsotropicE:
    return IsotropicE(e.n, e.e.image(_b_matrix(b).to_gaussian()))


def beta_transform_eigenspace(e: IsotropicE, beta: BiVector) -> IsotropicE:
    return IsotropicE(e.n, e.e.image(_beta_matrix(beta).to_gaussian()))


@dataclass(frozen=True)
class StructureType:
    is_complex: bool
    is_b_complex: bool
    is_beta_complex: bool
    is_symplectic: bool
    is_b_symplectic: bool
    is_beta_symplectic: bool


def classify_type(j: GCAut) -> StructureType:
    """Block-level type flags, cross-checked against eigenspace criteria."""
    n = j.n
    flags = StructureType(
        is_complex=j.j2.is_zero() and j.j3.is_zero(),
        is_b_complex=j.j2.is_zero(),
        is_beta_complex=j.j3.is_zero(),
        is_symplectic=j.j1.is_zero(),
        is_b_symplectic=j.j2.is_invertible(),
        is_beta_symplectic=j.j3.is_invertible(),
    )

    e = to_eigenspace(j).e
    ebar = e.conjugate()
    rho = projection_matrix(n, "vector")
    rho_star = projection_matrix(n, "covector")
    b_complex_e = e.image(rho).intersect(ebar.image(rho)).is_zero()
    beta_complex_e = e.image(rho_star).intersect(ebar.image(rho_star)).is_zero()
    b_symplectic_e = e.intersect(covector_summand(n)).is_zero()
    beta_symplectic_e = e.intersect(vector_summand(n)).is_zero()
    if (b_complex_e, beta_complex_e, b_symplectic_e, beta_symplectic_e) != (
        flags.is_b_complex,
        flags.is_beta_complex,
        flags.is_b_symplectic,
        flags.is_beta_symplectic,
    ):
        raise AssertionError("block criteria disagree with eigenspace criteria")
    if flags.is_complex != (flags.is_b_complex and flags.is_beta_complex):
        raise AssertionError("complex flag inconsistent")
    if flags.is_symplectic and not (flags.is_b_symplectic and flags.is_beta_symplectic):
        raise AssertionError("symplectic flag inconsistent")
    return flags


@dataclass(frozen=True)
class RecoveredData:
    """Classical data whose transform reproduces a structure.

    kind is 'complex' (fields jmat, b) or 'symplectic' (fields omega, b).
    Reassembly by b_transform is exact at the automorphism level; in the
    complex case the two-form b itself is only pinned by the fixed
    formula, since part of it is invisible to the automorphism.
    """

    kind: str
    b: TwoForm
    jmat: Optional[Matrix] = None
    omega: Optional[TwoForm] = None


def recover(j: GCAut) -> RecoveredData:
    """Undo a B-field transform of a complex or symplectic structure."""
    types = classify_type(j)
    half = QQ.coerce("1/2")
    if types.is_b_symplectic:
        omega = TwoForm(-j.j2.inverse())
        b = TwoForm(-j.j2.inverse() @ j.j1)
        result = RecoveredData("symplectic", b, omega=omega)
        if b_transform(symplectic_structure(omega), b) != j:
            raise AssertionError("symplectic recovery failed to reassemble")
        return result
    if types.is_b_complex:
        jmat = j.j1
        b = TwoForm(-(j.j3 @ j.j1).scale(half))
        result = RecoveredData("complex", b, jmat=jmat)
        if b_transform(complex_structure(jmat), b) != j:
            raise AssertionError("complex recovery failed to reassemble")
        return result
    raise ValueError("structure is neither B-complex nor B-symplectic")


def assemble_sum_transform(
    omega: TwoForm,
    jmat: Matrix,
    b1: Matrix,
    b2: Matrix,
    b3: Matrix,
    b4: Matrix,
):
    """B-field transform of (symplectic on S) + (complex on C), assembled.

    Returns the automorphism in block-explicit form together with the
    representative spinor exp(-B + i pr_S* omega) ^ f_1 ^ ... ^ f_k, and
    checks that the two describe the same structure.  Coordinates on
    V = S + C are (s, c, s*, c*).
    """
    s, c = omega.n, jmat.rows
    if jmat @ jmat != -Matrix.identity(QQ, c):
        raise ValueError("complex factor does not square to -1")
    if b1.transpose() != -b1 or b4.transpose() != -b4 or b3 != -b2.transpose():
        raise ValueError("B blocks are not skew-compatible")
    w = omega.m
    w_inv = w.inverse()
    jt = jmat.transpose()
    zsc = Matrix.zero(QQ, s, c)
    zcs = Matrix.zero(QQ, c, s)
    zcc = Matrix.zero(QQ, c, c)
    full = Matrix.from_blocks(
        QQ,
        [
            [w_inv @ b1, w_inv @ b2, -w_inv, zsc],
            [zcs, jmat, zcs, zcc],
            [w + b1 @ w_inv @ b1, b2 @ jmat + b1 @ w_inv @ b2, -(b1 @ w_inv), zsc],
            [
                b3 @ w_inv @ b1 + jt @ b3,
                b4 @ jmat + b3 @ w_inv @ b2 + jt @ b4,
                -(b3 @ w_inv),
                -jt,
            ],
        ],
    )
    aut = GCAut.from_full(full)
    check = validate_aut(aut)
    if not check:
        raise AssertionError(f"assembled automorphism invalid: {check.violations}")

    n = s + c
    b_map = Matrix.from_blocks(QQ, [[b1, b2], [b3, b4]]).to_gaussian()
    omega_big = Matrix.zero(QI, n, n)
    for a in range(s):
        for bcol in range(s):
            omega_big.data[a][bcol] = QI.coerce(w.data[a][bcol])
    i_scalar = GaussianRational(0, 1)
    u_map = -b_map + omega_big.scale(i_scalar)
    u = two_form_from_coeff(u_map.transpose())
    anti = (jt.to_gaussian() + Matrix.identity(QI, c).scale(i_scalar)).kernel()
    factors = []
    for row in anti.basis.data:
        coords = [QI.zero] * n
        for idx, val in enumerate(row):
            coords[s + idx] = val
        factors.append(Multivector.covector(n, coords))
    phi = u.exp()
    for f in factors:
        phi = phi.wedge(f)
    line = SpinorLine.of(phi)
    if annihilator_subspace(line.rep) != to_eigenspace(aut).e:
        raise AssertionError("matrix form and spinor describe different structures")
    return aut, line


def t_operator(omega: TwoForm, b: TwoForm) -> Matrix:
    """T = omega^-1 B for a nondegenerate form omega."""
    if omega.n != b.n:
        raise ValueError("dimension mismatch")
    return omega.m.inverse() @ b.m


def satisfies_star(omega: TwoForm, t: Matrix) -> bool:
    """omega(u, Tv) = omega(Tu, v), i.e. omega T is again skew."""
    return t.transpose() @ omega.m == omega.m @ t


def analyze_t(omega: TwoForm, t: Matrix) -> StructureType:
    """Type facts for the transform with B = omega T, via the T criteria.

    Each T-side criterion (T = 0; i not an eigenvalue of T; T^2 = -1) is
    checked directly, then asserted against classify_type of the
    assembled transform.
    """
    if not satisfies_star(omega, t):
        raise ValueError("T is not omega-symmetric")
    n = omega.n
    symplectic_t = t.is_zero()
    shifted = t.to_gaussian() - Matrix.identity(QI, n).scale(GaussianRational(0, 1))
    beta_symplectic_t = shifted.kernel().is_zero()
    beta_complex_t = (t @ t) == -Matrix.identity(QQ, n)
    assembled = b_transform(symplectic_structure(omega), TwoForm(omega.m @ t))
    types = classify_type(assembled)
    if (types.is_symplectic, types.is_beta_symplectic, types.is_beta_complex) != (
        symplectic_t,
        beta_symplectic_t,
        beta_complex_t,
    ):
        raise AssertionError("T criteria disagree with the assembled structure")
    return types
