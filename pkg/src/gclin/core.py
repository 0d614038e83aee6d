"""Generalized complex structures on a real vector space V.

A structure is handled in two interchangeable forms:

* ``GCAut``: the orthogonal automorphism of V + V* with square -1, stored
  as four rational n x n blocks (j1: V->V, j2: V*->V, j3: V->V*,
  j4: V*->V*).  Coordinates on V + V* are ordered (v_1..v_n, f_1..f_n),
  and elements are column vectors.
* ``IsotropicE``: the +i eigenspace, a maximally isotropic Q(i)-subspace
  E of dimension n in the complexified V + V* with E meeting its
  conjugate only in 0.

The third form, a pure spinor line, is derived on demand by the spinor
module rather than stored.

All two-forms B (and bivectors beta) are identified with the linear maps
v -> iota_v B they induce; as matrices these are skew.  The bilinear form
pairing against the coefficient matrix is recovered via transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import QI, QQ, GaussianRational, rational
from .linalg import Matrix, Subspace, vec_dot
from .multivector import Multivector, two_form_coeff, two_form_from_coeff

# Block equations characterizing a valid automorphism, used as violation
# labels in validation results and CLI errors.
EQUATION_LABELS = {
    "e:1": "J1^2 + J2*J3 = -1",
    "e:2": "J1*J2 + J2*J4 = 0",
    "e:3": "J3*J1 + J4*J3 = 0",
    "e:4": "J4^2 + J3*J2 = -1",
    "e:5": "J4 = -J1^*",
    "e:6": "skewness of J2",
    "e:7": "skewness of J3",
}


def pairing(x, y):
    """Standard pairing <v+f, w+g> = -1/2 (f(w) + g(v)) on V + V*.

    Inputs are coordinate vectors of even length 2n over Q or Q(i).
    """
    if len(x) != len(y) or len(x) % 2:
        raise ValueError("pairing needs two vectors of equal even length")
    n = len(x) // 2
    half = rational("1/2")
    s = vec_dot(x[n:], y[:n]) + vec_dot(y[n:], x[:n])
    return s * -half


def quadratic_form(x):
    """Q(v+f) = -f(v); equals pairing(x, x)."""
    return pairing(x, x)


def swap_matrix(field, n) -> Matrix:
    """The coordinate swap tau on V + V* (and the pairing Gram up to -1/2)."""
    z = Matrix.zero(field, n, n)
    i = Matrix.identity(field, n)
    return Matrix.from_blocks(field, [[z, i], [i, z]])


@dataclass(frozen=True)
class TwoForm:
    """Skew map V -> V* induced by an element of Lambda^2 V*."""

    m: Matrix

    def __post_init__(self):
        if not self.m.is_skew():
            raise ValueError("two-form matrix must be skew")

    @property
    def n(self) -> int:
        return self.m.rows

    @staticmethod
    def zero(n: int) -> "TwoForm":
        return TwoForm(Matrix.zero(QQ, n, n))

    def value(self, u, v):
        """The bilinear value B(u, v) = (iota_u B)(v)."""
        return vec_dot(self.m.apply(u), v)

    def restrict(self, basis_rows) -> "TwoForm":
        """Pullback along the inclusion of the span of the given basis."""
        w = Matrix(self.m.field, basis_rows, cols=self.m.cols)
        return TwoForm(w @ self.m @ w.transpose())

    def to_multivector(self) -> Multivector:
        # map matrix and coefficient matrix differ by a transpose
        return two_form_from_coeff(self.m.transpose().to_gaussian())

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.m + other.m)

    def __neg__(self) -> "TwoForm":
        return TwoForm(-self.m)


@dataclass(frozen=True)
class BiVector:
    """Skew map V* -> V induced by an element of Lambda^2 V."""

    m: Matrix

    def __post_init__(self):
        if not self.m.is_skew():
            raise ValueError("bivector matrix must be skew")

    @property
    def n(self) -> int:
        return self.m.rows

    @staticmethod
    def zero(n: int) -> "BiVector":
        return BiVector(Matrix.zero(QQ, n, n))


def two_form_from_multivector(mv: Multivector) -> TwoForm:
    coeff = two_form_coeff(mv)
    if not coeff.is_real():
        raise ValueError("two-form has non-real coefficients")
    return TwoForm(coeff.transpose().real_part())


def complex_two_form_map(mv: Multivector) -> Matrix:
    """Map matrix of a possibly complex 2-form multivector."""
    return two_form_coeff(mv).transpose()


class GCAut:
    """Automorphism form of a generalized complex structure."""

    __slots__ = ("n", "j1", "j2", "j3", "j4")

    def __init__(self, j1: Matrix, j2: Matrix, j3: Matrix, j4: Matrix):
        n = j1.rows
        for blk in (j1, j2, j3, j4):
            if blk.rows != n or blk.cols != n or blk.field is not QQ:
                raise ValueError("blocks must be rational n x n matrices")
        self.n = n
        self.j1, self.j2, self.j3, self.j4 = j1, j2, j3, j4

    @staticmethod
    def from_full(full: Matrix) -> "GCAut":
        if full.rows != full.cols or full.rows % 2:
            raise ValueError("full matrix must be 2n x 2n")
        n = full.rows // 2
        return GCAut(
            full.block(0, n, 0, n),
            full.block(0, n, n, 2 * n),
            full.block(n, 2 * n, 0, n),
            full.block(n, 2 * n, n, 2 * n),
        )

    def full(self) -> Matrix:
        return Matrix.from_blocks(QQ, [[self.j1, self.j2], [self.j3, self.j4]])

    def blocks(self):
        return self.j1, self.j2, self.j3, self.j4

    def __eq__(self, other):
        if not isinstance(other, GCAut):
            return NotImplemented
        return self.n == other.n and self.blocks() == other.blocks()

    def __hash__(self):
        return hash(self.blocks())

    def __repr__(self):
        return f"GCAut(n={self.n})"


@dataclass(frozen=True)
class IsotropicE:
    """Eigenspace form: E inside the complexified V + V*."""

    n: int
    e: Subspace

    def __post_init__(self):
        if self.e.field is not QI or self.e.ambient_dim != 2 * self.n:
            raise ValueError("E must be a Q(i) subspace of dimension-2n ambient")


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    violations: tuple

    def __bool__(self):
        return self.ok


def validate_aut(j: GCAut) -> ValidationResult:
    """Check the seven block equations; cross-check the matrix criteria.

    The direct criteria (square is -1, pairing preserved) are recomputed
    independently and must agree with the equation list.
    """
    j1, j2, j3, j4 = j.blocks()
    n = j.n
    minus_id = -Matrix.identity(QQ, n)
    violations = []
    if j1 @ j1 + j2 @ j3 != minus_id:
        violations.append("e:1")
    if not (j1 @ j2 + j2 @ j4).is_zero():
        violations.append("e:2")
    if not (j3 @ j1 + j4 @ j3).is_zero():
        violations.append("e:3")
    if j4 @ j4 + j3 @ j2 != minus_id:
        violations.append("e:4")
    if j4 != -j1.transpose():
        violations.append("e:5")
    if not j2.is_skew():
        violations.append("e:6")
    if not j3.is_skew():
        violations.append("e:7")

    full = j.full()
    square_ok = (full @ full) == -Matrix.identity(QQ, 2 * n)
    s = swap_matrix(QQ, n)
    orth_ok = (full.transpose() @ s @ full) == s
    direct_ok = square_ok and orth_ok
    if direct_ok != (not violations):
        raise AssertionError("equation list disagrees with the direct criteria")
    return ValidationResult(not violations, tuple(violations))


def validate_eigenspace(e: IsotropicE) -> ValidationResult:
    violations = []
    if e.e.dim != e.n:
        violations.append("dim")
    rows = e.e.basis.data
    if any(pairing(x, y) for i, x in enumerate(rows) for y in rows[i:]):
        violations.append("isotropy")
    if not e.e.intersect(e.e.conjugate()).is_zero():
        violations.append("conjugate-intersection")
    return ValidationResult(not violations, tuple(violations))


def to_eigenspace(j: GCAut) -> IsotropicE:
    """The +i eigenspace of the complexified automorphism."""
    check = validate_aut(j)
    if not check:
        raise ValueError(f"invalid automorphism: {', '.join(check.violations)}")
    full = j.full().to_gaussian()
    shifted = full - Matrix.identity(QI, 2 * j.n).scale(GaussianRational(0, 1))
    e = IsotropicE(j.n, shifted.kernel())
    res = validate_eigenspace(e)
    if not res:
        raise AssertionError(f"eigenspace failed validation: {res.violations}")
    return e


def to_aut(e: IsotropicE) -> GCAut:
    """The real automorphism acting as +i on E and -i on the conjugate.

    Realness of the result is asserted, not assumed.
    """
    res = validate_eigenspace(e)
    if not res:
        raise ValueError(f"invalid eigenspace: {', '.join(res.violations)}")
    n = e.n
    cols = [row[:] for row in e.e.basis.data]
    cols += [row[:] for row in e.e.conjugate().basis.data]
    p = Matrix(QI, cols, cols=2 * n).transpose()
    i_scalar = GaussianRational(0, 1)
    d = Matrix.zero(QI, 2 * n, 2 * n)
    for k in range(n):
        d.data[k][k] = i_scalar
    for k in range(n, 2 * n):
        d.data[k][k] = -i_scalar
    full = p @ d @ p.inverse()
    if not full.is_real():
        raise AssertionError("reconstructed automorphism is not real")
    j = GCAut.from_full(full.real_part())
    check = validate_aut(j)
    if not check:
        raise AssertionError(f"reconstructed automorphism invalid: {check.violations}")
    return j


def complex_structure(jmat: Matrix) -> GCAut:
    """Structure induced by a complex structure J on V."""
    if jmat @ jmat != -Matrix.identity(QQ, jmat.rows):
        raise ValueError("J does not square to -1")
    n = jmat.rows
    z = Matrix.zero(QQ, n, n)
    return GCAut(jmat, z, z, -jmat.transpose())


def symplectic_structure(omega: TwoForm) -> GCAut:
    """Structure induced by a symplectic form (invertible skew map V -> V*)."""
    if not omega.m.is_invertible():
        raise ValueError("symplectic form must be nondegenerate")
    n = omega.n
    z = Matrix.zero(QQ, n, n)
    return GCAut(z, -omega.m.inverse(), omega.m, z)


def dualize(j: GCAut) -> GCAut:
    """Transport to the dual space through the summand swap tau."""
    return GCAut(j.j4, j.j3, j.j2, j.j1)


def dualize_eigenspace(e: IsotropicE) -> IsotropicE:
    tau = swap_matrix(QI, e.n)
    return IsotropicE(e.n, e.e.image(tau))


def twist(j: GCAut) -> GCAut:
    """Flip the signs of the off-diagonal blocks."""
    return GCAut(j.j1, -j.j2, -j.j3, j.j4)


def _interleave(n_a: int, n_b: int, field) -> Matrix:
    """Reordering (u, u*, v, v*) -> (u, v, u*, v*) as a permutation matrix."""
    size = 2 * (n_a + n_b)
    m = Matrix.zero(field, size, size)
    # positions in the source vector
    for k in range(n_a):
        m.data[k][k] = field.one  # u
        m.data[n_a + n_b + k][n_a + k] = field.one  # u*
    for k in range(n_b):
        m.data[n_a + k][2 * n_a + k] = field.one  # v
        m.data[n_a + n_b + n_a + k][2 * n_a + n_b + k] = field.one  # v*
    return m


def direct_sum(a: GCAut, b: GCAut) -> GCAut:
    """Structure on U + V with coordinates (u, v, u*, v*)."""

    def byblock(x: Matrix, y: Matrix) -> Matrix:
        za = Matrix.zero(QQ, x.rows, y.cols)
        zb = Matrix.zero(QQ, y.rows, x.cols)
        return Matrix.from_blocks(QQ, [[x, za], [zb, y]])

    return GCAut(
        byblock(a.j1, b.j1),
        byblock(a.j2, b.j2),
        byblock(a.j3, b.j3),
        byblock(a.j4, b.j4),
    )


def direct_sum_eigenspace(a: IsotropicE, b: IsotropicE) -> IsotropicE:
    nu = _interleave(a.n, b.n, QI)
    rows = []
    for row in a.e.basis.data:
        src = row[: a.n] + row[a.n :] + [QI.zero] * (2 * b.n)
        rows.append(nu.apply(src))
    for row in b.e.basis.data:
        src = [QI.zero] * (2 * a.n) + row[: b.n] + row[b.n :]
        rows.append(nu.apply(src))
    return IsotropicE(a.n + b.n, Subspace.from_spanning(QI, 2 * (a.n + b.n), rows))


def twisted_product(a: GCAut, b: GCAut) -> GCAut:
    """Direct sum of the twist of the first factor with the second."""
    return direct_sum(twist(a), b)


def vector_summand(n: int) -> Subspace:
    """The copy of the complexified V inside V + V* (covector part zero)."""
    rows = []
    for i in range(n):
        v = [QI.zero] * (2 * n)
        v[i] = QI.one
        rows.append(v)
    return Subspace.from_spanning(QI, 2 * n, rows)


def covector_summand(n: int) -> Subspace:
    rows = []
    for i in range(n):
        v = [QI.zero] * (2 * n)
        v[n + i] = QI.one
        rows.append(v)
    return Subspace.from_spanning(QI, 2 * n, rows)


def projection_matrix(n: int, which: str) -> Matrix:
    """Coordinate projection of V + V* onto V ('vector') or V* ('covector')."""
    m = Matrix.zero(QI, n, 2 * n)
    off = 0 if which == "vector" else n
    for i in range(n):
        m.data[i][off + i] = QI.one
    return m


def conjugate_by_basis(j: GCAut, p: Matrix) -> GCAut:
    """Transport j through the invertible map p: source -> target.

    Covectors move by the inverse transpose, so the conjugation is by
    diag(p, (p^T)^-1).
    """
    if not p.is_invertible():
        raise ValueError("change of basis must be invertible")
    n = p.rows
    z = Matrix.zero(QQ, n, n)
    big = Matrix.from_blocks(QQ, [[p, z], [z, p.transpose().inverse()]])
    return GCAut.from_full(big @ j.full() @ big.inverse())
