"""Canonical subspaces and the constructive decomposition.

Every valid structure is a B-field transform of a direct sum of a
symplectic and a complex structure.  The symplectic direction is pinned
by the canonical subspace S (the intersection of the vector-part images
of the eigenspace and its conjugate); the complex direction by the
canonical subspace C (the vector parts contained in the eigenspace and
its conjugate).  ``decompose`` realizes the factorization exactly and
``reassemble`` undoes it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    GCAut,
    TwoForm,
    complex_structure,
    conjugate_by_basis,
    direct_sum,
    projection_matrix,
    symplectic_structure,
    to_eigenspace,
    vector_summand,
)
from .fields import QI, QQ
from .linalg import Matrix, Subspace
from .multivector import two_form_coeff
from .spinor import standard_data_for_subspace
from .subspaces import (
    induce_on_quotient,
    induce_on_subspace,
    satisfies_graph_condition,
)
from .transforms import b_transform, classify_type, recover


def canonical_s(j: GCAut) -> Subspace:
    """The maximal subspace carrying a transformed symplectic structure.

    Its complexification is the intersection of the vector-part images
    of the eigenspace and its conjugate; the result is checked to be a
    carrier of a valid induced structure of the expected type.
    """
    n = j.n
    e = to_eigenspace(j).e
    rho = projection_matrix(n, "vector")
    s_c = e.image(rho).intersect(e.conjugate().image(rho))
    s = s_c.real_form()
    ind = induce_on_subspace(j, s)
    if not ind.is_gc:
        raise AssertionError("canonical subspace failed to carry a structure")
    if not classify_type(ind.jw).is_b_symplectic:
        raise AssertionError("canonical subspace is not of transformed symplectic type")
    return s


def canonical_c(j: GCAut):
    """The minimal subspace with a transformed-symplectic quotient.

    Returns (C, complex structure on C).  The restriction of the (1,1)
    block to C squares to -1; the quotient by C carries a valid
    beta-symplectic structure; and C with its complex structure satisfies
    the graph condition.  All three facts are checked.
    """
    n = j.n
    e = to_eigenspace(j).e
    inside = e.intersect(vector_summand(n))
    c_c = inside.sum(inside.conjugate())
    c_rows = [row[:n] for row in c_c.basis.data]
    c = Subspace.from_spanning(QI, n, c_rows).real_form()
    jc_cols = []
    for cr in c.basis.data:
        img = j.j1.apply(cr)
        if not c.contains(img):
            raise AssertionError("canonical subspace is not stable under the (1,1) block")
        jc_cols.append(c.coordinates(img))
    jc = Matrix(QQ, jc_cols, cols=c.dim).transpose()
    if c.dim and jc @ jc != -Matrix.identity(QQ, c.dim):
        raise AssertionError("restricted block is not a complex structure")
    quot = induce_on_quotient(j, c)
    if not quot.is_gc:
        raise AssertionError("quotient by the canonical subspace carries no structure")
    if not classify_type(quot.jw).is_beta_symplectic:
        raise AssertionError("quotient structure is not beta-symplectic")
    if not satisfies_graph_condition(j, c, complex_structure(jc)):
        raise AssertionError("canonical subspace misses the graph condition")
    return c, jc


@dataclass(frozen=True)
class Decomposition:
    """Exact factorization of a structure.

    The carrier splits as s + w; omega is symplectic on s (in the
    reduced-basis coordinates of s), jw is a complex structure on w, and
    b is the two-form on the carrier with

        b_transform(transported direct sum, b) == original structure,

    where the transport is along the basis assembled from s then w.
    """

    s: Subspace
    omega: TwoForm
    w: Subspace
    jw: Matrix
    b: TwoForm


def reassemble(d: Decomposition) -> GCAut:
    ds = direct_sum(symplectic_structure(d.omega), complex_structure(d.jw))
    p = Matrix(QQ, d.s.basis.data + d.w.basis.data, cols=d.s.ambient_dim).transpose()
    return b_transform(conjugate_by_basis(ds, p), d.b)


def decompose(j: GCAut) -> Decomposition:
    """Factor a structure as a B-field transform of symplectic + complex."""
    n = j.n
    e = to_eigenspace(j).e
    u, _ = standard_data_for_subspace(e)
    u_map = two_form_coeff(u).transpose()
    b_r = TwoForm(u_map.real_part())
    omega_map = u_map.imag_part()

    moved = b_transform(j, b_r)
    s = canonical_s(moved)
    s_mat = Matrix(QQ, s.basis.data, cols=n)
    omega_s = TwoForm(s_mat @ omega_map @ s_mat.transpose())
    if not omega_s.m.is_invertible():
        raise AssertionError("real 2-form degenerates on the symplectic part")

    w = Matrix(QQ, [omega_map.apply(sr) for sr in s.basis.data], cols=n).kernel()
    if s.dim + w.dim != n or not s.intersect(w).is_zero():
        raise AssertionError("orthogonal complement does not complete the carrier")

    ind_s = induce_on_subspace(moved, s)
    if ind_s.jw != symplectic_structure(omega_s):
        raise AssertionError("induced structure on the symplectic part is off")
    ind_w = induce_on_subspace(moved, w)
    if not ind_w.is_gc:
        raise AssertionError("complementary subspace carries no structure")
    types = classify_type(ind_w.jw)
    if not types.is_b_complex:
        raise AssertionError("complementary structure is not of transformed complex type")
    if w.dim:
        rec = recover(ind_w.jw)
        jw_mat, b_w = rec.jmat, rec.b
    else:
        jw_mat, b_w = Matrix.zero(QQ, 0, 0), TwoForm(Matrix.zero(QQ, 0, 0))

    p = Matrix(QQ, s.basis.data + w.basis.data, cols=n).transpose()
    p_inv = p.inverse()
    zk = Matrix.zero(QQ, s.dim, s.dim)
    zsw = Matrix.zero(QQ, s.dim, w.dim)
    zws = Matrix.zero(QQ, w.dim, s.dim)
    b_inner = Matrix.from_blocks(QQ, [[zk, zsw], [zws, b_w.m]])
    b_push = p_inv.transpose() @ b_inner @ p_inv
    total = TwoForm(b_push - b_r.m)

    result = Decomposition(s, omega_s, w, jw_mat, total)
    if reassemble(result) != j:
        raise AssertionError("decomposition failed to reassemble the input")
    return result


def canonical_omega(n: int) -> TwoForm:
    """Form with value +1 on (e_i, f_i) pairs, coordinates (e..., f...)."""
    m = Matrix.zero(QQ, 2 * n, 2 * n)
    for i in range(n):
        m.data[n + i][i] = QQ.one
        m.data[i][n + i] = -QQ.one
    return TwoForm(m)


def build_symplectic_with_t(a: Matrix, b: Matrix, c: Matrix):
    """Transform of the canonical symplectic form by the operator T.

    T has blocks [[a, b], [c, a^t]] in the canonical basis; b and c must
    be skew, which makes omega T a two-form.  Returns (structure, omega,
    T).
    """
    n = a.rows
    if b.transpose() != -b or c.transpose() != -c:
        raise ValueError("off-diagonal blocks of T must be skew")
    t = Matrix.from_blocks(QQ, [[a, b], [c, a.transpose()]])
    omega = canonical_omega(n)
    structure = b_transform(symplectic_structure(omega), TwoForm(omega.m @ t))
    return structure, omega, t


def build_subnotquot_example():
    """Dimension-4 fixture: a subspace carrying a structure whose quotient
    does not.

    Carrier basis (p1, q1, p2, q2); the symplectic form pairs p_i with
    q_i, the B-field pairs p1 with p2 and q2 with q1; W is the (p1, q1)
    plane.  Returns (structure, w, omega, b).
    """
    omega = TwoForm(
        Matrix(
            QQ,
            [
                [0, -1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 0, -1],
                [0, 0, 1, 0],
            ],
        )
    )
    b = TwoForm(
        Matrix(
            QQ,
            [
                [0, 0, -1, 0],
                [0, 0, 0, 1],
                [1, 0, 0, 0],
                [0, -1, 0, 0],
            ],
        )
    )
    structure = b_transform(symplectic_structure(omega), b)
    w = Subspace.from_spanning(QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    return structure, w, omega, b


def build_notquot_example():
    """Dimension-8 fixture whose canonical complex part is degenerate.

    The T operator is block-diagonal with a 4 x 4 block A = [[J, I], [0,
    J]], so 1 + T^2 is a nonzero nilpotent and the kernel of 1 + T^2
    meets its image.  Returns (structure, omega, T).
    """
    rot = Matrix(QQ, [[0, 1], [-1, 0]])
    eye = Matrix.identity(QQ, 2)
    z = Matrix.zero(QQ, 2, 2)
    a = Matrix.from_blocks(QQ, [[rot, eye], [z, rot]])
    one_plus_a2 = Matrix.identity(QQ, 4) + a @ a
    expected = Matrix.from_blocks(QQ, [[z, rot.scale(2)], [z, z]])
    if one_plus_a2 != expected:
        raise AssertionError("fixture block 1 + A^2 is off")
    structure, omega, t = build_symplectic_with_t(
        a, Matrix.zero(QQ, 4, 4), Matrix.zero(QQ, 4, 4)
    )
    one_plus_t2 = Matrix.identity(QQ, 8) + t @ t
    ker = one_plus_t2.kernel()
    image = Subspace.from_spanning(QQ, 8, one_plus_t2.transpose().data)
    if ker.intersect(image).is_zero():
        raise AssertionError("fixture kernel misses the image")
    omega_on_ker = TwoForm(
        Matrix(QQ, ker.basis.data, cols=8) @ omega.m @ Matrix(QQ, ker.basis.data, cols=8).transpose()
    )
    if omega_on_ker.m.is_invertible():
        raise AssertionError("form is nondegenerate on the canonical part")
    return structure, omega, t


def build_graphnotsub_example():
    """Dimension-4 fixture: graph condition without a structure on W.

    W is the span of the first two coordinates; T restricts to a complex
    structure on it, but the symplectic form vanishes identically on W.
    Returns (structure, w, k) with k the complex structure on W.
    """
    rot = Matrix(QQ, [[0, 1], [-1, 0]])
    z = Matrix.zero(QQ, 2, 2)
    structure, _, t = build_symplectic_with_t(rot, z, z)
    w = Subspace.from_spanning(QQ, 4, [[1, 0, 0, 0], [0, 1, 0, 0]])
    t_on_w = Matrix(QQ, [[t.data[r][c] for c in range(2)] for r in range(2)])
    return structure, w, complex_structure(t_on_w)
