"""Induced structures on subspaces and quotients, and subspace classes.

Subspaces W of the carrier V are rational subspaces; the induced
eigenspace on W comes from intersecting E with W_C + V_C* and restricting
covectors, the quotient version dually from V_C + Ann(W_C).  Both always
have the expected dimension; whether they define a structure on W (resp.
V/W) is exactly the conjugate-intersection test, and a nonzero witness is
kept when it fails.

Coordinates on W are the coefficients in the reduced-echelon basis of W;
coordinates on V/W are the images of the non-pivot coordinate vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import (
    BiVector,
    GCAut,
    IsotropicE,
    conjugate_by_basis,
    direct_sum,
    to_aut,
    to_eigenspace,
    twisted_product,
    validate_aut,
)
from .fields import QI, QQ
from .linalg import Matrix, Subspace, vec_dot
from .multivector import Multivector, two_form_coeff, two_form_from_coeff
from .spinor import (
    SpinorLine,
    StandardForm,
    annihilator_subspace,
    standard_data_for_subspace,
)
from .transforms import beta_transform, classify_type, recover


@dataclass(frozen=True)
class InducedStructure:
    """Induced eigenspace on a subspace or quotient, with its verdict."""

    ew: Subspace
    is_gc: bool
    jw: Optional[GCAut]
    witness: Optional[tuple]


def _finish_induced(dim_target: int, rows) -> InducedStructure:
    ew = Subspace.from_spanning(QI, 2 * dim_target, rows)
    if ew.dim != dim_target:
        raise AssertionError("induced subspace has wrong dimension")
    bad = ew.intersect(ew.conjugate())
    if bad.is_zero():
        jw = to_aut(IsotropicE(dim_target, ew))
        return InducedStructure(ew, True, jw, None)
    return InducedStructure(ew, False, None, tuple(bad.basis.data[0]))


def induce_on_subspace(j: GCAut, w: Subspace) -> InducedStructure:
    """Structure induced on W: restrict covectors of E over points of W."""
    n = j.n
    if w.ambient_dim != n or w.field is not QQ:
        raise ValueError("W must be a rational subspace of the carrier")
    e = to_eigenspace(j).e
    w_rows = [[QI.coerce(x) for x in row] for row in w.basis.data]
    allowed = [row + [QI.zero] * n for row in w_rows]
    for i in range(n):
        vec = [QI.zero] * (2 * n)
        vec[n + i] = QI.one
        allowed.append(vec)
    window = Subspace.from_spanning(QI, 2 * n, allowed)
    cut = e.intersect(window)
    rows = []
    for vec in cut.basis.data:
        v, f = vec[:n], vec[n:]
        coords = [v[p] for p in w.pivots]
        restricted = [vec_dot(f, wr) for wr in w_rows]
        rows.append(coords + restricted)
    return _finish_induced(w.dim, rows)


def induce_on_quotient(j: GCAut, w: Subspace) -> InducedStructure:
    """Structure induced on V/W: keep covectors annihilating W."""
    n = j.n
    if w.ambient_dim != n or w.field is not QQ:
        raise ValueError("W must be a rational subspace of the carrier")
    e = to_eigenspace(j).e
    ann_w = w.annihilator().to_gaussian()
    allowed = []
    for i in range(n):
        vec = [QI.zero] * (2 * n)
        vec[i] = QI.one
        allowed.append(vec)
    for row in ann_w.basis.data:
        allowed.append([QI.zero] * n + list(row))
    window = Subspace.from_spanning(QI, 2 * n, allowed)
    cut = e.intersect(window)
    free = [c for c in range(n) if c not in w.pivots]
    w_c = w.to_gaussian()
    rows = []
    for vec in cut.basis.data:
        v, f = vec[:n], vec[n:]
        v_red = w_c.reduce(v)
        rows.append([v_red[c] for c in free] + [f[c] for c in free])
    return _finish_induced(n - w.dim, rows)


def restrict_spinor(j: GCAut, w: Subspace):
    """Adapted factorization of the ambient spinor and its restriction.

    Returns (sf, l, line_w): sf = exp(u) ^ f_1 ... f_k with the last k - l
    factors annihilating rho(E) + W_C, and line_w the spinor line of the
    induced structure, exp(u|_W) ^ f_1|_W ... f_l|_W.
    """
    n = j.n
    e = to_eigenspace(j).e
    u, _ = standard_data_for_subspace(e)

    proj_rows = [row[:n] for row in e.basis.data]
    rho_e = Subspace.from_spanning(QI, n, proj_rows)
    phi_span = rho_e.annihilator()
    w_ci = w.to_gaussian()
    deep = rho_e.sum(w_ci).annihilator()
    ordered = deep.basis_rows()
    keep = Subspace.from_spanning(QI, n, ordered)
    lead = []
    for row in phi_span.basis.data:
        trial = Subspace.from_spanning(QI, n, ordered + lead + [list(row)])
        if trial.dim > keep.dim + len(lead):
            lead.append(list(row))
    factor_rows = lead + ordered
    l = len(lead)
    if len(factor_rows) != phi_span.dim:
        raise AssertionError("adapted basis has wrong size")
    factors = tuple(Multivector.covector(n, row) for row in factor_rows)
    sf = StandardForm(QI.one, u, factors)

    m = w.dim
    w_rows = [[QI.coerce(x) for x in row] for row in w.basis.data]
    wmat = Matrix(QI, w_rows, cols=n)
    u_w = two_form_from_coeff(wmat @ two_form_coeff(u) @ wmat.transpose())
    phi_w = u_w.exp()
    for row in factor_rows[:l]:
        pulled = [vec_dot(row, wr) for wr in w_rows]
        phi_w = phi_w.wedge(Multivector.covector(m, pulled))
    if phi_w.is_zero():
        raise AssertionError("restricted spinor vanished")
    line_w = SpinorLine.of(phi_w)
    if annihilator_subspace(line_w.rep) != induce_on_subspace(j, w).ew:
        raise AssertionError("restricted spinor does not represent the induced structure")
    return sf, l, line_w


def _graph_subspace(w: Subspace) -> Subspace:
    """Graph of the inclusion of W into V, inside W + V (W coordinates first)."""
    m, n = w.dim, w.ambient_dim
    rows = []
    for a, wr in enumerate(w.basis.data):
        row = [QQ.zero] * m + list(wr)
        row[a] = QQ.one
        rows.append(row)
    return Subspace.from_spanning(QQ, m + n, rows)


def generalized_isotropic_witness(j: GCAut, w: Subspace):
    """None if J(W) lies inside W + Ann(W); else an escaping generator."""
    ann = w.annihilator()
    n = j.n
    for wr in w.basis.data:
        if not w.contains(j.j1.apply(wr)) or not ann.contains(j.j3.apply(wr)):
            return list(wr) + [QQ.zero] * n
    return None


def generalized_coisotropic_witness(j: GCAut, w: Subspace):
    """None if J(Ann(W)) lies inside W + Ann(W); else an escaping generator."""
    ann = w.annihilator()
    n = j.n
    for f in ann.basis.data:
        if not w.contains(j.j2.apply(f)) or not ann.contains(j.j4.apply(f)):
            return [QQ.zero] * n + list(f)
    return None


def is_generalized_isotropic(j: GCAut, w: Subspace) -> bool:
    """J(W) lies inside W + Ann(W)."""
    return generalized_isotropic_witness(j, w) is None


def is_generalized_coisotropic(j: GCAut, w: Subspace) -> bool:
    """J(Ann(W)) lies inside W + Ann(W)."""
    return generalized_coisotropic_witness(j, w) is None


def is_generalized_lagrangian(j: GCAut, w: Subspace) -> bool:
    return is_generalized_isotropic(j, w) and is_generalized_coisotropic(j, w)


def satisfies_graph_condition(j: GCAut, w: Subspace, k: GCAut) -> bool:
    """Graph of W in V generalized isotropic for the twisted product.

    Evaluated twice: through the block equations (K1 agrees with J1 on W,
    K3 agrees with the restriction of J3) and through the explicit graph
    subspace; the two verdicts must coincide.
    """
    if k.n != w.dim:
        raise ValueError("structure on W has wrong dimension")
    by_blocks = True
    for a, wr in enumerate(w.basis.data):
        j1w = j.j1.apply(wr)
        if not w.contains(j1w):
            by_blocks = False
            break
        unit = [QQ.one if x == a else QQ.zero for x in range(w.dim)]
        if w.coordinates(j1w) != k.j1.apply(unit):
            by_blocks = False
            break
        j3w = j.j3.apply(wr)
        restricted = [vec_dot(j3w, other) for other in w.basis.data]
        if restricted != k.j3.apply(unit):
            by_blocks = False
            break

    tp = twisted_product(k, j)
    by_graph = is_generalized_isotropic(tp, _graph_subspace(w))
    if by_blocks != by_graph:
        raise AssertionError("block and graph evaluations disagree")
    return by_graph


def beta_between(j: GCAut, j_alt: GCAut) -> BiVector:
    """The bivector moving j to j_alt when only the (1,2) blocks differ.

    Normalized so that j1 composed with the bivector is skew; existence
    requires beta to annihilate j3 on both sides.
    """
    if (j.j1, j.j3, j.j4) != (j_alt.j1, j_alt.j3, j_alt.j4):
        raise ValueError("structures differ outside the (1,2) block")
    half = QQ.coerce("1/2")
    beta_m = (j.j1 @ (j_alt.j2 - j.j2)).scale(half)
    if beta_m.transpose() != -beta_m:
        raise ValueError("no skew bivector connects the structures")
    if not (j.j1 @ beta_m).is_skew():
        raise AssertionError("normalization lost: j1 * beta not skew")
    beta = BiVector(beta_m)
    if beta_transform(j, beta) != j_alt:
        raise ValueError("no bivector transforms the first structure into the second")
    return beta


def _stable_pair_span(w: Subspace, n_comp: Subspace) -> Subspace:
    """W + Ann(N) inside V + V* (rational coordinates)."""
    n = w.ambient_dim
    rows = [list(wr) + [QQ.zero] * n for wr in w.basis.data]
    for f in n_comp.annihilator().basis.data:
        rows.append([QQ.zero] * n + list(f))
    return Subspace.from_spanning(QQ, 2 * n, rows)


def verify_split(j: GCAut, w: Subspace, n_comp: Subspace) -> bool:
    """V = W + N and W + Ann(N) stable under the automorphism."""
    n = j.n
    if w.ambient_dim != n or n_comp.ambient_dim != n:
        raise ValueError("subspaces must live in the carrier")
    if w.dim + n_comp.dim != n or not w.intersect(n_comp).is_zero():
        return False
    span = _stable_pair_span(w, n_comp)
    full = j.full()
    return all(span.contains(full.apply(row)) for row in span.basis.data)


def _induced_on_summand(j: GCAut, w: Subspace, n_comp: Subspace) -> GCAut:
    """psi (J restricted to W + Ann(N)) psi^-1 on W + W*."""
    n = j.n
    m = w.dim
    ann_n = n_comp.annihilator()
    basis_rows = [list(wr) + [QQ.zero] * n for wr in w.basis.data]
    basis_rows += [[QQ.zero] * n + list(f) for f in ann_n.basis.data]
    basis = Matrix(QQ, basis_rows, cols=2 * n).transpose()
    images = []
    full = j.full()
    for row in basis_rows:
        img = full.apply(row)
        combo = basis.solve(img)
        if combo is None:
            raise ValueError("subspace pair is not stable under the structure")
        images.append(combo)
    inner = Matrix(QQ, images, cols=2 * m).transpose()
    gram = Matrix(
        QQ,
        [[vec_dot(f, wr) for f in ann_n.basis.data] for wr in w.basis.data],
        cols=m,
    )
    z = Matrix.zero(QQ, m, m)
    psi = Matrix.from_blocks(QQ, [[Matrix.identity(QQ, m), z], [z, gram]])
    return GCAut.from_full(psi @ inner @ psi.inverse())


def split_induced(j: GCAut, w: Subspace, n_comp: Subspace):
    """Structures induced on both summands of a verified splitting."""
    if not verify_split(j, w, n_comp):
        raise ValueError("subspace pair does not split the structure")
    jw = _induced_on_summand(j, w, n_comp)
    jn = _induced_on_summand(j, n_comp, w)
    for part in (jw, jn):
        check = validate_aut(part)
        if not check:
            raise AssertionError(f"summand structure invalid: {check.violations}")
    if jw != induce_on_subspace(j, w).jw:
        raise AssertionError("split structure disagrees with the induced one")
    p = Matrix(QQ, w.basis.data + n_comp.basis.data, cols=j.n).transpose()
    if conjugate_by_basis(direct_sum(jw, jn), p) != j:
        raise AssertionError("summand structures do not reassemble the ambient one")
    return jw, jn


def find_split_complement(j: GCAut, w: Subspace) -> Optional[Subspace]:
    """A complement exhibiting W as split, for transformed classical types.

    Symplectic-with-B: the orthogonal complement for the recovered form
    is the only candidate.  Complex-with-B: solve the linear system for a
    J-equivariant complement correction that is B-orthogonal to W.
    """
    types = classify_type(j)
    n = j.n
    if types.is_b_symplectic:
        data = recover(j)
        rows = [data.omega.m.apply(wr) for wr in w.basis.data]
        cand = Matrix(QQ, rows, cols=n).kernel()
        return cand if verify_split(j, w, cand) else None
    if types.is_b_complex:
        data = recover(j)
        jm = data.jmat
        if not all(w.contains(jm.apply(wr)) for wr in w.basis.data):
            return None
        comp0 = w.complement()
        q = Matrix(QQ, w.basis.data + comp0.basis.data, cols=n).transpose()
        sel = Matrix.zero(QQ, n, n)
        for i in range(w.dim):
            sel.data[i][i] = QQ.one
        sigma0 = q @ sel @ q.inverse()
        sigma = sigma0
        power = Matrix.identity(QQ, n)
        for _ in range(3):
            power = power @ jm
            sigma = sigma + power @ sigma0 @ power.inverse()
        sigma = sigma.scale(QQ.coerce("1/4"))
        n1 = sigma.kernel()
        if n1.dim + w.dim != n:
            raise AssertionError("equivariant projection has wrong rank")
        m, qdim = w.dim, n1.dim
        j_on_w = [w.coordinates(jm.apply(wr)) for wr in w.basis.data]
        j_on_n = [n1.coordinates(jm.apply(nr)) for nr in n1.basis.data]
        b = data.b
        # unknown h: N1 -> W as an m x q matrix, flattened row-major
        eqs = []
        rhs = []
        for a in range(m):
            for bcol in range(qdim):
                row = [QQ.zero] * (m * qdim)
                # (J_W h)[a][bcol] = sum_x J_W[a][x] h[x][bcol]
                for x in range(m):
                    row[x * qdim + bcol] = row[x * qdim + bcol] + j_on_w[x][a]
                # (h J_N)[a][bcol] = sum_y h[a][y] J_N[y][bcol]
                for y in range(qdim):
                    row[a * qdim + y] = row[a * qdim + y] - j_on_n[bcol][y]
                eqs.append(row)
                rhs.append(QQ.zero)
        for a in range(m):
            wa = w.basis.data[a]
            for bcol in range(qdim):
                row = [QQ.zero] * (m * qdim)
                for x in range(m):
                    row[x * qdim + bcol] = b.value(wa, w.basis.data[x])
                eqs.append(row)
                rhs.append(-b.value(wa, n1.basis.data[bcol]))
        sol = Matrix(QQ, eqs, cols=m * qdim).solve(rhs)
        if sol is None:
            return None
        corrected = []
        for bcol, nr in enumerate(n1.basis.data):
            vec = list(nr)
            for x in range(m):
                c = sol[x * qdim + bcol]
                if c:
                    vec = [a_ + c * b_ for a_, b_ in zip(vec, w.basis.data[x])]
            corrected.append(vec)
        cand = Subspace.from_spanning(QQ, n, corrected)
        if not verify_split(j, w, cand):
            raise AssertionError("solved complement failed the splitting check")
        return cand
    raise ValueError("closed-form splitting needs a transformed classical type")
