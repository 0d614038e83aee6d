"""Linear relations between structured spaces and their composition.

A relation from V to W is any subspace of V + W; morphisms carry their
endpoint structures so that canonicity (generalized Lagrangian for the
twisted product) is a property of the relation alone.  Composition is an
exact subspace computation and is total: no transversality condition is
needed in the linear theory.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GCAut, conjugate_by_basis, twisted_product
from .fields import QQ
from .linalg import Matrix, Subspace
from .subspaces import (
    is_generalized_coisotropic,
    is_generalized_isotropic,
    is_generalized_lagrangian,
)


@dataclass(frozen=True)
class LinearRelation:
    source: GCAut
    target: GCAut
    graph: Subspace

    def __post_init__(self):
        if self.graph.ambient_dim != self.source.n + self.target.n:
            raise ValueError("relation subspace has the wrong ambient dimension")
        if self.graph.field is not QQ:
            raise ValueError("relations are rational subspaces")


def identity_relation(j: GCAut) -> LinearRelation:
    n = j.n
    rows = []
    for i in range(n):
        v = [QQ.zero] * (2 * n)
        v[i] = QQ.one
        v[n + i] = QQ.one
        rows.append(v)
    return LinearRelation(j, j, Subspace.from_spanning(QQ, 2 * n, rows))


def map_relation(mu: Matrix, a: GCAut, b: GCAut) -> LinearRelation:
    """The graph of the linear map mu as a relation from a to b."""
    if mu.cols != a.n or mu.rows != b.n:
        raise ValueError("map shape does not match the endpoint spaces")
    rows = []
    for i in range(a.n):
        unit = [QQ.one if x == i else QQ.zero for x in range(a.n)]
        rows.append(unit + mu.apply(unit))
    return LinearRelation(a, b, Subspace.from_spanning(QQ, a.n + b.n, rows))


def compose_subspaces(phi: Subspace, gamma: Subspace, nv: int, nw: int, nz: int) -> Subspace:
    """Composition of plain relation subspaces (gamma: V to W, phi: W to Z)."""
    if gamma.ambient_dim != nv + nw or phi.ambient_dim != nw + nz:
        raise ValueError("relation ambient dimensions do not chain")
    total = nv + nw + nz
    first = [list(row) + [QQ.zero] * nz for row in gamma.basis.data]
    for i in range(nz):
        v = [QQ.zero] * total
        v[nv + nw + i] = QQ.one
        first.append(v)
    second = [[QQ.zero] * nv + list(row) for row in phi.basis.data]
    for i in range(nv):
        v = [QQ.zero] * total
        v[i] = QQ.one
        second.append(v)
    chained = Subspace.from_spanning(QQ, total, first).intersect(
        Subspace.from_spanning(QQ, total, second)
    )
    projected = [row[:nv] + row[nv + nw :] for row in chained.basis.data]
    return Subspace.from_spanning(QQ, nv + nz, projected)


def compose(phi: LinearRelation, gamma: LinearRelation) -> LinearRelation:
    """phi after gamma; endpoint structures must match in the middle."""
    if gamma.target != phi.source:
        raise ValueError("middle structures do not match")
    graph = compose_subspaces(
        phi.graph, gamma.graph, gamma.source.n, gamma.target.n, phi.target.n
    )
    return LinearRelation(gamma.source, phi.target, graph)


def _twisted(r: LinearRelation) -> GCAut:
    return twisted_product(r.source, r.target)


def is_isotropic_relation(r: LinearRelation) -> bool:
    return is_generalized_isotropic(_twisted(r), r.graph)


def is_coisotropic_relation(r: LinearRelation) -> bool:
    return is_generalized_coisotropic(_twisted(r), r.graph)


def is_canonical(r: LinearRelation) -> bool:
    """Canonical relations are the generalized Lagrangian ones."""
    return is_generalized_lagrangian(_twisted(r), r.graph)


_CLASS_TESTS = {
    "isotropic": is_isotropic_relation,
    "coisotropic": is_coisotropic_relation,
    "lagrangian": is_canonical,
}


def closure_check(phi: LinearRelation, gamma: LinearRelation, cls: str) -> bool:
    """Membership of the composition in a class, with the closure theorem
    enforced: inputs in the class force the composition into it."""
    try:
        test = _CLASS_TESTS[cls]
    except KeyError:
        raise ValueError(f"unknown class {cls!r}") from None
    composed = compose(phi, gamma)
    result = test(composed)
    if test(phi) and test(gamma) and not result:
        raise AssertionError(f"composition left the {cls} class")
    return result


def annihilator_composition_identity(phi: LinearRelation, gamma: LinearRelation) -> bool:
    """Ann(phi . gamma) equals the relation composition of the annihilators.

    The right-hand side pairs (f, h) through some middle functional g
    with (f, g) annihilating gamma and (-g, h) annihilating phi.
    """
    nv, nw, nz = gamma.source.n, gamma.target.n, phi.target.n
    lhs = compose(phi, gamma).graph.annihilator()
    ann_gamma = gamma.graph.annihilator()
    ann_phi = phi.graph.annihilator()
    flipped = Subspace.from_spanning(
        QQ,
        nw + nz,
        [[-x for x in row[:nw]] + row[nw:] for row in ann_phi.basis.data],
    )
    rhs = compose_subspaces(flipped, ann_gamma, nv, nw, nz)
    return lhs == rhs


def graph_iso_test(mu: Matrix, a: GCAut, b: GCAut) -> bool:
    """Graph of mu canonical iff mu conjugates one structure to the other.

    Both evaluations run and must agree.
    """
    if not mu.is_invertible():
        raise ValueError("the map must be invertible")
    by_graph = is_canonical(map_relation(mu, a, b))
    by_conjugation = conjugate_by_basis(a, mu) == b
    if by_graph != by_conjugation:
        raise AssertionError("graph and conjugation criteria disagree")
    return by_graph
