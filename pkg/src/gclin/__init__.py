"""Exact-arithmetic toolkit for generalized complex linear algebra."""

from .core import (
    BiVector,
    GCAut,
    IsotropicE,
    TwoForm,
    complex_structure,
    conjugate_by_basis,
    direct_sum,
    dualize,
    pairing,
    quadratic_form,
    symplectic_structure,
    to_aut,
    to_eigenspace,
    twist,
    twisted_product,
    validate_aut,
    validate_eigenspace,
)
from .fields import QI, QQ, GaussianRational
from .linalg import Matrix, Subspace
from .multivector import Multivector
from .spinor import (
    SpinorLine,
    StandardForm,
    annihilator_subspace,
    clifford_act,
    is_pure,
    mukai_pairing,
    spinor_from_subspace,
    standard_form,
    subspace_from_standard_form,
)
from .transforms import (
    RecoveredData,
    StructureType,
    analyze_t,
    assemble_sum_transform,
    b_transform,
    beta_transform,
    classify_type,
    recover,
    t_operator,
)
from .subspaces import (
    InducedStructure,
    beta_between,
    find_split_complement,
    induce_on_quotient,
    induce_on_subspace,
    is_generalized_coisotropic,
    is_generalized_isotropic,
    is_generalized_lagrangian,
    restrict_spinor,
    satisfies_graph_condition,
    split_induced,
    verify_split,
)
from .classification import (
    Decomposition,
    build_graphnotsub_example,
    build_notquot_example,
    build_subnotquot_example,
    build_symplectic_with_t,
    canonical_c,
    canonical_s,
    decompose,
    reassemble,
)
from .relations import (
    LinearRelation,
    annihilator_composition_identity,
    closure_check,
    compose,
    graph_iso_test,
    identity_relation,
    is_canonical,
    map_relation,
)

__version__ = "0.1.0"
