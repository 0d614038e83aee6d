"""Command-line front end.

Every verb reads JSON payloads, dispatches to one library operation
family, and prints a single JSON object with deterministic key order.
Exit codes: 0 = success or predicate true, 1 = predicate false,
2 = malformed input or invalid structure.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from .classification import (
    build_graphnotsub_example,
    build_notquot_example,
    build_subnotquot_example,
    canonical_c,
    canonical_s,
    decompose,
    reassemble,
)
from .core import (
    EQUATION_LABELS,
    BiVector,
    GCAut,
    IsotropicE,
    TwoForm,
    dualize,
    to_aut,
    to_eigenspace,
    twist,
    twisted_product,
    validate_aut,
    validate_eigenspace,
)
from .fields import QQ
from .linalg import Matrix, Subspace
from .multivector import Multivector
from .relations import (
    annihilator_composition_identity,
    compose,
    is_canonical,
)
from .samples import random_gcs, random_relation_chain
from .serialize import (
    PayloadError,
    decode_gcs,
    decode_relation,
    decode_subspace,
    decode_two_form_matrix,
    encode_aut,
    encode_eigenspace,
    encode_matrix,
    encode_relation,
    encode_spinor,
    encode_standard_form,
    encode_subspace,
    encode_vector,
)
from .spinor import (
    annihilator_subspace,
    is_pure,
    mukai_pairing,
    spinor_from_subspace,
    standard_form,
)
from .subspaces import (
    generalized_coisotropic_witness,
    generalized_isotropic_witness,
    induce_on_quotient,
    induce_on_subspace,
    satisfies_graph_condition,
    verify_split,
    find_split_complement,
)
from .transforms import b_transform, beta_transform, classify_type, recover


class CliError(Exception):
    """Input or domain error; reported as JSON on exit code 2."""


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}") from None


def _structure_to_aut(obj) -> GCAut:
    if isinstance(obj, GCAut):
        check = validate_aut(obj)
        if not check:
            raise CliError("invalid structure: " + _describe(check.violations))
        return obj
    if isinstance(obj, IsotropicE):
        try:
            return to_aut(obj)
        except ValueError as exc:
            raise CliError(f"invalid structure: {exc}") from None
    if isinstance(obj, Multivector):
        if obj.is_zero():
            raise CliError("invalid structure: zero spinor")
        if obj.n % 2 or not is_pure(obj):
            raise CliError("invalid structure: spinor is not pure")
        if not mukai_pairing(obj, obj.conjugate()):
            raise CliError("invalid structure: spinor pairs to zero with its conjugate")
        try:
            return to_aut(IsotropicE(obj.n, annihilator_subspace(obj)))
        except ValueError as exc:
            raise CliError(f"invalid structure: {exc}") from None
    raise CliError("unsupported structure payload")


def _load_aut(path: str) -> GCAut:
    return _structure_to_aut(decode_gcs(_load_json(path)))


def _describe(violations) -> str:
    parts = []
    for label in violations:
        desc = EQUATION_LABELS.get(label)
        parts.append(f"{label} {desc}" if desc else label)
    return ", ".join(parts)


def _cmd_validate(args) -> int:
    obj = decode_gcs(_load_json(args.file))
    if isinstance(obj, GCAut):
        res = validate_aut(obj)
        labeled = [f"{v} {EQUATION_LABELS[v]}" for v in res.violations]
    elif isinstance(obj, IsotropicE):
        res = validate_eigenspace(obj)
        labeled = list(res.violations)
    else:
        ok = bool(obj) and obj.n % 2 == 0 and is_pure(obj)
        labeled = [] if ok else ["purity"]
        if ok and not mukai_pairing(obj, obj.conjugate()):
            ok = False
            labeled = ["conjugate-pairing"]
        _emit({"result": ok, "violations": labeled})
        return 0 if ok else 1
    _emit({"result": res.ok, "violations": labeled})
    return 0 if res.ok else 1


def _cmd_convert(args) -> int:
    j = _load_aut(args.file)
    if args.to == "aut":
        _emit(encode_aut(j))
    elif args.to == "E":
        _emit(encode_eigenspace(to_eigenspace(j)))
    else:
        line = spinor_from_subspace(to_eigenspace(j).e)
        payload = encode_spinor(line.rep)
        payload["standard_form"] = encode_standard_form(standard_form(line.rep))
        _emit(payload)
    return 0


def _cmd_transform(args) -> int:
    j = _load_aut(args.file)
    if args.b:
        m = decode_two_form_matrix(_load_json(args.b), j.n)
        out = b_transform(j, TwoForm(m))
    elif args.beta:
        m = decode_two_form_matrix(_load_json(args.beta), j.n)
        out = beta_transform(j, BiVector(m))
    elif args.twist:
        out = twist(j)
    else:
        out = dualize(j)
    _emit(encode_aut(out))
    return 0


def _cmd_classify_type(args) -> int:
    t = classify_type(_load_aut(args.file))
    _emit(
        {
            "is_b_complex": t.is_b_complex,
            "is_b_symplectic": t.is_b_symplectic,
            "is_beta_complex": t.is_beta_complex,
            "is_beta_symplectic": t.is_beta_symplectic,
            "is_complex": t.is_complex,
            "is_symplectic": t.is_symplectic,
        }
    )
    return 0


def _cmd_recover(args) -> int:
    j = _load_aut(args.file)
    try:
        data = recover(j)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if data.kind == "symplectic":
        _emit(
            {
                "b": encode_matrix(data.b.m),
                "kind": "symplectic",
                "omega": encode_matrix(data.omega.m),
            }
        )
    else:
        _emit({"b": encode_matrix(data.b.m), "j": encode_matrix(data.jmat), "kind": "complex"})
    return 0


def _load_subspace(path: str, n: int) -> Subspace:
    sub = decode_subspace(_load_json(path), QQ)
    if sub.ambient_dim != n:
        raise CliError("subspace ambient dimension does not match the structure")
    return sub


def _cmd_subspace(args) -> int:
    j = _load_aut(args.file)
    w = _load_subspace(args.w, j.n)
    test = args.test
    if test == "gc":
        ind = induce_on_subspace(j, w)
        out = {"result": ind.is_gc}
        if not ind.is_gc:
            out["witness"] = encode_vector(ind.witness)
        _emit(out)
        return 0 if ind.is_gc else 1
    if test in ("isotropic", "coisotropic", "lagrangian"):
        w_iso = generalized_isotropic_witness(j, w)
        w_coiso = generalized_coisotropic_witness(j, w)
        witness = None
        if test == "isotropic":
            ok, witness = w_iso is None, w_iso
        elif test == "coisotropic":
            ok, witness = w_coiso is None, w_coiso
        else:
            ok = w_iso is None and w_coiso is None
            witness = w_iso if w_iso is not None else w_coiso
        out = {"result": ok}
        if not ok:
            out["witness"] = encode_vector(witness)
        _emit(out)
        return 0 if ok else 1
    if test == "graph":
        if not args.k:
            raise CliError("--test graph needs --k with a structure on W")
        k_raw = decode_gcs(_load_json(args.k))
        k = _structure_to_aut(k_raw)
        ok = satisfies_graph_condition(j, w, k)
        out = {"result": ok}
        if not ok:
            out["witness"] = "graph generator escapes the graph-plus-annihilator"
        _emit(out)
        return 0 if ok else 1
    if test == "split":
        if args.n:
            n_comp = _load_subspace(args.n, j.n)
            ok = verify_split(j, w, n_comp)
            out = {"result": ok}
            if ok:
                out["complement"] = encode_subspace(n_comp)
            else:
                out["witness"] = "carrier does not split along the given pair"
            _emit(out)
            return 0 if ok else 1
        try:
            cand = find_split_complement(j, w)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        out = {"result": cand is not None}
        if cand is not None:
            out["complement"] = encode_subspace(cand)
        else:
            out["witness"] = "no splitting complement exists"
        _emit(out)
        return 0 if cand is not None else 1
    raise CliError(f"unknown subspace test {test!r}")


def _cmd_induce(args) -> int:
    j = _load_aut(args.file)
    w = _load_subspace(args.w, j.n)
    ind = induce_on_subspace(j, w) if args.sub else induce_on_quotient(j, w)
    out = {
        "dim": ind.ew.dim,
        "ew": encode_subspace(ind.ew),
        "is_gc": ind.is_gc,
    }
    if ind.is_gc:
        out["jw"] = encode_aut(ind.jw)
    else:
        out["witness"] = encode_vector(ind.witness)
    _emit(out)
    return 0 if ind.is_gc else 1


def _cmd_decompose(args) -> int:
    d = decompose(_load_aut(args.file))
    _emit(
        {
            "b": encode_matrix(d.b.m),
            "jw": encode_matrix(d.jw),
            "omega": encode_matrix(d.omega.m),
            "s": encode_subspace(d.s),
            "w": encode_subspace(d.w),
        }
    )
    return 0


def _cmd_canonical(args) -> int:
    j = _load_aut(args.file)
    if args.s:
        _emit({"s": encode_subspace(canonical_s(j))})
    else:
        c, jc = canonical_c(j)
        _emit({"c": encode_subspace(c), "complex_structure": encode_matrix(jc)})
    return 0


def _cmd_compose(args) -> int:
    first = decode_relation(_load_json(args.rel1))
    second = decode_relation(_load_json(args.rel2))
    try:
        result = compose(first, second)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    _emit(encode_relation(result))
    return 0


def _cmd_canonical_rel(args) -> int:
    rel = decode_relation(_load_json(args.rel))
    ok = is_canonical(rel)
    out = {"result": ok}
    if not ok:
        tp = twisted_product(rel.source, rel.target)
        wit = generalized_isotropic_witness(tp, rel.graph)
        if wit is None:
            wit = generalized_coisotropic_witness(tp, rel.graph)
        out["witness"] = encode_vector(wit) if wit is not None else "unknown"
    _emit(out)
    return 0 if ok else 1


def _cmd_demo(args) -> int:
    name = args.name
    if name == "subnotquot":
        structure, w, _, _ = build_subnotquot_example()
        ind = induce_on_subspace(structure, w)
        quot = induce_on_quotient(structure, w)
        if not ind.is_gc or quot.is_gc:
            raise AssertionError("fixture verdicts changed")
        # pi(p1 + i q2) in quotient coordinates (pi(p2), pi(q2))
        from .fields import QI, GaussianRational

        witness = [QI.zero, GaussianRational(0, 1), QI.zero, QI.zero]
        bad = quot.ew.intersect(quot.ew.conjugate())
        if not bad.contains(witness):
            raise AssertionError("stated witness left the intersection")
        _emit(
            {
                "is_gc_quotient": False,
                "is_gc_subspace": True,
                "witness": "pi(p1+i q2)",
                "witness_vector": encode_vector(witness),
            }
        )
        return 0
    if name == "notquot":
        structure, omega, t = build_notquot_example()
        n = structure.n
        ker = (Matrix.identity(QQ, n) + t @ t).kernel()
        c, _ = canonical_c(structure)
        if c != ker:
            raise AssertionError("canonical subspace differs from the kernel")
        ind = induce_on_subspace(structure, c)
        quot = induce_on_quotient(structure, c)
        out = {
            "c_is_gc_subspace": ind.is_gc,
            "dim_ker": ker.dim,
            "omega_degenerate_on_c": not omega.restrict(c.basis.data).m.is_invertible(),
            "quotient_is_beta_symplectic": classify_type(quot.jw).is_beta_symplectic,
            "quotient_is_gc": quot.is_gc,
        }
        if ind.is_gc or not quot.is_gc:
            raise AssertionError("fixture verdicts changed")
        _emit(out)
        return 0
    if name == "graphnotsub":
        structure, w, k = build_graphnotsub_example()
        graph_ok = satisfies_graph_condition(structure, w, k)
        ind = induce_on_subspace(structure, w)
        if not graph_ok or ind.is_gc:
            raise AssertionError("fixture verdicts changed")
        _emit({"is_gc_subspace": False, "satisfies_graph_condition": True})
        return 0
    raise CliError(f"unknown demo {name!r}")


def _selftest_checks(seed: int):
    rng = Random(seed)
    checks = []

    def record(name, fn):
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        checks.append((name, ok))

    def fixtures():
        structure, w, _, _ = build_subnotquot_example()
        ok = induce_on_subspace(structure, w).is_gc
        ok = ok and not induce_on_quotient(structure, w).is_gc
        s2, w2, k2 = build_graphnotsub_example()
        ok = ok and satisfies_graph_condition(s2, w2, k2)
        ok = ok and not induce_on_subspace(s2, w2).is_gc
        s3, _, t3 = build_notquot_example()
        ker = (Matrix.identity(QQ, 8) + t3 @ t3).kernel()
        ok = ok and ker.dim == 4
        ok = ok and not induce_on_subspace(s3, ker).is_gc
        ok = ok and induce_on_quotient(s3, ker).is_gc
        return ok

    record("paper-fixtures", fixtures)

    def round_trips():
        for n in (2, 4):
            for _ in range(3):
                j = random_gcs(rng, n)
                e = to_eigenspace(j)
                if to_aut(e) != j:
                    return False
                line = spinor_from_subspace(e.e)
                back = annihilator_subspace(line.rep)
                if back != e.e:
                    return False
        return True

    record("representation-round-trips", round_trips)

    def decomposition():
        for n in (2, 4):
            for _ in range(2):
                j = random_gcs(rng, n)
                if reassemble(decompose(j)) != j:
                    return False
        return True

    record("classification-round-trips", decomposition)

    def relations():
        for _ in range(3):
            chain = random_relation_chain(rng, 4, 2)
            composed = compose(chain[1], chain[0])
            if not is_canonical(composed):
                return False
            if not annihilator_composition_identity(chain[1], chain[0]):
                return False
        return True

    record("relation-closure", relations)
    return checks


def _cmd_selftest(args) -> int:
    checks = _selftest_checks(args.seed)
    payload = {
        "checks": [{"name": name, "ok": ok} for name, ok in checks],
        "failed": sum(1 for _, ok in checks if not ok),
        "passed": sum(1 for _, ok in checks if ok),
        "seed": args.seed,
    }
    _emit(payload)
    return 0 if payload["failed"] == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gclin",
        description="Exact computations with generalized complex structures.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", help="check a structure payload")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--to", required=True, choices=["aut", "E", "spinor"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("transform", help="apply a transform")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--b", metavar="MATRIX_FILE")
    group.add_argument("--beta", metavar="MATRIX_FILE")
    group.add_argument("--twist", action="store_true")
    group.add_argument("--dual", action="store_true")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("classify-type", help="detect transformed classical types")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_classify_type)

    p = sub.add_parser("recover", help="recover classical data behind a transform")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_recover)

    p = sub.add_parser("subspace", help="test a subspace")
    p.add_argument(
        "--test",
        required=True,
        choices=["gc", "isotropic", "coisotropic", "lagrangian", "graph", "split"],
    )
    p.add_argument("--w", required=True, metavar="SUBSPACE_FILE")
    p.add_argument("--k", metavar="GCS_FILE")
    p.add_argument("--n", metavar="SUBSPACE_FILE")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_subspace)

    p = sub.add_parser("induce", help="induce a structure on a subspace or quotient")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sub", action="store_true")
    group.add_argument("--quot", action="store_true")
    p.add_argument("--w", required=True, metavar="SUBSPACE_FILE")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_induce)

    p = sub.add_parser("decompose", help="factor into transformed classical pieces")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("canonical", help="canonical subspaces")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--s", action="store_true")
    group.add_argument("--c", action="store_true")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_canonical)

    p = sub.add_parser("compose", help="compose two relations (first after second)")
    p.add_argument("rel1")
    p.add_argument("rel2")
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("canonical-rel", help="test a relation for canonicity")
    p.add_argument("rel")
    p.set_defaults(fn=_cmd_canonical_rel)

    p = sub.add_parser("demo", help="run a built-in fixture")
    p.add_argument("name", choices=["subnotquot", "notquot", "graphnotsub"])
    p.set_defaults(fn=_cmd_demo)

    p = sub.add_parser("selftest", help="run condensed self checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliError, PayloadError) as exc:
        _emit({"error": str(exc)})
        return 2
    except ValueError as exc:
        _emit({"error": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
