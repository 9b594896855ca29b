"""Command-line surface: ``hecke-braid <command> [flags]``.

Every command prints one JSON document (``rep`` prints a CSV matrix) to stdout.
Exit status: 0 when every check passes, 2 on a mathematical mismatch or an
inconclusive certification, 1 on an invalid invocation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from . import classify as C
from . import engine as E
from . import hecke as H
from . import linalg as la
from .braid import (
    TooFewStrands,
    gorin_lin_generators,
    normal_closure_witness,
    verify_gorin_lin_relations,
)
from .gf import FieldCtx, FieldError, NoSuchOrder, find_element_of_order, parse_field_spec
from .young import (
    DegenerateParameter,
    Partition,
    diag_and_nu,
    format_partition,
    hook_shape,
    is_hook,
    parse_partition,
    partitions_of,
    standard_tableaux,
    transpose,
    w_sign,
)

SCHEMA = 1
HEAVY_ORDER = 1_000_000  # closures above this size need --heavy
PARTITION_ORDER = "reverse-lexicographic"
WITT_NOTE = "Witt index is nonzero although the index-0 reading was expected; a sum of hyperbolic planes has maximal index N/2"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# -- shared setup ---------------------------------------------------------------


def _field(args) -> FieldCtx:
    try:
        return parse_field_spec(args.field)
    except (FieldError, ValueError) as exc:
        raise UsageError(f"--field: {exc}") from exc


def _alpha(ctx: FieldCtx, args) -> int:
    if args.alpha_order is None:
        raise UsageError("--alpha-order is required")
    try:
        return find_element_of_order(ctx, args.alpha_order)
    except NoSuchOrder as exc:
        raise UsageError(f"--alpha-order: {exc}") from exc


def _shape(args) -> Partition:
    if args.shape is None:
        raise UsageError("--lambda is required")
    try:
        shape = parse_partition(args.shape)
    except ValueError as exc:
        raise UsageError(f"--lambda: {exc}") from exc
    if args.n is not None and sum(shape) != args.n:
        raise UsageError(f"--lambda {args.shape} is not a partition of --n {args.n}")
    return shape


def _rep(ctx, shape, alpha) -> H.HeckeRep:
    try:
        return H.HeckeRep(ctx, shape, alpha)
    except DegenerateParameter as exc:
        raise UsageError(f"--alpha-order: {exc}") from exc


def _params(ctx: FieldCtx, alpha: int, n: int | None, seed: int) -> dict:
    out = {"field": ctx.spec_string(), "q": ctx.q, "alpha": ctx.format(alpha), "seed": seed}
    if n is not None:
        out["n"] = n
    try:
        out["case"] = C.field_case(ctx, alpha)
    except C.InadmissibleParameter:
        out["case"] = None
    return out


def _csv(ctx, mat, shape, alpha, label) -> str:
    return H.matrix_csv(ctx, mat, shape, alpha, label)


# -- verify -----------------------------------------------------------------------


def _check(report: dict, name: str, fn) -> None:
    """Run one check, recording a boolean or a structured error."""
    try:
        report[name] = bool(fn())
    except Exception as exc:  # noqa: BLE001 - errors become report items
        report[name] = {"error": f"{type(exc).__name__}: {exc}"}


def _hecke_relations(ctx, rep: H.HeckeRep) -> bool:
    n, a, g = rep.n, rep.alpha, rep.gens
    eye = la.identity(rep.dim)
    for r in range(n - 1):
        quad = la.matmul(ctx, la.madd(ctx, g[r], eye), la.msub(ctx, g[r], la.scalar(ctx, a, rep.dim)))
        if not la.is_zero(quad):
            return False
    for r in range(n - 2):
        lhs = la.matprod(ctx, [g[r], g[r + 1], g[r]])
        rhs = la.matprod(ctx, [g[r + 1], g[r], g[r + 1]])
        if not np.array_equal(lhs, rhs):
            return False
    for r in range(n - 1):
        for s in range(r + 2, n - 1):
            if not np.array_equal(la.matmul(ctx, g[r], g[s]), la.matmul(ctx, g[s], g[r])):
                return False
    return True


def _expected_symmetry(ctx: FieldCtx, shape: Partition) -> str:
    return "alternating" if ctx.p == 2 or diag_and_nu(shape)[1] == -1 else "symmetric"


def _verify_shape(ctx, shape, alpha, args, case) -> dict:
    rep = H.HeckeRep(ctx, shape, alpha)
    n, N = rep.n, rep.dim
    rec: dict = {"lambda": format_partition(shape), "N": N, "checks": {}, "info": {}}
    chk, info = rec["checks"], rec["info"]
    _check(chk, "hecke_relations", lambda: _hecke_relations(ctx, rep))
    _check(
        chk,
        "bilinear_equivariance",
        lambda: H.check_form_equivariance(
            ctx, H.form_generators(ctx, shape, alpha), H.bilinear_pairing(ctx, shape, alpha), alpha
        ),
    )
    if case == "unitary":
        _check(
            chk,
            "hermitian_invariance",
            lambda: H.check_form_equivariance(ctx, rep.gens, H.hermitian_pairing(ctx, shape, alpha), alpha),
        )
    _check(
        chk,
        "sign_product_equals_nu",
        lambda: all(w_sign(t) * w_sign(t.transpose()) == diag_and_nu(shape)[1] for t in standard_tableaux(shape)),
    )
    if shape != transpose(shape):
        _check(chk, "duality_conjugation", lambda: H.duality_conjugation_holds(ctx, shape, alpha))
    if n >= 4:
        _check(chk, "gorin_lin_relations", lambda: all(verify_gorin_lin_relations(rep, n).values()))
    if n >= 5:
        _check(chk, "normal_closure_witness", lambda: np.array_equal(*map(rep, normal_closure_witness(n))))

    imgs = C.commutator_images(rep)
    burn = C.burnside_span_dim(ctx, imgs)
    info["burnside_dim"] = burn
    chk["absolutely_irreducible"] = burn == N * N
    bil = C.invariant_bilinear_space(ctx, imgs, 1)
    info["bilinear_dim"] = bil.dim
    info["bilinear_symmetry"] = bil.overall_symmetry
    if shape == transpose(shape):
        chk["bilinear_form_self_conjugate"] = bil.dim == 1 and bil.symmetry[0] == _expected_symmetry(ctx, shape)
    elif case == "linear":
        chk["no_bilinear_form"] = bil.dim == 0
    if ctx.k % 2 == 0:
        herm = C.invariant_sesquilinear_space(ctx, imgs, 1)
        info["hermitian_dim"] = herm.dim
        if case == "unitary":
            chk["hermitian_form_unique"] = herm.dim == 1
    deg = C.trace_field_degree(ctx, imgs, seed=args.seed)
    info["trace_field_degree"] = deg

    try:
        pg = C.predicted_group(ctx, shape, alpha)
    except C.HookNotLambdaZero:
        info["prediction"] = None
        return rec
    info["prediction"] = {
        "family": pg.family,
        "field": pg.field,
        "order": pg.order,
        "label": pg.label,
        "inferred": pg.inferred,
    }
    small_trace = case == "unitary" and (pg.family != "SU" or N == 2)
    chk["trace_field"] = deg == (ctx.k // 2 if small_trace else ctx.k)

    if case == "linear" and ctx.p != 2 and bil.dim == 1 and bil.symmetry[0] == "symmetric":
        witt = C.witt_index(ctx, bil.basis[0])
        info["witt_index"] = witt
        chk["witt_index_maximal"] = witt == N // 2
        if witt != 0:
            rec["flags"] = [WITT_NOTE]

    if pg.order > args.enumerate_cap:
        info["closure"] = {"status": "Skipped", "reason": f"predicted order {pg.order} exceeds --enumerate-cap"}
    elif pg.order > HEAVY_ORDER and not args.heavy:
        info["closure"] = {"status": "Skipped", "reason": "needs --heavy"}
    else:
        gens = imgs
        if case == "unitary" and pg.family in ("SP", "OMEGA_PLUS"):
            gens = C.hilbert90_descent(ctx, imgs, seed=args.seed).gens
            info["descended"] = True
        res = E.bfs_closure(ctx, gens, cap=args.enumerate_cap)
        verdict = E.certify_order(res, pg)
        info["closure"] = {"status": res.status, "order": res.order, "verdict": verdict.value}
        chk["order_certified"] = verdict is E.Verdict.MATCH
        chk["lagrange_consistent"] = E.lagrange_consistent(res, pg)
    return rec


def _hook_checks(ctx, n, alpha) -> dict:
    out: dict = {}
    for r in range(1, n - 1):
        item: dict = {}
        _check(item, "exterior_power", lambda: H.exterior_power_compare(ctx, n, r, alpha))

        def twist():
            hook = H.HeckeRep(ctx, hook_shape(n, r), alpha)
            etas = H.character_twist(ctx, hook.gens, H.exterior_power_rep(ctx, n, r, alpha), n)
            return all(e == ctx.pow(alpha, r - 1) for e in etas)

        if n >= 3:
            _check(item, "character_twist", twist)
        out[str(r)] = item
    return out


def _all_true(obj) -> bool:
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, dict):
        if "error" in obj:
            return False
        return all(_all_true(v) for v in obj.values())
    return True


def cmd_verify(args) -> int:
    ctx = _field(args)
    n = args.n
    if n is None or n < 3:
        raise UsageError("--n must be at least 3")
    if args.alpha_order is None:
        raise UsageError("--alpha-order is required")
    o = args.alpha_order
    if o <= n or o in C.EXCLUDED_ORDERS:
        # refuse on the order alone, whether or not F_q has such an element
        why = f"order of alpha ({o}) must exceed n = {n}" if o <= n else f"order of alpha ({o}) is excluded (2, 3, 4, 5, 6, 10)"
        _emit({"schema": SCHEMA, "command": "verify", "parameters": {"field": ctx.spec_string(), "n": n, "alpha_order": o},
               "verdict": "Refused", "reason": why})
        return 1
    alpha = _alpha(ctx, args)
    report = {"schema": SCHEMA, "command": "verify", "parameters": _params(ctx, alpha, n, args.seed)}
    report["parameters"].update(
        alpha_order=args.alpha_order, enumerate_cap=args.enumerate_cap, heavy=args.heavy, partition_order=PARTITION_ORDER
    )
    reason = C.admissibility_error(ctx, n, alpha)
    if reason is None:
        try:
            C.field_case(ctx, alpha)
        except C.InadmissibleParameter as exc:
            reason = str(exc)
    if reason:
        report.update(verdict="Refused", reason=reason)
        _emit(report)
        return 1
    case = report["parameters"]["case"]
    shapes = []
    for shape in partitions_of(n):
        if len(standard_tableaux(shape)) < 2:
            continue
        try:
            shapes.append(_verify_shape(ctx, shape, alpha, args, case))
        except Exception as exc:  # noqa: BLE001
            shapes.append({"lambda": format_partition(shape), "checks": {"error": f"{type(exc).__name__}: {exc}"}})
    report["shapes"] = shapes
    report["hooks"] = _hook_checks(ctx, n, alpha)
    ok = all(_all_true(s["checks"]) for s in shapes) and _all_true(report["hooks"])
    report["verdict"] = "Pass" if ok else "Fail"
    _emit(report)
    return 0 if ok else 2


# -- thin wrappers ---------------------------------------------------------------------


def cmd_rep(args) -> int:
    ctx = _field(args)
    alpha = _alpha(ctx, args)
    shape = _shape(args)
    rep = _rep(ctx, shape, alpha)
    if args.r is None or not 1 <= args.r < rep.n:
        raise UsageError(f"--r must lie in 1..{rep.n - 1}")
    sys.stdout.write(_csv(ctx, rep.gen(args.r), shape, alpha, args.r))
    return 0


def cmd_forms(args) -> int:
    ctx = _field(args)
    alpha = _alpha(ctx, args)
    shape = _shape(args)
    rep = _rep(ctx, shape, alpha)
    imgs = C.commutator_images(rep)
    bil = C.invariant_bilinear_space(ctx, imgs, 1)
    out = {
        "schema": SCHEMA,
        "command": "forms",
        "parameters": _params(ctx, alpha, rep.n, args.seed),
        "lambda": format_partition(shape),
        "bilinear": {
            "dim": bil.dim,
            "symmetry": bil.symmetry,
            "basis": [_csv(ctx, w, shape, alpha, "W") for w in bil.basis],
        },
    }
    spec = H.bilinear_pairing(ctx, shape, alpha)
    out["pairing"] = {"kind": spec.kind, "nu": spec.nu, "equivariant": H.check_form_equivariance(
        ctx, H.form_generators(ctx, shape, alpha), spec, alpha)}
    ok = out["pairing"]["equivariant"]
    if ctx.k % 2 == 0:
        herm = C.invariant_sesquilinear_space(ctx, imgs, 1)
        out["hermitian"] = {
            "dim": herm.dim,
            "symmetry": herm.symmetry,
            "basis": [_csv(ctx, d, shape, alpha, "D") for d in herm.basis],
        }
    _emit(out)
    return 0 if ok else 2


def cmd_classify(args) -> int:
    ctx = _field(args)
    alpha = _alpha(ctx, args)
    if args.shape is not None:
        shapes = [_shape(args)]
        n = sum(shapes[0])
    elif args.n is not None:
        n = args.n
        shapes = [s for s in partitions_of(n) if not is_hook(s) or s == hook_shape(n, 1)]
    else:
        raise UsageError("give --n or --lambda")
    reason = C.admissibility_error(ctx, n, alpha)
    out = {"schema": SCHEMA, "command": "classify", "parameters": _params(ctx, alpha, n, args.seed)}
    out["parameters"]["partition_order"] = PARTITION_ORDER
    if reason:
        out.update(verdict="Refused", reason=reason)
        _emit(out)
        return 1
    records = []
    for shape in shapes:
        _rep(ctx, shape, alpha)
        records.append(C.classification_record(ctx, shape, alpha, seed=args.seed))
    out["records"] = records
    _emit(out)
    return 0


def cmd_enumerate(args) -> int:
    ctx = _field(args)
    alpha = _alpha(ctx, args)
    shape = _shape(args)
    rep = _rep(ctx, shape, alpha)
    imgs = C.commutator_images(rep)
    res = E.bfs_closure(ctx, imgs, cap=args.enumerate_cap)
    out = {
        "schema": SCHEMA,
        "command": "enumerate",
        "parameters": _params(ctx, alpha, rep.n, args.seed),
        "lambda": format_partition(shape),
        "closure": {"status": res.status, "order": res.order, "cap": res.cap, "levels": res.stats.levels},
    }
    try:
        pg = C.predicted_group(ctx, shape, alpha)
    except (C.InadmissibleParameter, C.HookNotLambdaZero) as exc:
        out["prediction"] = None
        out["verdict"] = E.Verdict.INCONCLUSIVE.value if not res.complete else "Unpredicted"
        out["reason"] = str(exc)
    else:
        out["prediction"] = {"label": pg.label, "order": pg.order}
        out["verdict"] = E.certify_order(res, pg).value
    _emit(out)
    return 0 if out["verdict"] in ("Match", "Unpredicted") else 2


def cmd_descend(args) -> int:
    ctx = _field(args)
    if ctx.k % 2:
        raise UsageError("--field: descent needs an even-degree field")
    alpha = _alpha(ctx, args)
    shape = _shape(args)
    rep = _rep(ctx, shape, alpha)
    imgs = C.commutator_images(rep)
    names = list(gorin_lin_generators(rep.n))
    out = {
        "schema": SCHEMA,
        "command": "descend",
        "parameters": _params(ctx, alpha, rep.n, args.seed),
        "lambda": format_partition(shape),
    }
    try:
        d = C.hilbert90_descent(ctx, imgs, seed=args.seed)
    except (C.NotIrreducible, C.NormEquationFailure, C.MaxRandomRetriesExceeded, ValueError) as exc:
        out.update(verdict="Fail", error=f"{type(exc).__name__}: {exc}")
        _emit(out)
        return 2
    out.update(
        verdict="Pass",
        symmetry=d.symmetry,
        attempts=d.attempts,
        subfield=ctx.sqrt_q,
        conjugator=_csv(ctx, d.conjugator, shape, alpha, "S"),
        form=_csv(ctx, d.form, shape, alpha, "phi"),
        generators={nm: _csv(ctx, g, shape, alpha, nm) for nm, g in zip(names, d.gens)},
    )
    _emit(out)
    return 0


# -- entry point -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="number of strands")
    common.add_argument("--field", default="p=2,k=3,mod=AUTO", help="p=<p>,k=<k>,mod=<c0,..,ck>|AUTO")
    common.add_argument("--alpha-order", type=int, help="multiplicative order of the Hecke parameter")
    common.add_argument("--lambda", dest="shape", help="partition, e.g. 2,2")
    common.add_argument("--r", type=int, help="generator index for rep")
    common.add_argument("--enumerate-cap", "--cap", type=int, default=E.DEFAULT_CAP, help="closure cap")
    common.add_argument("--heavy", action="store_true", help=f"allow closures above {HEAVY_ORDER:,} elements")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="store_true", help="closure progress on stderr")

    parser = _Parser(prog="hecke-braid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, text in [
        ("verify", cmd_verify, "full verification report for every shape of n"),
        ("rep", cmd_rep, "CSV dump of one generator matrix"),
        ("forms", cmd_forms, "invariant forms of the commutator-subgroup image"),
        ("classify", cmd_classify, "classification records"),
        ("enumerate", cmd_enumerate, "closure order against the prediction"),
        ("descend", cmd_descend, "descent to the half field"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hecke-braid {args.command}: error: {exc}", file=sys.stderr)
        return 1
    except TooFewStrands as exc:
        print(f"hecke-braid {args.command}: error: --n: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
