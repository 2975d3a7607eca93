"""Command line entry point: ``hopfact <area> <action> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad input or a resource
bound was hit.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from dataclasses import dataclass

from . import io
from .doubles import DOUBLE_DIM_BOUND, double_biperfect_check, drinfeld_double
from .factorization import FactorizationError, verify_exact_factorization
from .hopf import (
    CONVENTIONS,
    DEFAULT_CONVENTION,
    HopfConstructionError,
    antipode_square_summary,
    build_bicrossproduct,
    count_one_dim_reps,
    dual_hopf,
    grouplike_elements,
    rep_census,
    theorem23_counts,
    verify_duality,
    verify_hopf_axioms,
)
from .linalg import fraction_str
from .m24 import FAULTS, certify
from .permcore import DEFAULT_ORBIT_BOUND, InputError, ResourceError, abelianization_order, is_perfect, parse_perm

log = logging.getLogger("hopfact")

OK, FAILED, BAD_INPUT = 0, 1, 2


@dataclass
class RunConfig:
    materialization_bound: int = 2000
    coset_bound: int = DEFAULT_ORBIT_BOUND
    output_format: str = "text"
    fault_injection: str | None = None

    def __post_init__(self):
        for name in ("materialization_bound", "coset_bound"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InputError(f"{name}: must be a positive integer")
        if self.output_format not in ("text", "json"):
            raise InputError("output_format: must be 'text' or 'json'")
        if self.fault_injection is not None and (not isinstance(self.fault_injection, str)
                                                 or self.fault_injection not in FAULTS):
            raise InputError(f"fault_injection: unknown fault {self.fault_injection!r}")

    @classmethod
    def from_file(cls, path) -> "RunConfig":
        obj = io.load_json(path)
        if not isinstance(obj, dict):
            raise InputError(f"{path}: config must be an object")
        known = {f.name for f in dataclasses.fields(cls)}
        for key in obj:
            if key not in known:
                raise InputError(f"{key}: unknown config field")
        return cls(**obj)


def thread_cap() -> int:
    """HOPFACT_THREADS, validated.  Results never depend on it."""
    raw = os.environ.get("HOPFACT_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n < 1:
        raise InputError(f"HOPFACT_THREADS: must be an integer >= 1, got {raw!r}")
    return n


# --------------------------------------------------------------------------
# output

def _emit(args, report, text: str | None = None) -> None:
    if args.json_out or text is None:
        print(json.dumps(report, indent=1))
    else:
        print(text)


def _kv_text(report: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}" for k, v in report.items())


# --------------------------------------------------------------------------
# input helpers

def _factorization(args, materialize=True):
    if args.factorization:
        G, G1, G2 = io.read_factorization(args.factorization)
    else:
        missing = [n for n in ("group", "g1", "g2") if not getattr(args, n, None)]
        if missing:
            raise InputError(f"{missing[0]}: required unless --factorization is given")
        G = io.read_group(args.group, "group")
        G1 = io.read_group(args.g1, "g1")
        G2 = io.read_group(args.g2, "g2")
    cfg = args.config_obj
    return verify_exact_factorization(G, G1, G2, materialize=materialize,
                                      materialization_bound=cfg.materialization_bound,
                                      coset_bound=cfg.coset_bound)


def _hopf_input(args):
    """A Hopf algebra from ``--hopf`` or built from ``--factorization``."""
    if getattr(args, "hopf", None):
        return io.read_hopf(args.hopf), None
    if getattr(args, "factorization", None) or getattr(args, "group", None):
        f = _factorization(args)
        return build_bicrossproduct(f, convention=args.convention,
                                    dim_bound=args.config_obj.materialization_bound), f
    raise InputError("hopf: give --hopf or --factorization")


# --------------------------------------------------------------------------
# commands

def cmd_group_order(args):
    G = io.read_group(args.file)
    if args.json_out:
        print(json.dumps({"order": G.order()}))
    else:
        print(G.order())
    return OK


def cmd_group_check(args):
    G = io.read_group(args.file)
    report = {"degree": G.degree, "order": G.order(), "base": list(G.base),
              "transversal_sizes": G.transversal_sizes(), "transitive": G.is_transitive(),
              "abelian": G.is_abelian(), "perfect": is_perfect(G),
              "abelianization_order": abelianization_order(G)}
    status = OK
    if args.contains is not None:
        try:
            p = parse_perm(json.loads(args.contains) if args.contains.lstrip().startswith("[")
                           else args.contains, G.degree)
        except (ValueError, InputError) as exc:
            raise InputError(f"contains: {exc}") from None
        report["contains"] = G.contains(p)
        status = OK if report["contains"] else FAILED
    _emit(args, report, _kv_text(report))
    return status


def cmd_factor_verify(args):
    try:
        f = _factorization(args, materialize=True if args.materialize else None)
    except FactorizationError as exc:
        report = {"valid": False, "reason": str(exc)}
        print(json.dumps(report, indent=1))
        return FAILED
    print(json.dumps(f.report(), indent=1))
    return OK


def cmd_hopf_build(args):
    H, _ = _hopf_input(args)
    if args.output:
        io.write_hopf(H, args.output)
    report = {"dim": H.dim, "name": H.name, "convention": args.convention,
              "commutative": H.is_commutative(), "cocommutative": H.is_cocommutative(),
              "axioms": verify_hopf_axioms(H).to_json(), "output": args.output}
    _emit(args, report, _kv_text(report))
    return OK if report["axioms"]["all_pass"] else FAILED


def cmd_hopf_verify(args):
    if getattr(args, "hopf", None):
        H = io.read_hopf(args.hopf)
    else:
        f = _factorization(args)
        try:
            H = build_bicrossproduct(f, convention=args.convention,
                                     dim_bound=args.config_obj.materialization_bound, verify=False)
        except HopfConstructionError as exc:
            report = {"all_pass": False, "reason": str(exc)}
            _emit(args, report, _kv_text(report))
            return FAILED
    rep = verify_hopf_axioms(H)
    report = rep.to_json()
    report["dim"] = H.dim
    if H.antipode is not None:
        s2 = antipode_square_summary(H)
        report["antipode_squared_identity"] = s2["identity"]
        report["trace_antipode_squared"] = fraction_str(s2["trace"])
    _emit(args, report, _kv_text(report))
    return OK if rep.ok else FAILED


def cmd_hopf_reps(args):
    H, f = _hopf_input(args)
    Hd = dual_hopf(H)
    report = {"dim": H.dim, "one_dim_H": count_one_dim_reps(H), "one_dim_Hdual": count_one_dim_reps(Hd),
              "grouplikes": grouplike_elements(H).count}
    ok = report["grouplikes"] == report["one_dim_Hdual"]
    if f is not None:
        t = theorem23_counts(f, args.config_obj.coset_bound)
        report["group_theoretic"] = t.to_json()
        ok = ok and (t.one_dim_H, t.one_dim_Hdual) == (report["one_dim_H"], report["one_dim_Hdual"])
    report["consistent"] = ok
    report["biperfect"] = report["one_dim_H"] == 1 and report["one_dim_Hdual"] == 1
    _emit(args, report, _kv_text(report))
    return OK if ok else FAILED


def cmd_hopf_census(args):
    f = _factorization(args, materialize=False)
    census = rep_census(f, args.config_obj.coset_bound)
    report = census.to_json()
    lines = [f"orbits: {report['orbits']}", f"orbit sizes: {report['orbit_size_multiset']}",
             f"sum of orbit sizes: {report['sum_orbit_sizes']} (|G2| = {census.order_G2})",
             f"sum |G1| |O|: {report['dim_sq_sum']} (dim H = {census.order_G1 * census.order_G2})",
             f"one-dimensional: {report['one_dim_count']}", f"irrep dims: {report['irrep_dims']}"]
    _emit(args, report, "\n".join(lines))
    return OK


def cmd_hopf_dual(args):
    if getattr(args, "hopf", None):
        D = dual_hopf(io.read_hopf(args.hopf))
        if args.output:
            io.write_hopf(D, args.output)
        report = {"dim": D.dim, "axioms": verify_hopf_axioms(D).to_json(), "output": args.output}
        _emit(args, report, _kv_text(report))
        return OK if report["axioms"]["all_pass"] else FAILED
    f = _factorization(args)
    rep = verify_duality(f, args.config_obj.materialization_bound)
    _emit(args, rep.to_json(), _kv_text(rep.to_json()))
    return OK if rep.ok else FAILED


def cmd_double_build(args):
    H = io.read_hopf(args.hopf)
    qt = drinfeld_double(H, args.dim_bound)
    if args.output:
        io.write_hopf(qt.host, args.output)
    report = qt.to_json()
    report["output"] = args.output
    _emit(args, report, _kv_text(report))
    return OK if qt.ok else FAILED


def cmd_double_check(args):
    H = io.read_hopf(args.hopf)
    report = double_biperfect_check(H, args.dim_bound)
    _emit(args, report, _kv_text(report))
    return OK if report["equivalence_holds"] else FAILED


def cmd_m24_certify(args):
    fault = args.inject_fault or args.config_obj.fault_injection
    try:
        report = certify(census=args.census, fault=fault)
    except Exception as exc:  # a crash inside the pipeline is not a verdict
        log.exception("certificate pipeline crashed")
        print(f"internal error: {exc}", file=sys.stderr)
        return BAD_INPUT
    _emit(args, report.to_json(), report.to_text())
    return OK if report.passed else FAILED


# --------------------------------------------------------------------------
# parser

def _add_factorization_args(p):
    p.add_argument("--factorization", help="JSON with group, g1, g2")
    p.add_argument("--group", help="group JSON")
    p.add_argument("--g1", help="first factor JSON")
    p.add_argument("--g2", help="second factor JSON")


def _add_json(p):
    p.add_argument("--json", dest="json_out", action="store_true", help="JSON report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfact",
                                     description="Bicrossproduct Hopf algebras from exact group factorizations.")
    parser.add_argument("--config", help="JSON file overriding run configuration")
    parser.add_argument("-v", "--verbose", action="store_true")
    areas = parser.add_subparsers(dest="area", required=True)

    group = areas.add_parser("group", help="permutation groups").add_subparsers(dest="action", required=True)
    p = group.add_parser("order", help="print the group order")
    p.add_argument("file")
    _add_json(p)
    p.set_defaults(func=cmd_group_order)
    p = group.add_parser("check", help="structural report, optional membership test")
    p.add_argument("file")
    p.add_argument("--contains", help="permutation as JSON array or cycle string")
    _add_json(p)
    p.set_defaults(func=cmd_group_check)

    factor = areas.add_parser("factor", help="exact factorizations").add_subparsers(dest="action", required=True)
    p = factor.add_parser("verify", help="check G = G1 G2 exactly")
    _add_factorization_args(p)
    p.add_argument("--materialize", action="store_true", help="build the decomposition table")
    p.set_defaults(func=cmd_factor_verify, json_out=True)

    hopf = areas.add_parser("hopf", help="bicrossproduct Hopf algebras").add_subparsers(dest="action", required=True)
    for name, func, helptext in (("build", cmd_hopf_build, "build H(G, G1, G2)"),
                                 ("verify", cmd_hopf_verify, "run the axiom suite"),
                                 ("reps", cmd_hopf_reps, "count one-dimensional representations"),
                                 ("census", cmd_hopf_census, "orbit census of irreducibles"),
                                 ("dual", cmd_hopf_dual, "dual algebra, or check H(G,G2,G1) = H(G,G1,G2)^*")):
        p = hopf.add_parser(name, help=helptext)
        _add_factorization_args(p)
        if name in ("verify", "reps", "dual"):
            p.add_argument("--hopf", help="Hopf algebra JSON")
        if name in ("build", "dual"):
            p.add_argument("-o", "--output", help="write the Hopf algebra JSON here")
        p.add_argument("--convention", choices=CONVENTIONS, default=DEFAULT_CONVENTION)
        _add_json(p)
        p.set_defaults(func=func)

    double = areas.add_parser("double", help="Drinfeld doubles").add_subparsers(dest="action", required=True)
    for name, func in (("build", cmd_double_build), ("check", cmd_double_check)):
        p = double.add_parser(name)
        p.add_argument("--hopf", required=True, help="Hopf algebra JSON")
        p.add_argument("--dim-bound", type=int, default=DOUBLE_DIM_BOUND)
        if name == "build":
            p.add_argument("-o", "--output")
        _add_json(p)
        p.set_defaults(func=func)

    m24 = areas.add_parser("m24", help="the M24 certificate").add_subparsers(dest="action", required=True)
    p = m24.add_parser("certify", help="verify M24 = G1 G2 with both factors perfect and self-normalizing")
    _add_json(p)
    p.add_argument("--census", action="store_true", help="add the G1-orbit census on G/G1")
    p.add_argument("--inject-fault", choices=sorted(FAULTS), help="deliberately break one check")
    p.set_defaults(func=cmd_m24_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        thread_cap()
        args.config_obj = RunConfig.from_file(args.config) if args.config else RunConfig()
        if args.config_obj.output_format == "json":
            args.json_out = True
        return args.func(args)
    except (InputError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except FactorizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())
