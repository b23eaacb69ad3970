"""Command-line front end.

Every invocation prints exactly one JSON report on stdout (or a text
rendering with ``--pretty``).  Exit codes: 0 success, 1 input or validation
error, 2 mathematical inconsistency (including failed self-checks).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__
from .checks import run_all
from .errors import Inconsistency, InputError, InvalidInput, JInvariantError
from .jprofile import (
    JInvariant,
    JProfile,
    ProfileRegistry,
    resolve_profiles,
    truncated_ring_poincare,
)
from .motives import admissible_J, decompose, motive_poincare
from .polyring import IntPoly, evaluate
from .rootdata import (
    DynkinType,
    coxeter_length_oracle,
    flag_poincare,
    levi_components,
    parabolic_poincare,
    severi_brauer_poincare,
    weyl_data,
)
from .splitting import (
    F_polynomial,
    SplittingInput,
    p_primary_part,
    split_transform,
    verify_identity,
)
from .typed import (
    Component,
    Indeterminate,
    InvolutionData,
    index_reduction_exponent,
    j1,
    j1_halfspin,
    j2,
    k1,
    split_over_FA,
    validate,
)

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(message)


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, IntPoly):
        return list(obj.coeffs)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, JInvariant):
        return list(obj.components)
    return obj


def _check(name: str, passed: bool, **detail) -> dict[str, Any]:
    out = {"name": name, "passed": bool(passed)}
    if detail:
        out["detail"] = _jsonable(detail)
    return out


# -- argument helpers -----------------------------------------------------------


def _add_type_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="series", help="Dynkin series letter, or a full type such as D4")
    p.add_argument("--rank", type=int)


def _dynkin(args) -> DynkinType | None:
    if args.series is None:
        return None
    if args.rank is None:
        return DynkinType.parse(args.series)
    return DynkinType(args.series.upper(), args.rank)


def _profile(args, registry: ProfileRegistry) -> JProfile:
    """Profile from the registry (--type/--rank/--p) or ad hoc (--degrees/--p[/--bounds])."""
    if args.p is None:
        raise UsageError("--p is required")
    if getattr(args, "degrees", None) is not None:
        bounds = tuple(args.bounds) if getattr(args, "bounds", None) is not None else None
        return JProfile(_dynkin(args), args.p, tuple(args.degrees), bounds)
    dtype = _dynkin(args)
    if dtype is None:
        raise UsageError("give either --type/--rank or --degrees")
    return registry.get(dtype, args.p)


# -- subcommands ------------------------------------------------------------------


def cmd_poincare(args, registry):
    result: dict[str, Any] = {}
    checks = []
    if args.severi_brauer is not None:
        P = severi_brauer_poincare(args.severi_brauer)
        result["variety"] = f"SB(A), deg A = {args.severi_brauer}"
        checks.append(_check("value_at_1_equals_degree", evaluate(P, 1) == args.severi_brauer))
    else:
        dtype = _dynkin(args)
        if dtype is None:
            raise UsageError("--type/--rank required")
        wd = weyl_data(dtype)
        result["type"] = str(dtype)
        result["exponents"] = list(wd.exponents)
        result["weyl_order"] = wd.order
        if args.parabolic is not None:
            theta = args.parabolic
            P = parabolic_poincare(dtype, theta)
            comps = levi_components(dtype, theta)
            result["variety"] = f"G/P, theta = {sorted(set(theta))}"
            result["levi_components"] = [str(c) for c in comps]
            levi_order = 1
            for c in comps:
                levi_order *= weyl_data(c).order
            checks.append(
                _check("index_times_levi_order_is_weyl_order", evaluate(P, 1) * levi_order == wd.order)
            )
        else:
            P = flag_poincare(dtype)
            result["variety"] = "G/B"
            checks.append(_check("value_at_1_is_weyl_order", evaluate(P, 1) == wd.order))
            if args.oracle:
                bfs = coxeter_length_oracle(dtype, cap=args.cap)
                checks.append(_check("bfs_oracle_matches_solomon", bfs == P, oracle=bfs))
    result["polynomial"] = P
    result["degree"] = P.degree
    result["value_at_1"] = evaluate(P, 1)
    checks.append(_check("palindromic", P.is_palindromic()))
    return result, checks


def cmd_profile(args, registry):
    checks = []
    if args.series is None:
        result = {
            "source": registry.origin,
            "count": len(registry),
            "profiles": [p.to_dict() for p in registry],
        }
        checks.append(_check("document_loaded", True))
        return result, checks
    dtype = _dynkin(args)
    if args.p is None:
        found = [prof.to_dict() for prof in registry if prof.type == dtype]
        if not found:
            raise InvalidInput(f"no profiles for {dtype}")
        return {"source": registry.origin, "profiles": found}, checks
    prof = registry.get(dtype, args.p)
    result = {"source": registry.origin, "profile": prof.to_dict()}
    if prof.bounds is not None:
        R = truncated_ring_poincare(prof, prof.bounds)
        result["chow_ring_of_group"] = R
        checks.append(_check("dimension_is_prod_p_power_k", evaluate(R, 1) == prof.p ** sum(prof.bounds)))
    return result, checks


def _px(args, prof: JProfile) -> IntPoly | None:
    if args.px is not None:
        return IntPoly(args.px)
    if args.px_sb is not None:
        return severi_brauer_poincare(args.px_sb)
    if args.px_flag or args.px_parabolic is not None:
        if prof.type is None:
            raise UsageError("--px-flag/--px-parabolic need a profile with a Dynkin type")
        if args.px_parabolic is not None:
            return parabolic_poincare(prof.type, args.px_parabolic)
        return flag_poincare(prof.type)
    return None


def cmd_motive(args, registry):
    prof = _profile(args, registry)
    P_X = _px(args, prof)
    result: dict[str, Any] = {"profile": prof.to_dict()}
    checks = []
    if P_X is not None:
        result["P_X"] = P_X
    if args.j is not None:
        J = JInvariant(prof, args.j)
        R = motive_poincare(J)
        result["J"] = list(J.components)
        result["motive_poincare"] = R
        checks.append(_check("motive_palindromic", R.is_palindromic()))
        checks.append(
            _check("motive_value_at_1", evaluate(R, 1) == prof.p ** sum(J.components))
        )
        if P_X is not None:
            tw = decompose(P_X, J)
            result["twists"] = {str(i): a for i, a in tw.counts.items()}
            checks.append(_check("reconstruction", tw.to_poly() * R == P_X))
    if args.admissible:
        if P_X is None:
            raise UsageError("--admissible needs a variety (--px, --px-sb, --px-flag, --px-parabolic)")
        adm = admissible_J(P_X, prof, cap=args.cap)
        result["admissible"] = adm.components()
        result["admissible_truncated"] = adm.truncated
        result["admissible_scanned"] = adm.scanned
        result["admissible_candidates"] = adm.candidates
    if args.j is None and not args.admissible:
        raise UsageError("nothing to do: give --j and/or --admissible")
    return result, checks


def cmd_split(args, registry):
    prof = _profile(args, registry)
    n = args.n
    result: dict[str, Any] = {"profile": prof.to_dict(), "n_given": n}
    if args.p_primary:
        n = p_primary_part(n, prof.p)
    result["n"] = n
    J = JInvariant(prof, args.j)
    checks = []
    if args.after is not None:
        after = tuple(args.after)
        result["J_after_given"] = list(after)
    else:
        out = split_transform(SplittingInput(J, n, args.jga))
        after = out.components
        result["J_after"] = list(out.components)
        result["J1_after"] = list(out.J1_after)
        result["higher_after"] = list(out.higher_after)
        result["changed_slot"] = None if out.changed_slot is None else out.changed_slot + 1
        before_higher = [j for j, d in zip(J.components, prof.degrees) if d > 1]
        checks.append(_check("degree_gt1_preserved", list(out.higher_after) == before_higher))
    F = F_polynomial(n, args.jga, prof.p)
    result["F"] = F
    checks.append(_check("F_value_times_q_is_n", evaluate(F, 1) * prof.p**args.jga == n))
    ident = verify_identity(J, after, n, args.jga)
    result["identity_holds"] = ident.holds
    result["divided_identity_holds"] = ident.divided_holds
    witness = {}
    if not ident.holds:
        witness.update(lhs=ident.lhs, rhs=ident.rhs)
    if ident.divided_holds is False:
        witness.update(divided_lhs=ident.divided_lhs, divided_rhs=ident.divided_rhs)
    checks.append(_check("product_identity", ident.holds, **witness))
    if ident.divided_holds is not None:
        checks.append(_check("divided_identity", ident.divided_holds))
    return result, checks


def cmd_typed(args, registry):
    data = InvolutionData(args.n, args.iA, args.iplus, args.iminus)
    violations = validate(data)
    if violations:
        raise InvalidInput("; ".join(violations))
    result: dict[str, Any] = {"k1": k1(data)}
    checks = [_check("fundamental_relations", True)]
    v1 = j1(data)
    result["j1"] = v1
    w2 = j2(data)
    if isinstance(w2, Indeterminate):
        result["j2"] = None
        result["j2_upper_bound"] = w2.upper_bound
    else:
        result["j2"] = w2
    ire_p = index_reduction_exponent(data, Component.PLUS)
    ire_m = index_reduction_exponent(data, Component.MINUS)
    result["index_reduction"] = {"+": ire_p, "-": ire_m}
    checks.append(_check("j1_is_max_of_index_reductions", v1 == max(ire_p, ire_m)))
    if data.iplus == 0 or data.iminus == 0:
        hs = j1_halfspin(data)
        result["j1_halfspin"] = hs
        checks.append(_check("halfspin_agrees", hs == v1))
    if args.j is not None:
        prof = registry.get(DynkinType("D", args.n), 2)
        J = JInvariant(prof, args.j)
        result["J"] = list(J.components)
        result["J_over_FA"] = list(split_over_FA(data, J).components)
    return result, checks


def cmd_selfcheck(args, registry):
    results = run_all(registry, quick=args.quick)
    checks = [r.to_dict() for r in results]
    return {"suites": len(results), "all_passed": all(r.passed for r in results)}, checks


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--profiles", help="profile document (JSON); default: $JINV_PROFILES or bundled")
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    parser = _Parser(prog="jinv", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poincare", parents=[common], help="Poincaré polynomials of flag varieties")
    _add_type_args(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--flag", action="store_true", help="G/B")
    g.add_argument("--parabolic", type=_ints, metavar="THETA", help="G/P with Levi spanned by THETA")
    g.add_argument("--severi-brauer", type=int, metavar="N", help="SB of a degree N algebra")
    p.add_argument("--oracle", action="store_true", help="cross-check G/B by Weyl group BFS")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("profile", parents=[common], help="profile registry lookup / validation")
    _add_type_args(p)
    p.add_argument("--p", type=int)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("motive", parents=[common], help="upper motive and twist decompositions")
    _add_type_args(p)
    p.add_argument("--p", type=int)
    p.add_argument("--degrees", type=_ints)
    p.add_argument("--bounds", type=_ints)
    p.add_argument("--j", type=_ints)
    p.add_argument("--px", type=_ints, metavar="COEFFS")
    p.add_argument("--px-sb", type=int, metavar="N")
    p.add_argument("--px-flag", action="store_true")
    p.add_argument("--px-parabolic", type=_ints, metavar="THETA")
    p.add_argument("--admissible", action="store_true")
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(func=cmd_motive)

    p = sub.add_parser("split", parents=[common], help="generic splitting of a Tits algebra")
    _add_type_args(p)
    p.add_argument("--p", type=int)
    p.add_argument("--degrees", type=_ints)
    p.add_argument("--bounds", type=_ints)
    p.add_argument("--j", type=_ints, required=True)
    p.add_argument("--n", type=int, required=True, help="degree of the Tits algebra")
    p.add_argument("--jga", type=int, required=True)
    p.add_argument("--after", type=_ints, help="check this J' instead of computing it")
    p.add_argument("--p-primary", action="store_true", help="replace n by its p-primary part")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("typeD", parents=[common], help="type D_n with orthogonal involution")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--iA", type=int, required=True)
    p.add_argument("--iplus", type=int, required=True)
    p.add_argument("--iminus", type=int, required=True)
    p.add_argument("--j", type=_ints, help="J-invariant to reduce over F_A")
    p.set_defaults(func=cmd_typed)

    p = sub.add_parser("selfcheck", parents=[common], help="run all oracle suites")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def _render_pretty(report: dict[str, Any]) -> str:
    lines = [f"jinv {' '.join(report['request']['argv'])}", f"status: {report['status']}"]
    for key, value in report.get("result", {}).items():
        if isinstance(value, list) and value and all(isinstance(c, int) for c in value) and key in (
            "polynomial", "F", "motive_poincare", "P_X", "chow_ring_of_group"
        ):
            value = str(IntPoly(value))
        lines.append(f"  {key}: {value}")
    for c in report.get("checks", []):
        mark = "ok  " if c["passed"] else "FAIL"
        lines.append(f"  [{mark}] {c['name']}")
    if "error" in report:
        lines.append(f"  error ({report['error']['kind']}): {report['error']['message']}")
        for k, v in report["error"].get("witness", {}).items():
            lines.append(f"    {k}: {v}")
    return "\n".join(lines)


def run(argv: Sequence[str]) -> tuple[int, dict[str, Any]]:
    argv = list(argv)
    report: dict[str, Any] = {"tool": "jinv", "version": __version__, "request": {"argv": argv}}
    code = EXIT_OK
    try:
        args = build_parser().parse_args(argv)
        report["request"]["command"] = args.command
        report["request"]["params"] = {
            k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "pretty")
        }
        registry = resolve_profiles(args.profiles)
        report["request"]["profiles_source"] = registry.origin
        result, checks = args.func(args, registry)
        report["result"] = _jsonable(result)
        report["checks"] = checks
        ok = all(c["passed"] for c in checks)
        report["status"] = "ok" if ok else "check_failed"
        code = EXIT_OK if ok else EXIT_INCONSISTENT
    except Inconsistency as exc:
        report["status"] = "inconsistent"
        report["error"] = {
            "kind": type(exc).__name__,
            "message": str(exc),
            "witness": _jsonable(exc.witness),
        }
        code = EXIT_INCONSISTENT
    except (InputError, JInvariantError) as exc:
        report["status"] = "error"
        report["error"] = {"kind": type(exc).__name__, "message": str(exc)}
        code = EXIT_INPUT
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        code, report = run(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    if "--pretty" in argv:
        sys.stdout.write(_render_pretty(report) + "\n")
    else:
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
