"""Command-line interface: analyze, dual, series, catalog, verify.

Inputs use the grammar ``n=<int>; e={d:v,...}`` (whitespace-insensitive, all
divisors of n required) or the equivalent JSON object {"n": ..., "e": {...}}.
Exit codes: 0 for pass (documented flags allowed), 1 for a verification
failure, 2 for usage or parse errors.  All randomness flows from --seed, and
output for a fixed seed and sizes is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from .dirichlet import (
    g_transforms,
    mobius_series,
    unit_series,
    zeta_series,
)
from .exactpoly import ONE, PolynomialQ, RationalFunctionQ
from .report import json_safe
from .verify import SCOPE_SUITES, SuiteConfig, run_scope, summarize
from .zetaprod import (
    ZetaParseError,
    ZetaProduct,
    cyclotomic_exponents,
    multiplicities,
    parse_zeta_product,
    power_sums,
    ramanujan_coefficients,
    saito_dual,
    saito_transform,
    star_functions,
    to_rational_function,
)

_SERIES_MAKERS = {"zeta": zeta_series, "unit": unit_series, "mobius": mobius_series}


def _analyze_payload(z: ZetaProduct) -> dict:
    n = z.n
    m = multiplicities(z)
    p = power_sums(z)
    mstar, pstar = star_functions(z)
    r = ramanujan_coefficients(m)
    rf = to_rational_function(z)
    one_minus_qn = ONE - PolynomialQ.monomial(n)
    m_series = RationalFunctionQ(PolynomialQ([m(k) for k in range(n)]), one_minus_qn)
    p_series = RationalFunctionQ(PolynomialQ([p(k) for k in range(n)]), one_minus_qn)
    return {
        "n": n,
        "e": {str(d): v for d, v in z.e.items()},
        "mu_e": z.mu_e,
        "m": list(m.values),
        "p": list(p.values),
        "mstar": list(mstar.values),
        "pstar": list(pstar.values),
        "ramanujan_m": [str(v) for v in r.values],
        "zeta": str(rf),
        "cyclotomic_exponents": {str(d): v for d, v in cyclotomic_exponents(rf, n).items()},
        "m_line": {str(d): z.e[n // d] for d in sorted(z.e.values)},
        "p_line": {str(d): d * z.e[d] for d in sorted(z.e.values)},
        "m_series_form": str(m_series),
        "p_series_form": str(p_series),
    }


def _emit(args, command: str, status: str, payload: dict) -> None:
    if args.format == "json":
        doc = {
            "command": getattr(args, "_echo", command),
            "status": status,
            "payload": json_safe(payload),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _cmd_analyze(args) -> int:
    z = parse_zeta_product(args.input)
    payload = _analyze_payload(z)
    _emit(args, "analyze", "pass", payload)
    return 0


def _cmd_dual(args) -> int:
    z = parse_zeta_product(args.input)
    payload = {
        "input": z.to_text(),
        "transform": saito_transform(z).to_text(),
        "dual": saito_dual(z).to_text(),
    }
    _emit(args, "dual", "pass", payload)
    return 0


def _cmd_series(args) -> int:
    z = parse_zeta_product(args.input)
    which = args.which
    payload = {"n": z.n, "order": args.order, "kind": args.kind}
    if args.kind == "dirichlet":
        G = _SERIES_MAKERS[args.G](args.order)
        t = g_transforms(z, G)
        table = {"m": t.m, "p": t.p, "mstar": t.mstar, "pstar": t.pstar}
        payload["G"] = args.G
        for key in (["m", "p", "mstar", "pstar"] if which == "all" else [which]):
            payload[key] = [str(c) if not isinstance(c, int) else c for c in table[key].coeffs]
    else:
        # q-power-series transforms against the geometric coefficient series
        from .exactpoly import PowerSeriesQ
        from .dirichlet import ps_g_transforms

        g = PowerSeriesQ([0] + [1] * (args.order - 1), args.order)
        m_ps, p_ps = ps_g_transforms(z, g)
        table = {"m": m_ps, "p": p_ps}
        for key in (["m", "p"] if which in ("all", "mstar", "pstar") else [which]):
            payload[key] = [str(c) if not isinstance(c, int) else c for c in table[key].coeffs]
    _emit(args, "series", "pass", payload)
    return 0


def _cmd_catalog(args) -> int:
    if args.action == "list":
        payload = {
            "entries": [
                {"name": e.name, "n": e.n, "source": e.source} for e in catalog_mod.entries()
            ],
            "families": ["A_<rank>", "D_<rank>"],
        }
        if args.format == "json":
            _emit(args, "catalog", "pass", payload)
        else:
            for e in catalog_mod.entries():
                print(f"{e.name:6s} n={e.n:<3d} [{e.source}]")
            print("families: A_<rank> (rank >= 1), D_<rank> (rank >= 3)")
        return 0
    if args.action == "get":
        if not args.name:
            raise ValueError("catalog get needs an entry name")
        entry = catalog_mod.get(args.name)
        _emit(args, "catalog", "pass", entry.to_json_dict())
        return 0
    if args.action == "verify":
        if args.name:
            reports = [catalog_mod.verify_entry(catalog_mod.get(args.name))]
        else:
            reports = catalog_mod.verify_all(max_family_rank=12)
            reports.append(catalog_mod.saito_dual_pairs())
        failures = [r for r in reports if r.status == "fail"]
        flags = [f for r in reports for f in r.flags]
        status = "fail" if failures else ("flagged" if flags else "pass")
        if args.format == "json":
            _emit(args, "catalog", status, {"reports": [r.to_dict() for r in reports]})
        else:
            for r in reports:
                name = r.context.get("name", r.check)
                print(f"[{r.status.upper():7s}] {name}")
                for f in r.flags:
                    print(f"          flag: {f}")
                for mm in r.mismatches:
                    print(f"          mismatch: {mm}")
            print(f"status: {status}  flags: {len(flags)}  failures: {len(failures)}")
        return 1 if failures else 0
    raise ValueError(f"unknown catalog action {args.action!r}")


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        nmax=args.nmax,
        order=args.order,
        trials=args.trials,
        ns=tuple(args.n) if args.n else None,
        index=args.index,
    )
    reports = run_scope(args.scope, cfg)
    summary = summarize(reports)
    if args.format == "json":
        doc = {
            "command": getattr(args, "_echo", f"verify {args.scope}"),
            "seed": args.seed,
            "suites": [r.to_dict() for r in reports],
            "summary": summary,
        }
        if args.scope == "example":
            doc["examples"] = [d for r in reports for d in getattr(r, "example_docs", [])]
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for r in reports:
            print(f"[{r.status.upper():7s}] {r.check}")
            for f in r.flags:
                print(f"          flag: {f}")
            for mm in r.mismatches[:5]:
                print(f"          mismatch: {json_safe(mm)}")
        print(
            f"status: {'pass' if summary['failures'] == 0 else 'fail'}"
            f"  flags: {summary['flags']}  failures: {summary['failures']}"
        )
    return 1 if summary["failures"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclozeta",
        description="Exact analysis and verification of cyclotomic products.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def subparser(name, **kwargs):
        p = sub.add_parser(name, **kwargs)
        # accepted before or after the subcommand; SUPPRESS keeps the
        # global value when the local flag is absent
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        return p

    p = subparser("analyze", help="root data, transforms and generating forms")
    p.add_argument("input", help="n=<int>; e={d:v,...} or the JSON mirror")
    p.set_defaults(func=_cmd_analyze)

    p = subparser("dual", help="print the exponent reindexing and its inverse")
    p.add_argument("input")
    p.set_defaults(func=_cmd_dual)

    p = subparser("series", help="truncated Dirichlet or q-power-series transforms")
    p.add_argument("input")
    p.add_argument("--G", choices=sorted(_SERIES_MAKERS), default="zeta")
    p.add_argument("--kind", choices=("dirichlet", "power"), default="dirichlet")
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--which", choices=("m", "p", "mstar", "pstar", "all"), default="all")
    p.set_defaults(func=_cmd_series)

    p = subparser("catalog", help="list/get/verify the singularity catalog")
    p.add_argument("action", choices=("list", "get", "verify"))
    p.add_argument("name", nargs="?")
    p.set_defaults(func=_cmd_catalog)

    p = subparser("verify", help="run verification suites")
    p.add_argument("scope", choices=sorted(SCOPE_SUITES))
    p.add_argument("--index", type=int, default=None, help="proposition or example index")
    p.add_argument("--n", type=int, action="append", help="restrict to these conductors")
    p.add_argument("--nmax", type=int, default=60)
    p.add_argument("--order", type=int, default=200)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._echo = "cyclozeta " + " ".join(argv if argv is not None else sys.argv[1:])
    try:
        return args.func(args)
    except ZetaParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
