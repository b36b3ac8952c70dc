"""Command line interface: ``ivgamma <command> [options]``.

Exit status is 0 on success, 1 when a verification report contains a
failing record, 2 on usage errors and 3 when a resource guard trips.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import __version__
from . import balanced_ffk as bf
from . import eulerian as eu
from . import local_h as lh
from . import signed_permutations as sp
from .gamma_main import gamma_int, gamma_int_geometric, h_int_from_h
from .interval import interval_subdivision
from .polynomials import gamma_expand
from .report import VerificationReport
from .simplicial import GENERATORS, generators, load_complex
from .suites import SUITES, Options, resolve

log = logging.getLogger("ivgamma")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", "--report", dest="out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument("--max-n", type=int, default=7, help="largest n for enumeration (default 7)")
    p.add_argument("--max-dim", type=int, default=3, help="largest base dimension to subdivide (default 3)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for B_n tables")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")
    p.add_argument("--allow-n9", action="store_true", help="permit n = 9 enumeration")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ivgamma", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ivgamma {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("subdivide", parents=[common], help="build Int(Δ)")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", type=Path, help="complex JSON: 'vertices' (labels) and 'facets' (lists of indices into 'vertices')")
    src.add_argument("--generator", choices=sorted(GENERATORS))
    s.add_argument("--n", type=int, help="generator size")

    s = sub.add_parser("table", parents=[common], help="B_n statistics tables")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--stat", choices=("bpjk", "bpp", "bmp", "slides"), default="bpjk")

    s = sub.add_parser("eulerian", parents=[common], help="refined type B Eulerian polynomials")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--j", type=int, help="signed first letter; omit for the class polynomials")
    s.add_argument("--family", choices=("plain", "symmetric", "tilde"), default="symmetric")
    s.add_argument("--gamma", action="store_true", help="also print the γ-vector")

    s = sub.add_parser("gamma-int", parents=[common], help="γ(Int Δ) from a symmetric h-vector")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--h", type=_int_list)
    src.add_argument("--input", type=Path, help="complex JSON, same layout as subdivide --input")
    s.add_argument("--cross-check", action="store_true", help="also build Int(Δ) and compare")

    s = sub.add_parser("local-h", parents=[common], help="local h-polynomial of Int(2^[n])")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--route", choices=lh.ROUTES + ("all",), default="all")

    s = sub.add_parser("ffk", parents=[common], help="decide whether f is a k-FFK vector")
    s.add_argument("--f", type=_int_list, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--realize", action="store_true", help="print the compressed complex")

    s = sub.add_parser("dec", parents=[common], help="the decorated-permutation complex")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--check-balanced", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", default="all", help=f"comma list from: all, errata, {', '.join(SUITES)}")
    s.add_argument("--errata-only", action="store_true", help="emit only corrected-form records")
    return parser


# commands --------------------------------------------------------------------


def _emit(args, payload) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_subdivide(args):
    if args.input:
        base = load_complex(args.input)
    else:
        if args.n is None:
            raise ValueError("subdivide --generator needs --n")
        base = generators(args.generator, args.n)
    if base.dim > args.max_dim:
        raise sp.ResourceGuardError(f"base dimension {base.dim} exceeds --max-dim {args.max_dim}")
    sub = interval_subdivision(base)
    cx = sub.complex
    if args.format == "csv":
        _emit(args, _csv([["facet"]] + [[" ".join(repr(v) for v in sorted(F, key=lambda v: v.sort_key))]
                                         for F in cx.facets()]))
        return EXIT_OK
    data = cx.to_json(label=lambda iv: iv.to_json())
    data["f_vector"] = list(cx.f_vector())
    data["h_vector"] = list(cx.h_polynomial().coeffs)
    data["base"] = base.to_json()
    _emit(args, data)
    return EXIT_OK


def cmd_table(args):
    tab = sp.stat_tables(args.n, workers=args.threads).table(args.stat)
    _emit(args, tab.to_csv() if args.format == "csv" else {"n": args.n, "stat": args.stat} | tab.to_json())
    return EXIT_OK


def cmd_eulerian(args):
    n = args.n
    sp.check_bound(n)
    if args.threads > 1:
        sp.stat_tables(n, workers=args.threads)
    if args.j is None:
        polys = eu.class_polys(n)
        rows = {k: p.to_json() for k, p in polys.items()}
        if args.gamma:
            rows["gamma(B_n)"] = gamma_expand(polys["B"], n).to_json()
        if args.format == "csv":
            _emit(args, _csv([["name", "coefficients"]] + [[k, " ".join(map(str, v if isinstance(v, list) else
                                                                          v["entries"]))] for k, v in rows.items()]))
        else:
            _emit(args, {"n": n} | rows)
        return EXIT_OK
    p, D = eu.family_poly(n, args.j, args.family)
    out = {"n": n, "j": args.j, "family": args.family, "ref_degree": D, "polynomial": p.to_json()}
    if args.gamma:
        out["gamma"] = eu.gamma_nj(n, args.j, args.family).to_json()
    if args.format == "csv":
        rows = [["degree", "coefficient"]] + [[i, c] for i, c in enumerate(p.coeffs)]
        if args.gamma:
            rows += [["gamma_index", "gamma"]] + [[i, c] for i, c in enumerate(out["gamma"]["entries"])]
        _emit(args, _csv(rows))
    else:
        _emit(args, out)
    return EXIT_OK


def cmd_gamma_int(args):
    if args.h is not None:
        h = args.h
        geo = None
    else:
        cx = load_complex(args.input)
        hp = cx.h_polynomial()
        h = tuple(hp[i] for i in range(cx.dim + 2))
        geo = gamma_int_geometric(cx) if args.cross_check else None
    g = gamma_int(h)
    out = {"h": list(h), "h_int": h_int_from_h(h).to_json(), "gamma": g.to_json()}
    if geo is not None:
        out["cross_check"] = {"geometric": geo.to_json(), "agrees": geo == g}
    if args.format == "csv":
        _emit(args, _csv([["index", "gamma"]] + [[i, x] for i, x in enumerate(g.entries)]))
    else:
        _emit(args, out)
    return EXIT_OK


def cmd_local_h(args):
    routes = lh.ROUTES if args.route == "all" else (args.route,)
    results = [lh.local_h(args.n, r) for r in routes]
    agree = len({r.ell for r in results}) == 1
    if args.format == "csv":
        _emit(args, _csv([["route", "ell", "xi"]] + [[r.route, " ".join(map(str, r.ell.coeffs)),
                                                      " ".join(map(str, r.xi.entries))] for r in results]))
    else:
        _emit(args, {"n": args.n, "results": [r.to_json() for r in results], "routes_agree": agree,
                     "excedance_interpretation": {"excedance": sp.CALIBRATED.excedance,
                                                  "star": sp.CALIBRATED.star}})
    return EXIT_OK if agree else EXIT_FAIL


def cmd_ffk(args):
    dec = bf.ffk_decision(args.f, args.k)
    out = dec.to_json()
    if args.realize and dec.ok:
        cx, _ = bf.realize_ffk(args.f, args.k)
        out["complex"] = cx.to_json()
    if args.format == "csv":
        _emit(args, _csv([["f", "k", "ok", "reason"], [" ".join(map(str, dec.f)), dec.k, dec.ok, dec.reason]]))
    else:
        _emit(args, out)
    return EXIT_OK


def cmd_dec(args):
    n = args.n
    dc = bf.dec_complex(n, validate=args.check_balanced)
    f = dc.complex.f_vector()
    out = {"n": n, "f_vector": list(f), "gamma_B": list(eu.gamma_B(n).entries)}
    out["matches_gamma"] = tuple(f) == eu.gamma_B(n).entries
    if args.check_balanced:
        out["balanced"] = dc.complex.is_balanced_coloring(dc.coloring)
    ok = out["matches_gamma"] and out.get("balanced", True)
    if args.format == "csv":
        _emit(args, _csv([["i", "f_i", "gamma_i"]] + [[i, a, b] for i, (a, b) in enumerate(zip(f, out["gamma_B"]))]))
    else:
        _emit(args, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args):
    try:
        names = resolve(args.suite)
    except KeyError as e:
        print(f"ivgamma verify: unknown suite {e.args[0]!r}; choose from all, errata, {', '.join(SUITES)}",
              file=sys.stderr)
        return EXIT_USAGE
    sp.check_bound(args.max_n)
    if args.threads > 1:
        for n in range(1, args.max_n + 1):
            sp.stat_tables(n, workers=args.threads)
    opts = Options(max_n=args.max_n, max_dim=args.max_dim, seed=args.seed)
    report = VerificationReport(suites=names)
    for name in names:
        log.info("suite %s", name)
        report.extend(SUITES[name](opts))
    if args.errata_only or args.suite.strip() == "errata":
        failures = report.failures
        report.records = report.errata() + failures
    _emit(args, report.dumps(args.format))
    counts = report.counts()
    print(" ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "subdivide": cmd_subdivide,
    "table": cmd_table,
    "eulerian": cmd_eulerian,
    "gamma-int": cmd_gamma_int,
    "local-h": cmd_local_h,
    "ffk": cmd_ffk,
    "dec": cmd_dec,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    if args.allow_n9:
        sp.LIMITS["max_n"] = sp.HARD_MAX_N
    if args.max_n > sp.LIMITS["max_n"]:
        print(f"ivgamma: --max-n {args.max_n} exceeds the bound {sp.LIMITS['max_n']}"
              + (" (use --allow-n9)" if args.max_n == sp.HARD_MAX_N else ""), file=sys.stderr)
        return EXIT_GUARD
    try:
        return COMMANDS[args.command](args)
    except sp.ResourceGuardError as e:
        print(f"ivgamma: resource guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, IndexError, OSError) as e:
        print(f"ivgamma: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        sp.LIMITS["max_n"] = sp.DEFAULT_MAX_N


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
