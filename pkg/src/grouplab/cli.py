"""Command-line interface: ``grouplab <command> ...``.

Exit codes: 0 when no FAIL verdict was produced, 2 when one was, 1 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import structure as st
from .constructions import (BUILTIN_IDS, FactorizedFixture, GroupSpec, builtin_example, construct,
                            fixture_from_group, sweep_catalog)
from .errors import CapExceeded, GroupLabError
from .factorization import find_factorizations
from .groupfile import parse_fixture_file, write_fixture_file, format_generators
from .kernels import BACKEND
from .numtheory import prime_factors
from .predicates import (is_abelian, is_nilpotent, is_p_nilpotent, is_p_soluble,
                         is_p_supersoluble, is_soluble, is_supersoluble)
from .verify import (FAIL, THEOREMS, SweepOptions, check_cw_gap, emit_report, normalize_theorem,
                     sweep, verify, verify_all_primes)

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


def load_fixture(source: str) -> FactorizedFixture:
    """``builtin:ID`` or a generator file (A and B default to G)."""
    if source.startswith("builtin:"):
        return builtin_example(source[len("builtin:"):])
    if source in BUILTIN_IDS:
        return builtin_example(source)
    return parse_fixture_file(source)


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------ commands

def cmd_construct(args) -> int:
    if args.kind == "spec":
        text = args.param
    else:
        text = f"{args.kind}:{args.param}" if args.param else args.kind
    spec = GroupSpec.parse(text)
    G = construct(spec)
    _write_or_print(format_generators(G.degree, G.generators, comment=spec.label()), args.out)
    if args.out:
        print(f"wrote {spec.label()} (order {G.order}, degree {G.degree}) to {args.out}")
    return EXIT_OK


def _safe(fn):
    try:
        return fn()
    except CapExceeded as exc:
        return f"unavailable ({exc})"


def analyze_group(G) -> dict:
    W = G.whole()
    sizes = Counter(int(s) for s in st.class_size_array(G))
    primes = prime_factors(G.order) if G.order > 1 else []
    order = lambda S: S.order  # noqa: E731
    data = {
        "order": G.order,
        "degree": G.degree,
        "class_sizes": {str(k): v for k, v in sorted(sizes.items())},
        "center": order(st.center(W)),
        "derived": order(st.derived_subgroup(W)),
        "frattini": _safe(lambda: order(st.frattini(W))),
        "fitting": order(st.fitting(W)),
        "socle": order(st.socle(W)),
        "p_cores": {str(p): order(st.p_core(W, p)) for p in primes},
        "chief_factors": list(st.chief_series(W).factor_orders),
        "predicates": {
            "abelian": is_abelian(G),
            "nilpotent": is_nilpotent(G),
            "supersoluble": is_supersoluble(G),
            "soluble": is_soluble(G),
        },
        "p_predicates": {
            str(p): {"p_nilpotent": is_p_nilpotent(G, p), "p_soluble": is_p_soluble(G, p),
                     "p_supersoluble": is_p_supersoluble(G, p)}
            for p in primes
        },
    }
    return data


def cmd_analyze(args) -> int:
    fx = load_fixture(args.file)
    data = analyze_group(fx.G)
    data = {"label": fx.label, **data}
    if args.json:
        print(json.dumps(data, indent=2))
        return EXIT_OK
    print(f"{fx.label}: order {data['order']} on {data['degree']} points")
    sizes = ", ".join(f"{k}x{v}" for k, v in data["class_sizes"].items())
    print(f"  class sizes (size x count): {sizes}")
    for key in ("center", "derived", "frattini", "fitting", "socle"):
        print(f"  |{key}| = {data[key]}")
    for p, n in data["p_cores"].items():
        print(f"  |O_{p}| = {n}")
    print(f"  chief factor orders: {data['chief_factors']}")
    for name, val in data["predicates"].items():
        print(f"  {name:<14} {'yes' if val else 'no'}")
    for p, preds in data["p_predicates"].items():
        row = "  ".join(f"{k.replace('p_', p + '-')}={'yes' if v else 'no'}" for k, v in preds.items())
        print(f"  p={p}: {row}")
    return EXIT_OK


def cmd_factorize(args) -> int:
    fx = load_fixture(args.file)
    certs = find_factorizations(fx.G, mutually_permutable=args.mutually_permutable,
                                proper=args.proper, dedupe_conjugates=args.dedupe,
                                exhaustive=not args.cyclic_test)
    if args.json:
        rows = [{"a_order": c.A.order, "b_order": c.B.order,
                 "a_generators": [str(g) for g in c.A.generators],
                 "b_generators": [str(g) for g in c.B.generators],
                 "mutually_permutable": c.mutually_permutable} for c in certs]
        print(json.dumps({"label": fx.label, "group_order": fx.G.order, "factorizations": rows},
                         indent=2))
        return EXIT_OK
    print(f"{fx.label}: {len(certs)} factorization(s)")
    for c in certs:
        print(f"  {c.summary()}  A=<{', '.join(map(str, c.A.generators))}>"
              f"  B=<{', '.join(map(str, c.B.generators))}>")
    return EXIT_OK


def cmd_verify(args) -> int:
    theorem = normalize_theorem(args.theorem)
    fx = load_fixture(args.fixture)
    if args.p is not None or not THEOREMS[theorem][1]:
        reports = [verify(theorem, fx, args.p)]
    else:
        reports = verify_all_primes(theorem, fx)
    if args.json:
        payload = reports[0] if len(reports) == 1 else reports
        print(emit_report(payload, "json", timing=not args.no_timing))
    else:
        print(emit_report(reports, "human"))
    return EXIT_FAIL if any(r.verdict == FAIL for r in reports) else EXIT_OK


def cmd_cw_gap(args) -> int:
    fx = load_fixture(args.group)
    report = check_cw_gap(fx.G, args.p, label=fx.label)
    print(emit_report(report, "json" if args.json else "human"))
    # reproducing the failing claim is the expected outcome, not an anomaly
    return EXIT_OK


def _parse_theorems(text: str) -> list[str]:
    if text.strip().lower() in ("all", ""):
        return list(THEOREMS)
    return [normalize_theorem(t) for t in text.split(",") if t.strip()]


def cmd_sweep(args) -> int:
    if args.catalog != "builtin":
        raise UsageError("only --catalog builtin is available")
    theorems = _parse_theorems(args.theorems)
    opts = SweepOptions(max_order=args.max_order, keep_going=args.keep_going,
                        exhaustive=args.exhaustive, theorems=tuple(theorems),
                        primes=tuple(args.p) if args.p else None)
    catalog = sweep_catalog(args.max_order)

    def progress(label, n):
        if args.verbose:
            print(f"  {label}: {n} factorization(s)", file=sys.stderr)

    report = sweep(catalog, theorems, opts, progress=progress)
    print(emit_report(report, "human"))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(emit_report(report, "json", timing=not args.no_timing) + "\n")
    return EXIT_FAIL if report.counts[FAIL] else EXIT_OK


def cmd_example(args) -> int:
    fx = builtin_example(args.id)
    if args.out:
        write_fixture_file(fx, args.out)
        print(f"wrote {fx.label} (|G|={fx.G.order}, |A|={fx.A.order}, |B|={fx.B.order}) to {args.out}")
    else:
        G = fx.G
        sys.stdout.write(format_generators(G.degree, G.generators,
                                           {"A": fx.A.generators, "B": fx.B.generators},
                                           comment=fx.label))
    return EXIT_OK


# ------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouplab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a group and print its generator file")
    p.add_argument("--kind", required=True,
                   help="cyclic, dihedral, dicyclic, symmetric, alternating, metacyclic, "
                        "or 'spec' to pass a full spec such as 'dihedral:14 x metacyclic:7,3,2'")
    p.add_argument("--param", default="", help="comma separated parameters (or the spec text)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="structural summary of a group")
    p.add_argument("file", help="generator file or builtin:ID")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("factorize", help="list factorizations G = AB")
    p.add_argument("file", help="generator file or builtin:ID")
    p.add_argument("--mutually-permutable", action="store_true")
    p.add_argument("--proper", action="store_true")
    p.add_argument("--dedupe", action="store_true", help="one pair per simultaneous conjugacy class")
    p.add_argument("--cyclic-test", action="store_true",
                   help="test permutability against cyclic prime-power subgroups only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="check one theorem on a fixture")
    p.add_argument("--theorem", required=True,
                   help="KNOCHE, A, B, C, D, E, COR, ELEM or PNILP")
    p.add_argument("--p", type=int, help="prime (default: every prime dividing |G|)")
    p.add_argument("--fixture", required=True, help="fixture file or builtin:ID")
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="omit millis from json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cw-gap", help="test |G/O_p(G)|_p <= p under the p^2 class size condition")
    p.add_argument("--group", required=True, help="generator file or builtin:ID")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cw_gap)

    p = sub.add_parser("sweep", help="run verifiers over a catalog")
    p.add_argument("--catalog", default="builtin")
    p.add_argument("--max-order", type=int, default=100)
    p.add_argument("--theorems", default="KNOCHE,A,B,C,D,E,COR")
    p.add_argument("--p", type=int, action="append", help="restrict primes (repeatable)")
    p.add_argument("--keep-going", action="store_true")
    p.add_argument("--exhaustive", action="store_true",
                   help="test permutability against every subgroup of the factors")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("example", help="write a built-in fixture")
    p.add_argument("--id", required=True, help=", ".join(BUILTIN_IDS) + " or dihedral_chain(p,q,..)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (GroupLabError, UsageError, ValueError, OSError) as exc:
        print(f"grouplab: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
