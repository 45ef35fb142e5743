"""Command-line front end: group spectra, prime graphs, catalog
enumeration, oracle cross-checks and the mechanized case verification.

Exit status: 0 on success (and verified cases), 1 on verification failure
or a domain error (unsupported family, oracle mismatch), 2 on usage
errors.  The environment variable GK_SEED (decimal or 0x-hex) overrides
the oracle sampling seed.
"""

import argparse
import json
import os
import re
import sys

from . import catalog, graph, oracle, spectra, verifier
from .catalog import GroupId

TABLE_GROUPS = ("S4(31)", "U3(27)", "G2(11)", "U4(31)")


class DomainError(Exception):
    """Semantically invalid request (reported on stderr, exit 1)."""


def parse_selector(family: str, param: str) -> GroupId:
    if family in ("A", "Alt"):
        return GroupId("A", n=int(param))
    if re.fullmatch(r"2B2|2G2|2F4|2E6|3D4|G2|F4|E6|E7|E8", family):
        return GroupId(family, q=int(param))
    m = re.fullmatch(r"(O\+|O-|[LUSO])(\d+)", family)
    if m:
        return GroupId(m.group(1), n=int(m.group(2)), q=int(param))
    raise DomainError(f"unknown family selector {family!r}")


def _seed() -> int:
    raw = os.environ.get("GK_SEED")
    if raw is None:
        return oracle.DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError as exc:
        raise DomainError(f"GK_SEED must be decimal or 0x-hex, got {raw!r}") from exc


def _json_print(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def cmd_table1(args) -> int:
    rows = [("S", "|S|", "mu(S)", "D(S)")]
    for label in TABLE_GROUPS:
        g = catalog.parse_label(label)
        order = catalog.order_of(g)
        mu = spectra.spectrum_of(g)
        gk = graph.build_gk(order, mu)
        rows.append((label, str(order),
                     ", ".join(str(m) for m in mu),
                     str(graph.degree_pattern(gk))))
    widths = [max(len(r[i]) for r in rows) for i in range(4)]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return 0


def cmd_spectrum(args) -> int:
    g = parse_selector(args.family, args.param)
    try:
        mu = spectra.spectrum_of(g)
    except (spectra.SpectrumNotImplementedError,
            spectra.UnsupportedParameterError, catalog.ParameterError) as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        _json_print({"group": g.label(), "mu": list(mu.mu), "source": mu.source})
    else:
        print(f"mu({g.label()}) = {mu}  [{mu.source}]")
    return 0


def _graph_of(g: GroupId):
    try:
        return catalog.order_of(g), spectra.spectrum_of(g)
    except (spectra.SpectrumNotImplementedError,
            spectra.UnsupportedParameterError, catalog.ParameterError) as exc:
        raise DomainError(str(exc)) from exc


def cmd_graph(args) -> int:
    g = parse_selector(args.family, args.param)
    order, mu = _graph_of(g)
    gk = graph.build_gk(order, mu)
    if args.dot:
        sys.stdout.write(graph.to_dot(gk))
        return 0
    dp = graph.degree_pattern(gk)
    comps = graph.components(gk, order)
    if args.json:
        _json_print({
            "group": g.label(),
            "graph": gk.json_dict(),
            "degree_pattern": dp.json_dict(),
            "order_components": comps.json_dict(),
        })
        return 0
    t, wit = graph.independence(gk)
    print(f"GK({g.label()}): |pi| = {len(gk.vertices)}, edges = {len(gk.edges)}")
    print(f"  vertices: {', '.join(str(v) for v in gk.vertices)}")
    print(f"  edges:    {', '.join(f'{p}~{q}' for p, q in gk.edges)}")
    print(f"  D = {dp}")
    for i, (ps, m) in enumerate(comps.components, 1):
        print(f"  component {i}: {{{', '.join(str(p) for p in ps)}}}  m_{i} = {m}")
    print(f"  t = {t}, witness {{{', '.join(str(v) for v in wit)}}}")
    if 2 in gk.vertices:
        t2, wit2 = graph.independence_at(gk, 2)
        print(f"  t(2) = {t2}, witness {{{', '.join(str(v) for v in wit2)}}}")
    dec = graph.suzuki_decomposition(gk)
    if dec.ok:
        sizes = ", ".join(f"K{s}" for s in dec.clique_sizes) or "none"
        print(f"  clique components beyond the first: {sizes}")
    else:
        print(f"  clique decomposition violated at {dec.violation}")
    return 0


def cmd_enumerate(args) -> int:
    caps = catalog.DEFAULT_CAPS
    if args.caps:
        caps = catalog.SearchCaps.from_file(args.caps)
    if args.show_caps:
        sys.stdout.write(caps.to_text())
        return 0
    groups = catalog.enumerate_S_p(args.max_prime, caps)
    labels = [g.label() for g in groups]
    agrees = None
    if args.max_prime == 37:
        agrees = labels == [g.label() for g in catalog.s37_reference()]
    if args.json:
        out = {"max_prime": args.max_prime,
               "caps": {"max_prime": caps.max_prime,
                        "max_field_exponent": caps.max_field_exponent,
                        "max_rank": caps.max_rank,
                        "max_alt_degree": caps.max_alt_degree},
               "count": len(labels), "groups": labels}
        if agrees is not None:
            out["agrees_with_published"] = agrees
        _json_print(out)
    else:
        print(f"simple groups S with {args.max_prime} in pi(S) <= "
              f"{{2..{args.max_prime}}} within caps: {len(labels)}")
        for lab in labels:
            print(f"  {lab}")
        print(f"caps: max_field_exponent={caps.max_field_exponent}, "
              f"max_rank={caps.max_rank}, max_alt_degree={caps.max_alt_degree}")
        if agrees is not None:
            print("agrees with the published 13-group list"
                  if agrees else "DISAGREES with the published list")
    if agrees is False:
        return 1
    return 0


def cmd_verify(args) -> int:
    g = parse_selector(args.family, args.param)
    try:
        report = verifier.verify_case(g)
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    if args.json:
        _json_print(report.to_json_dict())
    else:
        print(f"case {report.group}: verdict {report.verdict}")
        print(f"  family size {report.family_size} for pattern of {report.group}")
        if report.forced is not None:
            print(f"  pivot {report.pivot}: {report.forced['count']} member(s) "
                  f"carry it; all equal GK(S): {report.forced['all_equal_gk']}")
        alt = report.alternatives
        print(f"  alternatives: {alt['count']} graph(s), all satisfy "
              f"t>=3 and t(2)>=2: {alt['all_vasiliev_applicable']}")
        filt = report.filter
        print(f"  filter by {filt['required']}: divisibility -> "
              f"{filt['divisibility']}, survivors -> {filt['survivors']}")
        print("  assumed facts:")
        for fact in report.assumed_facts:
            print(f"    - {fact}")
    return 0 if report.verdict == verifier.VERIFIED else 1


def cmd_oracle(args) -> int:
    name = args.target
    if name in oracle.HEAVY_TARGETS and not args.heavy:
        raise DomainError(
            f"{name} is a heavy target (closure up to 9.4e6 elements, "
            "~0.7 GB peak); pass --heavy to run it")
    try:
        res = oracle.run_target(name, seed=_seed())
    except ValueError as exc:
        raise DomainError(str(exc)) from exc
    print(f"{res.target}: enumerated {res.enumerated}")
    print(f"  oracle mu:  {res.mu_oracle}")
    print(f"  formula mu: {res.mu_formula}")
    print(f"  match: {res.match}")
    return 0 if res.match else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gk",
        description="Spectra, prime graphs and degree patterns of finite "
                    "simple groups, with a mechanized uniqueness checker.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    sub.add_parser("table1", help="orders, spectra and degree patterns of "
                                  "the four verified groups")

    sp = sub.add_parser("spectrum", help="maximal element orders mu(S)")
    sp.add_argument("family", help="family selector: A, L2, U3, U4, S4, G2, ...")
    sp.add_argument("param", help="field size q, or degree n for A")
    sp.add_argument("--json", action="store_true")

    gp = sub.add_parser("graph", help="prime graph and its statistics")
    gp.add_argument("family")
    gp.add_argument("param")
    fmt = gp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit DOT text")
    fmt.add_argument("--json", action="store_true")

    ep = sub.add_parser("enumerate", help="simple groups with largest prime "
                                          "divisor p, within search caps")
    ep.add_argument("--max-prime", type=int, default=37)
    ep.add_argument("--caps", help="caps file (key = value lines)")
    ep.add_argument("--show-caps", action="store_true")
    ep.add_argument("--json", action="store_true")

    vp = sub.add_parser("verify", help="mechanized case analysis")
    vp.add_argument("family")
    vp.add_argument("param")
    vp.add_argument("--json", action="store_true")

    op = sub.add_parser("oracle", help="brute-force spectrum cross-check")
    op.add_argument("target", help=f"one of: {', '.join(oracle.ORACLE_TARGETS)}")
    op.add_argument("--heavy", action="store_true",
                    help="allow the large closures (SP4_5, SL2_37)")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    handler = {
        "table1": cmd_table1,
        "spectrum": cmd_spectrum,
        "graph": cmd_graph,
        "enumerate": cmd_enumerate,
        "verify": cmd_verify,
        "oracle": cmd_oracle,
    }[args.cmd]
    try:
        return handler(args)
    except DomainError as exc:
        print(f"gk: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
