"""Command-line interface.

Exit codes: 0 when the property holds or the command succeeded, 1 when it
fails (dBE fails, sweep failure, invalid certificate, graph not in class),
2 on usage or input errors.

Every verb ends its output with a machine-readable block of ``key=value``
lines in a fixed order; ``--quiet`` prints only that block.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bound import EPSILON, N0, first_nonnegative_n, inequality_margins, triple_sweep
from .certificate import Certificate, certify, verify_certificate
from .errors import GraphError, NotInClass
from .graph import graph_to_text, read_graph
from .lines import all_lines, check_dbe
from .twins import blob_stats, generate_instance, recognize_split_of_bipartite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(out, human: list[str], machine: list[tuple[str, object]], quiet: bool):
    if not quiet:
        for line in human:
            print(line, file=out)
    for key, value in machine:
        print(f"{key}={value}", file=out)


def cmd_lines(args, out):
    g = read_graph(args.graph)
    lines = all_lines(g)
    human = [" ".join(map(str, ln.members)) for ln in lines]
    _emit(out, human, [("n", g.n), ("lines", len(lines))], args.quiet)
    return EXIT_OK


def cmd_verify(args, out):
    g = read_graph(args.graph)
    v = check_dbe(g)
    universal = "no" if v.universal_pair is None else f"{v.universal_pair[0]},{v.universal_pair[1]}"
    human = [f"lines={v.distinct_line_count} universal={_yn(v.universal_pair is not None)} holds={_yn(v.holds)}"]
    machine = [
        ("n", g.n),
        ("lines", v.distinct_line_count),
        ("universal", universal),
        ("holds", _yn(v.holds)),
    ]
    _emit(out, human, machine, args.quiet)
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_recognize(args, out):
    g = read_graph(args.graph)
    bp = recognize_split_of_bipartite(g)
    if bp is None:
        _emit(out, ["not in class: twin quotient is not bipartite"], [("n", g.n), ("in_class", "no")], args.quiet)
        return EXIT_FAIL
    stats = blob_stats(g, bp)
    human = [f"base n={bp.base.n} m={bp.base.m}"]
    human.extend(
        f"blob {x}: {' '.join(map(str, blob))}{' (rich)' if len(blob) > 1 else ''}"
        for x, blob in enumerate(bp.blobs)
    )
    machine = [
        ("n", g.n),
        ("in_class", "yes"),
        ("base_n", bp.base.n),
        ("base_m", bp.base.m),
        ("p", stats.p),
        ("k", stats.k),
        ("map", ",".join(map(str, bp.f))),
    ]
    _emit(out, human, machine, args.quiet)
    return EXIT_OK


def cmd_generate(args, out):
    g, trace, _ = generate_instance(args.left, args.right, args.prob, args.splits, args.seed)
    text = graph_to_text(g)
    if args.trace:
        Path(args.trace).write_text(trace.to_text())
    if args.out:
        Path(args.out).write_text(text)
        _emit(out, [f"wrote {args.out}"], [("n", g.n), ("m", g.m), ("seed", args.seed)], args.quiet)
    else:
        out.write(text)
    return EXIT_OK


def cmd_sweep(args, out):
    report = triple_sweep(args.min, args.max, include_slack=not args.no_slack)
    human = [f"{n} {p} {k} bound={b}" for n, p, k, b in report.failures]
    human.append(report.summary())
    machine = [
        ("n_min", report.n_min),
        ("n_max", report.n_max),
        ("slack", _yn(report.include_slack)),
        ("triples", report.checked),
        ("failures", len(report.failures)),
        ("passed", _yn(report.passed)),
    ]
    _emit(out, human, machine, args.quiet)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_ineq(args, out):
    r = inequality_margins(args.epsilon, args.n)
    m3_zero = first_nonnegative_n(3, args.epsilon, start=args.n, stop=args.scan_max + 1)
    human = [f"margin({i}) = {m:+.6f} {'ok' if ok else 'NEGATIVE'}" for i, (m, ok) in enumerate(zip(r.margins, r.flags), 1)]
    human += [
        f"a2 = {r.aux['a2']:.6f} (printed ~{r.printed['a2']})",
        f"a3 = {r.aux['a3']:.6f} (printed ~{r.printed['a3']})",
        f"a4 = {r.aux['a4']:.6f} (printed < {r.printed['a4_upper']})",
        f"sqrt(n) = {r.aux['sqrt_n']:.6f} (printed > {r.printed['sqrt_n_lower']})",
    ]
    if r.m3_discrepancy:
        human.append("implication (3) fails at its binding point although its printed auxiliary value is positive")
    machine = [("epsilon", r.epsilon), ("n", r.n)]
    machine += [(f"m{i}", f"{m:.6f}") for i, m in enumerate(r.margins, 1)]
    machine += [(f"flag{i}", _yn(f)) for i, f in enumerate(r.flags, 1)]
    machine += [
        ("a2", f"{r.aux['a2']:.6f}"),
        ("a3", f"{r.aux['a3']:.6f}"),
        ("a4", f"{r.aux['a4']:.6f}"),
        ("sqrt_n", f"{r.aux['sqrt_n']:.6f}"),
        ("m3_discrepancy", _yn(r.m3_discrepancy)),
        ("m3_nonnegative_from", "none" if m3_zero is None else m3_zero),
    ]
    _emit(out, human, machine, args.quiet)
    return EXIT_OK


def cmd_certify(args, out):
    g = read_graph(args.graph)
    if args.check:
        text = sys.stdin.read() if args.check == "-" else Path(args.check).read_text()
        cert = Certificate.from_text(text)
        ok = verify_certificate(g, cert)
        _emit(out, [f"certificate {'valid' if ok else 'INVALID'}"],
              [("n", g.n), ("kind", cert.kind), ("count", cert.claimed_count), ("valid", _yn(ok))], args.quiet)
        return EXIT_OK if ok else EXIT_FAIL
    try:
        cert = certify(g)
    except NotInClass as exc:
        print(f"not in class: {exc}", file=sys.stderr)
        return EXIT_FAIL
    ok = verify_certificate(g, cert)
    if args.out:
        Path(args.out).write_text(cert.to_text())
    else:
        out.write(cert.to_text())
    if not args.quiet:
        print(f"kind={cert.kind} count={cert.claimed_count} valid={_yn(ok)}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twinlines", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--quiet", action="store_true", help="print only the key=value block")
        p.set_defaults(func=func)
        return p

    p = verb("lines", cmd_lines, "list the distinct lines of a graph")
    p.add_argument("graph")
    p = verb("verify", cmd_verify, "decide the de Bruijn-Erdos property by brute force")
    p.add_argument("graph")
    p = verb("recognize", cmd_recognize, "recover the blob decomposition over a bipartite base")
    p.add_argument("graph")

    p = verb("generate", cmd_generate, "random bipartite base plus random splits")
    p.add_argument("--left", type=int, required=True)
    p.add_argument("--right", type=int, required=True)
    p.add_argument("--prob", type=float, default=0.5)
    p.add_argument("--splits", type=int, default=0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--trace", help="also write the split trace here")

    p = verb("sweep", cmd_sweep, "check the counting bound over all legal (n, p, k)")
    p.add_argument("--min", type=int, default=3)
    p.add_argument("--max", type=int, default=39)
    p.add_argument("--no-slack", action="store_true", help="drop the 2k term")

    p = verb("ineq", cmd_ineq, "margins of the real inequalities behind the large-n cases")
    p.add_argument("--epsilon", type=float, default=EPSILON)
    p.add_argument("--n", type=int, default=N0)
    p.add_argument("--scan-max", type=int, default=10_000, help="search bound for the m3 sign change")

    p = verb("certify", cmd_certify, "emit, or with --check verify, a certificate")
    p.add_argument("graph")
    p.add_argument("--out", help="write the certificate here instead of stdout")
    p.add_argument("--check", metavar="CERT", help="verify a certificate file ('-' for stdin)")
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (GraphError, ValueError, OSError) as exc:
        print(f"twinlines {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
