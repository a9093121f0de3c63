"""Command-line front end.

Input documents are JSON::

    {"n": 4, "graphs": [[[1, 2]], [[3, 4]]]}

optionally with an ``"expected"`` object (keys ``chromatic``, ``euler``,
``betti``) whose values are compared against the computation.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from .chromatic import (
    IntegerPolynomial,
    count_colorings_proper_for_some,
    sequence_chromatic_polynomial,
)
from .complex import MAX_VERTICES, betti_numbers, boundary_ranks, build_chain_complex
from .errors import BudgetExceeded, InputError, InvariantViolation
from .eulerian import MAX_DEGREE, descent_class_coefficients, descent_count, eulerian_idempotents, permutations
from .graphs import Graph, GraphSequence
from .hodge import HodgeDecomposition, hodge_table
from .verify import (
    VerificationReport,
    scan_corpus,
    verify_corollary,
    verify_hanlon,
    verify_jonsson_wedge,
    verify_theorem,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class InputDocument:
    seq: GraphSequence
    expected: dict = field(default_factory=dict)


def parse_document(text: str, source: str = "<input>") -> InputDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{source}: top level must be an object with 'n' and 'graphs'")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"{source}: field 'n' must be a positive integer")
    graphs = doc.get("graphs")
    if not isinstance(graphs, list) or not graphs:
        raise InputError(f"{source}: field 'graphs' must be a nonempty list of edge lists")
    members = []
    for gi, edges in enumerate(graphs):
        if not isinstance(edges, list):
            raise InputError(f"{source}: graphs[{gi}] must be a list of vertex pairs")
        for ei, e in enumerate(edges):
            if not (isinstance(e, list) and len(e) == 2 and all(
                    isinstance(v, int) and not isinstance(v, bool) for v in e)):
                raise InputError(f"{source}: graphs[{gi}][{ei}] must be a pair of integers")
        try:
            members.append(Graph(n, edges))
        except InputError as exc:
            raise InputError(f"{source}: graphs[{gi}]: {exc}") from None
    try:
        seq = GraphSequence(n, members)
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None
    expected = doc.get("expected", {})
    if not isinstance(expected, dict):
        raise InputError(f"{source}: field 'expected' must be an object")
    return InputDocument(seq, expected)


def load_document(path: str) -> InputDocument:
    if path == "-":
        return parse_document(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text, path)


# -- rendering ---------------------------------------------------------------


class Output:
    """Collects one command's output in table, csv or kv format."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.buf = io.StringIO()

    @property
    def machine(self) -> bool:
        return self.fmt != "table"

    def poly(self, p: IntegerPolynomial) -> str:
        return p.render("L" if self.machine else "λ")

    def line(self, text: str = ""):
        self.buf.write(text + "\n")

    def kv(self, key: str, value):
        if isinstance(value, (list, tuple)):
            value = ",".join(str(v) for v in value)
        self.line(f"{key}={value}")

    def csv(self, header: list[str], rows: list[list]):
        w = csv.writer(self.buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)

    def grid(self, header: list[str], rows: list[list]):
        cells = [[str(c) for c in header]] + [[str(c) for c in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        for k, r in enumerate(cells):
            self.line("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
            if k == 0:
                self.line("  ".join("-" * w for w in widths))

    def rows(self, header: list[str], rows: list[list]):
        if self.fmt == "csv":
            self.csv(header, rows)
        elif self.fmt == "kv":
            for r in rows:
                self.line(" ".join(f"{h}={v}" for h, v in zip(header, r)))
        else:
            self.grid(header, rows)


def _check_expected(name: str, expected, actual, out: Output) -> bool:
    if expected == actual:
        return True
    out.line(f"MISMATCH {name}: expected {expected}, computed {actual}")
    return False


def _int_keys(d: dict) -> dict:
    try:
        return {int(k): v for k, v in d.items()}
    except (TypeError, ValueError):
        raise InputError("expected-value maps must be keyed by integers") from None


# -- commands ----------------------------------------------------------------


def cmd_chromatic(args, out: Output) -> int:
    doc = load_document(args.input)
    seq = doc.seq
    chi = sequence_chromatic_polynomial(seq)
    checks = []
    if args.check:
        for lam in range(seq.n + 2):
            brute = count_colorings_proper_for_some(seq, lam)
            checks.append((lam, chi.evaluate(lam), brute, chi.evaluate(lam) == brute))
    if out.fmt == "csv":
        out.csv(["power", "coefficient"], [[k, c] for k, c in enumerate(chi.coeffs)])
        if checks:
            out.csv(["colors", "polynomial", "brute_force", "match"], checks)
    elif out.fmt == "kv":
        out.kv("chi", out.poly(chi))
        out.kv("coeffs", chi.coeffs)
        for lam, val, brute, ok in checks:
            out.kv(f"check.{lam}", f"{val}:{brute}:{'ok' if ok else 'FAIL'}")
    else:
        out.line(out.poly(chi))
        if checks:
            out.line()
            out.grid(["colors", "polynomial", "brute force", "match"], checks)
    ok = all(c[3] for c in checks)
    if "chromatic" in doc.expected:
        ok &= _check_expected("chromatic", list(doc.expected["chromatic"]), list(chi.coeffs), out)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_complex(args, out: Output) -> int:
    doc = load_document(args.input)
    cc = build_chain_complex(doc.seq, max_n=args.max_n)
    ranks = boundary_ranks(cc)
    out.rows(["degree", "dimension", "boundary_rank"], [[r, cc.dim(r), ranks[r]] for r in cc.degrees])
    return EXIT_OK


def cmd_homology(args, out: Output) -> int:
    doc = load_document(args.input)
    cc = build_chain_complex(doc.seq, max_n=args.max_n)
    betti = betti_numbers(cc)
    out.rows(["degree", "betti"], [[r, b] for r, b in betti.items()])
    if "betti" in doc.expected:
        if not _check_expected("betti", _int_keys(doc.expected["betti"]),
                               {r: b for r, b in betti.items() if b}, out):
            return EXIT_MISMATCH
    return EXIT_OK


def _hodge_rows(table) -> list[list]:
    rows = []
    for kind, data in (("chain", table.chain_dims), ("homology", table.homology_dims)):
        for r in table.degrees:
            for j in table.pieces:
                if j <= r + 2 or data[r][j]:
                    rows.append([kind, r, j, data[r][j]])
    return rows


def cmd_hodge(args, out: Output) -> int:
    doc = load_document(args.input)
    cc = build_chain_complex(doc.seq, max_n=args.max_n)
    table = hodge_table(cc, HodgeDecomposition(cc, max_k=args.max_k), m=doc.seq.m,
                        check_trace=args.both_routes)
    if out.fmt == "csv":
        out.csv(["kind", "degree", "piece", "dimension"], _hodge_rows(table))
    elif out.fmt == "kv":
        for kind, r, j, d in _hodge_rows(table):
            out.kv(f"{kind}.{r}.{j}", d)
        for j, x in table.euler.items():
            out.kv(f"euler.{j}", x)
    else:
        pieces = list(table.pieces)
        for title, data in (("chain dimensions", table.chain_dims),
                            ("homology dimensions", table.homology_dims)):
            out.line(title)
            out.grid(["degree"] + [f"j={j}" for j in pieces],
                     [[r] + [data[r][j] for j in pieces] for r in table.degrees])
            out.line()
        out.grid(["piece", "euler"], [[j, x] for j, x in table.euler.items()])
    if "euler" in doc.expected:
        if not _check_expected("euler", _int_keys(doc.expected["euler"]),
                               {j: table.euler[j] for j in _int_keys(doc.expected["euler"])}, out):
            return EXIT_MISMATCH
    return EXIT_OK


def _single_graph(doc: InputDocument) -> Graph:
    if doc.seq.m != 1:
        raise InputError(f"this check takes a single graph, got {doc.seq.m}")
    return doc.seq.graphs[0]


def _render_report(rep: VerificationReport, out: Output):
    header = list(rep.rows[0]) if rep.rows else []
    if out.fmt == "table":
        out.line(f"{rep.kind}: {rep.description}")
        if "chi" in rep.details:
            out.line(f"chromatic polynomial: {out.poly(rep.details['chi'])}")
    if out.fmt == "kv":
        out.kv("check", rep.kind)
        out.kv("input", rep.description)
    if not rep.applicable:
        for note in rep.notes:
            out.line(note if out.fmt == "table" else f"note={note}")
        return
    out.rows(header, [[r[h] for h in header] for r in rep.rows])
    details = {k: (out.poly(v) if isinstance(v, IntegerPolynomial) else v)
               for k, v in rep.details.items()}
    degrees = ",".join(str(d) for d in rep.homology_degrees)
    if out.fmt == "table":
        out.line()
        out.line(f"nonzero homology in degrees: {degrees or 'none'}")
        for k, v in details.items():
            if k != "chi":
                out.line(f"{k}: {v}")
        for note in rep.notes:
            out.line(f"note: {note}")
        out.line(f"result: {'PASS' if rep.passed else 'FAIL'}")
    elif out.fmt == "kv":
        out.kv("homology_degrees", degrees)
        for k, v in details.items():
            out.kv(k, v)
        for note in rep.notes:
            out.kv("note", note)
        out.kv("passed", rep.passed)
    else:
        out.csv(["key", "value"], [["homology_degrees", degrees]]
                + [[k, v] for k, v in details.items()] + [["passed", rep.passed]])


def cmd_verify(args, out: Output) -> int:
    doc = load_document(args.input)
    limits = dict(max_n=args.max_n, max_k=args.max_k)
    if args.which == "theorem":
        rep = verify_theorem(doc.seq, check_trace=args.both_routes, **limits)
    elif args.which == "hanlon":
        rep = verify_hanlon(_single_graph(doc), **limits)
    elif args.which == "jonsson":
        rep = verify_jonsson_wedge(_single_graph(doc), **limits)
    else:
        rep = verify_corollary(doc.seq, **limits)
    _render_report(rep, out)
    ok = rep.passed
    if args.which == "theorem" and "euler" in doc.expected:
        want = _int_keys(doc.expected["euler"])
        got = {r["j"]: r["euler_chain"] for r in rep.rows if r["j"] in want}
        ok &= _check_expected("euler", want, got, out)
    if args.which == "theorem" and "chromatic" in doc.expected:
        ok &= _check_expected("chromatic", list(doc.expected["chromatic"]),
                              list(rep.details["chi"].coeffs), out)
    if not args.quiet and out.fmt == "table":
        out.line(f"wall time: {rep.elapsed:.3f}s")
    return EXIT_OK if ok else EXIT_MISMATCH


def _fmt_list(xs) -> str:
    return " ".join(str(x) for x in xs)


def cmd_scan(args, out: Output) -> int:
    start = time.perf_counter()
    res = scan_corpus(args.max_n_scan, args.max_m, seed=args.seed, budget=args.budget,
                      per_bucket=args.per_bucket or None, single_limit=args.single_limit,
                      max_vertices=args.max_n, max_k=args.max_k, check_trace=args.both_routes)
    header = ["index", "n", "m", "graphs", "euler_chain", "euler_homology", "rhs",
              "homology_degrees", "match"]
    rows = [[r["index"], r["n"], r["m"], r["graphs"], _fmt_list(r["euler_chain"]),
             _fmt_list(r["euler_homology"]), _fmt_list(r["rhs"]),
             _fmt_list(r["homology_degrees"]), r["match"]] for r in res.rows]
    if out.fmt == "csv":
        out.csv(header, rows)
    elif out.fmt == "kv":
        out.rows(header, rows)
        out.kv("items", len(rows))
        out.kv("partial", res.partial)
        out.kv("passed", res.passed)
    else:
        if not args.quiet:
            out.grid(header, rows)
            out.line()
        failures = sum(1 for r in res.rows if not r["match"])
        out.line(f"items: {len(rows)}  failures: {failures}"
                 + ("  (partial: budget exhausted)" if res.partial else ""))
        if not args.quiet:
            out.line(f"wall time: {time.perf_counter() - start:.3f}s")
    return EXIT_OK if res.passed else EXIT_MISMATCH


def cmd_idempotents(args, out: Output) -> int:
    k = args.k
    if args.max_k is not None and k > args.max_k:
        raise BudgetExceeded(f"degree {k} exceeds the idempotent guard of {args.max_k}")
    eulerian_idempotents(k, max_k=args.max_k)
    classes = descent_class_coefficients(k)
    sizes = {d: 0 for d in range(k)}
    for p in permutations(k):
        sizes[descent_count(p)] += 1
    header = ["descents", "permutations"] + [f"e{k}^({j})" for j in range(1, k + 1)]
    rows = [[d, sizes[d]] + [str(classes[d][j]) for j in range(1, k + 1)] for d in range(k)]
    if out.fmt == "table":
        out.line("coefficient of an even permutation with the given descent count;"
                 " odd permutations carry the opposite sign")
    out.rows(header, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "kv"), default="table")
    common.add_argument("--max-n", type=int, default=MAX_VERTICES,
                        help="vertex-count guard for chain complexes (default %(default)s)")
    common.add_argument("--max-k", type=int, default=MAX_DEGREE,
                        help="degree guard for Eulerian idempotents (default %(default)s)")
    common.add_argument("--both-routes", action=argparse.BooleanOptionalAction, default=True,
                        help="cross-check rank against trace for every projection")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--quiet", action="store_true", help="suppress wall-time lines")

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("--input", required=True, help="JSON input document, or - for stdin")

    parser = argparse.ArgumentParser(
        prog="colorhodge",
        description="Hodge decomposition of intersections of coloring complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chromatic", parents=[with_input], help="chromatic polynomial of the sequence")
    p.add_argument("--check", action="store_true", help="compare with brute-force counts at 0..n+1 colors")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("complex", parents=[with_input], help="chain group dimensions and boundary ranks")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("homology", parents=[with_input], help="Betti numbers")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("hodge", parents=[with_input], help="per-piece chain and homology dimensions")
    p.set_defaults(func=cmd_hodge)

    p = sub.add_parser("verify", parents=[with_input], help="run one of the checks")
    p.add_argument("which", choices=("theorem", "hanlon", "jonsson", "corollary"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common], help="theorem check over a generated corpus")
    p.add_argument("--max-m", type=int, default=1)
    p.add_argument("--budget", type=float, default=None, help="wall-time budget in seconds")
    p.add_argument("--per-bucket", type=int, default=200,
                   help="sample this many sequences per (n, m) bucket when m >= 2 (0 = all)")
    p.add_argument("--single-limit", type=int, default=None,
                   help="cap on single graphs per n (default: all)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("idempotents", parents=[common], help="Eulerian idempotent coefficients")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_idempotents)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.command == "scan":
        # for scan, --max-n bounds the corpus; complexes use the default guard
        args.max_n_scan = args.max_n
        args.max_n = max(args.max_n, MAX_VERTICES)
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except InputError as exc:
        stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        stderr.write(f"refused: {exc}\n")
        return EXIT_BUDGET
    except InvariantViolation as exc:
        stdout.write(out.buf.getvalue())
        stderr.write(f"internal check failed: {exc}\n")
        return EXIT_MISMATCH
    stdout.write(out.buf.getvalue())
    return code


def main():
    sys.exit(run())
