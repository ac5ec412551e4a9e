"""Command-line front end: ``circham verify|ham|search|iso|adam|export``.

Exit codes: 0 success or claim confirmed, 1 assertion failed or claim not
confirmed, 2 usage error.
"""

import argparse
import json
import re
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import __version__
from .digraph import (
    CirculantSpec,
    Digraph,
    build_circulant,
    is_k_diregular,
    is_oriented,
    is_strongly_connected,
)
from .export import FORMATS
from .hamiltonicity import (
    ORACLE_MAX_VERTICES,
    Status,
    find_hamiltonian_cycle,
    held_karp_oracle,
    verify_cycle_witness,
)
from .isomorphism import (
    ISO_MAX_VERTICES,
    are_isomorphic,
    are_multiplier_equivalent,
    find_adam_pairs,
    verify_isomorphism,
)
from .search import BoundMode, satisfies_jackson_hypotheses, search_counterexamples

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

COUNTEREXAMPLE = CirculantSpec(12, (2, 3, 8))

_SET_RE = re.compile(r"^[0-9]+(,[0-9]+)*$")


@dataclass
class RunReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    timing: float = 0.0
    tool_version: str = __version__

    def render(self) -> str:
        out = list(self.lines)
        out.append("---")
        out.append(f"command: {self.command}")
        out.append(f"tool_version: {self.tool_version}")
        out.append("inputs:")
        out += [f"  {k}: {_fmt(v)}" for k, v in self.inputs.items()]
        out.append("results:")
        out += [f"  {k}: {_fmt(v)}" for k, v in self.results.items()]
        out.append(f"timing: {self.timing:.6f}s")
        return "\n".join(out) + "\n"


def _fmt(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _set_arg(text: str) -> tuple[int, ...]:
    if not _SET_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected comma-separated positive integers without spaces, got {text!r}")
    values = tuple(int(x) for x in text.split(","))
    if any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError(f"connection elements must be positive: {text!r}")
    return values


def _spec(parser, n, s) -> CirculantSpec:
    try:
        return CirculantSpec(n, s)
    except ValueError as exc:
        parser.error(str(exc))


def cmd_verify(build: Callable[[CirculantSpec], Digraph] = build_circulant) -> tuple[RunReport, int]:
    start = time.perf_counter()
    spec = COUNTEREXAMPLE
    g = build(spec)
    k = spec.k
    backtrack = find_hamiltonian_cycle(g)
    oracle = held_karp_oracle(g)
    checks = [
        (f"{k}-diregular", is_k_diregular(g, k)),
        ("oriented", is_oriented(g)),
        ("strongly connected", is_strongly_connected(g)),
        (f"hypotheses n <= 4k+1 = {4 * k + 1}, k != 2",
         satisfies_jackson_hypotheses(spec, BoundMode.STRICT_4K_PLUS_1)),
        (f"hypotheses n <= 4k = {4 * k}, k != 2",
         satisfies_jackson_hypotheses(spec, BoundMode.WEAK_4K)),
        ("non-hamiltonian by backtracking", backtrack.status is Status.NON_HAMILTONIAN),
        ("non-hamiltonian by Held-Karp", oracle.status is Status.NON_HAMILTONIAN),
    ]
    report = RunReport("verify", {"n": spec.n, "set": spec.connection_set})
    report.lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    passed = sum(ok for _, ok in checks)
    report.results = {
        "assertions": len(checks),
        "passed": passed,
        "backtracking_status": backtrack.status.value,
        "backtracking_method": backtrack.method.value,
        "nodes_explored": backtrack.nodes_explored,
        "oracle_status": oracle.status.value,
    }
    report.timing = time.perf_counter() - start
    return report, EXIT_OK if passed == len(checks) else EXIT_FAILED


def cmd_ham(spec: CirculantSpec, oracle=False, witness=False) -> tuple[RunReport, int]:
    start = time.perf_counter()
    g = build_circulant(spec)
    verdict = find_hamiltonian_cycle(g)
    report = RunReport("ham", {"n": spec.n, "set": spec.connection_set,
                               "oracle": oracle, "witness": witness})
    code = EXIT_OK
    headline = verdict.status.value
    if verdict.witness is not None and not verify_cycle_witness(g, verdict.witness):
        headline += " (witness failed verification)"
        code = EXIT_FAILED
    elif witness and verdict.witness is not None:
        headline += " " + ",".join(map(str, verdict.witness))
    report.lines.append(headline)
    report.results = {
        "status": verdict.status.value,
        "method": verdict.method.value,
        "nodes_explored": verdict.nodes_explored,
    }
    if witness:
        report.results["witness"] = verdict.witness
    if oracle:
        check = held_karp_oracle(g)
        agree = check.status is verdict.status
        report.lines.append(f"oracle: {check.status.value} ({'agree' if agree else 'DISAGREE'})")
        report.results["oracle_status"] = check.status.value
        report.results["oracle_agrees"] = agree
        if not agree:
            code = EXIT_FAILED
    report.timing = time.perf_counter() - start
    return report, code


def cmd_search(min_n, max_n, bound_mode=BoundMode.STRICT_4K_PLUS_1, include_k2=False,
               allow_digons=False, json_out: Optional[str] = None, workers=1) -> tuple[RunReport, int]:
    start = time.perf_counter()
    lines = []

    def progress(s):
        lines.append(f"n={s.n} k={','.join(map(str, s.ks)) or '-'} instances={s.instances} "
                     f"classes={s.classes} counterexamples={s.counterexamples}")

    result = search_counterexamples(min_n, max_n, bound_mode, include_k2=include_k2,
                                    allow_digons=allow_digons, workers=workers, progress=progress)
    lines.append(f"{'n':>3} {'k':>3}  canonical_set  nodes_explored")
    for r in result.counterexamples:
        lines.append(f"{r.n:>3} {r.k:>3}  {{{','.join(map(str, r.canonical_set))}}}  "
                     f"{r.verdict.nodes_explored}")
    lines.append(f"counterexample classes: {len(result.counterexamples)}")
    report = RunReport("search", {
        "min_n": min_n, "max_n": max_n, "bound": result.bound_mode.value,
        "include_k2": include_k2, "allow_digons": allow_digons, "workers": workers,
    })
    report.lines = lines
    report.results = {
        "instances_enumerated": result.instances_enumerated,
        "classes_enumerated": result.classes_enumerated,
        "counterexample_classes": len(result.counterexamples),
        "counterexamples": ";".join(f"{r.n}:{{{','.join(map(str, r.canonical_set))}}}"
                                    for r in result.counterexamples) or None,
    }
    if json_out:
        doc = {"tool_version": __version__, "command": "search", **result.to_dict()}
        with open(json_out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        report.results["json"] = json_out
    report.timing = time.perf_counter() - start
    return report, EXIT_OK


def cmd_iso(n, set_a: CirculantSpec, set_b: CirculantSpec) -> tuple[RunReport, int]:
    start = time.perf_counter()
    unit = are_multiplier_equivalent(n, set_a.connection_set, set_b.connection_set)
    g1, g2 = build_circulant(set_a), build_circulant(set_b)
    mapping = are_isomorphic(g1, g2)
    code = EXIT_OK
    if mapping is not None and not verify_isomorphism(g1, g2, mapping):
        code = EXIT_FAILED
    mult = f"multiplier-equivalent via {unit}" if unit is not None else "not multiplier-equivalent"
    iso = "isomorphic" if mapping is not None else "not isomorphic"
    report = RunReport("iso", {"n": n, "set_a": set_a.connection_set, "set_b": set_b.connection_set})
    report.lines = [f"{mult}; {iso}"]
    if mapping is not None:
        report.lines.append("permutation: " + ",".join(map(str, mapping)))
    report.results = {"multiplier_unit": unit, "isomorphic": mapping is not None,
                      "permutation": mapping}
    report.timing = time.perf_counter() - start
    return report, code


def cmd_adam(n, k, anchor: Optional[CirculantSpec] = None) -> tuple[RunReport, int]:
    start = time.perf_counter()
    pairs = find_adam_pairs(n, k, anchor.connection_set if anchor else None)
    report = RunReport("adam", {"n": n, "k": k,
                                "anchor": anchor.connection_set if anchor else None})
    code = EXIT_OK if pairs else EXIT_FAILED
    for p in pairs:
        ok = verify_isomorphism(build_circulant(CirculantSpec(n, p.set_a)),
                                build_circulant(CirculantSpec(n, p.set_b)), p.mapping)
        if not ok:
            code = EXIT_FAILED
        report.lines.append(f"{{{','.join(map(str, p.set_a))}}} ~ {{{','.join(map(str, p.set_b))}}} "
                            f"via {','.join(map(str, p.mapping))}"
                            f"{'' if ok else ' (mapping failed verification)'}")
    report.lines.append(f"isomorphic non-multiplier-equivalent pairs: {len(pairs)}")
    report.results = {"pairs": len(pairs)}
    report.timing = time.perf_counter() - start
    return report, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circham",
        description="Hamiltonicity of oriented circulant digraphs and Jackson's conjecture.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify", help="check the 12-vertex counterexample Cay(Z_12; 2,3,8)")

    p = sub.add_parser("ham", help="decide Hamiltonicity of one circulant")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", type=_set_arg, required=True, dest="conn")
    p.add_argument("--oracle", action="store_true", help="cross-check with Held-Karp")
    p.add_argument("--witness", action="store_true", help="print the Hamiltonian circuit")

    p = sub.add_parser("search", help="search for counterexamples over a range of n")
    p.add_argument("--min-n", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--bound", choices=[m.value for m in BoundMode], default="4k+1")
    p.add_argument("--include-k2", action="store_true")
    p.add_argument("--allow-digons", action="store_true")
    p.add_argument("--json", dest="json_out", metavar="PATH")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("iso", help="multiplier equivalence and isomorphism of two circulants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set-a", type=_set_arg, required=True)
    p.add_argument("--set-b", type=_set_arg, required=True)

    p = sub.add_parser("adam", help="isomorphic circulants outside each other's multiplier class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--anchor", type=_set_arg)

    p = sub.add_parser("export", help="write a circulant as DOT or an edge list")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--set", type=_set_arg, required=True, dest="conn")
    p.add_argument("--format", choices=sorted(FORMATS), required=True)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "verify":
        report, code = cmd_verify()
    elif args.command == "ham":
        spec = _spec(parser, args.n, args.conn)
        if args.oracle and spec.n > ORACLE_MAX_VERTICES:
            parser.error(f"--oracle supports n <= {ORACLE_MAX_VERTICES}")
        report, code = cmd_ham(spec, oracle=args.oracle, witness=args.witness)
    elif args.command == "search":
        if not 2 <= args.min_n <= args.max_n <= ORACLE_MAX_VERTICES:
            parser.error(f"need 2 <= min-n <= max-n <= {ORACLE_MAX_VERTICES}")
        if args.workers < 1:
            parser.error("--workers must be at least 1")
        report, code = cmd_search(args.min_n, args.max_n, BoundMode(args.bound),
                                  include_k2=args.include_k2, allow_digons=args.allow_digons,
                                  json_out=args.json_out, workers=args.workers)
    elif args.command == "iso":
        if args.n > ISO_MAX_VERTICES:
            parser.error(f"iso supports n <= {ISO_MAX_VERTICES}")
        report, code = cmd_iso(args.n, _spec(parser, args.n, args.set_a),
                               _spec(parser, args.n, args.set_b))
    elif args.command == "adam":
        if args.n > ISO_MAX_VERTICES:
            parser.error(f"adam supports n <= {ISO_MAX_VERTICES}")
        if args.k < 1 or args.k > args.n - 1:
            parser.error(f"--k must lie in [1, {args.n - 1}]")
        anchor = _spec(parser, args.n, args.anchor) if args.anchor else None
        if anchor is not None and anchor.k != args.k:
            parser.error(f"--anchor must have {args.k} elements")
        report, code = cmd_adam(args.n, args.k, anchor)
    else:
        spec = _spec(parser, args.n, args.conn)
        stdout.write(FORMATS[args.format](build_circulant(spec)))
        return EXIT_OK

    stdout.write(report.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
