# cli.py
# Command-line front end: parsing, translation, checks, search, rendering, corpus and demos.
import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from gerg_double_logic.bridge import collapse_derivation, collapse_formula, collapse_graph, read_formula, to_graph
from gerg_double_logic.check_report import CheckReport
from gerg_double_logic.corpus_runner import CorpusRunner, load_manifest
from gerg_double_logic.derivations import check_derivation, primitive_trace
from gerg_double_logic.exceptions import (CorpusError, FormulaSyntaxError, GraphSyntaxError, KernelAssertionError,
                                          ScriptSyntaxError)
from gerg_double_logic.formula import classify, define_expand, print_formula
from gerg_double_logic.graph import Address, canonical_equal, classify_graph, print_graph
from gerg_double_logic.proof_checker import check_li_proof, check_proof
from gerg_double_logic.proof_transforms import apply_transforms
from gerg_double_logic.render import render_graph
from gerg_double_logic.rules import CERTIFYING_RULESETS, Derivation, LemmaTable, RuleId, Step
from gerg_double_logic.scripts import load_derivations, parse_proof_script, print_derivation
from gerg_double_logic.search import SearchConfig, bounded_search
from gerg_double_logic.syntax import parse, parse_graph

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
USAGE_ERRORS = (FormulaSyntaxError, GraphSyntaxError, ScriptSyntaxError, CorpusError, FileNotFoundError)
LIAR_READING = "~w & ~wf w"


class _Session:
    """Lemmas available to one invocation; seeded from the bundled corpus on request."""

    def __init__(self, with_corpus: bool = False):
        self.lemmas = LemmaTable()
        self.formula_lemmas: Dict[str, Any] = {}
        if with_corpus:
            runner = CorpusRunner(lemmas=self.lemmas)
            summary = runner.run()
            if not summary.ok:
                logger.warning("bundled corpus has failures:\n%s", summary.summary())
            self.formula_lemmas = runner.formula_lemmas


def _read_file(path: str) -> str:
    source = Path(path)
    if not source.is_file():
        raise FileNotFoundError(f"no such file: {path}")
    return source.read_text(encoding="utf-8")


def _emit(args, payload: Dict[str, Any], text: str) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False) if args.json else text)


def _emit_reports(args, reports: List[CheckReport], lines: Optional[List[str]] = None) -> int:
    ok = all(r.accepted for r in reports)
    if args.json:
        print(json.dumps({"ok": ok, "items": [r.to_dict() for r in reports]}, indent=2, ensure_ascii=False))
    else:
        for line in lines or []:
            print(line)
        for report in reports:
            print(f"{report.name}: {'accept' if report.accepted else 'reject'}")
            for d in report.diagnostics:
                print(f"  - {d}")
    return EXIT_OK if ok else EXIT_FAILED


# Formula and graph commands
def cmd_parse(args) -> int:
    f = parse(args.formula)
    _emit(args, {"formula": print_formula(f), "expanded": print_formula(define_expand(f))},
          print_formula(f))
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.graph:
        report = asdict(classify_graph(parse_graph(args.text)))
    else:
        report = asdict(classify(parse(args.text)))
    _emit(args, report, "\n".join(f"{k}: {'yes' if v else 'no'}" for k, v in report.items()))
    return EXIT_OK


def cmd_translate(args) -> int:
    g = to_graph(parse(args.formula))
    text = print_graph(g) or "lambda"
    _emit(args, {"formula": args.formula, "graph": text}, text)
    return EXIT_OK


def cmd_collapse(args) -> int:
    if args.graph:
        text = print_graph(collapse_graph(parse_graph(args.text))) or "lambda"
    else:
        text = print_formula(collapse_formula(parse(args.text)))
    _emit(args, {"input": args.text, "collapsed": text}, text)
    return EXIT_OK


def cmd_render(args) -> int:
    g = to_graph(parse(args.text)) if args.formula else parse_graph(args.text)
    _emit(args, {"graph": print_graph(g) or "lambda", "drawing": render_graph(g)}, render_graph(g))
    return EXIT_OK


# Script commands
def cmd_check_proof(args) -> int:
    session = _Session(args.with_corpus)
    reports = []
    for script in parse_proof_script(_read_file(args.file)):
        p = script.proof
        mode = "pure" if args.pure else script.mode
        if p.system == "LI":
            report = check_li_proof(p, session.formula_lemmas)
        else:
            report = check_proof(p, mode, session.formula_lemmas)
        reports.append(report)
        if report.accepted and script.transforms:
            transformed = apply_transforms(p, script.transforms, session.formula_lemmas)
            report = check_proof(transformed, "taut", session.formula_lemmas)
            report.name = f"{p.name} ({' '.join(script.transforms)})"
            reports.append(report)
        if report.accepted:
            session.formula_lemmas[p.name] = p.conclusion
    return _emit_reports(args, reports)


def _derivations(args, session: _Session) -> List[Derivation]:
    return load_derivations(_read_file(args.file), session.lemmas, getattr(args, "ruleset", None))


def cmd_check_deriv(args) -> int:
    session = _Session(args.with_corpus)
    reports = []
    for d in _derivations(args, session):
        report = check_derivation(d, args.ruleset, session.lemmas)
        reports.append(report)
        if report.accepted and not d.start and report.details["ruleset"] in CERTIFYING_RULESETS:
            session.lemmas.certify(d.name, d, report)
    return _emit_reports(args, reports)


def cmd_expand_derived(args) -> int:
    session = _Session(args.with_corpus)
    expanded = []
    for d in _derivations(args, session):
        steps, graphs = primitive_trace(d, session.lemmas)
        expanded.append(Derivation(d.name, d.start, steps, graphs[-1], d.ruleset))
    text = "\n".join(print_derivation(d) for d in expanded).rstrip()
    _emit(args, {"derivations": [print_derivation(d) for d in expanded]}, text)
    return EXIT_OK


def cmd_collapse_deriv(args) -> int:
    session = _Session(args.with_corpus)
    reports, lines = [], []
    for d in _derivations(args, session):
        collapsed = collapse_derivation(d, session.lemmas)
        lines.append(print_derivation(collapsed).rstrip())
        reports.append(check_derivation(collapsed, "RTRAC", session.lemmas))
    return _emit_reports(args, reports, lines)


def cmd_search(args) -> int:
    target = parse_graph(args.target)
    cfg = SearchConfig(max_depth=args.depth, max_items=args.items, ruleset=args.ruleset,
                       alphabet=tuple(args.alphabet))
    found = bounded_search(target, cfg)
    if found is None:
        _emit(args, {"target": args.target, "found": False},
              f"none within bounds (depth {args.depth}, items {args.items})")
        return EXIT_FAILED
    _emit(args, {"target": args.target, "found": True, "derivation": print_derivation(found)},
          print_derivation(found).rstrip())
    return EXIT_OK


# Corpus and demos
def cmd_corpus(args) -> int:
    manifest = load_manifest(args.manifest)
    summary = CorpusRunner(manifest, soundness=args.soundness).run(args.filter)
    _emit(args, summary.to_dict(), summary.summary())
    return EXIT_OK if summary.ok else EXIT_FAILED


def _demo_liar(runner: CorpusRunner) -> Tuple[List[CheckReport], List[str]]:
    d = runner.derivations["liar"]
    closed = Derivation("liar-reading", d.start, d.steps + [Step(RuleId.DCC, Address((), (1, 3)))],
                        to_graph(parse(LIAR_READING)), "RTRA")
    report = check_derivation(closed, "RTRA", runner.lemmas)
    lines = [
        f"premise:     {print_graph(d.start)}",
        f"consequence: {print_graph(d.end)}",
        f"  reads as   {print_formula(read_formula(d.end))}",
        f"regrouped:   {print_graph(closed.end)}",
        f"  reads as   {LIAR_READING}",
    ]
    if not canonical_equal(closed.end, to_graph(parse(LIAR_READING))):
        report.accepted = False
    return [report], lines


def _demo_aristotle(runner: CorpusRunner) -> Tuple[List[CheckReport], List[str]]:
    entry = runner.manifest.entry("aristotle")
    lines = []
    for name, text in entry.formulas.items():
        d = runner.derivations[name]
        lines.append(f"{name}: {text}")
        lines.append(f"  graph  {print_graph(d.end)}")
        lines.append(f"  steps  {len(d.steps)} from lambda")
    return [], lines


def cmd_demo(args) -> int:
    runner = CorpusRunner()
    summary = runner.run(args.name)
    reports = [r for result in summary.results for r in result.reports]
    errors = [e for result in summary.results for e in result.errors]
    if errors:
        for error in errors:
            print(f"error: {error}", file=sys.stderr)
        return EXIT_FAILED
    extra, lines = _demo_liar(runner) if args.name == "liar" else _demo_aristotle(runner)
    return _emit_reports(args, reports + extra, lines)


COMMANDS = {
    "parse": cmd_parse, "classify": cmd_classify, "translate": cmd_translate,
    "collapse": cmd_collapse, "render": cmd_render, "check-proof": cmd_check_proof,
    "check-deriv": cmd_check_deriv, "expand-derived": cmd_expand_derived,
    "collapse-deriv": cmd_collapse_deriv, "search": cmd_search, "corpus": cmd_corpus,
    "demo": cmd_demo,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a machine-readable report.")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")

    parser = argparse.ArgumentParser(prog="gerg-double-logic",
                                     description="Proof kernel and graph rewriting for LD / Gamma-LD.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="Parse and print a formula.")
    p.add_argument("formula")
    p = sub.add_parser("classify", parents=[common], help="Fragment membership of a formula or graph.")
    p.add_argument("text")
    p.add_argument("--graph", action="store_true")
    p = sub.add_parser("translate", parents=[common], help="Graph of a formula.")
    p.add_argument("formula")
    p = sub.add_parser("collapse", parents=[common], help="Collapse a formula or graph to classical.")
    p.add_argument("text")
    p.add_argument("--graph", action="store_true")
    p = sub.add_parser("render", parents=[common], help="Draw a graph as nested boxes.")
    p.add_argument("text")
    p.add_argument("--formula", action="store_true", help="Read TEXT as a formula and draw its graph.")

    p = sub.add_parser("check-proof", parents=[common], help="Check a proof script.")
    p.add_argument("file")
    p.add_argument("--pure", action="store_true", help="Reject taut lines.")
    p.add_argument("--with-corpus", action="store_true", help="Make the bundled lemmas available.")
    p = sub.add_parser("check-deriv", parents=[common], help="Check a derivation script.")
    p.add_argument("file")
    p.add_argument("--ruleset", default=None, choices=["RTRA", "RTRAC", "RTRA-LI"])
    p.add_argument("--with-corpus", action="store_true", help="Make the bundled lemmas available.")
    for name, text in (("expand-derived", "Expand derived steps into primitive ones."),
                       ("collapse-deriv", "Collapse a derivation and check it under RTRAC.")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file")
        p.add_argument("--with-corpus", action="store_true", help="Make the bundled lemmas available.")

    p = sub.add_parser("search", parents=[common], help="Bounded search for a derivation from lambda.")
    p.add_argument("target")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--items", type=int, default=6)
    p.add_argument("--ruleset", default="RTRA", choices=["RTRA", "RTRAC", "RTRA-LI"])
    p.add_argument("--alphabet", nargs="*", default=[], help="Extra atoms offered for insertion.")

    p = sub.add_parser("corpus", parents=[common], help="Run the bundled or a given corpus.")
    p.add_argument("action", choices=["run"])
    p.add_argument("--filter", default=None, help="Entry name, tag, or alfa-ld / alfa-lc / alfa-li.")
    p.add_argument("--manifest", default=None, help="Manifest file or directory.")
    p.add_argument("--soundness", action="store_true", help="Also scan collapse obligations.")

    p = sub.add_parser("demo", parents=[common], help="Run a bundled demonstration.")
    p.add_argument("name", choices=["liar", "aristotle"])
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    _configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (KernelAssertionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, USAGE_ERRORS) else EXIT_FAILED
