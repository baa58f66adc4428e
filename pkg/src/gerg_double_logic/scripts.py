# scripts.py
# Line-oriented proof and derivation script formats: parsing, printing, block resolution.
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import pyparsing as pp

from gerg_double_logic.derivations import join, tdg, tdgf, tdig
from gerg_double_logic.exceptions import (FormulaSyntaxError, GraphSyntaxError,
                                          ScriptSyntaxError, TransformError)
from gerg_double_logic.formula import Formula, print_formula
from gerg_double_logic.graph import Graph, print_graph
from gerg_double_logic.hilbert import MP, Axiom, Hyp, Justification, Lemma, Proof, ProofLine, Taut
from gerg_double_logic.rules import BIDIRECTIONAL, Derivation, LemmaTable, RuleId, Step
from gerg_double_logic.syntax import parse, parse_address, parse_graph

logger = logging.getLogger(__name__)

COMMENT = "--"
TRANSFORM_NAMES = ("nec", "tdi", "elim")


def _int(name: str) -> pp.ParserElement:
    return pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))(name)


_NAME = pp.Regex(r"\S+")
_REST = pp.Regex(r".*")

# proof scripts
_PROOF = pp.Keyword("proof") + _NAME("name")
_ASSUME = pp.Keyword("assume") + _REST("formula")
_QED = pp.Keyword("qed") + _REST("formula")
_TRANSFORM = pp.Keyword("transform") + pp.one_of(TRANSFORM_NAMES, as_keyword=True)("name")
_MODE = pp.Keyword("mode") + pp.one_of("pure taut", as_keyword=True)("name")
_SYSTEM = pp.Keyword("system") + pp.one_of("LD LI", as_keyword=True)("name")
_JUSTIFICATION = (
    (pp.Keyword("ax")("kind") + pp.Optional(pp.Literal("+")("plus")) + _NAME("schema"))
    | (pp.one_of("mp mpi", as_keyword=True)("kind") + _int("i") + _int("j"))
    | pp.Keyword("taut")("kind")
    | (pp.Keyword("hyp")("kind") + _int("k"))
    | (pp.Keyword("lemma")("kind") + _NAME("lemma"))
)
_LINE = _int("number") + pp.Regex(r"[^;]+")("formula") + pp.Suppress(";") + _JUSTIFICATION

# derivation scripts
_ADDRESS = pp.Regex(r"#\S*")
_DERIV = pp.Keyword("deriv") + _NAME("name")
_RULESET = pp.Keyword("ruleset") + pp.one_of("RTRA RTRAC RTRA-LI", as_keyword=True)("name")
_FROM = pp.Keyword("from") + _REST("graph")
_TO = pp.Keyword("to") + _REST("graph")
_COMBINATOR = (pp.one_of("tdg tdgf", as_keyword=True)("kind") + _NAME("source")
               | pp.Keyword("tdig")("kind") + pp.one_of("a b c", as_keyword=True)("form")
               + _NAME("source")
               | pp.Keyword("join")("kind") + _NAME("source") + _NAME("other"))
_STEP = (pp.Keyword("step") + pp.Word(pp.alphanums)("rule")
         + pp.Optional(pp.one_of("fwd bwd", as_keyword=True)("direction"))
         + pp.Keyword("at") + _ADDRESS("at")
         + pp.Optional(pp.Keyword("src") + _ADDRESS("src"))
         + pp.Optional(pp.Keyword("put") + pp.Regex(r".+?(?=\s+use\s|\s*$)")("put"))
         + pp.Optional(pp.Keyword("use") + _NAME("use")))


@dataclass
class ProofScript:
    proof: Proof
    transforms: List[str] = field(default_factory=list)
    mode: str = "taut"
    line: int = 1


@dataclass
class DerivationBlock:
    """One `deriv` block; combinator blocks name their source block instead of a start graph."""
    name: str
    start: Optional[Graph] = None
    steps: List[Step] = field(default_factory=list)
    end: Optional[Graph] = None
    ruleset: Optional[str] = None
    combinator: Optional[Tuple[str, Optional[str], Tuple[str, ...]]] = None
    line: int = 1


def _source_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith(COMMENT):
            yield number, raw


def _match(grammar: pp.ParserElement, raw: str) -> Optional[pp.ParseResults]:
    try:
        return grammar.parse_string(raw, parse_all=True)
    except pp.ParseBaseException:
        return None


def _column(raw: str, fragment: str) -> int:
    return max(raw.find(fragment.strip()), 0) + 1


def _formula(raw: str, fragment: str, number: int) -> Formula:
    try:
        return parse(fragment.strip())
    except FormulaSyntaxError as exc:
        raise ScriptSyntaxError(f"bad formula: {exc}", number, _column(raw, fragment) + exc.column - 1) from None


def _graph(raw: str, fragment: str, number: int) -> Graph:
    try:
        return parse_graph(fragment.strip())
    except GraphSyntaxError as exc:
        raise ScriptSyntaxError(f"bad graph: {exc}", number, _column(raw, fragment) + exc.column - 1) from None


def _address(raw: str, fragment: str, number: int):
    try:
        return parse_address(fragment)
    except GraphSyntaxError as exc:
        raise ScriptSyntaxError(str(exc), number, _column(raw, fragment)) from None


def _justification(result: pp.ParseResults, number: int) -> Justification:
    kind = result["kind"]
    if kind == "ax":
        return Axiom(result["schema"], {}, 1 if "plus" in result else None)
    if kind in ("mp", "mpi"):
        i, j = result["i"] - 1, result["j"] - 1
        if i < 0 or j < 0:
            raise ScriptSyntaxError("mp cites lines from 1", number)
        return MP(i, j)
    if kind == "taut":
        return Taut()
    if kind == "hyp":
        if result["k"] < 1:
            raise ScriptSyntaxError("hypotheses are numbered from 1", number)
        return Hyp(result["k"] - 1)
    return Lemma(result["lemma"])


class _ProofAccumulator:
    def __init__(self, name: str, line: int):
        self.name = name
        self.line = line
        self.hypotheses: List[Formula] = []
        self.lines: List[ProofLine] = []
        self.conclusion: Optional[Formula] = None
        self.closed = False
        self.transforms: List[str] = []
        self.mode = "taut"
        self.system = "LD"

    def finish(self) -> ProofScript:
        if not self.closed:
            raise ScriptSyntaxError(f"proof '{self.name}' has no qed line", self.line)
        proof = Proof(self.name, self.hypotheses, self.lines, self.conclusion, self.system)
        return ProofScript(proof, self.transforms, self.mode, self.line)


def parse_proof_script(text: str) -> List[ProofScript]:
    """Parse every `proof ... qed` block; positions in errors are 1-based."""
    scripts: List[ProofScript] = []
    current: Optional[_ProofAccumulator] = None
    for number, raw in _source_lines(text):
        header = _match(_PROOF, raw)
        if header is not None:
            if current is not None:
                scripts.append(current.finish())
            current = _ProofAccumulator(header["name"], number)
            continue
        if current is None:
            raise ScriptSyntaxError("expected 'proof <name>'", number, _column(raw, raw))
        if current.closed:
            directive = _match(_TRANSFORM, raw) or _match(_MODE, raw) or _match(_SYSTEM, raw)
            if directive is None:
                raise ScriptSyntaxError("only transform, mode or system may follow qed",
                                        number, _column(raw, raw))
            keyword = directive[0]
            if keyword == "transform":
                current.transforms.append(directive["name"])
            else:
                setattr(current, keyword, directive["name"])
            continue

        assume = _match(_ASSUME, raw)
        if assume is not None:
            if current.lines:
                raise ScriptSyntaxError("assume must precede the numbered lines", number)
            current.hypotheses.append(_formula(raw, assume["formula"], number))
            continue
        qed = _match(_QED, raw)
        if qed is not None:
            if not current.lines:
                raise ScriptSyntaxError("qed before any proof line", number)
            if qed["formula"].strip():
                current.conclusion = _formula(raw, qed["formula"], number)
            current.closed = True
            continue
        line = _match(_LINE, raw)
        if line is None:
            raise ScriptSyntaxError("expected '<n> <formula> ; <justification>'", number, _column(raw, raw))
        if line["number"] != len(current.lines) + 1:
            raise ScriptSyntaxError(f"line numbered {line['number']}, expected {len(current.lines) + 1}",
                                    number, _column(raw, raw))
        current.lines.append(ProofLine(_formula(raw, line["formula"], number),
                                       _justification(line, number)))
    if current is None:
        raise ScriptSyntaxError("no proof in script", 1)
    scripts.append(current.finish())
    return scripts


def _print_justification(just: Justification) -> str:
    if isinstance(just, Axiom):
        return f"ax {'+' if just.plus_depth == 1 else ''}{just.schema_id}"
    if isinstance(just, MP):
        return f"mp {just.i + 1} {just.j + 1}"
    if isinstance(just, Taut):
        return "taut"
    if isinstance(just, Hyp):
        return f"hyp {just.k + 1}"
    return f"lemma {just.name}"


def print_proof(p: Proof, transforms: Optional[List[str]] = None, mode: Optional[str] = None) -> str:
    out = [f"proof {p.name}"]
    out += [f"assume {print_formula(h)}" for h in p.hypotheses]
    out += [f"{n} {print_formula(line.formula)} ; {_print_justification(line.justification)}"
            for n, line in enumerate(p.lines, start=1)]
    out.append(f"qed {print_formula(p.conclusion)}" if p.conclusion is not None else "qed")
    out += [f"transform {name}" for name in transforms or []]
    if mode is not None:
        out.append(f"mode {mode}")
    if p.system != "LD":
        out.append(f"system {p.system}")
    return "\n".join(out) + "\n"


def _step(raw: str, result: pp.ParseResults, number: int) -> Step:
    try:
        rule = RuleId(result["rule"])
    except ValueError:
        raise ScriptSyntaxError(f"unknown rule '{result['rule']}'", number,
                                _column(raw, result["rule"])) from None
    direction = result.get("direction", "fwd")
    if direction == "bwd" and rule not in BIDIRECTIONAL:
        raise ScriptSyntaxError(f"{rule.value} takes no direction", number, _column(raw, "bwd"))
    return Step(
        rule,
        _address(raw, result["at"], number),
        _address(raw, result["src"], number) if "src" in result else None,
        _graph(raw, result["put"], number) if "put" in result else None,
        direction,
        result["use"] if "use" in result else None,
    )


def parse_derivation_script(text: str) -> List[DerivationBlock]:
    """Parse every `deriv ... to` block of a derivation script."""
    blocks: List[DerivationBlock] = []
    current: Optional[DerivationBlock] = None
    for number, raw in _source_lines(text):
        header = _match(_DERIV, raw)
        if header is not None:
            if current is not None:
                raise ScriptSyntaxError(f"block '{current.name}' has no 'to' line", number)
            current = DerivationBlock(header["name"], line=number)
            continue
        if current is None:
            ruleset = _match(_RULESET, raw)
            if ruleset is not None and blocks:
                blocks[-1].ruleset = ruleset["name"]
                continue
            raise ScriptSyntaxError("expected 'deriv <name>'", number, _column(raw, raw))

        ruleset = _match(_RULESET, raw)
        if ruleset is not None:
            current.ruleset = ruleset["name"]
            continue
        origin = _match(_FROM, raw)
        if origin is not None:
            if current.steps or current.combinator is not None:
                raise ScriptSyntaxError("from must precede the steps", number)
            current.start = _graph(raw, origin["graph"], number)
            continue
        combinator = _match(_COMBINATOR, raw)
        if combinator is not None:
            if current.steps or current.start is not None:
                raise ScriptSyntaxError(f"{combinator['kind']} must open the block", number)
            form = combinator["form"] if "form" in combinator else None
            sources = (combinator["source"],) + ((combinator["other"],) if "other" in combinator else ())
            current.combinator = (combinator["kind"], form, sources)
            continue
        step = _match(_STEP, raw)
        if step is not None:
            if current.start is None and current.combinator is None:
                raise ScriptSyntaxError("steps need a preceding from line", number)
            current.steps.append(_step(raw, step, number))
            continue
        closing = _match(_TO, raw)
        if closing is not None:
            if current.start is None and current.combinator is None:
                raise ScriptSyntaxError("block has neither from nor a combinator", number)
            current.end = _graph(raw, closing["graph"], number)
            blocks.append(current)
            current = None
            continue
        raise ScriptSyntaxError("expected step, from, to, ruleset or a combinator line",
                                number, _column(raw, raw))
    if current is not None:
        raise ScriptSyntaxError(f"block '{current.name}' has no 'to' line", current.line)
    if not blocks:
        raise ScriptSyntaxError("no derivation in script", 1)
    return blocks


def print_derivation(d: Derivation) -> str:
    out = [f"deriv {d.name}"]
    if d.ruleset is not None:
        out.append(f"ruleset {d.ruleset}")
    out.append(f"from {print_graph(d.start) or 'lambda'}")
    out += [str(s) for s in d.steps]
    out.append(f"to {print_graph(d.end) or 'lambda'}")
    return "\n".join(out) + "\n"


def resolve_block(block: DerivationBlock, built: Dict[str, Derivation],
                  lt: Optional[LemmaTable] = None, default_ruleset: Optional[str] = None) -> Derivation:
    """Derivation of a block; combinator blocks replay the combinator on earlier blocks."""
    ruleset = block.ruleset or default_ruleset
    if block.combinator is None:
        return Derivation(block.name, block.start, list(block.steps), block.end, ruleset)
    kind, form, sources = block.combinator
    for source in sources:
        if source not in built:
            raise TransformError(f"block '{block.name}' refers to unknown block '{source}'")
    base = built[sources[0]]
    if kind == "tdg":
        made = tdg(base, lt)
    elif kind == "tdgf":
        made = tdgf(base, lt)
    elif kind == "join":
        made = join(base, built[sources[1]], lt)
    else:
        made = tdig(base, form, lt)
    logger.debug("%s %s gives %d steps", kind, " ".join(sources), len(made.steps))
    return Derivation(block.name, made.start, made.steps + list(block.steps), block.end,
                      ruleset or made.ruleset)


def load_derivations(text: str, lt: Optional[LemmaTable] = None,
                     default_ruleset: Optional[str] = None) -> List[Derivation]:
    """Parse a script and resolve all of its blocks in order."""
    built: Dict[str, Derivation] = {}
    for block in parse_derivation_script(text):
        if block.name in built:
            raise ScriptSyntaxError(f"block '{block.name}' defined twice", block.line)
        built[block.name] = resolve_block(block, built, lt, default_ruleset)
    return list(built.values())
