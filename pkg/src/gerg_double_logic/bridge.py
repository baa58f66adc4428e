# bridge.py
# Formula <-> graph translations, the classical collapse and the proof compiler.
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from gerg_double_logic.exceptions import TransformError
from gerg_double_logic.formula import (AndA, AndC, AtomA, AtomC, Formula, IffA, IffC, ImpA,
                                       ImpC, NegA, NotC, OrA, OrC, Top,
                                       alternate_metavariables, define_expand, expand_sugar,
                                       instantiate, metavariables, print_formula)
from gerg_double_logic.graph import (CUT_TYPES, LAMBDA, Address, CutA, CutC, Graph,
                                     GraphAltAtom, GraphAtom, Item, canonicalize, context_at,
                                     contents_at, print_graph, region_from_kinds, cut_kinds_on,
                                     selection)
from gerg_double_logic.hilbert import LD_TABLE, MP, Axiom, Proof, match_schema_id
from gerg_double_logic.derivations import (apply_step, check_derivation, contextual_steps,
                                           primitive_trace, replay)
from gerg_double_logic.rules import RTRAC, Derivation, LemmaTable, RuleId, Step
from gerg_double_logic.truth_table import truth_table_taut

logger = logging.getLogger(__name__)

ALT_PREFIX = "alt_"


def _juxtapose(*graphs: Graph) -> Graph:
    return tuple(item for g in graphs for item in g)


def _translate(f: Formula) -> Graph:
    if isinstance(f, AtomC):
        return (GraphAtom(f.name),)
    if isinstance(f, AtomA):
        return (GraphAltAtom(f.name),)
    if isinstance(f, Top):
        return LAMBDA
    if isinstance(f, NotC):
        return (CutC(_translate(f.arg)),)
    if isinstance(f, NegA):
        return (CutA(_translate(f.arg)),)
    x, y = _translate(f.left), _translate(f.right)
    if isinstance(f, AndC):
        return _juxtapose(x, y)
    if isinstance(f, ImpC):
        return (CutC(x + (CutC(y),)),)
    if isinstance(f, OrC):
        return (CutC((CutC(x), CutC(y))),)
    if isinstance(f, IffC):
        return (CutC(x + (CutC(y),)), CutC(y + (CutC(x),)))
    if isinstance(f, ImpA):
        return (CutA(x + (CutC(y),)),)
    if isinstance(f, OrA):
        return (CutA((CutC(x), CutC(y))),)
    if isinstance(f, AndA):
        return (CutA((CutC(_juxtapose(x, y)),)),)
    if isinstance(f, IffA):
        return (CutA(x + (CutC(y),)), CutA(y + (CutC(x),)))
    raise TransformError(f"cannot translate '{print_formula(f)}'")


def to_graph(f: Formula) -> Graph:
    """Formula translation; sugar is expanded first and the result is canonical."""
    return canonicalize(_translate(expand_sugar(f)))


def _read(items: Graph) -> Formula:
    parts = [_read_item(item) for item in items]
    if not parts:
        return Top()
    result = parts[0]
    for part in parts[1:]:
        result = AndC(result, part)
    return result


def _read_item(item: Item) -> Formula:
    if isinstance(item, GraphAtom):
        return AtomC(item.name)
    if isinstance(item, GraphAltAtom):
        return AtomA(item.name)
    if isinstance(item, CutC):
        return NotC(_read(item.items))
    return NegA(_read(item.items))


def read_formula(g: Graph) -> Formula:
    """Reading over {~, !, &}; λ reads as top."""
    return _read(tuple(g))


def _collapse_item(item: Item) -> Item:
    if isinstance(item, GraphAltAtom):
        return GraphAtom(ALT_PREFIX + item.name)
    if isinstance(item, CUT_TYPES):
        return CutC(collapse_items(item.items))
    return item


def collapse_items(g: Graph) -> Graph:
    """Order-preserving collapse; addresses into g stay valid."""
    return tuple(_collapse_item(item) for item in g)


def collapse_graph(g: Graph) -> Graph:
    return canonicalize(collapse_items(g))


def collapse_formula(f: Formula) -> Formula:
    return read_formula(collapse_graph(to_graph(f)))


@dataclass(frozen=True)
class Obligation:
    index: Optional[int]
    formula: Formula
    verdict: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"index": None if self.index is None else self.index + 1,
                "formula": print_formula(self.formula), "tautology": self.verdict}


@dataclass
class ObligationReport:
    """Per-step classical implications read from collapsed graphs."""
    name: str
    obligations: List[Obligation] = field(default_factory=list)
    closing: Optional[Obligation] = None

    @property
    def all_true(self) -> bool:
        items = self.obligations + ([self.closing] if self.closing is not None else [])
        return all(o.verdict for o in items)

    def failures(self) -> List[Obligation]:
        return [o for o in self.obligations if not o.verdict]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "verdict": "accept" if self.all_true else "reject",
            "obligations": [o.to_dict() for o in self.obligations],
            "closing": None if self.closing is None else self.closing.to_dict(),
        }


def _implication(before: Graph, after: Graph) -> Formula:
    return ImpC(read_formula(collapse_graph(before)), read_formula(collapse_graph(after)))


def graph_obligations(name: str, graphs: Sequence[Graph]) -> ObligationReport:
    """Obligations for an explicit sequence of graphs, whether or not the steps are legal."""
    report = ObligationReport(name)
    for index in range(len(graphs) - 1):
        formula = _implication(graphs[index], graphs[index + 1])
        report.obligations.append(Obligation(index, formula, truth_table_taut(formula)))
    if graphs:
        formula = _implication(graphs[0], graphs[-1])
        report.closing = Obligation(None, formula, truth_table_taut(formula))
    return report


def derivation_obligations(d: Derivation, lt: Optional[LemmaTable] = None) -> ObligationReport:
    """One obligation per step of d (derived steps as a whole)."""
    graphs = [tuple(d.start)]
    for s in d.steps:
        graphs.append(apply_step(graphs[-1], s, "ANY", lt))
    return graph_obligations(d.name, graphs)


# Collapse of a derivation
_COLLAPSED_RULE = {
    RuleId.IF: RuleId.IC, RuleId.DF: RuleId.DC, RuleId.IeL: RuleId.IC, RuleId.DeL: RuleId.DC,
    RuleId.BL: RuleId.B, RuleId.EL: RuleId.E, RuleId.IdL: RuleId.I, RuleId.DdL: RuleId.D,
}


def _collapse_step(s: Step, before: Graph) -> List[Step]:
    rule = s.rule
    if rule in (RuleId.CC, RuleId.CCR):
        return []
    if rule is RuleId.DCMGEV:
        return [Step(RuleId.DCC, s.at, direction=s.direction)]
    if rule is RuleId.R:
        return [Step(RuleId.DCC, s.at, direction="fwd" if s.direction == "bwd" else "bwd")]
    if rule is RuleId.DCMF:
        path, _, _ = selection(before, s.at)
        even = region_from_kinds(cut_kinds_on(before, path)).even
        return [Step(RuleId.DCC, s.at, direction="fwd" if even else "bwd")]
    if rule is RuleId.EL:
        return [Step(RuleId.E, s.at, payload=(CutC(collapse_items(s.payload)),))]
    payload = None if s.payload is None else collapse_items(s.payload)
    return [Step(_COLLAPSED_RULE.get(rule, rule), s.at, s.src, payload, s.direction)]


def collapse_derivation(d: Derivation, lt: Optional[LemmaTable] = None) -> Derivation:
    """Image of d under the collapse, as an RTRAC derivation."""
    steps, graphs = primitive_trace(d, lt)
    collapsed: List[Step] = []
    for s, before in zip(steps, graphs):
        collapsed.extend(_collapse_step(s, before))
    return Derivation(f"{d.name}-collapsed", collapse_items(d.start), collapsed,
                      collapse_graph(d.end), RTRAC.name)


# Proof compiler
def schema_placeholders(schema_id: str) -> Dict[str, Formula]:
    """Atoms standing for the metavariables of a schema: x, y, z (or @x for `X_`)."""
    schema = LD_TABLE.get(schema_id)
    alternate = alternate_metavariables(schema)
    return {name: (AtomA if name in alternate else AtomC)(name.lower())
            for name in sorted(metavariables(schema))}


def parametric_conclusion(schema_id: str) -> Graph:
    """Graph a parametric axiom derivation must end at."""
    schema = LD_TABLE.get(schema_id)
    return to_graph(define_expand(instantiate(schema, schema_placeholders(schema_id))))


def _substitute(g: Graph, mapping: Dict[Item, Graph]) -> Graph:
    out: List[Item] = []
    for item in g:
        if item in mapping:
            out.extend(mapping[item])
        elif isinstance(item, CUT_TYPES):
            out.append(type(item)(_substitute(item.items, mapping)))
        else:
            out.append(item)
    return tuple(out)


def _width(items: Graph, mapping: Dict[Item, Graph]) -> int:
    return sum(len(mapping[item]) if item in mapping else 1 for item in items)


def _remap(g: Graph, addr: Address, mapping: Dict[Item, Graph]) -> Address:
    if addr.is_root:
        return addr
    path, start, end = selection(g, addr)
    new_path: List[int] = []
    items = g
    for index in path:
        new_path.append(_width(items[:index], mapping))
        items = items[index].items
    new_start = _width(items[:start], mapping)
    new_end = _width(items[:end], mapping)
    if addr.is_item and isinstance(items[start], CUT_TYPES):
        return Address(tuple(new_path) + (new_start,))
    return Address(tuple(new_path), (new_start, new_end))


def instantiate_derivation(d: Derivation, mapping: Dict[Item, Graph],
                           lt: Optional[LemmaTable] = None, name: Optional[str] = None) -> Derivation:
    """Replace placeholder atoms by graphs throughout d, re-indexing every address."""
    steps, graphs = primitive_trace(d, lt)
    out: List[Step] = []
    for s, before in zip(steps, graphs):
        src = None if s.src is None else _remap(before, s.src, mapping)
        payload = None if s.payload is None else _substitute(s.payload, mapping)
        out.append(Step(s.rule, _remap(before, s.at, mapping), src, payload, s.direction, s.lemma))
    return Derivation(name or d.name, _substitute(tuple(d.start), mapping), out,
                      canonicalize(_substitute(graphs[-1], mapping)), d.ruleset)


def _modus_ponens_steps(g: Graph, width: int) -> List[Step]:
    """On the sheet `X (X (Y))`, with X the first `width` items, leave Y."""
    steps: List[Step] = []
    inner = contents_at(g, (width,))
    consequent = next(i for i in range(len(inner) - 1, -1, -1)
                      if isinstance(inner[i], CutC)
                      and _width_free_match(inner, i, g[:width]))
    for t in range(len(inner) - 1, -1, -1):
        if t == consequent:
            continue
        source = next(k for k in range(width) if canonicalize((g[k],)) == canonicalize((inner[t],)))
        steps.append(Step(RuleId.DC, Address((width, t)), src=Address((source,))))
        if t < consequent:
            consequent -= 1
    steps.append(Step(RuleId.DCC, Address((width,)), direction="bwd"))
    steps.append(Step(RuleId.B, Address((), (0, width))))
    return steps


def _width_free_match(inner: Graph, index: int, antecedent: Graph) -> bool:
    rest = inner[:index] + inner[index + 1:]
    return canonicalize(rest) == canonicalize(antecedent)


def proof_to_derivation(p: Proof, corpus: Dict[str, Derivation],
                        lt: Optional[LemmaTable] = None) -> Derivation:
    """λ-derivation of the graph of p's conclusion, built line by line.

    Axiom lines instantiate the parametric derivations in `corpus`; + layered axioms add a
    DCMGEV step backed by a lemma certified from the core derivation; MP lines juxtapose the
    two premises and detach.
    """
    lt = lt if lt is not None else LemmaTable()
    if p.hypotheses:
        raise TransformError(f"proof '{p.name}' has hypotheses")
    normalized = [define_expand(line.formula) for line in p.lines]
    built: Dict[int, Tuple[List[Step], Graph]] = {}

    for index, (line, f) in enumerate(zip(p.lines, normalized)):
        just = line.justification
        if isinstance(just, Axiom):
            built[index] = _axiom_steps(p, index, f, just, corpus, lt)
        elif isinstance(just, MP):
            x_steps, x_graph = built[just.i]
            conditional = Derivation("conditional", LAMBDA, built[just.j][0], built[just.j][1], "RTRA")
            width = len(x_graph)
            ctx = context_at(x_graph, Address((), (width, width)))
            inner_steps, g = contextual_steps(conditional, ctx, x_graph, "RTRA", lt)
            detach = _modus_ponens_steps(g, width)
            for s in detach:
                g = apply_step(g, s, "RTRA", lt)
            built[index] = (x_steps + inner_steps + detach, g)
        else:
            raise TransformError(f"line {index + 1} of '{p.name}' is justified by "
                                 f"{type(just).__name__}; only axioms and mp compile")

    steps, end = built[len(p.lines) - 1]
    logger.debug("compiled proof %s into %d steps", p.name, len(steps))
    return Derivation(f"{p.name}-graph", LAMBDA, steps, canonicalize(end), "RTRA")


def _axiom_steps(p: Proof, index: int, f: Formula, just: Axiom, corpus: Dict[str, Derivation],
                 lt: LemmaTable) -> Tuple[List[Step], Graph]:
    schema_id = just.schema_id
    if schema_id not in corpus:
        raise TransformError(f"no parametric derivation for {schema_id}")
    bindings, depth = match_schema_id(f, schema_id, LD_TABLE, just.plus_depth)
    placeholders = schema_placeholders(schema_id)
    mapping = {to_graph(atom)[0]: to_graph(bindings[name]) for name, atom in placeholders.items()}
    core = instantiate_derivation(corpus[schema_id], mapping, lt, f"{p.name}:{index + 1}")
    graphs = replay(core, "RTRA", lt)
    steps, g = list(core.steps), graphs[-1]
    if depth == 1:
        lemma = f"{schema_id}:{print_graph(canonicalize(g))}"
        report = check_derivation(core, "RTRA", lt)
        lt.certify(lemma, core, report)
        wrap = Step(RuleId.DCMGEV, Address(), lemma=lemma)
        g = apply_step(g, wrap, "RTRA", lt)
        steps.append(wrap)
    return steps, g
