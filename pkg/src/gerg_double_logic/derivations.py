# derivations.py
# Reversal, contraposition and the graphical deduction-theorem combinators.
import logging
from typing import List, Optional, Tuple

from gerg_double_logic.check_report import CheckReport
from gerg_double_logic.exceptions import TransformError
from gerg_double_logic.graph import (LAMBDA, Address, Context, CutA, CutC, Graph,
                                     canonical_equal, context_at, contents_at, insertion_point,
                                     is_ga, plug, print_graph, region_from_kinds, cut_kinds_on,
                                     selection)
from gerg_double_logic.rewrite_engine import RewriteEngine, find_witness
from gerg_double_logic.rules import (ANY_RULES, Derivation, LemmaTable, RuleId, Step,
                                     get_ruleset)

logger = logging.getLogger(__name__)

_default_engine = RewriteEngine()


def apply_step(g: Graph, s: Step, rs=None, lt: Optional[LemmaTable] = None) -> Graph:
    """Rewrite g by one step using the default engine."""
    return _default_engine.apply_step(g, s, rs, lt)


def check_derivation(d: Derivation, rs=None, lt: Optional[LemmaTable] = None) -> CheckReport:
    """Replay d and report; uses d.ruleset (or RTRA) when rs is not given."""
    return _default_engine.check_derivation(d, rs, lt)


def replay(d: Derivation, rs=None, lt: Optional[LemmaTable] = None) -> List[Graph]:
    return _default_engine.replay(d, rs, lt)


def expand_derived(s: Step, g: Graph, lt: Optional[LemmaTable] = None) -> List[Step]:
    """Primitive steps realizing the derived step s at its site in g."""
    return _default_engine.expand_derived(g, s, lt)


def _inserted(path, start: int, count: int) -> Address:
    return Address(path, (start, start + count))


def reverse_step(s: Step, before: Graph) -> Step:
    """The partner step undoing s, addressed against the graph s produced from `before`."""
    rule = s.rule
    if not rule.primitive:
        raise TransformError(f"{rule.value} is derived; expand it before reversing")
    g = tuple(before)

    if rule is RuleId.B:
        path, start, end = selection(g, s.at)
        return Step(RuleId.E, Address(path, (start, start)), payload=contents_at(g, path)[start:end])
    if rule is RuleId.E:
        path, k = insertion_point(g, s.at)
        return Step(RuleId.B, _inserted(path, k, len(s.payload)))
    if rule is RuleId.BL:
        path, start, _ = selection(g, s.at)
        return Step(RuleId.EL, Address(path, (start, start)), payload=contents_at(g, path)[start].items)
    if rule is RuleId.EL:
        path, k = insertion_point(g, s.at)
        return Step(RuleId.BL, Address(path + (k,)))

    if rule in (RuleId.DCC, RuleId.DCMGEV, RuleId.R, RuleId.DCMF):
        path, start, end = selection(g, s.at)
        if rule is RuleId.DCMF:
            wrapping = region_from_kinds(cut_kinds_on(g, path)).even
        else:
            wrapping = s.direction == ("bwd" if rule is RuleId.R else "fwd")
        if wrapping:
            return Step(rule, Address(path + (start,)), direction=_flip(s.direction, rule),
                        lemma=s.lemma)
        inner = contents_at(g, path)[start].items[0].items
        return Step(rule, _inserted(path, start, len(inner)), direction=_flip(s.direction, rule),
                    lemma=s.lemma)

    if rule in (RuleId.CC, RuleId.CCR):
        return s

    if rule is RuleId.I:
        if s.src is None:
            path, start, end = selection(g, s.at)
            return Step(RuleId.D, _inserted(path, end, end - start), src=Address(path, (start, end)))
        source, start, end = selection(g, s.src)
        path, k = insertion_point(g, s.at)
        count = end - start
        if k <= start:
            witness = Address(path, (start + count, end + count))
        elif k >= end:
            witness = Address(path, (start, end))
        else:
            witness = None
        return Step(RuleId.D, _inserted(path, k, count), src=witness)
    if rule is RuleId.D:
        path, start, end = selection(g, s.at)
        if s.src is not None:
            _, first, last = selection(g, s.src)
        else:
            first, last = find_witness(contents_at(g, path), start, end)
        if first >= end:
            first, last = first - (end - start), last - (end - start)
        return Step(RuleId.I, Address(path, (start, start)), src=Address(path, (first, last)))

    if rule in (RuleId.IC, RuleId.IF, RuleId.IeL):
        source, start, end = selection(g, s.src)
        target, k = insertion_point(g, s.at)
        partner = {RuleId.IC: RuleId.DC, RuleId.IF: RuleId.DF, RuleId.IeL: RuleId.DeL}[rule]
        return Step(partner, _inserted(target, k, end - start), src=s.src)
    if rule in (RuleId.DC, RuleId.DF, RuleId.DeL):
        target, first, _ = selection(g, s.at)
        partner = {RuleId.DC: RuleId.IC, RuleId.DF: RuleId.IF, RuleId.DeL: RuleId.IeL}[rule]
        return Step(partner, Address(target, (first, first)), src=s.src)

    if rule is RuleId.IdL:
        if s.src is None:
            path, start, _ = selection(g, s.at)
            return Step(RuleId.DdL, Address(path + (start + 1,)), src=Address(path + (start,)))
        source, index, _ = selection(g, s.src)
        path, k = insertion_point(g, s.at)
        return Step(RuleId.DdL, Address(path + (k,)), src=Address(path + (index if index < k else index + 1,)))
    # DdL
    path, start, _ = selection(g, s.at)
    if s.src is not None:
        _, index, _ = selection(g, s.src)
    else:
        index, _ = find_witness(contents_at(g, path), start, start + 1)
    if index > start:
        index -= 1
    return Step(RuleId.IdL, Address(path, (start, start)), src=Address(path + (index,)))


def _flip(direction: str, rule: RuleId) -> str:
    if rule is RuleId.DCMF:
        return direction
    return "bwd" if direction == "fwd" else "fwd"


def primitive_trace(d: Derivation, lt: Optional[LemmaTable]) -> Tuple[List[Step], List[Graph]]:
    steps: List[Step] = []
    graphs = [tuple(d.start)]
    for s in d.steps:
        expanded = [s] if s.rule.primitive else expand_derived(s, graphs[-1], lt)
        for inner in expanded:
            graphs.append(_default_engine.apply_step(graphs[-1], inner, ANY_RULES, lt))
            steps.append(inner)
    return steps, graphs


def reverse_derivation(d: Derivation, lt: Optional[LemmaTable] = None) -> Derivation:
    """Steps taking d.end back to d.start when replayed with the parity of every site flipped."""
    steps, graphs = primitive_trace(d, lt)
    reversed_steps = [reverse_step(s, before) for s, before in zip(reversed(steps), reversed(graphs[:-1]))]
    return Derivation(f"{d.name}-reversed", graphs[-1], reversed_steps, tuple(d.start), d.ruleset)


_INSERTION_AT = {RuleId.E, RuleId.EL, RuleId.IC, RuleId.IF, RuleId.IeL,
                 RuleId.DCCL, RuleId.DCML, RuleId.RL, RuleId.IFeL}


def _rebase(addr: Address, prefix: Tuple[int, ...], offset: int, hole_length: int,
            insertion: bool) -> Address:
    if not addr.path:
        if addr.span is not None:
            return Address(prefix, (addr.span[0] + offset, addr.span[1] + offset))
        if insertion:
            return Address(prefix, (offset + hole_length, offset + hole_length))
        return Address(prefix, (offset, offset + hole_length))
    return Address(prefix + (addr.path[0] + offset,) + addr.path[1:], addr.span)


def _rebase_step(s: Step, prefix: Tuple[int, ...], offset: int, hole_length: int) -> Step:
    insertion = (s.rule in _INSERTION_AT
                 or (s.rule in (RuleId.I, RuleId.IdL) and s.src is not None)
                 or (s.rule is RuleId.RaN and s.direction == "bwd"))
    src = None if s.src is None else _rebase(s.src, prefix, offset, hole_length, False)
    return Step(s.rule, _rebase(s.at, prefix, offset, hole_length, insertion), src,
                s.payload, s.direction, s.lemma)


def hole_parity(ctx: Context) -> str:
    cuts = sum(1 for frame in ctx if frame.cut_kind is not None)
    return "even" if cuts % 2 == 0 else "odd"


def contextual_steps(d: Derivation, ctx: Context, g: Graph, rs=None,
                     lt: Optional[LemmaTable] = None) -> Tuple[List[Step], Graph]:
    """Steps (on the whole graph) replaying d, or its reversal, inside the hole of ctx."""
    even = hole_parity(ctx) == "even"
    source = d.start if even else d.end
    if not canonical_equal(plug(ctx, source), g):
        expected = "start" if even else "end"
        raise TransformError(f"{hole_parity(ctx)} hole must hold the derivation {expected} "
                             f"'{print_graph(source) or 'lambda'}'")
    sub = d if even else reverse_derivation(d, lt)
    rs = get_ruleset(rs or d.ruleset or _default_engine.config.ruleset)

    prefix = tuple(len(frame.left) for frame in ctx[:-1])
    offset = len(ctx[-1].left)
    outside = len(ctx[-1].left) + len(ctx[-1].right)
    working = plug(ctx, sub.start)
    steps: List[Step] = []
    for s in sub.steps:
        hole_length = len(contents_at(working, prefix)) - outside
        rebased = _rebase_step(s, prefix, offset, hole_length)
        working = _default_engine.apply_step(working, rebased, rs, lt)
        steps.append(rebased)
    return steps, working


def apply_derivation_in_context(d: Derivation, ctx: Context, g: Graph, rs=None,
                                lt: Optional[LemmaTable] = None) -> Graph:
    """Contraposition: run d forward in an even hole, backward in an odd one."""
    _, result = contextual_steps(d, ctx, g, rs, lt)
    return result


def _require_rules(d: Derivation, combinator: str, *rules: RuleId):
    rs = get_ruleset(d.ruleset or _default_engine.config.ruleset)
    missing = [rule.value for rule in rules if rule not in rs]
    if missing:
        raise TransformError(f"{combinator} needs {', '.join(missing)}, not in {rs.name}")
    return rs


def tdg(d: Derivation, lt: Optional[LemmaTable] = None) -> Derivation:
    """From X ≫ Y build λ ≫ (X (Y))."""
    rs = _require_rules(d, "tdg", RuleId.DCC, RuleId.E, RuleId.IC)
    x = tuple(d.start)
    k = len(x)
    steps = [
        Step(RuleId.DCC, Address((), (0, 0))),
        Step(RuleId.E, Address((0,), (0, 0)), payload=x),
        Step(RuleId.IC, Address((0, k)), src=Address((0,), (0, k))),
    ]
    working = (CutC(x + (CutC(x),)),)
    ctx = context_at(working, Address((0, k), (0, k)))
    inner, end = contextual_steps(d, ctx, working, rs, lt)
    logger.debug("tdg %s: %d + %d steps", d.name, len(steps), len(inner))
    return Derivation(f"tdg({d.name})", LAMBDA, steps + inner, end, rs.name)


def tdgf(d: Derivation, lt: Optional[LemmaTable] = None) -> Derivation:
    """From X̲ ≫ Y̲ (both GA) build λ ≫ [X̲ (Y̲)]."""
    if not (is_ga(d.start) and is_ga(d.end)):
        raise TransformError(f"tdgf needs GA endpoints, got '{print_graph(d.start) or 'lambda'}' "
                             f"and '{print_graph(d.end) or 'lambda'}'")
    rs = get_ruleset(d.ruleset or _default_engine.config.ruleset)
    if RuleId.R in rs:
        first = Step(RuleId.R, Address((), (0, 0)), direction="bwd")
    else:
        first = Step(RuleId.DCMGEV, Address((), (0, 0)), lemma="lambda")
    x = tuple(d.start)
    steps = [
        first,
        Step(RuleId.E, Address((0,), (0, 0)), payload=x),
        Step(RuleId.IF, Address((0, 1)), src=Address((0, 0))),
    ]
    working = (CutA(x + (CutC(x),)),)
    ctx = context_at(working, Address((0, 1), (0, 1)))
    inner, end = contextual_steps(d, ctx, working, rs, lt)
    return Derivation(f"tdgf({d.name})", LAMBDA, steps + inner, end, rs.name)


def _finish(base: Derivation, name: str, extra: List[Step], lt: Optional[LemmaTable]) -> Derivation:
    end = base.end
    for s in extra:
        end = _default_engine.apply_step(end, s, base.ruleset, lt)
    return Derivation(name, LAMBDA, base.steps + extra, end, base.ruleset)


def tdig(d: Derivation, form: str, lt: Optional[LemmaTable] = None) -> Derivation:
    """Intuitionistic-shaped deduction: a) X ≫ () gives λ ≫ (X); b) (X) ≫ () gives λ ≫ X;
    c) X̲ ≫ [] gives λ ≫ [X̲]."""
    name = f"tdig-{form}({d.name})"
    if form == "a":
        if not canonical_equal(d.end, (CutC(),)):
            raise TransformError("tdig a needs a derivation ending at ()")
        base = tdg(d, lt)
        return _finish(base, name, [Step(RuleId.DCC, Address((0, len(d.start))), direction="bwd")], lt)
    if form == "b":
        if len(d.start) != 1 or not isinstance(d.start[0], CutC):
            raise TransformError("tdig b needs a derivation starting at a single classical cut")
        inner = tdig(d, "a", lt)
        return _finish(inner, name, [Step(RuleId.DCC, Address((0,)), direction="bwd")], lt)
    if form == "c":
        if not canonical_equal(d.end, (CutA(),)):
            raise TransformError("tdig c needs a derivation ending at []")
        base = tdgf(d, lt)
        loop = Address((0, 1))
        if RuleId.CC in get_ruleset(base.ruleset):
            extra = [Step(RuleId.CC, loop), Step(RuleId.DCAF, loop)]
        else:
            extra = [Step(RuleId.RaN, loop)]
        return _finish(base, name, extra, lt)
    raise TransformError(f"unknown tdig form '{form}'")


def join(first: Derivation, second: Derivation, lt: Optional[LemmaTable] = None) -> Derivation:
    """From λ ≫ X and λ ≫ Y build λ ≫ X Y."""
    for d in (first, second):
        if tuple(d.start) != LAMBDA:
            raise TransformError(f"join needs lambda-derivations; '{d.name}' starts elsewhere")
    rs = get_ruleset(first.ruleset or second.ruleset or _default_engine.config.ruleset)
    g = _default_engine.replay(first, rs, lt)[-1]
    ctx = context_at(g, Address((), (len(g), len(g))))
    inner, end = contextual_steps(second, ctx, g, rs, lt)
    return Derivation(f"join({first.name},{second.name})", LAMBDA, list(first.steps) + inner, end, rs.name)
