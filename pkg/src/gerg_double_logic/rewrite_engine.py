# rewrite_engine.py
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from gerg_double_logic.check_report import CheckReport, DiagnosticCollector
from gerg_double_logic.derived_rules import expand_once
from gerg_double_logic.exceptions import (AddressError, KernelAssertionError,
                                          RuleApplicationError)
from gerg_double_logic.graph import (ALTERNATE, CUT_TYPES, LAMBDA, CutA, CutC, Graph, Item,
                                     RegionInfo, canonical_equal, contents_at, cut_kinds_on,
                                     insert_at, insertion_point, print_graph,
                                     region_from_kinds, selection, update_contents)
from gerg_double_logic.kernel_config import KernelConfig
from gerg_double_logic.rules import (ANY_RULES, LemmaTable, RuleId, RuleSet, Step,
                                     Derivation, get_ruleset)
from gerg_double_logic.side_conditions import (AlternateShapeCondition,
                                               ClassicalRegionCondition, LemmaCondition,
                                               ParityCondition, RulesetCondition,
                                               ShapeCondition)

logger = logging.getLogger(__name__)

Path = Tuple[int, ...]

CERTIFIES = {"RTRA": "GEV", "RTRAC": "GCV", "RTRA-LI": "GIV"}


def find_witness(items: Graph, start: int, end: int) -> Optional[Tuple[int, int]]:
    """A slice of `items` disjoint from start..end and canonically equal to it."""
    removed = items[start:end]
    width = end - start
    for first in range(0, len(items) - width + 1):
        last = first + width
        if (last <= start or first >= end) and canonical_equal(items[first:last], removed):
            return first, last
    return None


def _splice(g: Graph, path: Path, index: int, replacement: Graph) -> Graph:
    return update_contents(g, path, lambda items: items[:index] + tuple(replacement) + items[index + 1:])


def _wrap(g: Graph, path: Path, start: int, end: int, build: Callable[[Graph], Item]) -> Graph:
    return update_contents(g, path, lambda items: items[:start] + (build(items[start:end]),) + items[end:])


def _delete(g: Graph, path: Path, start: int, end: int) -> Graph:
    return update_contents(g, path, lambda items: items[:start] + items[end:])


def _mixed(x: Graph) -> Item:
    return CutA((CutC(x),))


class RewriteEngine:
    """Main engine for Gamma-LD rewriting and derivation checking."""

    def __init__(self, config: Optional[KernelConfig] = None, lemmas: Optional[LemmaTable] = None):
        self.config = config or KernelConfig()
        self.lemmas = lemmas if lemmas is not None else LemmaTable()
        self.errors: List[str] = []
        self.conditions = {
            'ruleset': RulesetCondition(self.config),
            'parity': ParityCondition(self.config),
            'classical': ClassicalRegionCondition(self.config),
            'ga': AlternateShapeCondition(self.config),
            'lemma': LemmaCondition(self.config),
            'shape': ShapeCondition(self.config),
        }
        self.handlers: Dict[RuleId, Callable[[Graph, Step, LemmaTable], Graph]] = {
            RuleId.B: self._erase,
            RuleId.E: self._write,
            RuleId.DCC: self._double_cut,
            RuleId.CC: self._cut_change,
            RuleId.DCMGEV: self._mixed_lemma,
            RuleId.DCMF: self._mixed_strong,
            RuleId.I: self._iterate,
            RuleId.D: self._deiterate,
            RuleId.IC: lambda g, s, lt: self._copy_inward(g, s, strong=False),
            RuleId.DC: lambda g, s, lt: self._delete_inward(g, s, strong=False),
            RuleId.IF: lambda g, s, lt: self._copy_inward(g, s, strong=True),
            RuleId.DF: lambda g, s, lt: self._delete_inward(g, s, strong=True),
            RuleId.BL: self._loop_erase,
            RuleId.EL: self._loop_write,
            RuleId.R: self._curl,
            RuleId.CCR: self._loop_cut_change,
            RuleId.IdL: self._loop_iterate,
            RuleId.DdL: self._loop_deiterate,
            RuleId.IeL: self._loop_enter,
            RuleId.DeL: self._loop_leave,
        }

    def _validate_with_engine(self, condition_name: str, value: Any, rule: RuleId, **kwargs) -> None:
        """Internal method to check a side condition; always raises on violation."""
        condition = self.conditions[condition_name]
        if not condition.validate(value, **kwargs):
            raise RuleApplicationError(condition.get_error_message(value, rule.value, **kwargs),
                                       kind=condition.kind)

    def _shape(self, ok: bool, rule: RuleId, message: str) -> None:
        self._validate_with_engine('shape', ok, rule, message=message)

    # Site helpers
    @staticmethod
    def _region(g: Graph, path: Path) -> RegionInfo:
        return region_from_kinds(cut_kinds_on(g, path))

    def _item(self, g: Graph, s: Step) -> Tuple[Path, int, Item]:
        path, start, end = selection(g, s.at)
        self._shape(end == start + 1, s.rule, f"{s.at} must select exactly one item")
        return path, start, contents_at(g, path)[start]

    def _loop_owner(self, g: Graph, container: Path, rule: RuleId) -> RegionInfo:
        kinds = cut_kinds_on(g, container)
        self._shape(bool(kinds) and kinds[-1] == ALTERNATE, rule,
                    "site is not directly inside an alternate cut")
        return region_from_kinds(kinds[:-1])

    def _require_src(self, s: Step) -> None:
        self._shape(s.src is not None, s.rule, "needs a src address")

    # RTRA
    def _erase(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, start, end = selection(g, s.at)
        self._validate_with_engine('parity', self._region(g, path), s.rule, expected="even")
        return _delete(g, path, start, end)

    def _write(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        self._shape(s.payload is not None, s.rule, "needs a payload")
        path, k = insertion_point(g, s.at)
        self._validate_with_engine('parity', self._region(g, path), s.rule, expected="odd")
        return insert_at(g, path, k, s.payload)

    def _double_cut(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        if s.direction == "fwd":
            path, start, end = selection(g, s.at)
            return _wrap(g, path, start, end, lambda x: CutC((CutC(x),)))
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutC) and len(item.items) == 1 and isinstance(item.items[0], CutC),
                    s.rule, "expects ((X))")
        return _splice(g, path, index, item.items[0].items)

    def _cut_change(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CUT_TYPES), s.rule, "expects a cut")
        expected = "even" if isinstance(item, CutA) else "odd"
        self._validate_with_engine('parity', self._region(g, path), s.rule, expected=expected,
                                   what=f"region to change {type(item).__name__}")
        swapped = CutC(item.items) if isinstance(item, CutA) else CutA(item.items)
        return _splice(g, path, index, (swapped,))

    def _mixed_lemma(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        if s.direction == "fwd":
            path, start, end = selection(g, s.at)
            x = contents_at(g, path)[start:end]
            self._validate_with_engine('lemma', x, s.rule, lemmas=lt, name=s.lemma)
            return _wrap(g, path, start, end, _mixed)
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutA) and len(item.items) == 1 and isinstance(item.items[0], CutC),
                    s.rule, "expects [(X)]")
        x = item.items[0].items
        self._validate_with_engine('lemma', x, s.rule, lemmas=lt, name=s.lemma)
        return _splice(g, path, index, x)

    def _mixed_strong(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, start, end = selection(g, s.at)
        if self._region(g, path).even:
            self._validate_with_engine('ga', contents_at(g, path)[start:end], s.rule)
            return _wrap(g, path, start, end, _mixed)
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutA) and len(item.items) == 1 and isinstance(item.items[0], CutC),
                    s.rule, "expects [(X)] at an odd region")
        self._validate_with_engine('ga', item.items[0].items, s.rule)
        return _splice(g, path, index, item.items[0].items)

    def _iterate(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        if s.src is None:
            path, start, end = selection(g, s.at)
            return insert_at(g, path, end, contents_at(g, path)[start:end])
        source, start, end = selection(g, s.src)
        path, k = insertion_point(g, s.at)
        self._shape(path == source, s.rule, "copies stay in one region; use IC or IF across cuts")
        return insert_at(g, path, k, contents_at(g, source)[start:end])

    def _deiterate(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, start, end = selection(g, s.at)
        items = contents_at(g, path)
        self._shape(end > start, s.rule, "nothing selected")
        if s.src is None:
            found = find_witness(items, start, end) is not None
        else:
            source, first, last = selection(g, s.src)
            found = (source == path and (last <= start or first >= end)
                     and canonical_equal(items[first:last], items[start:end]))
        self._shape(found, s.rule, "no sibling copy of the deleted items in the region")
        return _delete(g, path, start, end)

    def _check_inward(self, g: Graph, s: Step, source: Path, start: int, end: int,
                      target: Path, strong: bool) -> None:
        depth = len(source)
        inward = len(target) > depth and target[:depth] == source and not start <= target[depth] < end
        self._shape(inward, s.rule, "destination must lie strictly inside the source region, outside the source")
        if not strong:
            kinds = cut_kinds_on(g, target)
            self._validate_with_engine('classical', kinds[:depth], s.rule, what="source region")
            self._validate_with_engine('classical', kinds[depth:], s.rule, what="path to the destination")

    def _copy_inward(self, g: Graph, s: Step, strong: bool) -> Graph:
        self._require_src(s)
        source, start, end = selection(g, s.src)
        copy = contents_at(g, source)[start:end]
        if strong:
            self._validate_with_engine('ga', copy, s.rule)
        target, k = insertion_point(g, s.at)
        self._check_inward(g, s, source, start, end, target, strong)
        return insert_at(g, target, k, copy)

    def _delete_inward(self, g: Graph, s: Step, strong: bool) -> Graph:
        self._require_src(s)
        source, start, end = selection(g, s.src)
        original = contents_at(g, source)[start:end]
        if strong:
            self._validate_with_engine('ga', original, s.rule)
        target, first, last = selection(g, s.at)
        self._check_inward(g, s, source, start, end, target, strong)
        self._shape(last > first and canonical_equal(contents_at(g, target)[first:last], original),
                    s.rule, "deleted items are not a copy of the source")
        return _delete(g, target, first, last)

    # RTRA-LI extras
    def _loop_erase(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutC), s.rule, "expects a loop (Y)")
        owner = self._loop_owner(g, path, s.rule)
        self._validate_with_engine('parity', owner, s.rule, expected="odd", what="alternate cut")
        return _delete(g, path, index, index + 1)

    def _loop_write(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        self._shape(s.payload is not None, s.rule, "needs a payload")
        path, k = insertion_point(g, s.at)
        owner = self._loop_owner(g, path, s.rule)
        self._validate_with_engine('parity', owner, s.rule, expected="even", what="alternate cut")
        return insert_at(g, path, k, (CutC(tuple(s.payload)),))

    def _curl(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        if s.direction == "bwd":
            path, start, end = selection(g, s.at)
            return _wrap(g, path, start, end, _mixed)
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutA) and len(item.items) == 1 and isinstance(item.items[0], CutC),
                    s.rule, "expects [(X)]")
        return _splice(g, path, index, item.items[0].items)

    def _loop_cut_change(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CUT_TYPES), s.rule, "expects a cut inside an alternate cut")
        owner = self._loop_owner(g, path, s.rule)
        expected = "even" if isinstance(item, CutC) else "odd"
        self._validate_with_engine('parity', owner, s.rule, expected=expected, what="alternate cut")
        swapped = CutA(item.items) if isinstance(item, CutC) else CutC(item.items)
        return _splice(g, path, index, (swapped,))

    def _loop_iterate(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        if s.src is None:
            path, index, item = self._item(g, s)
            target, k = path, index + 1
        else:
            path, index, _ = self._item(g, Step(s.rule, s.src))
            item = contents_at(g, path)[index]
            target, k = insertion_point(g, s.at)
            self._shape(target == path, s.rule, "loop copy must stay in the same alternate cut")
        self._shape(isinstance(item, CutC), s.rule, "expects a loop (Y)")
        self._loop_owner(g, path, s.rule)
        return insert_at(g, target, k, (item,))

    def _loop_deiterate(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        path, index, item = self._item(g, s)
        self._shape(isinstance(item, CutC), s.rule, "expects a loop (Y)")
        self._loop_owner(g, path, s.rule)
        items = contents_at(g, path)
        if s.src is None:
            found = find_witness(items, index, index + 1) is not None
        else:
            source, first, last = selection(g, s.src)
            found = (source == path and last == first + 1 and first != index
                     and canonical_equal(items[first:last], (item,)))
        self._shape(found, s.rule, "no sibling copy of the loop")
        return _delete(g, path, index, index + 1)

    def _loop_target(self, g: Graph, s: Step, owner: Path, start: int, end: int, loop: Path) -> None:
        self._loop_owner(g, owner, s.rule)
        ok = len(loop) == len(owner) + 1 and loop[:-1] == owner and not start <= loop[-1] < end
        self._shape(ok and isinstance(contents_at(g, owner)[loop[-1]], CutC), s.rule,
                    "destination must be a sibling loop in the same alternate cut")

    def _loop_enter(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        self._require_src(s)
        owner, start, end = selection(g, s.src)
        loop, k = insertion_point(g, s.at)
        self._loop_target(g, s, owner, start, end, loop)
        return insert_at(g, loop, k, contents_at(g, owner)[start:end])

    def _loop_leave(self, g: Graph, s: Step, lt: LemmaTable) -> Graph:
        self._require_src(s)
        owner, start, end = selection(g, s.src)
        loop, first, last = selection(g, s.at)
        self._loop_target(g, s, owner, start, end, loop)
        self._shape(last > first and canonical_equal(contents_at(g, loop)[first:last],
                                                     contents_at(g, owner)[start:end]),
                    s.rule, "deleted items are not a copy of the sibling")
        return _delete(g, loop, first, last)

    # Application
    def _apply(self, g: Graph, s: Step, rs: RuleSet, lt: LemmaTable) -> Graph:
        if s.rule.primitive:
            self._validate_with_engine('ruleset', s.rule, s.rule, ruleset=rs)
            return self.handlers[s.rule](g, s, lt)
        _, result = self._expand(g, s, rs, lt)
        return result

    def _expand(self, g: Graph, s: Step, rs: RuleSet, lt: LemmaTable) -> Tuple[List[Step], Graph]:
        steps: List[Step] = []
        for inner in expand_once(s, g):
            if inner.rule.primitive:
                g = self._apply(g, inner, rs, lt)
                steps.append(inner)
            else:
                nested, g = self._expand(g, inner, rs, lt)
                steps.extend(nested)
        return steps, g

    def _resolve(self, rs, lt) -> Tuple[RuleSet, LemmaTable]:
        return get_ruleset(rs or self.config.ruleset), (lt if lt is not None else self.lemmas)

    def apply_step(self, g: Graph, s: Step, rs=None, lt: Optional[LemmaTable] = None) -> Graph:
        """Rewrite g by one (possibly derived) step."""
        rs, lt = self._resolve(rs, lt)
        try:
            result = self._apply(tuple(g), s, rs, lt)
        except (RuleApplicationError, AddressError) as exc:
            if not self.config.raise_on_failure:
                logger.info("step %s rejected: %s", s, exc)
                self.errors.append(str(exc))
                return tuple(g)
            if issubclass(self.config.custom_error_class, KernelAssertionError):
                raise
            raise self.config.custom_error_class(str(exc)) from exc
        logger.debug("%s: '%s' -> '%s'", s, print_graph(g), print_graph(result))
        return result

    def expand_derived(self, g: Graph, s: Step, lt: Optional[LemmaTable] = None) -> List[Step]:
        """Primitive steps realizing a derived step at its site in g."""
        if s.rule.primitive:
            raise RuleApplicationError(f"{s.rule.value} is primitive, not derived", kind="shape")
        _, lt = self._resolve(None, lt)
        steps, _ = self._expand(tuple(g), s, ANY_RULES, lt)
        return steps

    def replay(self, d: Derivation, rs=None, lt: Optional[LemmaTable] = None) -> List[Graph]:
        """Graphs before and after every step; raises on the first failing step."""
        rs, lt = self._resolve(rs or d.ruleset, lt)
        graphs = [tuple(d.start)]
        for index, s in enumerate(d.steps):
            try:
                graphs.append(self._apply(graphs[-1], s, rs, lt))
            except RuleApplicationError as exc:
                exc.step_index = index
                raise
        return graphs

    def check_derivation(self, d: Derivation, rs=None, lt: Optional[LemmaTable] = None) -> CheckReport:
        """Replay every step; never raises for a rejected derivation."""
        rs, lt = self._resolve(rs or d.ruleset, lt)
        collector = DiagnosticCollector(d.name)
        current = tuple(d.start)
        for index, s in enumerate(d.steps):
            try:
                current = self._apply(current, s, rs, lt)
            except RuleApplicationError as exc:
                collector.add(index, exc.kind, exc.message)
                break
            except AddressError as exc:
                collector.add(index, "address", str(exc))
                break
        else:
            if not canonical_equal(current, d.end):
                collector.add(None, "end", f"replay ends at '{print_graph(current) or 'lambda'}', "
                                           f"expected '{print_graph(d.end) or 'lambda'}'")
        accepted = not collector.has_errors()
        certifies = CERTIFIES.get(rs.name) if accepted and tuple(d.start) == LAMBDA else None
        report = collector.report(kind="derivation", ruleset=rs.name, steps=len(d.steps),
                                  start=print_graph(d.start) or "lambda",
                                  end=print_graph(d.end) or "lambda", certifies=certifies)
        logger.debug("checked derivation %s under %s: %s", d.name, rs.name,
                     "accept" if accepted else "reject")
        return report

    def assert_derivation(self, d: Derivation, rs=None, lt: Optional[LemmaTable] = None) -> Derivation:
        report = self.check_derivation(d, rs, lt)
        if not report.accepted and self.config.raise_on_failure:
            collector = DiagnosticCollector(d.name)
            collector.diagnostics = report.diagnostics
            raise self.config.custom_error_class(collector.summary())
        return d
