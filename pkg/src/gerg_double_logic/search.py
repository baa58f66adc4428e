# search.py
# Bounded iterative-deepening search for λ-derivations.
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from gerg_double_logic.exceptions import AddressError, RuleApplicationError
from gerg_double_logic.graph import (CUT_TYPES, LAMBDA, Address, Graph,
                                     GraphAltAtom, GraphAtom, Item, canonical_key, canonicalize,
                                     item_count, iter_items)
from gerg_double_logic.rewrite_engine import RewriteEngine
from gerg_double_logic.rules import Derivation, LemmaTable, RuleId, RuleSet, Step, get_ruleset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    max_depth: int = 3
    max_items: int = 6
    ruleset: str = "RTRA"
    alphabet: Tuple[str, ...] = ()
    memoize: bool = True

    def __post_init__(self):
        if self.max_depth < 0 or self.max_items < 1:
            raise ValueError("search bounds must be positive")


_SPAN_RULES = (RuleId.B, RuleId.D, RuleId.I)
_WRAP_RULES = ((RuleId.DCC, "fwd"), (RuleId.DCMGEV, "fwd"), (RuleId.R, "bwd"), (RuleId.DCMF, "fwd"))
_ITEM_RULES = ((RuleId.CC, "fwd"), (RuleId.CCR, "fwd"), (RuleId.DCC, "bwd"), (RuleId.DCMGEV, "bwd"),
               (RuleId.R, "fwd"), (RuleId.DCMF, "fwd"), (RuleId.BL, "fwd"), (RuleId.IdL, "fwd"),
               (RuleId.DdL, "fwd"))
_COPY_RULES = (RuleId.IC, RuleId.IF, RuleId.IeL)
_DELETE_RULES = (RuleId.DC, RuleId.DF, RuleId.DeL)


def _alphabet_item(symbol: str) -> Item:
    if symbol.startswith("@"):
        return GraphAltAtom(symbol[1:])
    return GraphAtom(symbol)


def payloads(target: Graph, alphabet: Tuple[str, ...]) -> List[Graph]:
    """Insertion candidates: single items of the target, contents of its cuts, and the alphabet."""
    found: Dict[tuple, Graph] = {}
    for item in iter_items(target):
        found.setdefault(canonical_key((item,)), (item,))
        if isinstance(item, CUT_TYPES) and item.items:
            found.setdefault(canonical_key(item.items), canonicalize(item.items))
    for symbol in alphabet:
        item = _alphabet_item(symbol)
        found.setdefault(canonical_key((item,)), (item,))
    return [found[key] for key in sorted(found)]


def _containers(g: Graph, path: Tuple[int, ...] = ()) -> Iterator[Tuple[Tuple[int, ...], Graph]]:
    yield path, g
    for index, item in enumerate(g):
        if isinstance(item, CUT_TYPES):
            yield from _containers(item.items, path + (index,))


def candidate_steps(g: Graph, rs: RuleSet, options: List[Graph]) -> Iterator[Step]:
    """Every step worth trying on g; the engine decides which ones apply."""
    containers = list(_containers(g))
    cut_paths = [path for path, _ in containers if path]
    item_paths = [path + (i,) for path, items in containers for i in range(len(items))]
    for path, items in containers:
        n = len(items)
        for start in range(n + 1):
            for end in range(start, n + 1):
                span = Address(path, (start, end))
                for rule, direction in _WRAP_RULES:
                    if rule in rs:
                        yield Step(rule, span, direction=direction)
                if end > start:
                    for rule in _SPAN_RULES:
                        if rule in rs:
                            yield Step(rule, span)
            for rule in (RuleId.E, RuleId.EL):
                if rule in rs:
                    for payload in options:
                        yield Step(rule, Address(path, (start, start)), payload=payload)
    for path in item_paths:
        for rule, direction in _ITEM_RULES:
            if rule in rs:
                yield Step(rule, Address(path), direction=direction)
        for target in cut_paths:
            for rule in _COPY_RULES:
                if rule in rs:
                    yield Step(rule, Address(target), src=Address(path))
        for other in item_paths:
            for rule in _DELETE_RULES:
                if rule in rs:
                    yield Step(rule, Address(other), src=Address(path))


class _Searcher:
    def __init__(self, target: Graph, cfg: SearchConfig, lt: LemmaTable):
        self.goal = canonical_key(target)
        self.cfg = cfg
        self.rs = get_ruleset(cfg.ruleset)
        self.lt = lt
        self.options = payloads(target, cfg.alphabet)
        self.engine = RewriteEngine()
        self.seen: Dict[tuple, int] = {}
        self.expanded = 0

    def successors(self, g: Graph) -> Iterator[Tuple[Step, Graph]]:
        produced = set()
        for s in candidate_steps(g, self.rs, self.options):
            try:
                after = self.engine.apply_step(g, s, self.rs, self.lt)
            except (RuleApplicationError, AddressError):
                continue
            if item_count(after) > self.cfg.max_items:
                continue
            key = canonical_key(after)
            if key in produced:
                continue
            produced.add(key)
            yield s, after

    def dfs(self, g: Graph, remaining: int) -> Optional[List[Step]]:
        if canonical_key(g) == self.goal:
            return []
        if remaining == 0:
            return None
        if self.cfg.memoize:
            key = canonical_key(g)
            if self.seen.get(key, -1) >= remaining:
                return None
            self.seen[key] = remaining
        self.expanded += 1
        for s, after in self.successors(g):
            rest = self.dfs(after, remaining - 1)
            if rest is not None:
                return [s] + rest
        return None


def bounded_search(target: Graph, cfg: SearchConfig = SearchConfig(),
                   lt: Optional[LemmaTable] = None) -> Optional[Derivation]:
    """Shortest derivation λ ≫ target within the bounds, or None."""
    target = tuple(target)
    if item_count(target) > cfg.max_items:
        return None
    searcher = _Searcher(target, cfg, lt if lt is not None else LemmaTable())
    for depth in range(cfg.max_depth + 1):
        searcher.seen.clear()
        steps = searcher.dfs(LAMBDA, depth)
        if steps is not None:
            logger.info("found %d-step derivation after %d expansions", len(steps), searcher.expanded)
            return Derivation("search", LAMBDA, steps, canonicalize(target), searcher.rs.name)
    logger.info("no derivation within depth %d (%d expansions)", cfg.max_depth, searcher.expanded)
    return None
