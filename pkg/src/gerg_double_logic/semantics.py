# semantics.py
# Oracles: finite Kripke models for the FI fragment and the soundness scan.
import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterator, List, Optional, Tuple

from gerg_double_logic.bridge import ObligationReport, derivation_obligations
from gerg_double_logic.exceptions import KernelAssertionError
from gerg_double_logic.formula import (AndA, AtomA, Formula, IffA, ImpA, NegA, OrA, Top,
                                       atoms, classify, expand_sugar, print_formula)
from gerg_double_logic.rules import Derivation, LemmaTable

logger = logging.getLogger(__name__)

MAX_WORLDS = 5


@dataclass(frozen=True)
class KripkeModel:
    """Finite partial order of worlds with a persistent valuation of alternate atoms."""
    worlds: Tuple[int, ...]
    order: FrozenSet[Tuple[int, int]]
    valuation: Tuple[Tuple[str, FrozenSet[int]], ...]

    def leq(self, w: int, v: int) -> bool:
        return (w, v) in self.order

    def above(self, w: int) -> List[int]:
        return [v for v in self.worlds if self.leq(w, v)]

    def true_at(self, name: str, w: int) -> bool:
        return w in dict(self.valuation).get(name, frozenset())

    def forces(self, w: int, f: Formula) -> bool:
        if isinstance(f, Top):
            return True
        if isinstance(f, AtomA):
            return self.true_at(f.name, w)
        if isinstance(f, AndA):
            return self.forces(w, f.left) and self.forces(w, f.right)
        if isinstance(f, OrA):
            return self.forces(w, f.left) or self.forces(w, f.right)
        if isinstance(f, NegA):
            return not any(self.forces(v, f.arg) for v in self.above(w))
        if isinstance(f, ImpA):
            return all(not self.forces(v, f.left) or self.forces(v, f.right) for v in self.above(w))
        if isinstance(f, IffA):
            return all(self.forces(v, f.left) == self.forces(v, f.right) for v in self.above(w))
        raise KernelAssertionError(f"'{print_formula(f)}' is outside the FI fragment")

    def is_well_formed(self) -> bool:
        """Reflexive, antisymmetric, transitive order and persistent valuation."""
        reflexive = all((w, w) in self.order for w in self.worlds)
        antisymmetric = all(w == v or (v, w) not in self.order for w, v in self.order)
        transitive = all((w, u) in self.order
                         for w, v in self.order for x, u in self.order if v == x)
        persistent = all(v in worlds for _, worlds in self.valuation
                         for w in worlds for v in self.above(w))
        return reflexive and antisymmetric and transitive and persistent

    def describe(self) -> str:
        edges = ", ".join(f"w{w}<=w{v}" for w, v in sorted(self.order) if w != v) or "none"
        truths = "; ".join(f"@{name}: {{{', '.join(f'w{w}' for w in sorted(ws))}}}"
                           for name, ws in self.valuation)
        return f"worlds w0..w{len(self.worlds) - 1}; order {edges}; {truths}"


@dataclass(frozen=True)
class KripkeResult:
    valid: bool
    models_checked: int
    model: Optional[KripkeModel] = None
    world: Optional[int] = None


def _orders(n: int) -> Iterator[FrozenSet[Tuple[int, int]]]:
    """Partial orders on 0..n-1 compatible with the numeric order (every poset up to iso)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        strict = {pairs[i] for i in range(len(pairs)) if mask >> i & 1}
        if all((a, c) in strict for a, b in strict for x, c in strict if b == x):
            yield frozenset(strict | {(w, w) for w in range(n)})


def _upsets(n: int, order: FrozenSet[Tuple[int, int]]) -> List[FrozenSet[int]]:
    found = []
    for mask in range(1 << n):
        worlds = frozenset(w for w in range(n) if mask >> w & 1)
        if all(v in worlds for w in worlds for (x, v) in order if x == w):
            found.append(worlds)
    return found


def kripke_check(f: Formula, max_worlds: int = 4) -> KripkeResult:
    """Search models with up to `max_worlds` worlds for a world not forcing f."""
    if not classify(f).is_FI:
        raise KernelAssertionError(f"'{print_formula(f)}' is not an FI formula")
    if not 1 <= max_worlds <= MAX_WORLDS:
        raise KernelAssertionError(f"max_worlds must be within 1..{MAX_WORLDS}")
    f = expand_sugar(f)
    names = sorted(atom.name for atom in atoms(f))
    checked = 0
    for n in range(1, max_worlds + 1):
        for order in _orders(n):
            upsets = _upsets(n, order)
            for choice in product(upsets, repeat=len(names)):
                model = KripkeModel(tuple(range(n)), order, tuple(zip(names, choice)))
                checked += 1
                for w in model.worlds:
                    if not model.forces(w, f):
                        logger.debug("countermodel for %s: %s at w%d", print_formula(f), model.describe(), w)
                        return KripkeResult(False, checked, model, w)
    return KripkeResult(True, checked)


def soundness_scan(d: Derivation, lt: Optional[LemmaTable] = None) -> ObligationReport:
    """Collapse obligations of every step; the closing one reads λ as top for λ-derivations."""
    report = derivation_obligations(d, lt)
    if not report.all_true:
        logger.info("soundness scan of %s: %d failing obligations", d.name, len(report.failures()))
    return report
