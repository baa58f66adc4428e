# truth_table.py
from functools import lru_cache
from itertools import product
from typing import Dict, List

from gerg_double_logic.exceptions import AtomBudgetError
from gerg_double_logic.formula import (AndC, Formula, IffC, ImpC, NotC, OrC, Top,
                                       expand_sugar, print_formula)

MAX_ATOMS = 16

_CLASSICAL_BINARIES = (AndC, OrC, ImpC, IffC)


def propositional_atoms(f: Formula) -> List[str]:
    """Printed forms of the maximal subtrees treated as propositional variables.

    Any subtree whose root is not ~, a classical binary or top is opaque: atoms of both
    kinds, metavariables, ! and the alternate binaries.
    """
    found: Dict[str, None] = {}

    def visit(node: Formula) -> None:
        if isinstance(node, Top):
            return
        if isinstance(node, NotC):
            visit(node.arg)
        elif isinstance(node, _CLASSICAL_BINARIES):
            visit(node.left)
            visit(node.right)
        else:
            found.setdefault(print_formula(node), None)

    visit(f)
    return list(found)


def _evaluate(node: Formula, valuation: Dict[str, bool]) -> bool:
    if isinstance(node, Top):
        return True
    if isinstance(node, NotC):
        return not _evaluate(node.arg, valuation)
    if isinstance(node, AndC):
        return _evaluate(node.left, valuation) and _evaluate(node.right, valuation)
    if isinstance(node, OrC):
        return _evaluate(node.left, valuation) or _evaluate(node.right, valuation)
    if isinstance(node, ImpC):
        return (not _evaluate(node.left, valuation)) or _evaluate(node.right, valuation)
    if isinstance(node, IffC):
        return _evaluate(node.left, valuation) == _evaluate(node.right, valuation)
    return valuation[print_formula(node)]


@lru_cache(maxsize=4096)
def truth_table_taut(f: Formula, max_atoms: int = MAX_ATOMS) -> bool:
    """Exhaustive classical evaluation; opaque subtrees become independent variables."""
    f = expand_sugar(f)
    names = propositional_atoms(f)
    if len(names) > max_atoms:
        raise AtomBudgetError(f"{len(names)} propositional atoms exceed the budget of {max_atoms}")
    for values in product((False, True), repeat=len(names)):
        if not _evaluate(f, dict(zip(names, values))):
            return False
    return True


def countervaluation(f: Formula, max_atoms: int = MAX_ATOMS):
    """A falsifying assignment, or None when f is a tautology."""
    f = expand_sugar(f)
    names = propositional_atoms(f)
    if len(names) > max_atoms:
        raise AtomBudgetError(f"{len(names)} propositional atoms exceed the budget of {max_atoms}")
    for values in product((False, True), repeat=len(names)):
        valuation = dict(zip(names, values))
        if not _evaluate(f, valuation):
            return valuation
    return None
