# hilbert.py
# Hilbert-style proof objects, the LD and LI axiom schema tables, and axiom matching.
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple, Union

from gerg_double_logic.formula import (Formula, ImpA, ImpC, NegA, NotC, classify, define_expand,
                                       expand_sugar, match_schema, print_formula)
from gerg_double_logic.syntax import parse
from gerg_double_logic.truth_table import MAX_ATOMS, truth_table_taut


@dataclass(frozen=True)
class Axiom:
    schema_id: str
    bindings: Dict[str, Formula] = field(default_factory=dict, compare=False, hash=False)
    plus_depth: Optional[int] = None


@dataclass(frozen=True)
class MP:
    """Modus ponens from line i (antecedent) and line j (the implication); 0-based."""
    i: int
    j: int


@dataclass(frozen=True)
class Taut:
    pass


@dataclass(frozen=True)
class Hyp:
    k: int


@dataclass(frozen=True)
class Lemma:
    name: str


Justification = Union[Axiom, MP, Taut, Hyp, Lemma]


@dataclass
class ProofLine:
    formula: Formula
    justification: Justification


@dataclass
class Proof:
    name: str
    hypotheses: List[Formula]
    lines: List[ProofLine]
    conclusion: Optional[Formula] = None
    system: str = "LD"

    def __post_init__(self):
        if self.conclusion is None and self.lines:
            self.conclusion = self.lines[-1].formula


@dataclass(frozen=True)
class SchemaTable:
    name: str
    schemas: Tuple[Tuple[str, Formula], ...]
    domain: str

    def get(self, schema_id: str) -> Optional[Formula]:
        return dict(self.schemas).get(schema_id)

    def ids(self) -> List[str]:
        return [schema_id for schema_id, _ in self.schemas]


_LD_SCHEMAS = [
    ("Ax1.1", "X > (Y > X)"),
    ("Ax1.2", "(X > (Y > Z)) > ((X > Y) > (X > Z))"),
    ("Ax1.3", "X > X | Y"),
    ("Ax1.4", "Y > X | Y"),
    ("Ax1.5", "(X > Z) > ((Y > Z) > (X | Y > Z))"),
    ("Ax1.6", "X & Y > X"),
    ("Ax1.7", "X & Y > Y"),
    ("Ax1.8", "(X > Y) > ((X > Z) > (X > Y & Z))"),
    ("Ax1.9", "X > (~X > Y)"),
    ("Ax1.10", "X | ~X"),
    ("Ax1.11", "(X = Y) > (X > Y)"),
    ("Ax1.12", "(X = Y) > (Y > X)"),
    ("Ax1.13", "(X > Y) > ((Y > X) > (X = Y))"),
    ("Ax2.1", "!~(X > Y) > (!~X > !~Y)"),
    ("Ax2.2", "!X > ~X"),
    ("Ax2.3", "X_ > !~X_"),
]

_LI_SCHEMAS = [
    ("Ax1.1i", "X -> (Y -> X)"),
    ("Ax1.2i", "(X -> (Y -> Z)) -> ((X -> Y) -> (X -> Z))"),
    ("Ax1.3i", "X -> X v Y"),
    ("Ax1.4i", "Y -> X v Y"),
    ("Ax1.5i", "(X -> Z) -> ((Y -> Z) -> (X v Y -> Z))"),
    ("Ax1.6i", "X ^ Y -> X"),
    ("Ax1.7i", "X ^ Y -> Y"),
    ("Ax1.8i", "(X -> Y) -> ((X -> Z) -> (X -> Y ^ Z))"),
    ("Ax1.9i", "X -> (!X -> Y)"),
    ("Ax1.10i", "(X -> !Y) -> (Y -> !X)"),
    ("Ax1.11i", "(X <-> Y) -> (X -> Y)"),
    ("Ax1.12i", "(X <-> Y) -> (Y -> X)"),
    ("Ax1.13i", "(X -> Y) -> ((Y -> X) -> (X <-> Y))"),
]

LD_TABLE = SchemaTable("LD", tuple((i, parse(t)) for i, t in _LD_SCHEMAS), "FOR")
LI_TABLE = SchemaTable("LI", tuple((i, parse(t)) for i, t in _LI_SCHEMAS), "FI")


def strip_plus(f: Formula) -> Optional[Formula]:
    """Core of a +-layered formula `!~core`, else None."""
    if isinstance(f, NegA) and isinstance(f.arg, NotC):
        return f.arg.arg
    return None


def _bindings_in_domain(bindings: Dict[str, Formula], domain: str) -> bool:
    if domain != "FI":
        return True
    return all(classify(value).is_FI for value in bindings.values())


def match_schema_id(f: Formula, schema_id: str, table: SchemaTable,
                    plus_depth: Optional[int] = None) -> Optional[Tuple[Dict[str, Formula], int]]:
    """Match one named schema at depth 0 or (LD only) depth 1."""
    schema = table.get(schema_id)
    if schema is None:
        return None
    candidates = [(f, 0)]
    core = strip_plus(f) if table.domain == "FOR" else None
    if core is not None:
        candidates.append((core, 1))
    for target, depth in candidates:
        if plus_depth is not None and depth != plus_depth:
            continue
        bindings = match_schema(schema, target)
        if bindings is not None and _bindings_in_domain(bindings, table.domain):
            return bindings, depth
    return None


def match_axiom(f: Formula, table: SchemaTable = LD_TABLE) -> Optional[Tuple[str, Dict[str, Formula], int]]:
    """First schema (in table order) that f instantiates, trying depth 0 before depth 1."""
    if table.domain == "FOR":
        f = define_expand(f)
    for depth in (0, 1):
        for schema_id in table.ids():
            found = match_schema_id(f, schema_id, table, plus_depth=depth)
            if found is not None:
                return schema_id, found[0], depth
    return None


def taut_check(f: Formula, max_atoms: int = MAX_ATOMS) -> bool:
    """Classical tautology after abstracting !-rooted, alternate and @-atom subtrees."""
    return truth_table_taut(expand_sugar(f), max_atoms)


def taut_or_plus_taut(f: Formula, max_atoms: int = MAX_ATOMS) -> bool:
    """Accepts T or +T for a tautology T (one + layer by necessitation)."""
    if taut_check(f, max_atoms):
        return True
    core = strip_plus(expand_sugar(f))
    return core is not None and taut_check(core, max_atoms)


def normalize(f: Formula, system: str = "LD") -> Formula:
    return define_expand(f) if system == "LD" else expand_sugar(f)


def implication(system: str):
    return ImpC if system == "LD" else ImpA


class ProofBuilder:
    """Accumulates proof lines, reusing the index of a formula already proved."""

    def __init__(self, name: str, hypotheses: Optional[List[Formula]] = None, system: str = "LD"):
        self.name = name
        self.hypotheses = list(hypotheses or [])
        self.system = system
        self.lines: List[ProofLine] = []
        self._index: Dict[Formula, int] = {}

    def add(self, formula: Formula, justification: Justification) -> int:
        if formula in self._index:
            return self._index[formula]
        self.lines.append(ProofLine(formula, justification))
        self._index[formula] = len(self.lines) - 1
        return self._index[formula]

    def index_of(self, formula: Formula) -> Optional[int]:
        return self._index.get(formula)

    def mp(self, antecedent: int, conditional: int) -> int:
        consequent = self.lines[conditional].formula.right
        return self.add(consequent, MP(antecedent, conditional))

    def build(self, conclusion: Optional[Formula] = None) -> Proof:
        """Finish the proof; the conclusion is re-stated last when dedup placed it earlier."""
        lines = list(self.lines)
        if conclusion is not None and lines[-1].formula != conclusion:
            lines.append(ProofLine(conclusion, lines[self._index[conclusion]].justification))
        return Proof(self.name, list(self.hypotheses), lines, system=self.system)


def describe_line(line: ProofLine) -> str:
    return f"{print_formula(line.formula)} ; {line.justification}"
