# rules.py
# Rule identifiers, rule sets, steps, derivations and the lemma table.
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, Optional

from gerg_double_logic.check_report import CheckReport
from gerg_double_logic.exceptions import KernelAssertionError
from gerg_double_logic.graph import (LAMBDA, Address, Graph, canonical_equal, canonicalize,
                                     print_graph)


class RuleId(str, Enum):
    # primitive RTRA
    B = "B"
    E = "E"
    DCC = "DCC"
    CC = "CC"
    DCMGEV = "DCMGEV"
    DCMF = "DCMF"
    I = "I"  # noqa: E741
    D = "D"
    IC = "IC"
    DC = "DC"
    IF = "IF"
    DF = "DF"
    # primitive RTRA-LI extras
    BL = "BL"
    EL = "EL"
    R = "R"
    CCR = "CCR"
    IdL = "IdL"
    IeL = "IeL"
    DdL = "DdL"
    DeL = "DeL"
    # derived over RTRA
    DCCL = "DCCL"
    DCM = "DCM"
    DCML = "DCML"
    CCE = "CCE"
    DCMF1 = "DCMF1"
    TCM = "TCM"
    DCAF = "DCAF"
    TCA = "TCA"
    TCAF = "TCAF"
    TCAF1 = "TCAF1"
    CCA = "CCA"
    ID = "ID"
    # derived over RTRA-LI
    RL = "RL"
    DCI = "DCI"
    TCI = "TCI"
    IFeL = "IFeL"
    DFeL = "DFeL"
    RaN = "RaN"
    RaD = "RaD"

    @property
    def primitive(self) -> bool:
        return self in _PRIMITIVE

    @property
    def home(self) -> str:
        return RULE_HOME[self]


_RTRA_PRIMITIVES = frozenset({RuleId.B, RuleId.E, RuleId.DCC, RuleId.CC, RuleId.DCMGEV, RuleId.DCMF,
                              RuleId.I, RuleId.D, RuleId.IC, RuleId.DC, RuleId.IF, RuleId.DF})
_RTRAC_PRIMITIVES = frozenset({RuleId.B, RuleId.E, RuleId.DCC, RuleId.I, RuleId.D, RuleId.IC, RuleId.DC})
_RTRA_LI_PRIMITIVES = frozenset({RuleId.B, RuleId.BL, RuleId.E, RuleId.EL, RuleId.R, RuleId.CCR,
                                 RuleId.I, RuleId.IdL, RuleId.IF, RuleId.IeL, RuleId.D, RuleId.DdL,
                                 RuleId.DF, RuleId.DeL})
_PRIMITIVE = _RTRA_PRIMITIVES | _RTRA_LI_PRIMITIVES

RULE_HOME: Dict[RuleId, str] = {}
for _rule in RuleId:
    if _rule in _RTRAC_PRIMITIVES:
        RULE_HOME[_rule] = "RTRAC"
    elif _rule in _RTRA_PRIMITIVES:
        RULE_HOME[_rule] = "RTRA"
    elif _rule in _RTRA_LI_PRIMITIVES or _rule in {RuleId.RL, RuleId.DCI, RuleId.TCI, RuleId.IFeL,
                                                    RuleId.DFeL, RuleId.RaN, RuleId.RaD}:
        RULE_HOME[_rule] = "RTRA-LI"
    else:
        RULE_HOME[_rule] = "RTRA"

# rules whose direction is chosen explicitly; the others read it from parity
BIDIRECTIONAL = frozenset({RuleId.DCC, RuleId.DCMGEV, RuleId.R, RuleId.DCMF1, RuleId.TCM,
                           RuleId.TCAF1, RuleId.CCA, RuleId.ID, RuleId.TCI, RuleId.RaN})


@dataclass(frozen=True)
class RuleSet:
    name: str
    primitives: FrozenSet[RuleId]

    def __contains__(self, rule: RuleId) -> bool:
        return rule in self.primitives


RTRA = RuleSet("RTRA", _RTRA_PRIMITIVES)
RTRAC = RuleSet("RTRAC", _RTRAC_PRIMITIVES)
RTRA_LI = RuleSet("RTRA-LI", _RTRA_LI_PRIMITIVES)
# union used when expanding derived rules and replaying translated derivations
ANY_RULES = RuleSet("ANY", _PRIMITIVE)

RULESETS = {"RTRA": RTRA, "RTRAC": RTRAC, "RTRA-LI": RTRA_LI, "RTRA_LI": RTRA_LI, "ANY": ANY_RULES}


def get_ruleset(name) -> RuleSet:
    if isinstance(name, RuleSet):
        return name
    try:
        return RULESETS[name]
    except KeyError:
        raise KernelAssertionError(f"unknown rule set '{name}'") from None


@dataclass(frozen=True)
class Step:
    rule: RuleId
    at: Address = Address()
    src: Optional[Address] = None
    payload: Optional[Graph] = None
    direction: str = "fwd"
    lemma: Optional[str] = None

    def __str__(self) -> str:
        parts = ["step", self.rule.value]
        if self.rule in BIDIRECTIONAL:
            parts.append(self.direction)
        parts += ["at", str(self.at)]
        if self.src is not None:
            parts += ["src", str(self.src)]
        if self.payload is not None:
            parts += ["put", print_graph(self.payload) or "lambda"]
        if self.lemma is not None:
            parts += ["use", self.lemma]
        return " ".join(parts)


@dataclass
class Derivation:
    name: str
    start: Graph
    steps: List[Step]
    end: Graph
    ruleset: Optional[str] = None

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)


# rule sets whose λ-derivations may be registered as lemmas for DCMGEV
CERTIFYING_RULESETS = ("RTRA", "RTRAC")


class LemmaTable:
    """Append-only map name -> graph; entries come from checked λ-derivations."""

    def __init__(self):
        self._entries: Dict[str, Graph] = {"lambda": LAMBDA}

    def __contains__(self, name: str) -> bool:
        return name in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, name: str) -> Optional[Graph]:
        return self._entries.get(name)

    def names(self) -> List[str]:
        return list(self._entries)

    def find(self, g: Graph, name: Optional[str] = None) -> Optional[str]:
        """Name of an entry canonically equal to g (restricted to `name` when given)."""
        candidates = [name] if name is not None else list(self._entries)
        for candidate in candidates:
            entry = self._entries.get(candidate)
            if entry is not None and canonical_equal(entry, g):
                return candidate
        return None

    def certify(self, name: str, d: Derivation, report: CheckReport) -> Graph:
        """Register d.end under `name`, given the report of checking d under RTRA or RTRAC."""
        if not report.accepted:
            raise KernelAssertionError(f"lemma '{name}' rejected: derivation did not check")
        if report.details.get("ruleset") not in CERTIFYING_RULESETS:
            raise KernelAssertionError(f"lemma '{name}' rejected: checked under "
                                       f"{report.details.get('ruleset')}, not RTRA or RTRAC")
        if d.start != LAMBDA:
            raise KernelAssertionError(f"lemma '{name}' rejected: derivation does not start at lambda")
        existing = self._entries.get(name)
        entry = canonicalize(d.end)
        if existing is not None and existing != entry:
            raise KernelAssertionError(f"lemma '{name}' already registered with a different graph")
        self._entries[name] = entry
        return entry

    def copy(self) -> "LemmaTable":
        clone = LemmaTable()
        clone._entries = dict(self._entries)
        return clone
