# line_validators.py

from abc import ABC, abstractmethod
from typing import Optional

from gerg_double_logic.formula import print_formula
from gerg_double_logic.hilbert import (ProofLine, implication, match_schema_id,
                                       normalize, taut_or_plus_taut)
from gerg_double_logic.kernel_config import KernelConfig


class BaseLineValidator(ABC):
    """Abstract base class for proof-line justification checks."""

    kind = "line"

    def __init__(self, config: Optional[KernelConfig] = None):
        self.config = config or KernelConfig()

    @abstractmethod
    def validate(self, line: ProofLine, **kwargs) -> bool:
        """Check the line against its justification."""
        pass

    @abstractmethod
    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        """Explain why the justification does not hold."""
        pass


class AxiomLineValidator(BaseLineValidator):
    """Axiom instances, with one + layer admitted in LD."""

    kind = "bad-axiom"

    def validate(self, line: ProofLine, **kwargs) -> bool:
        just = line.justification
        found = match_schema_id(kwargs["normalized"][kwargs["index"]], just.schema_id,
                                kwargs["table"], just.plus_depth)
        if found is None:
            return False
        bindings, _ = found
        return all(normalize(value, kwargs["system"]) == bindings.get(name)
                   for name, value in just.bindings.items())

    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        just = line.justification
        depth = "" if just.plus_depth is None else f" at + depth {just.plus_depth}"
        return f"'{print_formula(line.formula)}' is not an instance of {just.schema_id}{depth}"


class ModusPonensValidator(BaseLineValidator):
    """Line j must read (line i) ⊃ (this line); ImpA in LI."""

    kind = "mp-shape"

    def validate(self, line: ProofLine, **kwargs) -> bool:
        i, j, index = line.justification.i, line.justification.j, kwargs["index"]
        if not (0 <= i < index and 0 <= j < index):
            return False
        normalized = kwargs["normalized"]
        expected = implication(kwargs["system"])(normalized[i], normalized[index])
        return normalized[j] == expected

    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        i, j, index = line.justification.i, line.justification.j, kwargs["index"]
        if not (0 <= i < index and 0 <= j < index):
            return f"mp {i + 1} {j + 1} must cite earlier lines"
        return f"line {j + 1} is not (line {i + 1}) implies '{print_formula(line.formula)}'"


class TautologyValidator(BaseLineValidator):
    """Truth-table admitted classical lemmas."""

    kind = "taut"

    def validate(self, line: ProofLine, **kwargs) -> bool:
        if not kwargs["taut_admitted"] or kwargs["system"] != "LD":
            return False
        return taut_or_plus_taut(kwargs["normalized"][kwargs["index"]], self.config.max_taut_atoms)

    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        if kwargs["system"] != "LD":
            return "taut is not available in LI proofs"
        if not kwargs["taut_admitted"]:
            return "taut used in pure mode"
        return f"'{print_formula(line.formula)}' is not a tautology"


class HypothesisValidator(BaseLineValidator):
    kind = "hypothesis"

    def validate(self, line: ProofLine, **kwargs) -> bool:
        k = line.justification.k
        hypotheses = kwargs["proof"].hypotheses
        if not 0 <= k < len(hypotheses):
            return False
        return normalize(hypotheses[k], kwargs["system"]) == kwargs["normalized"][kwargs["index"]]

    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        return f"line is not hypothesis {line.justification.k + 1}"


class LemmaValidator(BaseLineValidator):
    kind = "lemma"

    def validate(self, line: ProofLine, **kwargs) -> bool:
        lemma = kwargs["lemmas"].get(line.justification.name)
        if lemma is None:
            return False
        return normalize(lemma, kwargs["system"]) == kwargs["normalized"][kwargs["index"]]

    def get_error_message(self, line: ProofLine, **kwargs) -> str:
        name = line.justification.name
        if name not in kwargs["lemmas"]:
            return f"unknown lemma '{name}'"
        return f"line does not state lemma '{name}'"
