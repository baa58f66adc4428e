# proof_checker.py
import logging
from typing import Dict, Optional

from gerg_double_logic.check_report import CheckReport, DiagnosticCollector
from gerg_double_logic.formula import Formula, classify, print_formula
from gerg_double_logic.hilbert import (LD_TABLE, LI_TABLE, MP, Axiom, Hyp, Lemma, Proof,
                                       Taut, normalize)
from gerg_double_logic.kernel_config import KernelConfig
from gerg_double_logic.line_validators import (AxiomLineValidator, HypothesisValidator,
                                               LemmaValidator, ModusPonensValidator,
                                               TautologyValidator)

logger = logging.getLogger(__name__)

_VALIDATOR_FOR = {Axiom: "axiom", MP: "mp", Taut: "taut", Hyp: "hyp", Lemma: "lemma"}


class ProofChecker:
    """Main engine for Hilbert proof checking."""

    def __init__(self, config: Optional[KernelConfig] = None):
        self.config = config or KernelConfig()
        self.validators = {
            "axiom": AxiomLineValidator(self.config),
            "mp": ModusPonensValidator(self.config),
            "taut": TautologyValidator(self.config),
            "hyp": HypothesisValidator(self.config),
            "lemma": LemmaValidator(self.config),
        }

    def check(self, p: Proof, mode: Optional[str] = None,
              lemmas: Optional[Dict[str, Formula]] = None, system: Optional[str] = None) -> CheckReport:
        """Replay every line; never raises for a rejected proof."""
        system = system or p.system
        mode = mode or ("taut" if self.config.taut_admitted else "pure")
        lemmas = lemmas or {}
        collector = DiagnosticCollector(p.name)
        table = LD_TABLE if system == "LD" else LI_TABLE

        if system == "LI":
            for k, hypothesis in enumerate(p.hypotheses):
                if not classify(hypothesis).is_FI:
                    collector.add(None, "non-FI", f"hypothesis {k + 1} is not an FI formula")
        normalized = [normalize(line.formula, system) for line in p.lines]
        for index, line in enumerate(p.lines):
            if system == "LI" and not classify(line.formula).is_FI:
                collector.add(index, "non-FI", f"'{print_formula(line.formula)}' is not an FI formula")
                continue
            validator = self.validators[_VALIDATOR_FOR[type(line.justification)]]
            kwargs = dict(proof=p, index=index, normalized=normalized, lemmas=lemmas,
                          table=table, system=system, taut_admitted=(mode == "taut"))
            if not validator.validate(line, **kwargs):
                collector.add(index, validator.kind, validator.get_error_message(line, **kwargs))

        if not p.lines:
            collector.add(None, "empty", "proof has no lines")
        elif p.conclusion is not None and normalize(p.conclusion, system) != normalized[-1]:
            collector.add(len(p.lines) - 1, "conclusion",
                          f"last line does not state '{print_formula(p.conclusion)}'")

        report = collector.report(kind="proof", system=system, mode=mode,
                                  hypotheses=len(p.hypotheses), lines=len(p.lines))
        logger.debug("checked proof %s: %s", p.name, "accept" if report.accepted else "reject")
        return report

    def assert_proof(self, p: Proof, mode: Optional[str] = None,
                     lemmas: Optional[Dict[str, Formula]] = None) -> Proof:
        """Check and raise the configured error class on rejection; returns p."""
        report = self.check(p, mode, lemmas)
        if not report.accepted and self.config.raise_on_failure:
            collector = DiagnosticCollector(p.name)
            collector.diagnostics = report.diagnostics
            raise self.config.custom_error_class(collector.summary())
        return p


_default_checker = ProofChecker()


def check_proof(p: Proof, mode: str = "taut", lemmas: Optional[Dict[str, Formula]] = None) -> CheckReport:
    """Check an LD proof ("pure" forbids taut lines)."""
    return _default_checker.check(p, mode, lemmas, system="LD")


def check_li_proof(p: Proof, lemmas: Optional[Dict[str, Formula]] = None) -> CheckReport:
    """Check an LI proof against the LI schemas with MP over ->."""
    return _default_checker.check(p, "pure", lemmas, system="LI")
