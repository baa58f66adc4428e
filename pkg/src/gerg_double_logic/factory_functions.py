# factory_functions.py

from typing import Optional, Type

from gerg_double_logic.exceptions import KernelAssertionError
from gerg_double_logic.kernel_config import KernelConfig
from gerg_double_logic.proof_checker import ProofChecker
from gerg_double_logic.rewrite_engine import RewriteEngine
from gerg_double_logic.rules import LemmaTable


# Factory functions for creating custom configurations
def create_rewrite_engine(ruleset: str = "RTRA",
                          raise_on_failure: bool = True,
                          custom_error_class: Type[Exception] = KernelAssertionError,
                          lemmas: Optional[LemmaTable] = None) -> RewriteEngine:
    """Factory function to create a RewriteEngine with a specific rule set and failure policy."""
    config = KernelConfig(
        ruleset=ruleset,
        raise_on_failure=raise_on_failure,
        custom_error_class=custom_error_class
    )
    return RewriteEngine(config, lemmas)


def create_classical_engine(lemmas: Optional[LemmaTable] = None) -> RewriteEngine:
    """Engine restricted to the classical rules."""
    return create_rewrite_engine(ruleset="RTRAC", lemmas=lemmas)


def create_intuitionistic_engine(lemmas: Optional[LemmaTable] = None) -> RewriteEngine:
    """Engine restricted to the intuitionistic (loop) rules."""
    return create_rewrite_engine(ruleset="RTRA-LI", lemmas=lemmas)


def create_lenient_engine(ruleset: str = "RTRA") -> RewriteEngine:
    """Factory function to create a lenient engine that logs rejected steps instead of raising."""
    return create_rewrite_engine(ruleset=ruleset, raise_on_failure=False)


def create_proof_checker(taut_admitted: bool = True,
                         max_taut_atoms: int = 16,
                         custom_error_class: Type[Exception] = KernelAssertionError) -> ProofChecker:
    config = KernelConfig(
        taut_admitted=taut_admitted,
        max_taut_atoms=max_taut_atoms,
        custom_error_class=custom_error_class
    )
    return ProofChecker(config)


def create_custom_condition_engine(custom_conditions: dict) -> RewriteEngine:
    """Factory function to create an engine with replaced side-condition checks."""
    engine = RewriteEngine()
    engine.conditions.update(custom_conditions)
    return engine
