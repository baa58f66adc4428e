# side_conditions.py

from abc import ABC, abstractmethod
from typing import Any, Optional

from gerg_double_logic.graph import CLASSICAL, is_ga, print_graph
from gerg_double_logic.kernel_config import KernelConfig


class BaseSideCondition(ABC):
    """Abstract base class for rule side conditions."""

    kind = "shape"

    def __init__(self, config: Optional[KernelConfig] = None):
        self.config = config or KernelConfig()

    @abstractmethod
    def validate(self, value: Any, **kwargs) -> bool:
        """Check the condition on the value."""
        pass

    @abstractmethod
    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        """Describe the violation."""
        pass


class RulesetCondition(BaseSideCondition):
    kind = "ruleset"

    def validate(self, value: Any, **kwargs) -> bool:
        return value in kwargs["ruleset"]

    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        return f"rule {rule} is not in {kwargs['ruleset'].name}"


class ParityCondition(BaseSideCondition):
    """Region parity must be the expected one."""

    kind = "parity"

    def validate(self, value: Any, expected: str = "even", **kwargs) -> bool:
        return value.parity == expected

    def get_error_message(self, value: Any, rule: str, expected: str = "even", **kwargs) -> str:
        what = kwargs.get("what", "region")
        return f"{rule} needs an {expected} {what}, found depth {value.depth_total} ({value.parity})"


class ClassicalRegionCondition(BaseSideCondition):
    """Every cut kind on the inspected stretch must be classical."""

    kind = "classical-region"

    def validate(self, value: Any, **kwargs) -> bool:
        return all(kind == CLASSICAL for kind in value)

    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        what = kwargs.get("what", "path")
        return f"{rule} crosses an alternate cut on the {what}"


class AlternateShapeCondition(BaseSideCondition):
    """The selection must be a single alternate cut or alternate atom."""

    kind = "ga-shape"

    def validate(self, value: Any, **kwargs) -> bool:
        return is_ga(value)

    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        return f"{rule} needs a GA graph, got '{print_graph(value) or 'lambda'}'"


class LemmaCondition(BaseSideCondition):
    kind = "missing-lemma"

    def validate(self, value: Any, **kwargs) -> bool:
        return kwargs["lemmas"].find(value, kwargs.get("name")) is not None

    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        name = kwargs.get("name")
        target = f"lemma '{name}'" if name else "any lemma"
        return f"{rule}: '{print_graph(value) or 'lambda'}' does not match {target}"


class ShapeCondition(BaseSideCondition):
    """Structural precondition computed by the caller."""

    kind = "shape"

    def validate(self, value: Any, **kwargs) -> bool:
        return bool(value)

    def get_error_message(self, value: Any, rule: str, **kwargs) -> str:
        return f"{rule}: {kwargs.get('message', 'shape mismatch')}"
