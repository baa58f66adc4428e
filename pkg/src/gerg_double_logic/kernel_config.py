# kernel_config.py
from typing import Type

from gerg_double_logic.exceptions import KernelAssertionError


class KernelConfig:
    """Configuration class for checking and rewriting behavior."""

    def __init__(self,
                 ruleset: str = "RTRA",
                 taut_admitted: bool = True,
                 raise_on_failure: bool = True,
                 custom_error_class: Type[Exception] = KernelAssertionError,
                 max_taut_atoms: int = 16):
        self.ruleset = ruleset
        self.taut_admitted = taut_admitted
        self.raise_on_failure = raise_on_failure
        self.custom_error_class = custom_error_class
        self.max_taut_atoms = max_taut_atoms

    def replace(self, **overrides) -> "KernelConfig":
        """Return a copy with the given fields overridden."""
        values = dict(
            ruleset=self.ruleset,
            taut_admitted=self.taut_admitted,
            raise_on_failure=self.raise_on_failure,
            custom_error_class=self.custom_error_class,
            max_taut_atoms=self.max_taut_atoms,
        )
        values.update(overrides)
        return KernelConfig(**values)
