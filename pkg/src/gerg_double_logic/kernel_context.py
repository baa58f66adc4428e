# kernel_context.py
# Context manager for temporary engine configuration

from typing import Union

from gerg_double_logic.proof_checker import ProofChecker
from gerg_double_logic.rewrite_engine import RewriteEngine


class RulesetContext:
    """Context manager for temporarily changing rule set or failure behavior."""

    def __init__(self, engine: Union[RewriteEngine, ProofChecker], **config_overrides):
        self.engine = engine
        self.original_config = engine.config
        self.config_overrides = config_overrides

    def __enter__(self):
        self.engine.config = self.original_config.replace(**self.config_overrides)
        return self.engine

    def __exit__(self, exc_type, exc_val, exc_tb):
        # Restore original config
        self.engine.config = self.original_config
