from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any


@dataclass(frozen=True)
class Settings:
    """Tunables shared by the CLI, the oracles and the verify suites.

    Defaults are desk scale: oracle searches stop at 12 letters, words longer
    than 64 letters are rejected, torsion checks look at exponents up to 6.
    """

    bfs_bound: int = 12
    max_word_len: int = 64
    pmax: int = 6
    reversing_step_cap: int = 100_000
    max_strands: int = 8
    seed: int = 0
    trials: int = 100

    def with_overrides(self, **overrides: Any) -> Settings:
        """Return a copy with every non-None override applied."""
        changes = {name: value for name, value in overrides.items() if value is not None}
        return replace(self, **changes)


DEFAULT_SETTINGS = Settings()
