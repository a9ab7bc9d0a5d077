import logging
import os
from dataclasses import dataclass, field

_log = logging.getLogger(__name__)

BUDGET_ENV = "FLATFIX_BUDGET"
WORKERS_ENV = "FLATFIX_WORKERS"

# |states| * |variables|, i.e. log2 of the number of valuations enumerated
DEFAULT_VALUATION_BUDGET = 12


def _default_workers() -> int:
    return os.cpu_count() or 4


@dataclass(frozen=True)
class Settings:
    """Run-wide knobs for the checking harness."""

    valuation_budget: int = DEFAULT_VALUATION_BUDGET
    max_workers: int = field(default_factory=_default_workers)

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from ``FLATFIX_BUDGET`` / ``FLATFIX_WORKERS``."""
        budget = _read_positive_int(BUDGET_ENV, DEFAULT_VALUATION_BUDGET)
        workers = _read_positive_int(WORKERS_ENV, _default_workers())
        return cls(valuation_budget=budget, max_workers=workers)


def _read_positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value!r}")
    _log.debug(f"{name} overrides default {default} with {value}")
    return value
