"""
Tolerance configuration shared by every module.

Defaults can be overridden through DCEIG_TOL_* environment variables, and
locally through the use_tolerances() context manager.
"""

import logging
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, fields, replace
from typing import Iterator, Mapping, Optional

from dual_complex_eigen.errors import ConfigError

logger = logging.getLogger(__name__)

ENV_PREFIX = "DCEIG_TOL_"


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical thresholds.

    Attributes:
        abs: absolute equality threshold for scalar components.
        rank: relative singular value cutoff used for rank decisions.
        cluster: relative radius for merging nearby eigenvalues.
        eig: eigenpair tolerance for the standard part.
        jordan: relative reconstruction residual accepted for Jordan transforms.
        residual: relative residual accepted by eigenpair and similarity checks.
    """

    abs: float = 1e-12
    rank: float = 1e-9
    cluster: float = 1e-6
    eig: float = 1e-9
    jordan: float = 1e-6
    residual: float = 1e-9

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, (int, float)) or not value >= 0.0 or value == float("inf"):
                raise ConfigError(f"Tolerance '{f.name}' must be a finite nonnegative number, got {value!r}")

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Tolerances":
        """Build tolerances from DCEIG_TOL_<NAME> variables, falling back to defaults."""
        environ = os.environ if environ is None else environ
        overrides = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is None:
                continue
            try:
                overrides[f.name] = float(raw)
            except ValueError:
                raise ConfigError(f"{ENV_PREFIX}{f.name.upper()}={raw!r} is not a number") from None
        if overrides:
            logger.debug("Tolerance overrides from environment: %s", overrides)
        return cls(**overrides)


_active: ContextVar[Optional[Tolerances]] = ContextVar("dual_complex_tolerances", default=None)


def get_tolerances() -> Tolerances:
    """Return the tolerances in force for the current context."""
    current = _active.get()
    if current is None:
        current = Tolerances.from_env()
        _active.set(current)
    return current


@contextmanager
def use_tolerances(**overrides: Optional[float]) -> Iterator[Tolerances]:
    """
    Temporarily override some tolerances.

    None values are ignored, so CLI flags can be passed straight through.

    Example:
        with use_tolerances(abs=1e-10):
            report = eig_all(matrix)
    """
    given = {k: v for k, v in overrides.items() if v is not None}
    try:
        updated = replace(get_tolerances(), **given)
    except TypeError as e:
        raise ConfigError(f"Unknown tolerance: {e}") from None
    token = _active.set(updated)
    try:
        yield updated
    finally:
        _active.reset(token)
