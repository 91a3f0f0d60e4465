"""Two-mode Fock-space simulator of interferometric phase estimation."""

from ._noonsim import *  # noqa: F401,F403
from ._noonsim import (
    DomainError,
    ModelMismatchError,
    NoInformationError,
    ParityError,
    Table,
    TruncationError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
