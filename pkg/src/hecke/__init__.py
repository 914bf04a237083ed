"""Homological invariants of Hecke algebras at a root of unity."""

from .errors import (
    DivisibilityError,
    HeckeError,
    InternalError,
    ParseError,
    PreconditionError,
    VerificationError,
)
from .invariants import *  # noqa: F401,F403
from .partitions import *  # noqa: F401,F403
from .qpoly import *  # noqa: F401,F403
from .typebd import *  # noqa: F401,F403

__version__ = "0.1.0"
