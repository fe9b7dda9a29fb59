"""q-Favard-Szasz-Chlodowsky operators: evaluation, moments and bound checks."""

from ._qapprox import *  # noqa: F401,F403
from ._qapprox import Error, DomainError, TruncationError, EvaluationError  # noqa: F401
