"""Value Objects для domain layer."""
from .piecewise_field import PiecewiseField, eval_field
from .scheme_kind import SchemeKind
from .side import Side
from .solver_options import DEFAULT_OPTIONS, SolverOptions

__all__ = [
    'PiecewiseField',
    'eval_field',
    'SchemeKind',
    'Side',
    'SolverOptions',
    'DEFAULT_OPTIONS',
]
