"""Domain entities."""
from .problem import Problem
from .reports import (
    ConvergenceReport,
    Diagnostic,
    MMatrixReport,
    OffendingRow,
    Severity,
)
from .shishkin_mesh import ShishkinMesh, validate_mesh_size
from .solution_grid import SolutionGrid
from .tridiagonal_system import TridiagonalSystem

__all__ = [
    'Problem',
    'ConvergenceReport',
    'Diagnostic',
    'MMatrixReport',
    'OffendingRow',
    'Severity',
    'ShishkinMesh',
    'validate_mesh_size',
    'SolutionGrid',
    'TridiagonalSystem',
]
