"""Крокування за часом схемою Кранка–Ніколсон на сітці Шишкіна."""
from typing import Callable

import numpy as np

from src.domain.entities import Problem, ShishkinMesh, SolutionGrid, TridiagonalSystem
from src.domain.exceptions import NumericalError, StepFailedError
from src.domain.value_objects import DEFAULT_OPTIONS, SolverOptions
from src.infrastructure.logging.logging_factory import LoggingFactory
from .hybrid_scheme import HybridScheme
from .mesh_builder import build_mesh
from .tridiagonal_solver import thomas_solve

# Викликається після кожного кроку: (j + 1, зібрана система, новий шар).
StepObserver = Callable[[int, TridiagonalSystem, np.ndarray], None]


class CrankNicolsonSolver:
    """
    Розв'язувач задачі на повній сітці простір–час.

    Один виклик solve послідовний по j; різні виклики незалежні
    і можуть виконуватися в окремих потоках.
    """

    def __init__(
        self,
        options: SolverOptions = DEFAULT_OPTIONS,
        step_observer: StepObserver | None = None,
    ):
        """
        Args:
            options: Варіант схеми
            step_observer: Необов'язковий callback для кожного кроку
        """
        self.logger = LoggingFactory.get_logger(__name__)
        self.options = options
        self.scheme = HybridScheme(options)
        self.step_observer = step_observer

    def solve(self, problem: Problem, N: int, M: int) -> SolutionGrid:
        """
        Будує сітку та розв'язує задачу.

        Args:
            problem: Задача
            N: Кількість просторових інтервалів
            M: Кількість часових кроків

        Returns:
            Наближення на сітці (M+1) × (N+1)

        Raises:
            BadMeshSizeError: Якщо N не підходить для сітки Шишкіна
            StepFailedError: Збій збирача або прогонки на кроці j
        """
        return self.solve_on_mesh(problem, build_mesh(N, problem, self.options), M)

    def solve_on_mesh(self, problem: Problem, mesh: ShishkinMesh, M: int) -> SolutionGrid:
        """
        Розв'язує задачу на заданій сітці (наприклад, подрібненій).

        Raises:
            ValueError: Якщо M < 1
            StepFailedError: Збій на кроці j
        """
        if M < 1:
            raise ValueError(f"Кількість часових кроків має бути >= 1: {M}")

        dt = problem.T / M
        times = np.arange(M + 1) * dt
        times[-1] = problem.T
        values = np.empty((M + 1, mesh.N + 1))
        values[0] = problem.sample_q(mesh.nodes)

        self.logger.debug(f"Старт {problem!r} на {mesh!r}, M={M}, Δt={dt:.6g}")

        for j in range(M):
            try:
                system = self.scheme.assemble_step(problem, mesh, dt, j, values[j])
                values[j + 1] = thomas_solve(system)
            except NumericalError as e:
                self.logger.error(f"Збій на кроці j={j}: {e}")
                raise StepFailedError(j, e) from e

            values[j + 1, 0], values[j + 1, -1] = problem.boundary_values(times[j + 1])
            if self.step_observer is not None:
                self.step_observer(j + 1, system, values[j + 1])

        return SolutionGrid(mesh=mesh, times=times, values=values)


def solve(
    problem: Problem,
    N: int,
    M: int,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> SolutionGrid:
    """Розв'язує задачу гібридною схемою з кроком Кранка–Ніколсон."""
    return CrankNicolsonSolver(options).solve(problem, N, M)
