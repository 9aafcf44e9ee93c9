"""
Незалежний еталон: upwind першого порядку за простором, неявна схема Ейлера
за часом, на тій самій сітці Шишкіна.

Модуль свідомо не використовує збирач гібридної схеми та прогонку:
система кожного кроку розв'язується scipy.linalg.solve_banded.
"""
import numpy as np
import scipy.linalg

from src.domain.entities import Problem, ShishkinMesh, SolutionGrid
from src.domain.exceptions import StepFailedError, ZeroPivotError
from src.domain.value_objects import Side
from src.infrastructure.logging.logging_factory import LoggingFactory
from .mesh_builder import build_mesh

logger = LoggingFactory.get_logger(__name__)


def _upwind_bands(problem: Problem, nodes: np.ndarray, dt: float, t_next: float):
    """
    Смуги (lower, diag, upper) неявного кроку:

        εδ²Y + a·D*Y − (b + 1/Δt)·Y = f − Y^j/Δt,

    D* = D⁻ на Ω⁻ та D⁺ на Ω⁺; у вузлі N/2 рядок D⁺Y − D⁻Y = 0.
    """
    n = len(nodes) - 1
    half = n // 2
    h = np.diff(nodes)
    lower = np.zeros(n + 1)
    diag = np.ones(n + 1)
    upper = np.zeros(n + 1)

    b = problem.sample_b(nodes, t_next)
    for i in range(1, n):
        h_left, h_right = h[i - 1], h[i]
        h_bar = 0.5 * (h_left + h_right)
        if i == half:
            lower[i] = 1.0 / h_left
            upper[i] = 1.0 / h_right
            diag[i] = -1.0 / h_left - 1.0 / h_right
            continue

        side = Side.LEFT_LIMIT if i < half else Side.RIGHT_LIMIT
        a = problem.field_value(problem.a, nodes[i], t_next, side)
        lower[i] = problem.epsilon / (h_left * h_bar)
        upper[i] = problem.epsilon / (h_right * h_bar)
        diag[i] = -lower[i] - upper[i] - b[i] - 1.0 / dt
        if i < half:
            lower[i] -= a / h_left
            diag[i] += a / h_left
        else:
            upper[i] += a / h_right
            diag[i] -= a / h_right

    return lower, diag, upper


def _upwind_rhs(problem: Problem, nodes: np.ndarray, dt: float, t_next: float, y_prev: np.ndarray):
    n = len(nodes) - 1
    half = n // 2
    rhs = np.zeros(n + 1)
    rhs[:half] = problem.f.evaluate_nodes(nodes[:half], t_next, Side.LEFT_LIMIT) - y_prev[:half] / dt
    rhs[half + 1:] = (
        problem.f.evaluate_nodes(nodes[half + 1:], t_next, Side.RIGHT_LIMIT) - y_prev[half + 1:] / dt
    )
    rhs[half] = 0.0
    rhs[0], rhs[-1] = problem.boundary_values(t_next)
    return rhs


def upwind_reference_solve(
    problem: Problem,
    N: int,
    M: int,
    mesh: ShishkinMesh | None = None,
) -> SolutionGrid:
    """
    Розв'язує задачу простою монотонною схемою першого порядку.

    Args:
        problem: Задача
        N: Кількість просторових інтервалів
        M: Кількість часових кроків
        mesh: Готова сітка з N інтервалами (наприклад, подрібнена); інакше будується нова

    Returns:
        Наближення тієї ж форми, що й у solve

    Raises:
        StepFailedError: Вироджена система на кроці j (причина ZeroPivotError)
    """
    if M < 1:
        raise ValueError(f"Кількість часових кроків має бути >= 1: {M}")

    if mesh is None:
        mesh = build_mesh(N, problem)
    elif mesh.N != N:
        raise ValueError(f"Сітка має {mesh.N} інтервалів, очікувалось {N}")
    nodes = mesh.nodes
    dt = problem.T / M
    times = np.arange(M + 1) * dt
    times[-1] = problem.T
    values = np.empty((M + 1, N + 1))
    values[0] = problem.sample_q(nodes)

    logger.debug(f"Upwind-еталон для {problem!r}, N={N}, M={M}")

    for j in range(M):
        t_next = times[j + 1]
        lower, diag, upper = _upwind_bands(problem, nodes, dt, t_next)
        rhs = _upwind_rhs(problem, nodes, dt, t_next, values[j])

        # scipy очікує верхню смугу зсунутою вправо, нижню вліво.
        banded = np.zeros((3, N + 1))
        banded[0, 1:] = upper[:-1]
        banded[1] = diag
        banded[2, :-1] = lower[1:]
        try:
            values[j + 1] = scipy.linalg.solve_banded((1, 1), banded, rhs)
        except (np.linalg.LinAlgError, ValueError) as e:
            cause = ZeroPivotError(f"Upwind-система вироджена: {e}", -1)
            raise StepFailedError(j, cause) from e

    return SolutionGrid(mesh=mesh, times=times, values=values)
