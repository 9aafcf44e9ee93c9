import math

from src.domain.entities import Problem, ShishkinMesh, validate_mesh_size
from src.domain.value_objects import DEFAULT_OPTIONS, SolverOptions
from src.infrastructure.logging.logging_factory import LoggingFactory

logger = LoggingFactory.get_logger(__name__)


def transition_width(half_width: float, epsilon: float, alpha: float, N: int) -> float:
    """τ = min{half_width, (2ε/α)·ln N}."""
    return min(half_width, 2.0 * epsilon / alpha * math.log(N))


def build_mesh(
    N: int,
    problem: Problem,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> ShishkinMesh:
    """
    Будує сітку Шишкіна зі згущенням по обидва боки від точки розриву d.

        τ₁ = min{d/2, (2ε/α) ln N},  τ₂ = min{(1−d)/2, (2ε/α) ln N},

    де α = min{α₁, α₂}. З options.sharper_tau τ₁ використовує α₁, а τ₂ використовує α₂.

    Args:
        N: Кількість інтервалів (кратна 4, >= 8)
        problem: Задача
        options: Варіант схеми

    Returns:
        Сітка з x_{N/2} = d

    Raises:
        BadMeshSizeError: Якщо N < 8 або N не кратне 4
    """
    validate_mesh_size(N)
    alpha = problem.alpha
    alpha_left, alpha_right = (
        (problem.alpha1, problem.alpha2) if options.sharper_tau else (alpha, alpha)
    )

    tau1 = transition_width(problem.d / 2.0, problem.epsilon, alpha_left, N)
    tau2 = transition_width((1.0 - problem.d) / 2.0, problem.epsilon, alpha_right, N)

    mesh = ShishkinMesh.from_transition_points(N, problem.d, tau1, tau2, alpha)
    logger.debug(f"Побудовано {mesh}, H = {mesh.H}")
    return mesh


def bisect_mesh(mesh: ShishkinMesh) -> ShishkinMesh:
    """
    Ділить кожен інтервал сітки навпіл.

    Точки переходу успадковуються (не перераховуються з ln 2N), тому
    вузол x_i грубої сітки збігається з вузлом x_{2i} дрібної.
    """
    return ShishkinMesh.from_transition_points(
        2 * mesh.N, mesh.d, mesh.tau1, mesh.tau2, mesh.alpha
    )
