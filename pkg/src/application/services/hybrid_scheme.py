"""Збирач тридіагональної системи одного кроку Кранка–Ніколсон."""
from dataclasses import dataclass

import numpy as np

from src.domain.entities import Problem, ShishkinMesh, TridiagonalSystem
from src.domain.exceptions import NumericalError, SingularEliminationPivotError
from src.domain.value_objects import DEFAULT_OPTIONS, Side, SolverOptions
from src.infrastructure.logging.logging_factory import LoggingFactory

ELIMINATION_TOLERANCE = 1e-14


@dataclass(frozen=True, eq=False)
class _StepData:
    """Коефіцієнти у вузлах на t_{j+1/2} та попередній шар."""

    eps: float
    dt: float
    a: np.ndarray  # NaN у вузлі N/2
    b: np.ndarray
    f: np.ndarray  # NaN у вузлі N/2
    y: np.ndarray
    h: np.ndarray  # h[k] = x_{k+1} − x_k


def sample_discontinuous(field, mesh: ShishkinMesh, t: float) -> np.ndarray:
    """
    Значення кусково-заданого поля у всіх вузлах, крім x_{N/2} = d.

    Вузли ліворуч від d беруть ліву гілку, праворуч праву;
    у вузлі N/2 ставиться NaN, бо жодна схема не використовує там a чи f.
    """
    half = mesh.interface_index
    values = np.full(mesh.N + 1, np.nan)
    values[:half] = field.evaluate_nodes(mesh.nodes[:half], t, Side.LEFT_LIMIT)
    values[half + 1:] = field.evaluate_nodes(mesh.nodes[half + 1:], t, Side.RIGHT_LIMIT)
    return values


class HybridScheme:
    """
    Гібридна схема: midpoint у зовнішніх чвертях, центральна у внутрішніх,
    перетворений п'ятиточковий рядок у вузлі розриву.

    Кожен рядок має вигляд

        r_i⁻·Y_{i−1} + r_iᶜ·Y_i + r_i⁺·Y_{i+1} = g_i,

    де невідомі належать шару t_{j+1}, а g_i зібрано з шару t_j.
    """

    def __init__(self, options: SolverOptions = DEFAULT_OPTIONS):
        """
        Args:
            options: Варіант правої частини midpoint-рядків
        """
        self.logger = LoggingFactory.get_logger(__name__)
        self.options = options

    def assemble_step(
        self,
        problem: Problem,
        mesh: ShishkinMesh,
        dt: float,
        j: int,
        y_prev: np.ndarray,
    ) -> TridiagonalSystem:
        """
        Збирає систему для переходу t_j -> t_{j+1}.

        Args:
            problem: Задача
            mesh: Сітка Шишкіна
            dt: Крок за часом T/M
            j: Індекс попереднього шару
            y_prev: Значення Y^j довжини N+1

        Returns:
            Тридіагональна система з граничними рядками 0 та N

        Raises:
            SingularEliminationPivotError: Вироджений знаменник у рядку розриву
            NumericalError: Система містить NaN або Inf
        """
        y_prev = np.asarray(y_prev, dtype=float)
        if y_prev.shape != (mesh.N + 1,):
            raise ValueError(f"Y^j має довжину {mesh.N + 1}, отримано {y_prev.shape}")

        t_half = (j + 0.5) * dt
        data = _StepData(
            eps=problem.epsilon,
            dt=dt,
            a=sample_discontinuous(problem.a, mesh, t_half),
            b=problem.sample_b(mesh.nodes, t_half),
            f=sample_discontinuous(problem.f, mesh, t_half),
            y=y_prev,
            h=mesh.steps,
        )

        size = mesh.N + 1
        lower = np.zeros(size)
        diag = np.zeros(size)
        upper = np.zeros(size)
        rhs = np.zeros(size)

        quarter = mesh.N // 4
        half = mesh.interface_index
        midpoint_left = np.arange(1, quarter + 1)
        central = np.concatenate([
            np.arange(quarter + 1, half),
            np.arange(half + 1, 3 * quarter),
        ])
        midpoint_right = np.arange(3 * quarter, mesh.N)

        self._fill_midpoint(data, midpoint_left, lower, diag, upper, rhs, left=True)
        self._fill_midpoint(data, midpoint_right, lower, diag, upper, rhs, left=False)
        self._fill_central(data, central, lower, diag, upper, rhs)
        self._fill_interface(data, half, lower, diag, upper, rhs)

        p_next, r_next = problem.boundary_values((j + 1) * dt)
        diag[0] = diag[-1] = 1.0
        rhs[0] = p_next
        rhs[-1] = r_next

        system = TridiagonalSystem(lower, diag, upper, rhs)
        if not system.is_finite():
            raise NumericalError(f"Система кроку j={j} містить NaN або Inf")

        self.logger.debug(f"Зібрано систему кроку j={j}, t_(j+1/2)={t_half:.6g}")
        return system

    def _fill_central(self, data: _StepData, rows, lower, diag, upper, rhs) -> None:
        """Центральна схема з нерівномірними ħ_i."""
        if rows.size == 0:
            return
        h_left = data.h[rows - 1]
        h_right = data.h[rows]
        h_bar = 0.5 * (h_left + h_right)
        a = data.a[rows]

        lower[rows] = data.eps / (h_left * h_bar) - a / (2.0 * h_bar)
        upper[rows] = data.eps / (h_right * h_bar) + a / (2.0 * h_bar)
        diag[rows] = -lower[rows] - upper[rows] - (data.b[rows] + 2.0 / data.dt)
        rhs[rows] = self._central_rhs(data, rows)

    @staticmethod
    def _central_rhs(data: _StepData, rows) -> np.ndarray:
        """g_i = 2f − εδ²Y^j − a·D⁰Y^j + (b − 2/Δt)·Y^j_i."""
        h_left = data.h[rows - 1]
        h_right = data.h[rows]
        h_bar = 0.5 * (h_left + h_right)
        y = data.y
        forward = (y[rows + 1] - y[rows]) / h_right
        backward = (y[rows] - y[rows - 1]) / h_left
        second = (forward - backward) / h_bar
        centered = (y[rows + 1] - y[rows - 1]) / (2.0 * h_bar)

        return (
            2.0 * data.f[rows]
            - data.eps * second
            - data.a[rows] * centered
            + (data.b[rows] - 2.0 / data.dt) * y[rows]
        )

    def _fill_midpoint(self, data: _StepData, rows, lower, diag, upper, rhs, left: bool) -> None:
        """
        Midpoint-схема: a, b, f та член за часом усереднені по інтервалу
        (x_{i−1}, x_i) зліва від d з D⁻ або (x_i, x_{i+1}) справа з D⁺.
        """
        if rows.size == 0:
            return
        h_left = data.h[rows - 1]
        h_right = data.h[rows]
        h_bar = 0.5 * (h_left + h_right)
        partner = rows - 1 if left else rows + 1
        y = data.y

        a_bar = 0.5 * (data.a[rows] + data.a[partner])
        b_bar = 0.5 * (data.b[rows] + data.b[partner])
        f_bar = 0.5 * (data.f[rows] + data.f[partner])
        half_reaction = 0.5 * b_bar + 1.0 / data.dt

        diffusion_left = data.eps / (h_left * h_bar)
        diffusion_right = data.eps / (h_right * h_bar)

        if left:
            lower[rows] = diffusion_left - a_bar / h_left - half_reaction
            upper[rows] = diffusion_right
            diag[rows] = -diffusion_left - diffusion_right + a_bar / h_left - half_reaction
            convection = a_bar * (y[rows] - y[rows - 1]) / h_left
        else:
            lower[rows] = diffusion_left
            upper[rows] = diffusion_right + a_bar / h_right - half_reaction
            diag[rows] = -diffusion_left - diffusion_right - a_bar / h_right - half_reaction
            convection = a_bar * (y[rows + 1] - y[rows]) / h_right

        second = ((y[rows + 1] - y[rows]) / h_right - (y[rows] - y[rows - 1]) / h_left) / h_bar
        previous = y[rows] if self.options.literal_rhs else 0.5 * (y[rows] + y[partner])

        rhs[rows] = (
            2.0 * f_bar
            - data.eps * second
            - convection
            + (b_bar - 2.0 / data.dt) * previous
        )

    def _fill_interface(self, data: _StepData, i: int, lower, diag, upper, rhs) -> None:
        """
        Рядок x_{N/2}: неперервність потоку з односторонніми різницями
        другого порядку, з якого виключено Y_{N/2±2} через центральні
        рядки N/2∓1. Рядок не помножено на 2h.
        """
        h_left = float(data.h[i - 1])
        h_right = float(data.h[i])
        a_left = float(data.a[i - 1])
        a_right = float(data.a[i + 1])
        c_left = float(data.b[i - 1]) + 2.0 / data.dt
        c_right = float(data.b[i + 1]) + 2.0 / data.dt
        eps = data.eps

        den_left = 2.0 * eps - h_left * a_left
        den_right = 2.0 * eps + h_right * a_right
        for value in (den_left, den_right):
            if abs(value) < ELIMINATION_TOLERANCE:
                raise SingularEliminationPivotError(
                    f"Знаменник виключення у рядку розриву дорівнює {value:.3e}", value
                )

        g_left, g_right = self._central_rhs(data, np.array([i - 1, i + 1]))

        lower[i] = (4.0 - (4.0 * eps + 2.0 * h_left ** 2 * c_left) / den_left) / (2.0 * h_left)
        upper[i] = (4.0 - (4.0 * eps + 2.0 * h_right ** 2 * c_right) / den_right) / (2.0 * h_right)
        diag[i] = (
            ((2.0 * eps - h_right * a_right) / den_right - 3.0) / (2.0 * h_right)
            + ((2.0 * eps + h_left * a_left) / den_left - 3.0) / (2.0 * h_left)
        )
        rhs[i] = h_left * g_left / den_left + h_right * g_right / den_right


def assemble_step(
    problem: Problem,
    mesh: ShishkinMesh,
    dt: float,
    j: int,
    y_prev: np.ndarray,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> TridiagonalSystem:
    """Збирає систему кроку t_j -> t_{j+1} гібридною схемою."""
    return HybridScheme(options).assemble_step(problem, mesh, dt, j, y_prev)
