import numpy as np

from src.domain.entities import Diagnostic, Problem, Severity
from src.domain.value_objects import Side
from src.infrastructure.logging.logging_factory import LoggingFactory

DEFAULT_SAMPLES = 64
CORNER_TOLERANCE = 1e-12
# Крок односторонніх різниць для похідних q та p у кутових умовах другого порядку.
_FD_STEP = 1e-4
_FD_TOLERANCE = 1e-6


class ProblemValidator:
    """
    Перевіряє припущення про дані задачі вибіркою на сітці.

    Нерівності для довільних функцій не перевіряються аналітично:
    a та b обчислюються на сітці samples × samples у кожній підобласті.
    Результат завжди повертається як список діагностик, винятки не кидаються.
    """

    def __init__(self, samples: int = DEFAULT_SAMPLES):
        """
        Args:
            samples: Кількість точок вибірки по x та по t (>= 2)
        """
        if samples < 2:
            raise ValueError(f"Кількість точок вибірки має бути >= 2: {samples}")
        self.logger = LoggingFactory.get_logger(__name__)
        self.samples = samples

    def validate(self, problem: Problem) -> list[Diagnostic]:
        """
        Повертає порушення знакових умов та попередження про узгодженість у кутах.

        Args:
            problem: Задача для перевірки

        Returns:
            Список діагностик (порожній, якщо все гаразд)
        """
        diagnostics: list[Diagnostic] = []
        times = np.linspace(0.0, problem.T, self.samples)
        left_nodes = np.linspace(0.0, problem.d, self.samples)
        right_nodes = np.linspace(problem.d, 1.0, self.samples)
        all_nodes = np.linspace(0.0, 1.0, self.samples)

        worst_left = max(
            float(np.max(problem.a.evaluate_nodes(left_nodes, t, Side.LEFT_LIMIT)))
            for t in times
        )
        if worst_left > -problem.alpha1 + CORNER_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.VIOLATION,
                "convection_sign_left",
                f"a > −α₁ на Ω⁻: max a = {worst_left:.6g}, α₁ = {problem.alpha1}",
            ))

        worst_right = min(
            float(np.min(problem.a.evaluate_nodes(right_nodes, t, Side.RIGHT_LIMIT)))
            for t in times
        )
        if worst_right < problem.alpha2 - CORNER_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.VIOLATION,
                "convection_sign_right",
                f"a < α₂ на Ω⁺: min a = {worst_right:.6g}, α₂ = {problem.alpha2}",
            ))

        lowest_b = min(float(np.min(problem.sample_b(all_nodes, t))) for t in times)
        if lowest_b < problem.beta - CORNER_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.VIOLATION,
                "reaction_lower_bound",
                f"b < β: min b = {lowest_b:.6g}, β = {problem.beta}",
            ))

        diagnostics.extend(self._corner_diagnostics(problem))

        for diagnostic in diagnostics:
            self.logger.info(f"[{diagnostic.severity.value}] {diagnostic.code}: {diagnostic.message}")
        return diagnostics

    def _corner_diagnostics(self, problem: Problem) -> list[Diagnostic]:
        """Умови узгодженості нульового та другого порядку в кутах (0,0) та (1,0)."""
        diagnostics = []
        q0, q1 = (float(v) for v in problem.sample_q(np.array([0.0, 1.0])))
        p0, r0 = problem.boundary_values(0.0)

        if abs(q0 - p0) > CORNER_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.WARNING,
                "corner_compatibility_left",
                f"Кутова узгодженість q(0)≠p(0): {q0} ≠ {p0}",
            ))
        if abs(q1 - r0) > CORNER_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.WARNING,
                "corner_compatibility_right",
                f"Кутова узгодженість q(1)≠r(0): {q1} ≠ {r0}",
            ))

        left_defect = self._pde_corner_defect(problem, corner=0.0, side=Side.LEFT_LIMIT)
        if left_defect > _FD_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.WARNING,
                "corner_pde_left",
                f"Рівняння в куті (0,0) не узгоджене з p'(0): розбіжність {left_defect:.3e}",
            ))
        right_defect = self._pde_corner_defect(problem, corner=1.0, side=Side.RIGHT_LIMIT)
        if right_defect > _FD_TOLERANCE:
            diagnostics.append(Diagnostic(
                Severity.WARNING,
                "corner_pde_right",
                f"Рівняння в куті (1,0) не узгоджене з r'(0): розбіжність {right_defect:.3e}",
            ))
        return diagnostics

    def _pde_corner_defect(self, problem: Problem, corner: float, side: Side) -> float:
        """
        |ε q'' + a q' − b q − f − (крайова функція)'| у куті, похідні оцінені
        односторонніми різницями другого порядку.
        """
        h = _FD_STEP
        direction = 1.0 if corner == 0.0 else -1.0
        xs = corner + direction * h * np.arange(4)
        qs = problem.sample_q(xs)

        q_x = direction * (-3.0 * qs[0] + 4.0 * qs[1] - qs[2]) / (2.0 * h)
        q_xx = (2.0 * qs[0] - 5.0 * qs[1] + 4.0 * qs[2] - qs[3]) / h ** 2

        boundary = problem.p if corner == 0.0 else problem.r
        times = h * np.arange(3)
        gs = np.array([float(boundary(t)) for t in times])
        g_t = (-3.0 * gs[0] + 4.0 * gs[1] - gs[2]) / (2.0 * h)

        a = problem.field_value(problem.a, corner, 0.0, side)
        b = float(problem.sample_b(np.array([corner]), 0.0)[0])
        f = problem.field_value(problem.f, corner, 0.0, side)

        return abs(problem.epsilon * q_xx + a * q_x - b * qs[0] - f - g_t)


def validate_problem(problem: Problem, samples: int = DEFAULT_SAMPLES) -> list[Diagnostic]:
    """Перевіряє знакові умови та узгодженість у кутах вибіркою samples × samples."""
    return ProblemValidator(samples).validate(problem)


def stability_bound(problem: Problem, samples: int = DEFAULT_SAMPLES) -> float:
    """
    Оцінка ‖y‖ ≤ ‖y‖_Γc + ‖f‖/θ, θ = min{α₁/d, α₂/(1−d)}.

    Норми оцінюються вибіркою на сітці samples × samples.
    """
    times = np.linspace(0.0, problem.T, samples)
    left_nodes = np.linspace(0.0, problem.d, samples)
    right_nodes = np.linspace(problem.d, 1.0, samples)

    f_norm = max(
        max(
            float(np.max(np.abs(problem.f.evaluate_nodes(left_nodes, t, Side.LEFT_LIMIT)))),
            float(np.max(np.abs(problem.f.evaluate_nodes(right_nodes, t, Side.RIGHT_LIMIT)))),
        )
        for t in times
    )
    boundary_norm = max(
        float(np.max(np.abs(problem.sample_q(np.linspace(0.0, 1.0, samples))))),
        max(max(abs(v) for v in problem.boundary_values(t)) for t in times),
    )
    theta = min(problem.alpha1 / problem.d, problem.alpha2 / (1.0 - problem.d))
    return boundary_norm + f_norm / theta
