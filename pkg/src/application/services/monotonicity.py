"""Перевірка дискретного принципу максимуму (структура M-матриці)."""
import dataclasses
import math

import numpy as np

from src.domain.entities import MMatrixReport, OffendingRow, Problem, TridiagonalSystem
from src.domain.value_objects import DEFAULT_OPTIONS, Side, SolverOptions
from src.infrastructure.logging.logging_factory import LoggingFactory
from .hybrid_scheme import assemble_step
from .mesh_builder import build_mesh

NORM_SAMPLES = 256

logger = LoggingFactory.get_logger(__name__)


def sampled_norms(problem: Problem, samples: int = NORM_SAMPLES) -> tuple[float, float]:
    """
    Оцінки ‖a‖ та ‖b‖ вибіркою samples × samples на кожній підобласті.

    Returns:
        (‖a‖, ‖b‖)
    """
    times = np.linspace(0.0, problem.T, samples)
    left_nodes = np.linspace(0.0, problem.d, samples)
    right_nodes = np.linspace(problem.d, 1.0, samples)
    all_nodes = np.concatenate([left_nodes, right_nodes])

    a_norm = 0.0
    b_norm = 0.0
    for t in times:
        a_norm = max(
            a_norm,
            float(np.max(np.abs(problem.a.evaluate_nodes(left_nodes, t, Side.LEFT_LIMIT)))),
            float(np.max(np.abs(problem.a.evaluate_nodes(right_nodes, t, Side.RIGHT_LIMIT)))),
        )
        b_norm = max(b_norm, float(np.max(np.abs(problem.sample_b(all_nodes, t)))))
    return a_norm, b_norm


def monotonicity_preconditions(
    problem: Problem,
    N: int,
    M: int,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> MMatrixReport:
    """
    Достатні умови монотонності схеми.

        N / ln N > 4‖a‖/α                 (peclet_ok)
        2N‖a‖ ≥ ‖b‖ + 2M/T                (time_step_ok)
        min{α₁/H₁, α₂/H₄} ≥ ‖b‖/2 + M/T   (midpoint_time_ok)
        ε ≤ 1/N                           (practical_regime)

    precondition_ok = peclet_ok and time_step_ok. Третя умова забезпечує
    невід'ємні позадіагональні елементи зовнішніх midpoint-рядків, де
    член 1/Δt конкурує з |ā|/H₁.

    Args:
        problem: Задача
        N: Кількість просторових інтервалів
        M: Кількість часових кроків
        options: Варіант схеми (впливає на τ і, отже, на H₁, H₄)

    Returns:
        Звіт з заповненими полями умов і порожнім списком рядків
    """
    a_norm, b_norm = sampled_norms(problem)
    mesh = build_mesh(N, problem, options)
    H1, _, _, H4 = mesh.H

    peclet_ok = N / math.log(N) > 4.0 * a_norm / problem.alpha
    time_step_ok = 2.0 * N * a_norm >= b_norm + 2.0 * M / problem.T
    midpoint_time_ok = (
        min(problem.alpha1 / H1, problem.alpha2 / H4) >= 0.5 * b_norm + M / problem.T
    )
    report = MMatrixReport(
        precondition_ok=peclet_ok and time_step_ok,
        peclet_ok=peclet_ok,
        time_step_ok=time_step_ok,
        midpoint_time_ok=midpoint_time_ok,
        practical_regime=problem.epsilon <= 1.0 / N,
    )
    logger.debug(f"Умови монотонності для N={N}, M={M}: {report}")
    return report


def check_m_matrix(system: TridiagonalSystem) -> MMatrixReport:
    """
    Перевіряє знакову структуру внутрішніх рядків (граничні не перевіряються):

        r⁻ ≥ 0,  r⁺ ≥ 0,  rᶜ < 0,  r⁻ + rᶜ + r⁺ < 0.

    Args:
        system: Зібрана система кроку

    Returns:
        Звіт з переліком рядків, що порушують умови
    """
    offending: list[OffendingRow] = []
    for i in range(1, system.size - 1):
        lower, diag, upper = system.row(i)
        if lower < 0.0:
            offending.append(OffendingRow(i, 'lower', lower))
        if upper < 0.0:
            offending.append(OffendingRow(i, 'upper', upper))
        if diag >= 0.0:
            offending.append(OffendingRow(i, 'diag', diag))
        row_sum = lower + diag + upper
        if row_sum >= 0.0:
            offending.append(OffendingRow(i, 'row_sum', row_sum))
    return MMatrixReport(offending_rows=offending)


def monotonicity_report(
    problem: Problem,
    N: int,
    M: int,
    j: int = 0,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> MMatrixReport:
    """
    Поєднує умови з перевіркою системи кроку j, зібраної з нульового шару.

    Матриця системи не залежить від Y^j, тому нульовий шар достатній.
    """
    mesh = build_mesh(N, problem, options)
    dt = problem.T / M
    system = assemble_step(problem, mesh, dt, j, np.zeros(N + 1), options)
    rows = check_m_matrix(system)
    conditions = monotonicity_preconditions(problem, N, M, options)
    if rows.offending_rows:
        logger.info(
            f"Система кроку j={j} не є M-матрицею: "
            f"{len(rows.offending_rows)} порушень, перше {rows.offending_rows[0]}"
        )
    return dataclasses.replace(conditions, offending_rows=rows.offending_rows)
