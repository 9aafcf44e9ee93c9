"""Оцінка похибки методом подвійної сітки та таблиці порядків збіжності."""
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Sequence

import numpy as np

from src.domain.entities import ConvergenceReport, Problem, validate_mesh_size
from src.domain.exceptions import DegenerateErrorEstimate, NumericalError
from src.domain.value_objects import DEFAULT_OPTIONS, SolverOptions
from src.infrastructure.logging.logging_factory import LoggingFactory
from .crank_nicolson_solver import CrankNicolsonSolver
from .mesh_builder import bisect_mesh, build_mesh

logger = LoggingFactory.get_logger(__name__)


def double_mesh_error(
    problem: Problem,
    N: int,
    M: int,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> float:
    """
    E = max_{i,j} |Y^{2N,2M}_{2i,2j} − Y^{N,M}_{i,j}|.

    Дрібна сітка отримується поділом кожного інтервалу грубої навпіл,
    тобто τ₁, τ₂ не перераховуються з ln 2N.

    Raises:
        StepFailedError: Збій розв'язувача на грубій або дрібній сітці
    """
    solver = CrankNicolsonSolver(options)
    coarse = solver.solve(problem, N, M)
    fine = solver.solve_on_mesh(problem, bisect_mesh(coarse.mesh), 2 * M)
    return float(np.max(np.abs(fine.values[::2, ::2] - coarse.values)))


def order_of_convergence(error_coarse: float, error_fine: float) -> float:
    """
    R = log₂(E^N / E^{2N}).

    Raises:
        DegenerateErrorEstimate: Якщо одна з похибок не додатна або не скінченна
    """
    if not (error_coarse > 0.0 and error_fine > 0.0) or not (
        math.isfinite(error_coarse) and math.isfinite(error_fine)
    ):
        raise DegenerateErrorEstimate(
            f"Порядок невизначений для похибок {error_coarse!r} та {error_fine!r}"
        )
    return math.log2(error_coarse / error_fine)


def convergence_study(
    problem: Problem,
    epsilons: Sequence[float],
    Ns: Sequence[int],
    options: SolverOptions = DEFAULT_OPTIONS,
    jobs: int = 1,
) -> ConvergenceReport:
    """
    Заповнює таблицю E(ε, N) та R(ε, N) з M = N.

    Клітинки незалежні і рахуються в пулі з jobs потоків; результат
    не залежить від порядку завершення. Збій клітинки записується у
    report.failures і не зупиняє решту таблиці.

    Args:
        problem: Задача (ε підставляється з epsilons)
        epsilons: Значення ε (рядки таблиці)
        Ns: Зростаючі значення N (стовпці таблиці)
        options: Варіант схеми
        jobs: Кількість потоків

    Returns:
        Звіт зі збіжністю

    Raises:
        BadMeshSizeError: Якщо якесь N не підходить для сітки Шишкіна
        ValueError: Якщо Ns не зростають або jobs < 1
    """
    epsilons = list(epsilons)
    Ns = list(Ns)
    for N in Ns:
        validate_mesh_size(N)
    if any(later <= earlier for earlier, later in zip(Ns, Ns[1:])):
        raise ValueError(f"Значення N мають строго зростати: {Ns}")
    if jobs < 1:
        raise ValueError(f"Кількість потоків має бути >= 1: {jobs}")

    cells = [(eps, N) for eps in epsilons for N in Ns]
    results: dict[tuple[float, int], float] = {}
    failures = {}

    logger.info(f"Таблиця збіжності для {problem.name}: {len(cells)} клітинок, потоків {jobs}")

    with ThreadPoolExecutor(max_workers=jobs, thread_name_prefix="cell") as pool:
        futures = {
            pool.submit(double_mesh_error, problem.with_epsilon(eps), N, N, options): (eps, N)
            for eps, N in cells
        }
        for future in as_completed(futures):
            key = futures[future]
            try:
                results[key] = future.result()
                logger.debug(f"E(ε={key[0]:.3g}, N={key[1]}) = {results[key]:.3e}")
            except NumericalError as e:
                logger.warning(f"Клітинка ε={key[0]!r}, N={key[1]} не порахована: {e}")
                failures[key] = e
            except Exception as e:
                # Помилка в даних користувача: решта таблиці лишається.
                logger.error(f"Клітинка ε={key[0]!r}, N={key[1]} впала з {type(e).__name__}: {e}")
                failures[key] = e

    report = ConvergenceReport(epsilons=epsilons, Ns=Ns)
    for key in cells:
        if key in results:
            report.errors[key] = results[key]
        elif key in failures:
            report.failures[key] = failures[key]

    for eps in epsilons:
        row = {N: report.errors[(eps, N)] for N in Ns if (eps, N) in report.errors}
        for N, order in _doubling_orders(row).items():
            report.orders[(eps, N)] = order

    for N in Ns:
        column = [report.errors[(eps, N)] for eps in epsilons if (eps, N) in report.errors]
        if column:
            report.uniform_errors[N] = max(column)
    report.uniform_orders = _doubling_orders(report.uniform_errors)

    return report


def _doubling_orders(errors: dict[int, float]) -> dict[int, float | None]:
    """Порядки для пар (N, 2N), де обидві похибки відомі; None для вироджених."""
    orders: dict[int, float | None] = {}
    for N, error in errors.items():
        if 2 * N not in errors:
            continue
        try:
            orders[N] = order_of_convergence(error, errors[2 * N])
        except DegenerateErrorEstimate:
            orders[N] = None
    return orders


def temporal_double_mesh_error(
    problem: Problem,
    N: int,
    M: int,
    options: SolverOptions = DEFAULT_OPTIONS,
) -> float:
    """
    Похибка за часом: та сама просторова сітка, M проти 2M кроків,
    порівняння на спільних часових шарах.
    """
    solver = CrankNicolsonSolver(options)
    mesh = build_mesh(N, problem, options)
    coarse = solver.solve_on_mesh(problem, mesh, M)
    fine = solver.solve_on_mesh(problem, mesh, 2 * M)
    return float(np.max(np.abs(fine.values[::2] - coarse.values)))


def temporal_order_study(
    problem: Problem,
    N: int,
    Ms: Sequence[int],
    options: SolverOptions = DEFAULT_OPTIONS,
) -> tuple[dict[int, float], dict[int, float | None]]:
    """
    Похибки за часом для кожного M та порядки для пар (M, 2M).

    Returns:
        (errors, orders), orders[M] = log₂(E_M / E_{2M})
    """
    errors = {M: temporal_double_mesh_error(problem, N, M, options) for M in Ms}
    return errors, _doubling_orders(errors)
