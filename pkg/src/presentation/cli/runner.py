"""Виконання запуску: розв'язок, таблиця збіжності або перевірка задачі."""
from pathlib import Path

from src.application.services.convergence_service import convergence_study
from src.application.services.crank_nicolson_solver import solve
from src.application.services.monotonicity import monotonicity_preconditions, monotonicity_report
from src.application.services.problem_catalog import builtin_example
from src.application.services.problem_validator import stability_bound, validate_problem
from src.domain.entities import ConvergenceReport, Problem
from src.domain.exceptions import NumericalError, StepFailedError, UsageError
from src.infrastructure.logging.logging_factory import LoggingFactory
from src.infrastructure.storage import ResultStorage
from src.infrastructure.storage.result_storage import epsilon_label
from .config import RunConfig

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class Runner:
    """Виконує один запуск згідно з RunConfig і пише файли результатів."""

    def __init__(self, config: RunConfig, problem: Problem | None = None):
        """
        Args:
            config: Параметри запуску
            problem: Власна задача замість вбудованого прикладу
        """
        self.logger = LoggingFactory.get_logger(__name__)
        self.config = config
        self.problem = problem if problem is not None else builtin_example(config.example_id)
        self.storage = ResultStorage()

    @property
    def output_dir(self) -> Path:
        return self.config.output_dir

    def run(self) -> int:
        """
        Returns:
            Код завершення: 0 успіх, 1 помилка вводу-виводу,
            2 невірні параметри, 3 чисельний збій
        """
        handlers = {
            'solve': self._run_solve,
            'study': self._run_study,
            'validate': self._run_validate,
        }
        self.logger.info(f"Режим {self.config.mode}, задача {self.problem.name}")
        try:
            return handlers[self.config.mode]()
        except UsageError as e:
            self.logger.error(f"Невірні параметри ({e.flag}): {e}")
            return EXIT_USAGE
        except NumericalError as e:
            self.logger.error(f"Чисельний збій: {e}")
            return EXIT_NUMERICAL
        except IOError as e:
            self.logger.error(str(e))
            return EXIT_IO

    def _run_solve(self) -> int:
        eps, N = self.config.epsilons[0], self.config.Ns[0]
        M = self.config.M or N
        try:
            grid = solve(self.problem.with_epsilon(eps), N, M, self.config.options)
        except StepFailedError as e:
            raise StepFailedError(e.step, NumericalError(f"ε={epsilon_label(eps)}, N={N}: {e.cause}")) from e
        self.logger.info(f"ε={epsilon_label(eps)}, N={N}, M={M}: max|Y| = {grid.max_abs():.6e}")
        self.storage.emit_grid_csv(grid, self.output_dir / 'grid.csv')
        return EXIT_OK

    def _run_study(self) -> int:
        report = convergence_study(
            self.problem,
            self.config.epsilons,
            self.config.Ns,
            self.config.options,
            jobs=self.config.jobs,
        )
        stem = f"table_{self.problem.name}"
        if 'csv' in self.config.formats:
            self.storage.save_study_csv(report, self.output_dir / f"{stem}.csv")
        if 'json' in self.config.formats:
            self.storage.save_study_json(report, self.output_dir / f"{stem}.json", self.problem.name)
        self.logger.info("Таблиця збіжності:\n" + format_table(report))

        if self.config.emit_grid:
            eps, N = self.config.epsilons[0], self.config.Ns[0]
            grid = solve(self.problem.with_epsilon(eps), N, N, self.config.options)
            self.storage.emit_grid_csv(grid, self.output_dir / f"grid_{self.problem.name}.csv")

        for (eps, N), error in report.failures.items():
            step = f", крок j={error.step}" if isinstance(error, StepFailedError) else ""
            self.logger.error(f"Клітинка ε={epsilon_label(eps)}, N={N}{step} не порахована: {error}")
        return EXIT_NUMERICAL if report.has_failures else EXIT_OK

    def _run_validate(self) -> int:
        eps, N = self.config.epsilons[0], self.config.Ns[0]
        M = self.config.M or N
        problem = self.problem.with_epsilon(eps)

        diagnostics = validate_problem(problem)
        if not diagnostics:
            self.logger.info("Знакові умови та кутова узгодженість виконані")
        for diagnostic in diagnostics:
            log = self.logger.warning if diagnostic.is_violation else self.logger.info
            log(f"[{diagnostic.severity.value}] {diagnostic.code}: {diagnostic.message}")

        try:
            report = monotonicity_report(problem, N, M, options=self.config.options)
        except NumericalError as e:
            self.logger.warning(f"Систему кроку j=0 не вдалося зібрати: {e}")
            report = monotonicity_preconditions(problem, N, M, self.config.options)
            assembled = False
        else:
            assembled = True
        self.logger.info(
            f"N={N}, M={M}: N/ln N > 4‖a‖/α: {report.peclet_ok}; "
            f"2N‖a‖ >= ‖b‖ + 2M/T: {report.time_step_ok}; "
            f"midpoint-умова: {report.midpoint_time_ok}; ε <= 1/N: {report.practical_regime}"
        )
        if assembled:
            self.logger.info(
                f"M-матриця на кроці j=0: {report.is_monotone} "
                f"({len(report.offending_rows)} порушень)"
            )
        self.logger.info(f"Оцінка стійкості ‖y‖ <= {stability_bound(problem):.6g}")
        return EXIT_OK


def format_table(report: ConvergenceReport) -> str:
    """Таблиця для людини: E у форматі 1.12e-01, R у форматі 1.4645."""
    width = 11
    lines = ["ε \\ N".ljust(width) + "".join(str(N).rjust(width) for N in report.Ns)]
    for eps in report.epsilons:
        errors = [report.error(eps, N) for N in report.Ns]
        orders = [report.order(eps, N) for N in report.Ns]
        lines.append(epsilon_label(eps).ljust(width) + "".join(
            ("failed" if e is None else f"{e:.2e}").rjust(width) for e in errors
        ))
        lines.append("Order".ljust(width) + "".join(
            ("" if r is None else f"{r:.4f}").rjust(width) for r in orders
        ))
    lines.append("E^N".ljust(width) + "".join(
        ("" if N not in report.uniform_errors else f"{report.uniform_errors[N]:.2e}").rjust(width)
        for N in report.Ns
    ))
    lines.append("R^N".ljust(width) + "".join(
        ("" if report.uniform_orders.get(N) is None else f"{report.uniform_orders[N]:.4f}").rjust(width)
        for N in report.Ns
    ))
    return "\n".join(lines)


def run(config: RunConfig, problem: Problem | None = None) -> int:
    """Виконує запуск і повертає код завершення."""
    return Runner(config, problem).run()
