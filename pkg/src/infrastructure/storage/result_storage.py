import csv
import json
import math
from pathlib import Path

from src.domain.entities import ConvergenceReport, SolutionGrid
from src.infrastructure.logging.logging_factory import LoggingFactory

FAILED_CELL = "failed"


def format_full(value: float) -> str:
    """17 значущих цифр; −0.0 друкується як 0."""
    return f"{value + 0.0:.17g}"


def epsilon_label(epsilon: float) -> str:
    """'2^-k' для точних степенів двійки, інакше repr."""
    mantissa, exponent = math.frexp(epsilon)
    if mantissa == 0.5:
        return f"2^{exponent - 1}"
    return repr(epsilon)


class ResultStorage:
    """
    Запис результатів у файли.

    Сітка розв'язку пишеться у довгому CSV (x, t, y); таблиця збіжності
    у CSV з чергуванням рядків похибок і порядків та у JSON-двійник
    з тими самими числами.
    """

    def __init__(self):
        """Ініціалізує сховище."""
        self.logger = LoggingFactory.get_logger(__name__)

    def emit_grid_csv(self, grid: SolutionGrid, file_path: Path) -> None:
        """
        Зберігає сітку розв'язку, рядки впорядковані спершу за j, потім за i.

        Args:
            grid: Розв'язок
            file_path: Шлях до CSV

        Raises:
            IOError: При помилках запису
        """
        rows = (
            (format_full(x), format_full(t), format_full(y))
            for t, layer in zip(grid.times, grid.values)
            for x, y in zip(grid.nodes, layer)
        )
        self._write_csv(file_path, ["x", "t", "y"], rows)

    def save_study_csv(self, report: ConvergenceReport, file_path: Path) -> None:
        """
        Таблиця у форматі: для кожного ε рядок похибок E(ε, N) і рядок
        'Order' з R(ε, N); наприкінці рядки 'E^N' та 'R^N' для максимуму по ε.

        Raises:
            IOError: При помилках запису
        """
        rows = []
        for eps in report.epsilons:
            rows.append([epsilon_label(eps)] + [
                self._error_cell(report, eps, N) for N in report.Ns
            ])
            rows.append(["Order"] + [
                self._order_cell(report.orders.get((eps, N))) for N in report.Ns
            ])
        rows.append(["E^N"] + [
            repr(report.uniform_errors[N]) if N in report.uniform_errors else FAILED_CELL
            for N in report.Ns
        ])
        rows.append(["R^N"] + [
            self._order_cell(report.uniform_orders.get(N)) for N in report.Ns
        ])
        self._write_csv(file_path, ["epsilon"] + [str(N) for N in report.Ns], rows)

    def save_study_json(self, report: ConvergenceReport, file_path: Path, example: str) -> None:
        """
        JSON-двійник таблиці збіжності; відсутні значення записуються як null.

        Raises:
            IOError: При помилках запису
        """
        data = {
            "example": example,
            "epsilons": report.epsilons,
            "Ns": report.Ns,
            "rows": [
                {
                    "epsilon": eps,
                    "label": epsilon_label(eps),
                    "errors": [report.errors.get((eps, N)) for N in report.Ns],
                    "orders": [report.orders.get((eps, N)) for N in report.Ns],
                }
                for eps in report.epsilons
            ],
            "uniform_errors": [report.uniform_errors.get(N) for N in report.Ns],
            "uniform_orders": [report.uniform_orders.get(N) for N in report.Ns],
            "failures": [
                {"epsilon": eps, "N": N, "message": str(error)}
                for (eps, N), error in report.failures.items()
            ],
        }
        self.logger.info(f"Збереження таблиці у файл: {file_path}")
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, 'w', encoding='utf-8') as f:
                json.dump(data, f, ensure_ascii=False, indent=2)
        except OSError as e:
            self.logger.error(f"Помилка збереження файлу {file_path}: {e}")
            raise IOError(f"Не вдалося зберегти файл {file_path}: {e}") from e

    @staticmethod
    def _error_cell(report: ConvergenceReport, eps: float, N: int) -> str:
        error = report.error(eps, N)
        return FAILED_CELL if error is None else repr(error)

    @staticmethod
    def _order_cell(order: float | None) -> str:
        return "" if order is None else repr(order)

    def _write_csv(self, file_path: Path, header: list[str], rows) -> None:
        self.logger.info(f"Збереження у файл: {file_path}")
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, 'w', encoding='utf-8', newline='') as f:
                writer = csv.writer(f, lineterminator='\n')
                writer.writerow(header)
                writer.writerows(rows)
        except OSError as e:
            self.logger.error(f"Помилка збереження файлу {file_path}: {e}")
            raise IOError(f"Не вдалося зберегти файл {file_path}: {e}") from e
