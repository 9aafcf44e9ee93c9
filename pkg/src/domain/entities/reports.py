"""Звіти аналізу: діагностика задачі, монотонність, збіжність."""
from dataclasses import dataclass, field
from enum import Enum


class Severity(Enum):
    """Рівень діагностичного повідомлення."""
    VIOLATION = "violation"
    WARNING = "warning"


@dataclass(frozen=True)
class Diagnostic:
    """Одне повідомлення перевірки задачі."""
    severity: Severity
    code: str
    message: str

    @property
    def is_violation(self) -> bool:
        return self.severity is Severity.VIOLATION


@dataclass(frozen=True)
class OffendingRow:
    """Рядок системи, що порушує знакову структуру M-матриці."""
    index: int
    band: str  # 'lower', 'diag', 'upper', 'row_sum'
    value: float


@dataclass
class MMatrixReport:
    """
    Результат перевірки монотонності.

    is_monotone дорівнює True тоді й лише тоді, коли offending_rows порожній.
    Поля умов (precondition_ok та інші) заповнює monotonicity_preconditions.
    """

    offending_rows: list[OffendingRow] = field(default_factory=list)
    precondition_ok: bool | None = None
    peclet_ok: bool | None = None
    time_step_ok: bool | None = None
    midpoint_time_ok: bool | None = None
    practical_regime: bool | None = None

    @property
    def is_monotone(self) -> bool:
        return not self.offending_rows


CellKey = tuple[float, int]


@dataclass
class ConvergenceReport:
    """
    Таблиця похибок E(ε, N) та порядків R(ε, N) методу подвійної сітки.

    Порядок R(ε, N) визначений лише тоді, коли є обидві похибки E(ε, N)
    та E(ε, 2N); невизначений порядок зберігається як None.
    Клітинка, що впала, лишається без похибки, а виняток потрапляє в failures.
    """

    epsilons: list[float]
    Ns: list[int]
    errors: dict[CellKey, float] = field(default_factory=dict)
    orders: dict[CellKey, float | None] = field(default_factory=dict)
    uniform_errors: dict[int, float] = field(default_factory=dict)
    uniform_orders: dict[int, float | None] = field(default_factory=dict)
    failures: dict[CellKey, Exception] = field(default_factory=dict)

    def error(self, epsilon: float, N: int) -> float | None:
        return self.errors.get((epsilon, N))

    def order(self, epsilon: float, N: int) -> float | None:
        return self.orders.get((epsilon, N))

    @property
    def has_failures(self) -> bool:
        return bool(self.failures)
