import dataclasses
from dataclasses import dataclass
from typing import Callable

import numpy as np

from src.domain.value_objects import PiecewiseField, Side, eval_field
from src.domain.value_objects.piecewise_field import broadcast_values


def _zero_in_time(t):
    return 0.0


def _zero_in_space(x):
    return 0.0


@dataclass(frozen=True)
class Problem:
    """
    Початково-крайова задача

        ε y_xx + a y_x − b y − y_t = f,  (x, t) ∈ ((0, d) ∪ (d, 1)) × (0, T],
        y(0, t) = p(t),  y(1, t) = r(t),  y(x, 0) = q(x),

    де a та f мають розрив у точці x = d.

    Коефіцієнти зберігаються як функції, що приймають numpy-масиви.
    Екземпляр незмінний і може одночасно використовуватися кількома
    розв'язувачами, тому функції мають бути чистими.
    """

    epsilon: float
    d: float
    a: PiecewiseField
    b: Callable
    f: PiecewiseField
    p: Callable[[float], float] = _zero_in_time
    r: Callable[[float], float] = _zero_in_time
    q: Callable = _zero_in_space
    T: float = 1.0
    alpha1: float = 1.0
    alpha2: float = 1.0
    beta: float = 0.0
    name: str = "custom"

    def __post_init__(self):
        """Валідація скалярних параметрів."""
        if not (0.0 < self.epsilon <= 1.0):
            raise ValueError(f"ε має лежати в (0, 1]: {self.epsilon}")
        if not (0.0 < self.d < 1.0):
            raise ValueError(f"d має лежати в (0, 1): {self.d}")
        if self.T <= 0.0:
            raise ValueError(f"Горизонт T має бути > 0: {self.T}")
        if self.alpha1 <= 0.0 or self.alpha2 <= 0.0:
            raise ValueError("α₁ та α₂ мають бути > 0")
        if self.beta < 0.0:
            raise ValueError(f"β має бути >= 0: {self.beta}")
        if self.a.jump_point != self.d or self.f.jump_point != self.d:
            raise ValueError("Точка розриву полів a та f має збігатися з d")

    @property
    def alpha(self) -> float:
        """α = min{α₁, α₂}."""
        return min(self.alpha1, self.alpha2)

    def sample_b(self, nodes: np.ndarray, t: float) -> np.ndarray:
        """Значення неперервного коефіцієнта b у вузлах."""
        nodes = np.asarray(nodes, dtype=float)
        return broadcast_values(self.b(nodes, t), nodes.shape)

    def sample_q(self, nodes: np.ndarray) -> np.ndarray:
        """Початкові дані q у вузлах."""
        nodes = np.asarray(nodes, dtype=float)
        return broadcast_values(self.q(nodes), nodes.shape)

    def boundary_values(self, t: float) -> tuple[float, float]:
        """Повертає (p(t), r(t))."""
        return float(self.p(t)), float(self.r(t))

    def field_value(
        self,
        field: PiecewiseField,
        x: float,
        t: float,
        side: Side | None = None,
    ) -> float:
        """
        Значення поля задачі (a або f) у точці з Ω̄ × [0, T].

        Raises:
            OutOfDomainError: Якщо x поза [0, 1] або t поза [0, T]
            MissingSideError: Якщо x = d і сторона не вказана
        """
        return eval_field(field, x, t, side, horizon=self.T)

    def with_epsilon(self, epsilon: float) -> 'Problem':
        """Копія задачі з іншим ε."""
        return dataclasses.replace(self, epsilon=epsilon)

    def with_data(
        self,
        f: PiecewiseField | None = None,
        p: Callable | None = None,
        q: Callable | None = None,
        r: Callable | None = None,
    ) -> 'Problem':
        """
        Копія задачі з іншими даними (f, p, q, r).

        Не вказані аргументи лишаються без змін.
        """
        return dataclasses.replace(
            self,
            f=f if f is not None else self.f,
            p=p if p is not None else self.p,
            q=q if q is not None else self.q,
            r=r if r is not None else self.r,
        )

    def with_zero_data(self) -> 'Problem':
        """Копія задачі з f = p = q = r = 0."""
        return dataclasses.replace(
            self,
            f=PiecewiseField.zero(self.d),
            p=_zero_in_time,
            q=_zero_in_space,
            r=_zero_in_time,
        )

    def __repr__(self) -> str:
        return f"Problem(name={self.name!r}, epsilon={self.epsilon!r}, d={self.d})"
