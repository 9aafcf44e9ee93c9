"""Value object для коефіцієнта з розривом у точці x = d."""
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from src.domain.exceptions import MissingSideError, OutOfDomainError
from .side import Side

# Гілка приймає x (скаляр або numpy-масив) і t, повертає значення тієї ж форми
# або скаляр, який розтягується на всю форму x.
Branch = Callable[[np.ndarray | float, float], np.ndarray | float]


def _zero_branch(x, t):
    return 0.0


def broadcast_values(values, shape: tuple[int, ...]) -> np.ndarray:
    """Приводить результат гілки до float-масиву потрібної форми."""
    return np.array(np.broadcast_to(np.asarray(values, dtype=float), shape))


@dataclass(frozen=True)
class PiecewiseField:
    """
    Функція (x, t) з двома гілками: ліва на [0, d], права на [d, 1].

    У точці x = d значення неоднозначне, тому обчислення там вимагає
    явного вибору сторони (Side).
    """

    left_branch: Branch
    right_branch: Branch
    jump_point: float

    def __post_init__(self):
        """Валідація точки розриву."""
        if not (0.0 < self.jump_point < 1.0):
            raise ValueError(f"Точка розриву має лежати в (0, 1): {self.jump_point}")

    @classmethod
    def zero(cls, jump_point: float) -> 'PiecewiseField':
        """Тотожно нульове поле з тією ж точкою розриву."""
        return cls(_zero_branch, _zero_branch, jump_point)

    def evaluate(
        self,
        x: float,
        t: float,
        side: Side | None = None,
        horizon: float = math.inf,
    ) -> float:
        """
        Обчислює поле в одній точці.

        Args:
            x: Просторова координата з [0, 1]
            t: Час з [0, horizon]
            side: Сторона границі; обов'язкова лише при x = d
            horizon: Часовий горизонт T

        Returns:
            Значення лівої гілки при x < d (або x = d, LEFT_LIMIT),
            правої при x > d (або x = d, RIGHT_LIMIT)

        Raises:
            OutOfDomainError: Якщо x або t поза межами
            MissingSideError: Якщо x = d і сторона не вказана
        """
        if not (0.0 <= x <= 1.0):
            raise OutOfDomainError(f"x={x} поза [0, 1]")
        if not (0.0 <= t <= horizon):
            raise OutOfDomainError(f"t={t} поза [0, {horizon}]")

        if x < self.jump_point:
            branch = self.left_branch
        elif x > self.jump_point:
            branch = self.right_branch
        elif side is None:
            raise MissingSideError(
                f"x = d = {self.jump_point}: потрібно вказати сторону границі"
            )
        elif side is Side.LEFT_LIMIT:
            branch = self.left_branch
        else:
            branch = self.right_branch

        return float(broadcast_values(branch(x, t), ()))

    def evaluate_nodes(
        self,
        nodes: np.ndarray,
        t: float,
        side_at_jump: Side | None = None,
    ) -> np.ndarray:
        """
        Векторизоване обчислення на масиві вузлів.

        Args:
            nodes: Масив координат з [0, 1]
            t: Час
            side_at_jump: Сторона для вузлів, що збігаються з d

        Returns:
            Масив значень тієї ж форми, що й nodes

        Raises:
            MissingSideError: Якщо серед вузлів є d, а сторона не вказана
        """
        nodes = np.asarray(nodes, dtype=float)
        at_jump = nodes == self.jump_point
        if at_jump.any() and side_at_jump is None:
            raise MissingSideError(
                f"Вузол збігається з d = {self.jump_point}: потрібно вказати сторону"
            )

        left = nodes < self.jump_point
        if side_at_jump is Side.LEFT_LIMIT:
            left = left | at_jump
        right = ~left

        values = np.empty_like(nodes)
        if left.any():
            values[left] = broadcast_values(self.left_branch(nodes[left], t), (int(left.sum()),))
        if right.any():
            values[right] = broadcast_values(self.right_branch(nodes[right], t), (int(right.sum()),))
        return values


def eval_field(
    field: PiecewiseField,
    x: float,
    t: float,
    side: Side | None = None,
    horizon: float = math.inf,
) -> float:
    """Обчислює кусково-задане поле з правилом вибору сторони в x = d."""
    return field.evaluate(x, t, side, horizon)
