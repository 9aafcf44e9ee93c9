"""Вбудовані тестові задачі з розривними конвекцією та джерелом."""
import numpy as np

from src.domain.entities import Problem
from src.domain.exceptions import UnknownExampleError
from src.domain.value_objects import PiecewiseField

JUMP_POINT = 0.5
DEFAULT_EPSILON = 2.0 ** -8


# Приклад 1: a = ∓(1 + x(1 − x)), f = ∓2(1 + x²)t, b = 1 + eˣ.

def _example1_a_left(x, t):
    return -(1.0 + x * (1.0 - x))


def _example1_a_right(x, t):
    return 1.0 + x * (1.0 - x)


def _example1_f_left(x, t):
    return -2.0 * (1.0 + x ** 2) * t


def _example1_f_right(x, t):
    return 2.0 * (1.0 + x ** 2) * t


def _example1_b(x, t):
    return 1.0 + np.exp(x)


# Приклад 2: a = ∓1, f = −2xt зліва та 2(1 − x)t справа, b = 0.

def _example2_a_left(x, t):
    return -1.0


def _example2_a_right(x, t):
    return 1.0


def _example2_f_left(x, t):
    return -2.0 * x * t


def _example2_f_right(x, t):
    return 2.0 * (1.0 - x) * t


def _example2_b(x, t):
    return 0.0


def builtin_example(example_id: int, epsilon: float = DEFAULT_EPSILON) -> Problem:
    """
    Повертає одну з двох еталонних задач.

    Обидві задачі мають d = 0.5, T = 1, нульові крайові та початкові дані
    і α₁ = α₂ = 1.

    Args:
        example_id: Номер прикладу (1 або 2)
        epsilon: Параметр збурення ε

    Returns:
        Екземпляр Problem

    Raises:
        UnknownExampleError: Для інших номерів
    """
    if example_id == 1:
        return Problem(
            epsilon=epsilon,
            d=JUMP_POINT,
            a=PiecewiseField(_example1_a_left, _example1_a_right, JUMP_POINT),
            b=_example1_b,
            f=PiecewiseField(_example1_f_left, _example1_f_right, JUMP_POINT),
            T=1.0,
            alpha1=1.0,
            alpha2=1.0,
            beta=2.0,
            name="example1",
        )

    if example_id == 2:
        return Problem(
            epsilon=epsilon,
            d=JUMP_POINT,
            a=PiecewiseField(_example2_a_left, _example2_a_right, JUMP_POINT),
            b=_example2_b,
            f=PiecewiseField(_example2_f_left, _example2_f_right, JUMP_POINT),
            T=1.0,
            alpha1=1.0,
            alpha2=1.0,
            beta=0.0,
            name="example2",
        )

    raise UnknownExampleError(f"Невідомий приклад: {example_id}")
