"""Прогонка (алгоритм Томаса) для тридіагональних систем."""
import numpy as np
from numba import njit

from src.domain.entities import TridiagonalSystem
from src.domain.exceptions import ZeroPivotError

PIVOT_TOLERANCE = 1e-14


@njit(cache=True, nogil=True)
def _thomas_sweep(lower, diag, upper, rhs, tolerance):
    """
    Пряме виключення та зворотна підстановка.

    Повертає (x, failed_row); failed_row = -1, якщо всі ведучі елементи
    за модулем не менші за tolerance.
    """
    n = diag.shape[0]
    sweep = np.empty(n)
    forward = np.empty(n)
    x = np.zeros(n)

    pivot = diag[0]
    if abs(pivot) < tolerance:
        return x, 0
    sweep[0] = upper[0] / pivot
    forward[0] = rhs[0] / pivot

    for i in range(1, n):
        pivot = diag[i] - lower[i] * sweep[i - 1]
        if abs(pivot) < tolerance:
            return x, i
        sweep[i] = upper[i] / pivot
        forward[i] = (rhs[i] - lower[i] * forward[i - 1]) / pivot

    x[n - 1] = forward[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = forward[i] - sweep[i] * x[i + 1]

    return x, -1


def thomas_solve(system: TridiagonalSystem) -> np.ndarray:
    """
    Розв'язує тридіагональну систему без вибору ведучого елемента.

    Args:
        system: Система з смугами довжини N+1

    Returns:
        Вектор розв'язку довжини N+1

    Raises:
        ZeroPivotError: Якщо ведучий елемент за модулем менший за 1e-14
    """
    solution, failed_row = _thomas_sweep(
        np.ascontiguousarray(system.lower, dtype=np.float64),
        np.ascontiguousarray(system.diag, dtype=np.float64),
        np.ascontiguousarray(system.upper, dtype=np.float64),
        np.ascontiguousarray(system.rhs, dtype=np.float64),
        PIVOT_TOLERANCE,
    )
    if failed_row >= 0:
        raise ZeroPivotError(
            f"Ведучий елемент у рядку {failed_row} за модулем менший за {PIVOT_TOLERANCE}",
            int(failed_row),
        )
    return solution
