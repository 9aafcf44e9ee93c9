from dataclasses import dataclass

import numpy as np

from src.domain.exceptions import BadMeshSizeError, IndexOutOfRangeError
from src.domain.value_objects import SchemeKind


@dataclass(frozen=True, eq=False)
class ShishkinMesh:
    """
    Кусково-рівномірна сітка Шишкіна з чотирьох чвертей:

        [0, d−τ₁] ∪ [d−τ₁, d] ∪ [d, d+τ₂] ∪ [d+τ₂, 1],

    по N/4 інтервалів у кожній, з кроками H₁..H₄.
    Вузол x_{N/2} дорівнює d точно.
    """

    N: int
    nodes: np.ndarray
    tau1: float
    tau2: float
    H: tuple[float, float, float, float]
    d: float
    alpha: float

    @classmethod
    def from_transition_points(
        cls,
        N: int,
        d: float,
        tau1: float,
        tau2: float,
        alpha: float,
    ) -> 'ShishkinMesh':
        """
        Будує вузли за формулою кожної чверті.

        Кожна чверть генерується від своїх кінців, тому x_{N/4} = d − τ₁,
        x_{N/2} = d та x_{3N/4} = d + τ₂ без накопичення похибки.

        Args:
            N: Кількість інтервалів (кратна 4, >= 8)
            d: Точка розриву
            tau1: Ширина згущення зліва від d
            tau2: Ширина згущення справа від d
            alpha: Стала α, з якою рахувались τ

        Raises:
            BadMeshSizeError: Якщо N < 8 або N не кратне 4
        """
        validate_mesh_size(N)
        quarter = N // 4
        left_transition = d - tau1
        right_transition = d + tau2

        nodes = np.concatenate([
            np.linspace(0.0, left_transition, quarter + 1)[:-1],
            np.linspace(left_transition, d, quarter + 1)[:-1],
            np.linspace(d, right_transition, quarter + 1)[:-1],
            np.linspace(right_transition, 1.0, quarter + 1),
        ])
        nodes[2 * quarter] = d
        nodes.setflags(write=False)

        H = (
            4.0 * (d - tau1) / N,
            4.0 * tau1 / N,
            4.0 * tau2 / N,
            4.0 * (1.0 - d - tau2) / N,
        )
        return cls(N=N, nodes=nodes, tau1=tau1, tau2=tau2, H=H, d=d, alpha=alpha)

    @property
    def interface_index(self) -> int:
        """Індекс вузла x_{N/2} = d."""
        return self.N // 2

    @property
    def steps(self) -> np.ndarray:
        """Кроки h_i = x_i − x_{i−1}, i = 1..N (елемент k відповідає h_{k+1})."""
        return np.diff(self.nodes)

    def scheme_kind(self, i: int) -> SchemeKind:
        """
        Визначає, яка різницева схема діє у вузлі x_i.

        Перехідні вузли x_{N/4} та x_{3N/4} належать midpoint-схемі.

        Raises:
            IndexOutOfRangeError: Якщо i поза 0..N
        """
        n = self.N
        if not (0 <= i <= n):
            raise IndexOutOfRangeError(f"Індекс {i} поза межами 0..{n}")

        if i == 0:
            return SchemeKind.BOUNDARY_LEFT
        if i == n:
            return SchemeKind.BOUNDARY_RIGHT
        if i <= n // 4:
            return SchemeKind.MIDPOINT_LEFT
        if i < n // 2:
            return SchemeKind.CENTRAL_LEFT
        if i == n // 2:
            return SchemeKind.INTERFACE
        if i < 3 * n // 4:
            return SchemeKind.CENTRAL_RIGHT
        return SchemeKind.MIDPOINT_RIGHT

    def scheme_kinds(self) -> list[SchemeKind]:
        """Схеми для всіх вузлів 0..N."""
        return [self.scheme_kind(i) for i in range(self.N + 1)]

    def __repr__(self) -> str:
        return f"ShishkinMesh(N={self.N}, tau1={self.tau1:.6g}, tau2={self.tau2:.6g}, d={self.d})"


def validate_mesh_size(N: int) -> None:
    """
    Перевіряє, що N >= 8 і кратне 4.

    Raises:
        BadMeshSizeError: Якщо умова не виконана
    """
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)):
        raise BadMeshSizeError(f"N має бути цілим числом: {N!r}")
    if N < 8 or N % 4 != 0:
        raise BadMeshSizeError(f"N має бути кратним 4 і не меншим за 8: {N}")
