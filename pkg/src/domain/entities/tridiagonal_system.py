from dataclasses import dataclass

import numpy as np


@dataclass(eq=False)
class TridiagonalSystem:
    """
    Лінійна система одного кроку Кранка–Ніколсон:

        lower[i]·Y_{i−1} + diag[i]·Y_i + upper[i]·Y_{i+1} = rhs[i],  i = 0..N.

    Усі чотири масиви мають довжину N+1; lower[0] та upper[N] дорівнюють нулю.
    Рядки 0 та N граничні: diag = 1, без позадіагональних елементів.
    """

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        """Перевірка узгодженості довжин."""
        n = len(self.diag)
        if not (len(self.lower) == len(self.upper) == len(self.rhs) == n):
            raise ValueError("Усі смуги та права частина мають мати довжину N+1")

    @property
    def size(self) -> int:
        """Кількість рівнянь N+1."""
        return len(self.diag)

    def row(self, i: int) -> tuple[float, float, float]:
        """Повертає (r_i⁻, r_iᶜ, r_i⁺)."""
        return float(self.lower[i]), float(self.diag[i]), float(self.upper[i])

    def multiply(self, x: np.ndarray) -> np.ndarray:
        """Множить матрицю системи на вектор x."""
        x = np.asarray(x, dtype=float)
        product = self.diag * x
        product[1:] += self.lower[1:] * x[:-1]
        product[:-1] += self.upper[:-1] * x[1:]
        return product

    def residual(self, x: np.ndarray) -> float:
        """Максимум-норма нев'язки A·x − rhs."""
        return float(np.max(np.abs(self.multiply(x) - self.rhs)))

    def is_finite(self) -> bool:
        """Чи всі елементи скінченні (без NaN/Inf)."""
        return all(
            bool(np.all(np.isfinite(band)))
            for band in (self.lower, self.diag, self.upper, self.rhs)
        )

    def scale_row(self, i: int, factor: float) -> 'TridiagonalSystem':
        """Копія системи з рядком i, помноженим на factor."""
        bands = [band.copy() for band in (self.lower, self.diag, self.upper, self.rhs)]
        for band in bands:
            band[i] *= factor
        return TridiagonalSystem(*bands)

    def __repr__(self) -> str:
        return f"TridiagonalSystem(size={self.size})"
