from dataclasses import dataclass

import numpy as np

from .shishkin_mesh import ShishkinMesh


@dataclass(frozen=True, eq=False)
class SolutionGrid:
    """
    Наближений розв'язок на сітці простір–час.

    values[j, i] ≈ y(x_i, t_j), j = 0..M, i = 0..N.
    """

    mesh: ShishkinMesh
    times: np.ndarray
    values: np.ndarray

    @property
    def N(self) -> int:
        return self.mesh.N

    @property
    def M(self) -> int:
        return len(self.times) - 1

    @property
    def nodes(self) -> np.ndarray:
        return self.mesh.nodes

    def at_time(self, j: int) -> np.ndarray:
        """Профіль Y(·, t_j)."""
        return self.values[j]

    def max_abs(self) -> float:
        """max |Y| по всій сітці."""
        return float(np.max(np.abs(self.values)))

    def __repr__(self) -> str:
        return f"SolutionGrid(N={self.N}, M={self.M})"
