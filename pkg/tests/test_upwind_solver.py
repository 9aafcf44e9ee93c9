import numpy as np
import pytest

from src.application.services.convergence_service import double_mesh_error, order_of_convergence
from src.application.services.crank_nicolson_solver import solve
from src.application.services.mesh_builder import bisect_mesh, build_mesh
from src.application.services.problem_catalog import builtin_example
from src.application.services.upwind_solver import upwind_reference_solve


def upwind_double_mesh_error(problem, N: int) -> float:
    coarse = upwind_reference_solve(problem, N, N)
    fine = upwind_reference_solve(problem, 2 * N, 2 * N, mesh=bisect_mesh(coarse.mesh))
    return float(np.max(np.abs(fine.values[::2, ::2] - coarse.values)))


class TestUpwindReferenceSolve:

    def test_zero_data(self):
        problem = builtin_example(2).with_zero_data()
        grid = upwind_reference_solve(problem, 32, 8)
        assert np.all(grid.values == 0.0)

    def test_same_shape_as_hybrid(self):
        problem = builtin_example(1)
        upwind = upwind_reference_solve(problem, 32, 12)
        hybrid = solve(problem, 32, 12)
        assert upwind.values.shape == hybrid.values.shape
        assert np.array_equal(upwind.nodes, hybrid.nodes)
        assert np.array_equal(upwind.times, hybrid.times)

    def test_boundary_and_initial_values(self):
        problem = builtin_example(1).with_data(p=lambda t: t, q=lambda x: 0.0 * x)
        grid = upwind_reference_solve(problem, 16, 4)
        assert np.allclose(grid.values[:, 0], grid.times)
        assert np.all(grid.values[0] == 0.0)

    def test_close_to_hybrid_solution(self):
        problem = builtin_example(2, epsilon=2.0 ** -8)
        upwind = upwind_reference_solve(problem, 64, 64)
        hybrid = solve(problem, 64, 64)
        assert np.max(np.abs(upwind.values - hybrid.values)) < 0.1 * hybrid.max_abs() + 0.02

    def test_rejects_zero_time_steps(self):
        with pytest.raises(ValueError):
            upwind_reference_solve(builtin_example(1), 16, 0)

    @pytest.mark.slow
    def test_gap_to_hybrid_shrinks(self):
        problem = builtin_example(2, epsilon=2.0 ** -8)
        gaps = []
        for N in (128, 256, 512):
            upwind = upwind_reference_solve(problem, N, N)
            hybrid = solve(problem, N, N)
            gaps.append(np.max(np.abs(upwind.values - hybrid.values)))
        assert gaps[0] > gaps[1] > gaps[2]

    def test_accepts_prebuilt_mesh(self):
        problem = builtin_example(1)
        mesh = bisect_mesh(build_mesh(16, problem))
        grid = upwind_reference_solve(problem, 32, 4, mesh=mesh)
        assert grid.mesh is mesh
        with pytest.raises(ValueError):
            upwind_reference_solve(problem, 16, 4, mesh=mesh)

    @pytest.mark.slow
    def test_upwind_order_is_lower(self):
        problem = builtin_example(2, epsilon=2.0 ** -8)
        upwind_order = order_of_convergence(
            upwind_double_mesh_error(problem, 256), upwind_double_mesh_error(problem, 512)
        )
        hybrid_order = order_of_convergence(
            double_mesh_error(problem, 256, 256), double_mesh_error(problem, 512, 512)
        )
        assert upwind_order < hybrid_order
