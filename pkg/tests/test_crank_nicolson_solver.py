import numpy as np
import pytest

from src.application.services.crank_nicolson_solver import CrankNicolsonSolver, solve
from src.application.services.hybrid_scheme import assemble_step
from src.application.services.mesh_builder import build_mesh
from src.application.services.problem_catalog import builtin_example
from src.application.services.tridiagonal_solver import thomas_solve
from src.domain.entities import Problem
from src.domain.exceptions import SingularEliminationPivotError, StepFailedError
from src.domain.value_objects import PiecewiseField


def add_fields(first: PiecewiseField, second: PiecewiseField) -> PiecewiseField:
    return PiecewiseField(
        lambda x, t: first.left_branch(x, t) + second.left_branch(x, t),
        lambda x, t: first.right_branch(x, t) + second.right_branch(x, t),
        first.jump_point,
    )


def five_point_defect(grid) -> np.ndarray:
    """Залишок рівності односторонніх похідних другого порядку в x = d на кожному шарі."""
    half = grid.N // 2
    h_left, h_right = grid.mesh.H[1], grid.mesh.H[2]
    y = grid.values
    right = (-y[:, half + 2] + 4.0 * y[:, half + 1] - 3.0 * y[:, half]) / (2.0 * h_right)
    left = (y[:, half - 2] - 4.0 * y[:, half - 1] + 3.0 * y[:, half]) / (2.0 * h_left)
    return right - left


class TestCrankNicolsonSolver:

    def setup_method(self):
        self.solver = CrankNicolsonSolver()

    def test_zero_data_gives_exact_zero(self):
        problem = builtin_example(2, epsilon=2.0 ** -10).with_zero_data()
        grid = self.solver.solve(problem, 32, 16)
        assert np.all(grid.values == 0.0)

    def test_grid_shape_and_initial_boundary_values(self):
        problem = builtin_example(1).with_data(
            q=lambda x: x * (1.0 - x),
            p=lambda t: t,
            r=lambda t: -t,
        )
        grid = self.solver.solve(problem, 16, 10)
        assert grid.values.shape == (11, 17)
        assert grid.times[0] == 0.0
        assert grid.times[-1] == problem.T
        assert np.allclose(grid.values[0], grid.nodes * (1.0 - grid.nodes))
        assert np.allclose(grid.values[:, 0], grid.times)
        assert np.allclose(grid.values[:, -1], -grid.times)

    def test_linearity_in_data(self):
        base = builtin_example(1, epsilon=2.0 ** -6)
        extra_f = PiecewiseField(
            lambda x, t: np.cos(3.0 * x) * t,
            lambda x, t: x * x - t,
            base.d,
        )
        first = base
        second = base.with_data(
            f=extra_f,
            q=lambda x: np.sin(np.pi * x),
            p=lambda t: 0.5 * t,
            r=lambda t: t * t,
        )
        combined = base.with_data(
            f=add_fields(first.f, second.f),
            q=lambda x: np.sin(np.pi * x),
            p=lambda t: 0.5 * t,
            r=lambda t: t * t,
        )
        y1 = solve(first, 32, 32).values
        y2 = solve(second, 32, 32).values
        y12 = solve(combined, 32, 32).values
        assert np.max(np.abs(y12 - (y1 + y2))) <= 1e-10

    def test_five_point_interface_relation(self):
        grid = solve(builtin_example(1, epsilon=2.0 ** -8), 64, 64)
        defect = five_point_defect(grid)
        assert np.max(np.abs(defect)) <= 1e-8 * grid.max_abs()

    def test_example1_stability_bound(self):
        # ‖f‖/θ = 4/2 = 2.
        grid = solve(builtin_example(1, epsilon=2.0 ** -8), 64, 64)
        assert grid.max_abs() <= 2.1

    def test_example2_is_antisymmetric_about_jump(self):
        grid = solve(builtin_example(2, epsilon=2.0 ** -22), 64, 64)
        scale = grid.max_abs()
        assert scale > 0.0
        assert np.max(np.abs(grid.values + grid.values[:, ::-1])) <= 1e-6 * scale
        assert np.max(np.abs(grid.values[:, 32])) <= 1e-6 * scale

    def test_example2_interior_layer_next_to_jump(self):
        grid = solve(builtin_example(2, epsilon=2.0 ** -22), 64, 64)
        final = np.abs(grid.at_time(64))
        peak = int(np.argmax(final))
        assert 16 <= peak <= 48
        assert peak != 32
        jumps = np.abs(np.diff(grid.at_time(64)))
        assert int(np.argmax(jumps)) in (31, 32)

    def test_interface_row_scaling_does_not_change_solution(self):
        problem = builtin_example(1, epsilon=2.0 ** -8)
        mesh = build_mesh(64, problem)
        system = assemble_step(problem, mesh, 1.0 / 64, 0, np.zeros(65))
        scaled = system.scale_row(32, 2.0 * mesh.H[1])
        plain_solution = thomas_solve(system)
        assert np.max(np.abs(plain_solution)) > 0.0
        assert np.allclose(thomas_solve(scaled), plain_solution, rtol=1e-10, atol=1e-14)

    def test_step_observer_sees_every_step(self):
        seen = []
        solver = CrankNicolsonSolver(step_observer=lambda j, system, layer: seen.append(j))
        solver.solve(builtin_example(2), 16, 5)
        assert seen == [1, 2, 3, 4, 5]

    def test_failure_reports_step(self):
        problem = Problem(
            epsilon=1.0 / 16.0,
            d=0.5,
            a=PiecewiseField(lambda x, t: 1.0, lambda x, t: 1.0, 0.5),
            b=lambda x, t: 0.0,
            f=PiecewiseField.zero(0.5),
        )
        with pytest.raises(StepFailedError) as info:
            solve(problem, 8, 4)
        assert info.value.step == 0
        assert isinstance(info.value.cause, SingularEliminationPivotError)

    def test_rejects_zero_time_steps(self):
        with pytest.raises(ValueError):
            solve(builtin_example(1), 16, 0)
