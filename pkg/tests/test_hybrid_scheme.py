import numpy as np
import pytest

from src.application.services.hybrid_scheme import HybridScheme, assemble_step
from src.application.services.mesh_builder import build_mesh
from src.application.services.problem_catalog import builtin_example
from src.domain.entities import Problem
from src.domain.exceptions import SingularEliminationPivotError
from src.domain.value_objects import PiecewiseField, SolverOptions


def diffusion_only_problem(epsilon: float) -> Problem:
    """a = 0, b = 0, f = 0: рядки залежать лише від ε, h та Δt."""
    return Problem(
        epsilon=epsilon,
        d=0.5,
        a=PiecewiseField.zero(0.5),
        b=lambda x, t: 0.0,
        f=PiecewiseField.zero(0.5),
    )


class TestHybridScheme:

    def setup_method(self):
        self.scheme = HybridScheme()

    def test_central_row(self):
        # ε/h² = 4 на рівномірній сітці з h = 1/8; 2/Δt = 2 входить у діагональ.
        problem = diffusion_only_problem(1.0 / 16.0)
        mesh = build_mesh(8, problem)
        system = self.scheme.assemble_step(problem, mesh, 1.0, 0, np.zeros(9))
        assert system.row(3) == pytest.approx((4.0, -10.0, 4.0))
        assert system.row(5) == pytest.approx((4.0, -10.0, 4.0))

    def test_midpoint_row_sum(self):
        # Усереднений член за часом дає −(b̄/2 + 1/Δt) і в r⁻, і в rᶜ.
        problem = diffusion_only_problem(1.0 / 16.0)
        mesh = build_mesh(8, problem)
        system = self.scheme.assemble_step(problem, mesh, 1.0, 0, np.zeros(9))
        assert system.row(1) == pytest.approx((3.0, -9.0, 4.0))
        assert system.row(7) == pytest.approx((4.0, -9.0, 3.0))
        assert sum(system.row(2)) == pytest.approx(-2.0)

    def test_interface_row_in_scaled_form(self):
        # ε = 1/4, h = 1/8, a = ∓1, c = 2/Δt = 4: після множення на 2h рядок (2.2, −4.8, 2.2).
        problem = builtin_example(2, epsilon=0.25)
        mesh = build_mesh(8, problem)
        system = self.scheme.assemble_step(problem, mesh, 0.5, 0, np.zeros(9))
        h = mesh.H[1]
        assert h == 0.125
        scaled = tuple(2.0 * h * value for value in system.row(4))
        assert scaled == pytest.approx((2.2, -4.8, 2.2))

    def test_zero_data_gives_zero_rhs(self):
        problem = builtin_example(2, epsilon=2.0 ** -8).with_zero_data()
        mesh = build_mesh(32, problem)
        system = self.scheme.assemble_step(problem, mesh, 1.0 / 32, 5, np.zeros(33))
        assert np.all(system.rhs == 0.0)

    def test_boundary_rows(self):
        problem = builtin_example(1).with_data(p=lambda t: t, r=lambda t: 2.0 * t)
        mesh = build_mesh(16, problem)
        system = self.scheme.assemble_step(problem, mesh, 0.25, 1, np.zeros(17))
        assert system.row(0) == (0.0, 1.0, 0.0)
        assert system.row(16) == (0.0, 1.0, 0.0)
        assert system.rhs[0] == pytest.approx(0.5)
        assert system.rhs[16] == pytest.approx(1.0)

    def test_interior_row_sums_are_negative(self):
        problem = builtin_example(1, epsilon=2.0 ** -8)
        mesh = build_mesh(64, problem)
        system = assemble_step(problem, mesh, 1.0 / 16, 3, np.zeros(65))
        sums = system.lower + system.diag + system.upper
        assert np.all(sums[1:-1] < 0.0)

    def test_literal_rhs_only_changes_midpoint_rows(self):
        problem = builtin_example(1, epsilon=2.0 ** -6)
        mesh = build_mesh(16, problem)
        y_prev = np.sin(np.pi * mesh.nodes)
        averaged = assemble_step(problem, mesh, 0.1, 2, y_prev)
        literal = assemble_step(problem, mesh, 0.1, 2, y_prev, SolverOptions(literal_rhs=True))

        assert np.array_equal(averaged.diag, literal.diag)
        changed = np.nonzero(averaged.rhs != literal.rhs)[0]
        midpoint = [i for i, kind in enumerate(mesh.scheme_kinds()) if kind.is_midpoint]
        assert set(changed) <= set(midpoint)
        assert len(changed) > 0

    def test_singular_elimination(self):
        # Ліва гілка a = +1 з 2ε = h робить знаменник 2ε − h·a нульовим.
        problem = Problem(
            epsilon=1.0 / 16.0,
            d=0.5,
            a=PiecewiseField(lambda x, t: 1.0, lambda x, t: 1.0, 0.5),
            b=lambda x, t: 0.0,
            f=PiecewiseField.zero(0.5),
        )
        mesh = build_mesh(8, problem)
        with pytest.raises(SingularEliminationPivotError) as info:
            self.scheme.assemble_step(problem, mesh, 0.5, 0, np.zeros(9))
        assert info.value.value == 0.0

    def test_rejects_wrong_previous_layer(self):
        problem = builtin_example(1)
        mesh = build_mesh(16, problem)
        with pytest.raises(ValueError):
            self.scheme.assemble_step(problem, mesh, 0.1, 0, np.zeros(16))
