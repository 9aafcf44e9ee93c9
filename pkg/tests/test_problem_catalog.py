import dataclasses
import math

import numpy as np
import pytest

from src.application.services.problem_catalog import builtin_example
from src.domain.entities import Problem
from src.domain.exceptions import MissingSideError, OutOfDomainError, UnknownExampleError
from src.domain.value_objects import PiecewiseField, Side


class TestBuiltinExample:

    def test_example1_coefficients(self):
        problem = builtin_example(1)
        assert problem.d == 0.5
        assert problem.T == 1.0
        assert problem.alpha1 == problem.alpha2 == 1.0
        assert problem.sample_b(np.array([0.3]), 0.2)[0] == pytest.approx(1.0 + math.exp(0.3))
        assert problem.f.evaluate(0.2, 0.5) == pytest.approx(-2.0 * 1.04 * 0.5)
        assert problem.f.evaluate(0.8, 1.0) == pytest.approx(2.0 * 1.64)

    def test_example2_coefficients(self):
        problem = builtin_example(2)
        assert problem.f.evaluate(0.75, 1.0) == pytest.approx(0.5)
        assert problem.f.evaluate(0.25, 1.0) == pytest.approx(-0.5)
        assert np.all(problem.sample_b(np.linspace(0.0, 1.0, 11), 0.5) == 0.0)

    def test_zero_boundary_and_initial_data(self):
        for example_id in (1, 2):
            problem = builtin_example(example_id)
            assert problem.boundary_values(0.7) == (0.0, 0.0)
            assert np.all(problem.sample_q(np.linspace(0.0, 1.0, 9)) == 0.0)

    def test_unknown_example(self):
        with pytest.raises(UnknownExampleError):
            builtin_example(3)

    def test_epsilon_is_applied(self):
        assert builtin_example(2, epsilon=2.0 ** -14).epsilon == 2.0 ** -14

    def test_convection_sign_and_magnitude(self):
        times = np.linspace(0.0, 1.0, 17)
        left = np.linspace(0.0, 0.5, 17)
        right = np.linspace(0.5, 1.0, 17)
        for example_id in (1, 2):
            a = builtin_example(example_id).a
            for t in times:
                assert np.all(-a.evaluate_nodes(left, t, Side.LEFT_LIMIT) >= 1.0)
                assert np.all(a.evaluate_nodes(right, t, Side.RIGHT_LIMIT) >= 1.0)

    def test_repeated_calls_agree(self):
        first, second = builtin_example(1), builtin_example(1)
        nodes = np.linspace(0.0, 0.45, 10)
        for t in (0.0, 0.5, 1.0):
            assert np.array_equal(first.a.evaluate_nodes(nodes, t), second.a.evaluate_nodes(nodes, t))
            assert np.array_equal(first.f.evaluate_nodes(nodes, t), second.f.evaluate_nodes(nodes, t))
            assert np.array_equal(first.sample_b(nodes, t), second.sample_b(nodes, t))


class TestProblem:

    def setup_method(self):
        self.problem = builtin_example(2)

    def test_rejects_bad_scalars(self):
        with pytest.raises(ValueError):
            self.problem.with_epsilon(0.0)
        with pytest.raises(ValueError):
            dataclasses.replace(self.problem, T=0.0)
        with pytest.raises(ValueError):
            dataclasses.replace(self.problem, beta=-1.0)

    def test_rejects_mismatched_jump_point(self):
        with pytest.raises(ValueError):
            Problem(epsilon=0.1, d=0.5, a=PiecewiseField.zero(0.4), b=lambda x, t: 0.0,
                    f=PiecewiseField.zero(0.5))

    def test_with_zero_data(self):
        zero = self.problem.with_zero_data()
        assert zero.f.evaluate(0.25, 1.0) == 0.0
        assert zero.a is self.problem.a
        assert zero.epsilon == self.problem.epsilon

    def test_with_data_keeps_unspecified_fields(self):
        changed = self.problem.with_data(p=lambda t: t)
        assert changed.boundary_values(0.5) == (0.5, 0.0)
        assert changed.f is self.problem.f

    def test_field_value_respects_horizon(self):
        assert self.problem.field_value(self.problem.a, 0.25, self.problem.T) == -1.0
        with pytest.raises(OutOfDomainError):
            self.problem.field_value(self.problem.a, 0.25, self.problem.T + 0.5)
        short = dataclasses.replace(self.problem, T=0.5)
        with pytest.raises(OutOfDomainError):
            short.field_value(short.f, 0.75, 0.75)

    def test_field_value_needs_side_at_jump(self):
        with pytest.raises(MissingSideError):
            self.problem.field_value(self.problem.a, 0.5, 0.1)
        assert self.problem.field_value(self.problem.a, 0.5, 0.1, Side.RIGHT_LIMIT) == 1.0
