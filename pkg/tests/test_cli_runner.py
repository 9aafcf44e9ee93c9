import csv
import json

import numpy as np

from main import main
from src.application.services.problem_catalog import builtin_example
from src.domain.entities import ConvergenceReport, Problem
from src.domain.value_objects import PiecewiseField
from src.presentation.cli import parse_config, run
from src.presentation.cli.runner import EXIT_IO, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, format_table


def singular_problem() -> Problem:
    # a = +1 з обох боків: при ε = 1/16, N = 8 знаменник 2ε − h·a у вузлі N/2 нульовий.
    return Problem(
        epsilon=1.0 / 16.0,
        d=0.5,
        a=PiecewiseField(lambda x, t: 1.0, lambda x, t: 1.0, 0.5),
        b=lambda x, t: 0.0,
        f=PiecewiseField.zero(0.5),
    )


class TestRunner:

    def test_solve_zero_data(self, tmp_path):
        config = parse_config(['--mode', 'solve', '--N', '16', '--M', '4', '--out', str(tmp_path)])
        code = run(config, builtin_example(2).with_zero_data())
        assert code == EXIT_OK
        with open(tmp_path / "grid.csv", newline='', encoding='utf-8') as f:
            rows = list(csv.reader(f))
        assert rows[0] == ["x", "t", "y"]
        assert len(rows) == 1 + 5 * 17
        assert all(row[2] == "0" for row in rows[1:])

    def test_study_writes_both_formats(self, tmp_path):
        config = parse_config([
            '--example', '2', '--epsilon', '2^-8', '--N', '16', '--N', '32', '--out', str(tmp_path),
        ])
        assert run(config) == EXIT_OK
        assert (tmp_path / "table_example2.csv").exists()
        data = json.loads((tmp_path / "table_example2.json").read_text(encoding='utf-8'))
        assert data["Ns"] == [16, 32]
        orders = data["rows"][0]["orders"]
        assert orders[0] is not None
        assert orders[1] is None
        assert data["failures"] == []

    def test_study_json_only(self, tmp_path):
        config = parse_config([
            '--example', '2', '--epsilon', '2^-8', '--N', '16', '--format', 'json', '--out', str(tmp_path),
        ])
        assert run(config) == EXIT_OK
        assert (tmp_path / "table_example2.json").exists()
        assert not (tmp_path / "table_example2.csv").exists()

    def test_study_emits_grid(self, tmp_path):
        config = parse_config([
            '--example', '1', '--epsilon', '2^-8', '--N', '16', '--format', 'csv', '--emit-grid',
            '--out', str(tmp_path),
        ])
        assert run(config) == EXIT_OK
        assert (tmp_path / "grid_example1.csv").exists()

    def test_validate(self, tmp_path):
        config = parse_config(['--mode', 'validate', '--example', '2', '--N', '64', '--out', str(tmp_path)])
        assert run(config) == EXIT_OK
        assert list(tmp_path.iterdir()) == []

    def test_validate_with_violations_still_succeeds(self, tmp_path):
        config = parse_config(['--mode', 'validate', '--epsilon', '0.0625', '--N', '8'])
        assert run(config, singular_problem()) == EXIT_OK

    def test_singular_solve_is_numerical_failure(self, tmp_path):
        config = parse_config(['--mode', 'solve', '--epsilon', '0.0625', '--N', '8', '--out', str(tmp_path)])
        assert run(config, singular_problem()) == EXIT_NUMERICAL
        assert not (tmp_path / "grid.csv").exists()

    def test_failed_study_cell_is_numerical_failure(self, tmp_path):
        config = parse_config([
            '--epsilon', '0.25', '--epsilon', '0.0625', '--N', '8', '--out', str(tmp_path),
        ])
        assert run(config, singular_problem()) == EXIT_NUMERICAL
        data = json.loads((tmp_path / "table_custom.json").read_text(encoding='utf-8'))
        assert [(item["epsilon"], item["N"]) for item in data["failures"]] == [(0.0625, 8)]

    def test_data_error_in_study_cell_is_numerical_failure(self, tmp_path):
        def left_source(x, t):
            if np.size(x) > 20:
                raise ZeroDivisionError("джерело не визначене")
            return -t + 0.0 * x

        problem = builtin_example(2).with_data(
            f=PiecewiseField(left_source, lambda x, t: t + 0.0 * x, 0.5)
        )
        config = parse_config(['--epsilon', '2^-8', '--N', '16', '--N', '32', '--out', str(tmp_path)])
        assert run(config, problem) == EXIT_NUMERICAL
        data = json.loads((tmp_path / "table_example2.json").read_text(encoding='utf-8'))
        assert data["rows"][0]["errors"][0] is not None
        assert [item["N"] for item in data["failures"]] == [32]

    def test_unwritable_output(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("x", encoding='utf-8')
        config = parse_config(['--mode', 'solve', '--N', '8', '--out', str(blocker / "out")])
        assert run(config, builtin_example(1).with_zero_data()) == EXIT_IO


class TestFormatTable:

    def test_renders_errors_and_orders(self):
        eps = 2.0 ** -8
        report = ConvergenceReport(
            epsilons=[eps],
            Ns=[64, 128],
            errors={(eps, 64): 1.12e-01, (eps, 128): 4.07e-02},
            orders={(eps, 64): 1.46449},
            uniform_errors={64: 1.12e-01, 128: 4.07e-02},
            uniform_orders={64: 1.46449},
        )
        table = format_table(report)
        assert "1.12e-01" in table
        assert "4.07e-02" in table
        assert "1.4645" in table
        assert "2^-8" in table

    def test_failed_cell(self):
        eps = 2.0 ** -8
        report = ConvergenceReport(epsilons=[eps], Ns=[64])
        assert "failed" in format_table(report)


class TestMain:

    def test_bad_mesh_size_exit_code(self):
        assert main(["--N", "63"]) == EXIT_USAGE
