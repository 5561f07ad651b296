# Copyright © 2026 VulcanPlan contributors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import json
import os
import sys
from dataclasses import replace

import pytest

from config import SolverConfig, SolverProfile
from milp import (
    EQ,
    GE,
    INFEASIBLE,
    LE,
    OPTIMAL,
    TIME_LIMIT,
    ERROR,
    CommandAdapter,
    LinExpr,
    ModelBuilder,
    ModelSize,
    adapter_for,
    dense_size,
    export_lp,
    export_mps,
    model_size,
    no_good_cut,
    parse_cbc,
    parse_highs,
    solve,
    solve_pool,
    solver_options,
    table_one,
    write_model,
)
from milp.model import CONSTANT_ID, LinearConstraint
from util import DecodeError, ModelStructureError, SolverAdapterError

from readers import read_lp, read_mps


def expr(*terms) -> LinExpr:
    built = LinExpr()
    for id, coef in terms:
        built.add(id, coef)
    return built


def small_model():
    builder = ModelBuilder("small")
    builder.binary("y_long_name_1")
    builder.binary("y_long_name_2")
    builder.integer("x", upper=5)
    builder.continuous("s")
    builder.add_row("cap", "1", expr(("x", 2.0), ("y_long_name_1", -4.0)), LE, 1)
    builder.add_row("cover", "1", expr(("y_long_name_1", 1.0), ("y_long_name_2", 1.0)), GE, 1)
    builder.add_row("link", "", expr(("s", 1.0), ("x", -0.5)), EQ, 0.25)
    builder.minimize("y_long_name_1", 3.0)
    builder.minimize("y_long_name_2", 2.0)
    builder.minimize("s", 1.0)
    return builder.build()


def test_row_constant_moves_to_the_right_side():
    builder = ModelBuilder("m")
    builder.integer("x")
    row = builder.add_row("eq", "1", expr(("x", 1.0)).add_constant(3.0), LE, 5)
    assert row.rhs == 2.0
    assert row.name == "eq_1"
    assert row.tag == "eq"


def test_empty_row_that_holds_is_dropped():
    builder = ModelBuilder("m")
    builder.integer("x")
    assert builder.add_row("eq", "1", expr(("x", 0.0)), LE, 0) is None
    assert builder.build().constraints == ()


def test_empty_row_that_fails_stays_infeasible():
    builder = ModelBuilder("m")
    builder.integer("x")
    row = builder.add_row("eq", "1", LinExpr().add_constant(2.0), LE, 1)
    model = builder.build()
    assert row.terms == ((CONSTANT_ID, 0.0),)
    assert row.rhs == -1.0
    assert model.variable(CONSTANT_ID).lower == model.variable(CONSTANT_ID).upper == 1.0


def test_structure_errors():
    builder = ModelBuilder("m")
    builder.binary("y")
    with pytest.raises(ModelStructureError):
        builder.binary("y")
    with pytest.raises(ModelStructureError):
        LinearConstraint("r", (("y", 1.0), ("y", 2.0)), LE, 1.0, "r")
    with pytest.raises(ModelStructureError):
        LinearConstraint("r", (("y", 1.0),), "<", 1.0, "r")
    builder.add_row("r", "", expr(("z", 1.0)), LE, 1)
    with pytest.raises(ModelStructureError):
        builder.build()


def test_lp_export_is_read_back():
    model = small_model()
    read = read_lp(export_lp(model))
    size = model_size(model)
    assert len(read.rows) == size.constraints == 3
    assert len(read.binaries) == size.binaries == 2
    assert len(read.integers) == size.integers == 1
    assert read.rows == {"cap_1": "<=", "cover_1": ">=", "link": "="}
    assert read.coefficients[("cap_1", "y_long_name_1")] == -4.0
    assert read.coefficients[("link", "x")] == -0.5
    assert read.rhs["link"] == 0.25
    assert read.upper["x"] == 5.0


def test_mps_export_is_read_back_with_short_names():
    model = small_model()
    read = read_mps(export_mps(model))
    assert len(read.rows) == 3
    assert len(read.binaries) == 2
    assert len(read.integers) == 1
    assert all(len(name) <= 8 for name in read.columns | set(read.rows))
    assert read.coefficients[("link", "x")] == -0.5
    assert read.rhs == {"cap_1": 1.0, "cover_1": 1.0, "link": 0.25}


def test_write_model_keeps_a_name_map(tmp_path):
    path = str(tmp_path / "small.mps")
    names = write_model(small_model(), path)
    assert names.hashed
    with open(path + ".names.json", encoding="utf-8") as reader:
        hashed = json.load(reader)
    assert hashed["columns"][names.columns["y_long_name_1"]] == "y_long_name_1"
    assert "x" not in hashed["columns"]
    with pytest.raises(ModelStructureError):
        write_model(small_model(), str(tmp_path / "small.xyz"), "xyz")


def test_no_good_cut_excludes_only_its_pattern():
    cut = no_good_cut("cut", ["a"], ["b", "c"])
    assert cut.sense == GE
    assert cut.rhs == 0.0
    coefs = dict(cut.terms)

    def lhs(values):
        return sum(coefs[id] * values[id] for id in coefs)

    assert lhs({"a": 1, "b": 0, "c": 0}) < cut.rhs
    assert lhs({"a": 0, "b": 0, "c": 0}) >= cut.rhs
    assert lhs({"a": 1, "b": 1, "c": 0}) >= cut.rhs


def test_table_one_sizes():
    assert table_one("lssp", 2, 2, 3, 1).binaries == 48
    assert table_one("assp", 2, 2, 3, 1).integers == 24
    with pytest.raises(ModelStructureError):
        table_one("other", 1, 1, 1, 1)


def test_dense_sizes_count_every_row_family():
    assert dense_size("integrated", 2, 2, 3, 1).constraints == 293
    assert dense_size("lssp", 2, 2, 3, 1) == ModelSize(30, 36, 191)
    # a second macro-period adds its four caps and one workshop row
    one, two = dense_size("assp", 2, 2, 3, 1), dense_size("assp", 2, 2, 3, 1, H=2)
    assert two.constraints == one.constraints + 5
    with pytest.raises(ModelStructureError):
        dense_size("other", 1, 1, 1, 1)


def test_parse_cbc():
    parsed = parse_cbc(
        "Optimal - objective value 4.00000000\n"
        "      0 x                      4                       -1\n"
        "      1 y                      1                        0\n"
    )
    assert parsed.status == OPTIMAL
    assert parsed.objective == 4.0
    assert parsed.values == {"x": 4.0, "y": 1.0}
    assert parse_cbc("Infeasible - objective value 0.00000000\n").status == INFEASIBLE
    assert parse_cbc("Stopped on time - objective value 5\n0 x 1 0\n").status == TIME_LIMIT
    stopped = parse_cbc("Stopped on time (no integer solution - continuous used) - objective value 1\n")
    assert stopped.status == ERROR
    with pytest.raises(SolverAdapterError):
        parse_cbc("Optimal - objective value 1\n0 x\n")


def test_parse_highs():
    parsed = parse_highs(
        "Model status\n"
        "Optimal\n"
        "\n"
        "# Primal solution values\n"
        "Feasible\n"
        "Objective 4\n"
        "# Columns 2\n"
        "x 4\n"
        "y 0\n"
        "# Rows 1\n"
        "c1 8\n"
    )
    assert parsed.status == OPTIMAL
    assert parsed.objective == 4.0
    assert parsed.values == {"x": 4.0, "y": 0.0}
    no_incumbent = parse_highs("Model status\nTime limit reached\n\n# Primal solution values\nNone\n")
    assert no_incumbent.status == ERROR
    assert no_incumbent.values == {}
    with pytest.raises(SolverAdapterError):
        parse_highs("nothing here\n")


def test_adapter_choice():
    with pytest.raises(SolverAdapterError):
        adapter_for(SolverProfile("gurobi", "plugin"))
    with pytest.raises(SolverAdapterError):
        CommandAdapter(SolverProfile("odd", "command", "odd {model_path} {solution_path}", "mps", "odd"))


def fake_solver(tmp_path, solution: str | None, once: bool = False) -> SolverConfig:
    """Command profile running a shell script that writes a CBC solution file,
    on the first call only when once is set."""
    script = tmp_path / "fake-cbc"
    body = "#!/bin/sh\n"
    if solution is not None and once:
        body += f"[ -e \"$2.done\" ] || {{ printf '{solution}' > \"$2\"; touch \"$2.done\"; }}\n"
    elif solution is not None:
        body += f"printf '{solution}' > \"$2\"\n"
    script.write_text(body, encoding="utf-8")
    os.chmod(script, 0o755)
    profile = SolverProfile("fake", "command", f"{script} {{model_path}} {{solution_path}}", "mps", "cbc")
    return SolverConfig(profile, time_limit=10.0, workdir=str(tmp_path / "work"))


def integer_model():
    builder = ModelBuilder("int")
    builder.integer("x")
    builder.binary("y")
    builder.add_row("cap", "", expr(("x", 2.0)), LE, 9)
    builder.minimize("x", -1.0)
    return builder.build()


posix_only = pytest.mark.skipif(sys.platform == "win32", reason="needs a POSIX shell")


@posix_only
def test_command_adapter_reads_values(tmp_path):
    config = fake_solver(tmp_path, "Optimal - objective value -4\\n0 x 3.9999999999 0\\n")
    raw = solve(integer_model(), config)
    assert raw.status == OPTIMAL
    assert raw.objective == -4.0
    assert raw.values == {"x": 4.0, "y": 0.0}
    assert os.path.exists(tmp_path / "work" / "int.mps")


@posix_only
def test_command_adapter_rejects_fractional_integers(tmp_path):
    config = fake_solver(tmp_path, "Optimal - objective value -3.5\\n0 x 3.5 0\\n")
    with pytest.raises(DecodeError):
        solve(integer_model(), config)


@posix_only
def test_command_adapter_rejects_unknown_columns(tmp_path):
    config = fake_solver(tmp_path, "Optimal - objective value 0\\n0 zz 1 0\\n")
    with pytest.raises(SolverAdapterError):
        solve(integer_model(), config)


@posix_only
def test_command_adapter_without_solution_file(tmp_path):
    with pytest.raises(SolverAdapterError) as caught:
        solve(integer_model(), fake_solver(tmp_path, None))
    assert "no solution file" in str(caught.value)


@posix_only
def test_command_adapter_ignores_an_earlier_solution(tmp_path):
    solve(integer_model(), fake_solver(tmp_path, "Optimal - objective value -4\\n0 x 4 0\\n"))
    assert os.path.exists(tmp_path / "work" / "int.sol")
    with pytest.raises(SolverAdapterError) as caught:
        solve(integer_model(), fake_solver(tmp_path, None))
    assert "no solution file" in str(caught.value)


@posix_only
def test_pool_keeps_the_solutions_found_before_a_failure(tmp_path):
    config = fake_solver(tmp_path, "Optimal - objective value -4\\n0 x 4 0\\n", once=True)
    pool = solve_pool(integer_model(), config, 3, ["y"])
    assert pool.status == OPTIMAL
    assert len(pool.solutions) == 1
    assert pool.solutions[0].values == {"x": 4.0, "y": 0.0}


@posix_only
def test_pool_raises_when_the_first_solve_fails(tmp_path):
    with pytest.raises(SolverAdapterError):
        solve_pool(integer_model(), fake_solver(tmp_path, None), 3, ["y"])


@pytest.mark.parametrize(
    "parser, text",
    [
        ("cbc", "ratioGap 0.001\nthreads 2\n"),
        (
            "highs",
            "mip_rel_gap = 0.001\nthreads = 2\nmip_heuristic_effort = 0.05\n",
        ),
    ],
)
def test_options_follow_the_solver_syntax(parser, text):
    profile = SolverProfile("external", "command", "solver {model_path}", "mps", parser)
    assert solver_options(profile, SolverConfig(profile, gap=0.001, threads=2)) == text


@posix_only
def test_command_adapter_writes_the_options_file(tmp_path):
    config = fake_solver(tmp_path, "Optimal - objective value -4\\n0 x 4 0\\n")
    solve(integer_model(), replace(config, gap=0.01, threads=1))
    text = (tmp_path / "work" / "int.opt").read_text(encoding="utf-8")
    assert text == "ratioGap 0.01\nthreads 1\n"


def test_highs_solves_an_integer_model(exact_solver):
    raw = solve(integer_model(), exact_solver)
    assert raw.status == OPTIMAL
    assert raw.values["x"] == 4.0
    assert raw.objective == pytest.approx(-4.0)


def test_highs_reports_infeasible_rows(exact_solver):
    builder = ModelBuilder("infeasible")
    builder.integer("x")
    builder.add_row("eq", "1", LinExpr().add_constant(2.0), LE, 1)
    raw = solve(builder.build(), exact_solver)
    assert raw.status == INFEASIBLE
    assert not raw.has_values


def test_pool_objectives_never_decrease(exact_solver):
    builder = ModelBuilder("pool")
    for name, cost in (("a", 1.0), ("b", 2.0), ("c", 3.0)):
        builder.binary(name)
        builder.minimize(name, cost)
    builder.add_row("cover", "", expr(("a", 1.0), ("b", 1.0), ("c", 1.0)), GE, 1)
    pool = solve_pool(builder.build(), exact_solver, 3, ["a", "b", "c"])
    assert pool.status == OPTIMAL
    assert [raw.objective for raw in pool.solutions] == pytest.approx([1.0, 2.0, 3.0])
    patterns = {tuple(raw.values[id] for id in "abc") for raw in pool.solutions}
    assert len(patterns) == 3
