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

import os
import re
import shlex
import subprocess
import tempfile
import time
from contextlib import contextmanager
from dataclasses import dataclass, field, replace

from config import INTEGRALITY_TOLERANCE, SolverConfig, SolverProfile
from util import DecodeError, SolverAdapterError, log, warn

from .export import write_model
from .model import GE, LinearConstraint, MilpModel
from .parse import (
    ERROR,
    FEASIBLE,
    INFEASIBLE,
    OPTIMAL,
    PARSERS,
    TIME_LIMIT,
    WITH_VALUES,
)

try:
    import highspy
except ImportError:  # pragma: no cover
    highspy = None

HEURISTIC_EFFORT = {"balanced": 0.05, "feasibility": 0.3, "optimality": 0.02}
NO_TIME_LIMIT = 1e9
# extra wall-clock seconds a command-line solver gets beyond its own limit
KILL_SLACK = 60.0


@dataclass(frozen=True)
class RawSolution:
    status: str
    objective: float | None = None
    values: dict[str, float] = field(default_factory=dict)
    time: float = 0.0
    gap: float | None = None
    diagnostics: str = ""

    @property
    def has_values(self) -> bool:
        return self.status in WITH_VALUES


@dataclass(frozen=True)
class RawPool:
    status: str
    solutions: tuple[RawSolution, ...] = ()


def _file_stem(model: MilpModel) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", model.name) or "model"


@contextmanager
def _workdir(config: SolverConfig):
    if config.workdir:
        os.makedirs(config.workdir, exist_ok=True)
        yield config.workdir
    elif config.keep_files:
        yield tempfile.mkdtemp(prefix="vulcanplan-")
    else:
        with tempfile.TemporaryDirectory(prefix="vulcanplan-") as directory:
            yield directory


class HighsPlugin:
    """In-process HiGHS reading the exported MPS file."""

    def solve(self, model: MilpModel, config: SolverConfig, directory: str) -> RawSolution:
        if highspy is None:
            raise SolverAdapterError("the highspy plugin needs the highspy package")
        path = os.path.join(directory, _file_stem(model) + ".mps")
        names = write_model(model, path, "mps")
        original = names.original_columns()

        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        if config.time_limit is not None:
            h.setOptionValue("time_limit", float(config.time_limit))
        h.setOptionValue("mip_rel_gap", float(config.gap))
        h.setOptionValue("threads", int(config.threads))
        h.setOptionValue("mip_feasibility_tolerance", 1e-7)
        h.setOptionValue("mip_heuristic_effort", HEURISTIC_EFFORT[config.emphasis])
        if h.readModel(path) == highspy.HighsStatus.kError:
            raise SolverAdapterError(f"HiGHS could not read {path}")

        start = time.perf_counter()
        h.run()
        elapsed = time.perf_counter() - start
        model_status = h.getModelStatus()
        message = h.modelStatusToString(model_status)
        info = h.getInfo()
        has_incumbent = info.primal_solution_status == 2

        kinds = highspy.HighsModelStatus
        if model_status == kinds.kOptimal:
            status = OPTIMAL
        elif model_status == kinds.kModelEmpty:
            return RawSolution(OPTIMAL, 0.0, {v.id: 0.0 for v in model.variables}, elapsed, 0.0)
        elif model_status in (kinds.kInfeasible, kinds.kUnboundedOrInfeasible):
            return RawSolution(INFEASIBLE, time=elapsed, diagnostics=message)
        elif model_status == kinds.kTimeLimit and has_incumbent:
            status = TIME_LIMIT
        elif has_incumbent and model_status in (
            kinds.kIterationLimit,
            kinds.kSolutionLimit,
            kinds.kInterrupt,
        ):
            status = FEASIBLE
        else:
            return RawSolution(ERROR, time=elapsed, diagnostics=f"HiGHS: {message}")

        column_values = list(h.getSolution().col_value)
        column_names = list(h.getLp().col_names_) or [names.columns[v.id] for v in model.variables]
        values = {original.get(name, name): value for name, value in zip(column_names, column_values)}
        return RawSolution(
            status,
            float(info.objective_function_value),
            values,
            elapsed,
            float(info.mip_gap),
            message,
        )


def _highs_options(config: SolverConfig) -> list[tuple[str, str]]:
    return [
        ("mip_rel_gap", str(config.gap)),
        ("threads", str(config.threads)),
        ("mip_heuristic_effort", str(HEURISTIC_EFFORT[config.emphasis])),
    ]


def _cbc_options(config: SolverConfig) -> list[tuple[str, str]]:
    return [("ratioGap", str(config.gap)), ("threads", str(config.threads))]


# option names and file syntax per solution parser, which names the solver family
OPTION_WRITERS = {
    "highs": (_highs_options, "{} = {}"),
    "cbc": (_cbc_options, "{} {}"),
}


def solver_options(profile: SolverProfile, config: SolverConfig) -> str:
    """Options file content in the syntax of the profile's solver."""
    options, line = OPTION_WRITERS[profile.parser]
    return "".join(line.format(name, value) + "\n" for name, value in options(config))


class CommandAdapter:
    """Runs a solver executable on an exported model file and parses its solution file."""

    def __init__(self, profile: SolverProfile) -> None:
        if profile.parser not in PARSERS:
            raise SolverAdapterError(
                f"profile {profile.name}: unknown solution parser '{profile.parser}'"
            )
        self.profile = profile

    def solve(self, model: MilpModel, config: SolverConfig, directory: str) -> RawSolution:
        stem = os.path.join(directory, _file_stem(model))
        model_path = f"{stem}.{self.profile.file_format}"
        solution_path = f"{stem}.sol"
        options_path = f"{stem}.opt"
        names = write_model(model, model_path, self.profile.file_format)
        with open(options_path, "w", encoding="utf-8") as writer:
            writer.write(solver_options(self.profile, config))
        # a kept work directory may still hold the solution of an earlier solve
        if os.path.exists(solution_path):
            os.remove(solution_path)

        limit = config.time_limit if config.time_limit is not None else NO_TIME_LIMIT
        try:
            command = self.profile.command.format(
                model_path=model_path,
                solution_path=solution_path,
                time_limit=limit,
                gap=config.gap,
                threads=config.threads,
                options_path=options_path,
            )
        except (KeyError, IndexError) as error:
            raise SolverAdapterError(
                f"profile {self.profile.name}: bad placeholder {error} in command"
            ) from error

        arguments = shlex.split(command)
        start = time.perf_counter()
        try:
            completed = subprocess.run(
                arguments,
                capture_output=True,
                text=True,
                timeout=None if config.time_limit is None else limit + KILL_SLACK,
                check=False,
            )
        except FileNotFoundError as error:
            raise SolverAdapterError(
                f"could not launch '{arguments[0]}' for profile {self.profile.name}", str(error)
            ) from error
        except subprocess.TimeoutExpired as error:
            raise SolverAdapterError(
                f"{self.profile.name} did not stop within its time limit",
                str(error.stdout or ""),
            ) from error
        elapsed = time.perf_counter() - start
        diagnostics = (completed.stdout or "") + (completed.stderr or "")

        if not os.path.exists(solution_path):
            raise SolverAdapterError(
                f"{self.profile.name} wrote no solution file (exit code {completed.returncode})",
                diagnostics,
            )
        with open(solution_path, "r", encoding="utf-8") as reader:
            parsed = PARSERS[self.profile.parser](reader.read())

        if parsed.status not in WITH_VALUES:
            return RawSolution(parsed.status, time=elapsed, diagnostics=parsed.message or diagnostics)

        original = names.original_columns()
        values = {v.id: 0.0 for v in model.variables}
        for name, value in parsed.values.items():
            if name not in original:
                raise SolverAdapterError(
                    f"{self.profile.name} reported unknown column '{name}'", diagnostics
                )
            values[original[name]] = value
        objective = parsed.objective
        if objective is None:
            objective = sum(c * values[id] for id, c in model.objective)
        return RawSolution(parsed.status, objective, values, elapsed, None, parsed.message)


def adapter_for(profile: SolverProfile):
    if profile.kind == "plugin":
        if profile.name != "highspy":
            raise SolverAdapterError(f"unknown solver plugin '{profile.name}'")
        return HighsPlugin()
    if profile.kind == "command":
        return CommandAdapter(profile)
    raise SolverAdapterError(f"profile {profile.name}: unknown kind '{profile.kind}'")


def _rounded(model: MilpModel, raw: RawSolution) -> RawSolution:
    if not raw.has_values:
        return raw
    values = dict(raw.values)
    for variable in model.variables:
        if variable.id not in values:
            raise SolverAdapterError(f"solution of {model.name} misses variable {variable.id}")
        if variable.is_integral:
            value = values[variable.id]
            nearest = round(value)
            if abs(value - nearest) > INTEGRALITY_TOLERANCE:
                raise DecodeError(f"{variable.id} = {value} is not integral")
            values[variable.id] = float(nearest)
    return replace(raw, values=values)


def solve(model: MilpModel, config: SolverConfig) -> RawSolution:
    model.check()
    if not model.variables:
        return RawSolution(OPTIMAL, 0.0, {}, 0.0, 0.0)
    log(
        f"solving {model.name}: {len(model.variables)} variables, "
        + f"{len(model.constraints)} rows with {config.profile.name}"
    )
    with _workdir(config) as directory:
        raw = adapter_for(config.profile).solve(model, config, directory)
    if raw.status == ERROR:
        warn(f"{model.name}: solver error ({raw.diagnostics.strip()[:200]})")
    return _rounded(model, raw)


def no_good_cut(name: str, ones: list[str], zeros: list[str]) -> LinearConstraint:
    """Excludes one binary pattern: sum(zeros) - sum(ones) >= 1 - |ones|."""
    terms = [(id, 1.0) for id in zeros] + [(id, -1.0) for id in ones]
    return LinearConstraint(name, tuple(terms), GE, 1.0 - len(ones), "nogood")


def solve_pool(
    model: MilpModel, config: SolverConfig, size: int, pattern: list[str]
) -> RawPool:
    """Up to size solutions with distinct values of the pattern binaries.

    Each further solve excludes every earlier pattern. Objectives never
    decrease along the pool as long as every solve ends optimal within the
    relative gap; a time-limited or feasible-only entry may beat an earlier
    one. A failing re-solve ends the pool with the entries found so far.
    """
    solutions: list[RawSolution] = []
    current = model
    for rank in range(size):
        try:
            raw = solve(current, config)
        except SolverAdapterError as error:
            if not solutions:
                raise
            warn(f"{model.name}: pool stopped at rank {rank + 1}: {error}")
            break
        if not raw.has_values:
            if not solutions:
                return RawPool(raw.status, ())
            break
        solutions.append(raw)
        if not pattern or rank + 1 == size:
            break
        ones = [id for id in pattern if raw.values[id] > 0.5]
        zeros = [id for id in pattern if raw.values[id] <= 0.5]
        current = current.with_constraints([no_good_cut(f"nogood_{rank + 1}", ones, zeros)])
    log(f"{model.name}: pool of {len(solutions)} solution(s)")
    return RawPool(solutions[0].status, tuple(solutions))
