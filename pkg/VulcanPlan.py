#!/usr/bin/env python3

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

# pylint: disable=invalid-name
import argparse
import sys
from dataclasses import replace
from os import path

import colorama

from util import (
    CustomException,
    SolverAdapterError,
    WeekFailure,
    error,
    log,
    set_verbose,
)
from config import (
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_SOLVER,
    EXIT_VIOLATIONS,
    DEFAULT_VIOLATION_CAP,
    FactorLevels,
    LevelsLoader,
    ObjectiveWeights,
    ProfileLoader,
    RunConfig,
    RunConfigLoader,
    ScenarioLoader,
    SolverConfig,
    WeightsLoader,
    get_profile_path,
)
from instance import Instance, InstanceLoader, SizeSpec, generate, write_instance
from milp import INFEASIBLE, dense_size, model_size, solve, write_model
from models import BuildOptions, build_integrated, build_lssp, decode_plan
from evaluator import (
    PlanLoader,
    check_feasibility,
    compare_many,
    compute_kpis,
    format_gaps,
    read_kpis,
    write_kpis,
    write_plan,
    write_violations,
)
from matheuristic import build_manifest, run_rolling_horizon, write_manifest
from taguchi import rank_by_company_rules, run_doe, write_doe
from scenarios import SCENARIO_KPIS, kpi_table, run_sensitivity, write_sensitivity

SCALES = {
    "tiny": SizeSpec.tiny,
    "small": SizeSpec.small,
    "full": SizeSpec.full_scale,
}


class CommandFailure(CustomException):
    def __init__(self, message: str, code: int) -> None:
        self.code = code
        super().__init__(message)


def loaded(value, code: int = EXIT_PARSE):
    """Loaders return the object or an error string."""
    if isinstance(value, str):
        raise CommandFailure(value, code)
    return value


def sibling(out_path: str, suffix: str) -> str:
    stem, _ = path.splitext(out_path)
    return f"{stem}{suffix}"


def get_instance(args) -> Instance:
    return loaded(InstanceLoader(args.instance).get_instance())


def get_run_config(args) -> RunConfig:
    profiles = loaded(ProfileLoader(get_profile_path()).get_profiles())
    if args.config:
        config = loaded(RunConfigLoader(args.config, profiles).get_run_config())
    else:
        config = RunConfig(profile=profiles["highspy"])

    overrides = {}
    if args.solver:
        if args.solver not in profiles:
            raise CommandFailure(
                f"Error: unknown solver profile '{args.solver}', known: {sorted(profiles)}",
                EXIT_PARSE,
            )
        overrides["profile"] = profiles[args.solver]
    if args.time_limits:
        overrides["lssp_time_limit"] = args.time_limits[0]
        overrides["assp_time_limit"] = args.time_limits[-1]
    if args.workers:
        overrides["workers"] = args.workers
    if getattr(args, "weights", None):
        overrides["weights"] = loaded(WeightsLoader(args.weights).get_weights())
    if not overrides:
        return config
    return replace(config, **overrides)


def weights_of(instance: Instance, config: RunConfig) -> ObjectiveWeights:
    return config.weights or ObjectiveWeights.calibrated(instance.gamma)


def cmd_generate(args) -> int:
    size = SCALES[args.scale]()
    instance = generate(args.seed, size)
    write_instance(instance, args.out)
    print(
        f"generated {instance.N} items, {instance.P} presses, {instance.T} periods -> {args.out}"
    )
    return EXIT_OK


def solve_integrated(instance: Instance, config: RunConfig, args):
    weights = weights_of(instance, config)
    model = build_integrated(instance, weights, BuildOptions(compact=config.compact))
    solver = SolverConfig(
        config.profile, config.lssp_time_limit, config.gap, config.emphasis, config.threads
    )
    raw = solve(model, solver)
    manifest = build_manifest(
        config, [], instance.name, raw.status, mode="integrated", objective=raw.objective,
        mip_gap=raw.gap, seconds=raw.time,
    )
    if not raw.has_values:
        write_manifest(manifest, sibling(args.out, ".manifest.json"))
        code = EXIT_INFEASIBLE if raw.status == INFEASIBLE else EXIT_SOLVER
        raise CommandFailure(f"integrated model ended {raw.status} without a plan", code)
    return decode_plan(instance, model, raw), manifest


def solve_matheuristic(instance: Instance, config: RunConfig, args):
    try:
        result = run_rolling_horizon(instance, config)
    except WeekFailure as failure:
        manifest = build_manifest(
            config, failure.results, instance.name, "failed", mode="matheuristic",
            failed_macro=failure.macro + 1, reason=str(failure),
        )
        write_manifest(manifest, sibling(args.out, ".manifest.json"))
        if failure.plan is not None:
            write_plan(failure.plan, sibling(args.out, ".partial.json"), instance.name)
        code = EXIT_INFEASIBLE if INFEASIBLE in failure.statuses else EXIT_SOLVER
        raise CommandFailure(str(failure), code) from failure
    status = "degraded" if result.degraded else "ok"
    return result.plan, build_manifest(
        config, result.weeks, instance.name, status, mode="matheuristic"
    )


def cmd_solve(args) -> int:
    instance = get_instance(args)
    config = get_run_config(args)
    if args.mode == "integrated":
        plan, manifest = solve_integrated(instance, config, args)
    else:
        plan, manifest = solve_matheuristic(instance, config, args)

    report = compute_kpis(instance, plan, weights_of(instance, config))
    manifest["kpis"] = report.as_row()
    write_plan(plan, args.out, instance.name)
    write_manifest(manifest, sibling(args.out, ".manifest.json"))
    write_kpis({instance.name: report}, sibling(args.out, ".kpi.csv"))
    print(f"{args.mode} plan {manifest['status']}, OF {report.OF:.6g} -> {args.out}")
    return EXIT_OK


def cmd_validate(args) -> int:
    instance = get_instance(args)
    plan = loaded(PlanLoader(args.plan).get_plan(instance))
    violations = check_feasibility(instance, plan, args.cap)
    write_violations(violations, args.out)
    if violations:
        print(f"{len(violations)} violation(s) -> {args.out}")
        return EXIT_VIOLATIONS
    print(f"plan feasible -> {args.out}")
    return EXIT_OK


def cmd_kpi(args) -> int:
    instance = get_instance(args)
    plan = loaded(PlanLoader(args.plan).get_plan(instance))
    if args.weights:
        weights = loaded(WeightsLoader(args.weights).get_weights())
    else:
        weights = ObjectiveWeights.calibrated(instance.gamma)
    report = compute_kpis(instance, plan, weights)
    write_kpis({args.name or instance.name: report}, args.out)
    print(f"OF {report.OF:.6g}, BT {report.BT:g}, OS {report.OS:g}, US {report.US:g} -> {args.out}")
    return EXIT_OK


def cmd_calibrate(args) -> int:
    instance = get_instance(args)
    config = get_run_config(args)
    levels = loaded(LevelsLoader(args.levels).get_levels()) if args.levels else FactorLevels()

    def run(weights: ObjectiveWeights):
        plan = run_rolling_horizon(instance, config.with_weights(weights)).plan
        return compute_kpis(instance, plan, weights)

    result = run_doe(instance, levels, run, args.replicates, config.workers)
    effects_path = args.effects or sibling(args.out, ".effects.csv")
    write_doe(result, args.out, effects_path)
    if (best := result.best) is None:
        raise CommandFailure("every design row failed", EXIT_SOLVER)

    done = [row for row in result.rows if not row.failed]
    order = rank_by_company_rules([row.report for row in done])
    log("company ranking: " + ", ".join(str(done[k].row) for k in order))
    print(
        f"best row {best.row} (levels {'-'.join(map(str, best.levels))}, "
        + f"S/N {best.sn:.4f} dB) -> {args.out}"
    )
    return EXIT_OK


def cmd_sensitivity(args) -> int:
    instance = get_instance(args)
    config = get_run_config(args)
    specs, inventory_configs = loaded(ScenarioLoader(args.scenarios).get_scenarios())
    frame = run_sensitivity(instance, specs, inventory_configs, config, reference=args.reference)
    write_sensitivity(frame, args.out)
    if args.tables:
        for kpi in SCENARIO_KPIS:
            kpi_table(frame, kpi, args.reference).to_csv(sibling(args.out, f".{kpi}.csv"))
    failed = int((frame["status"] != "ok").sum())
    print(f"{len(frame)} scenario run(s), {failed} failed -> {args.out}")
    return EXIT_OK


def cmd_compare(args) -> int:
    gaps = compare_many(read_kpis(args.a), read_kpis(args.b))
    format_gaps(gaps).to_csv(args.out, index_label="name")
    means = ", ".join(f"{kpi} {value:.1f}%" for kpi, value in gaps.loc["Mean"].items())
    print(f"mean gaps {means} -> {args.out}")
    return EXIT_OK


def cmd_export(args) -> int:
    instance = get_instance(args)
    weights = (
        loaded(WeightsLoader(args.weights).get_weights())
        if args.weights
        else ObjectiveWeights.calibrated(instance.gamma)
    )
    if args.model == "integrated":
        model = build_integrated(instance, weights, BuildOptions(compact=args.compact))
    else:
        model = build_lssp(instance, weights)
    write_model(model, args.out, args.format)
    size = model_size(model)
    expected = dense_size(
        args.model, instance.N, instance.P, instance.T, instance.W, instance.H, instance.gamma
    )
    log(
        f"{model.name}: {size.binaries} binaries, {size.integers} integers, "
        + f"{size.constraints} rows (dense form {expected.binaries}, "
        + f"{expected.integers}, {expected.constraints})"
    )
    print(f"{args.model} model -> {args.out}")
    return EXIT_OK


def add_run_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="run configuration YAML")
    parser.add_argument("--solver", help="solver profile name")
    parser.add_argument(
        "--time-limits",
        type=float,
        nargs="+",
        metavar="SECONDS",
        help="lot-sizing then assignment time limit; the integrated model uses the first",
    )
    parser.add_argument("--workers", type=int, help="parallel workers")


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="VulcanPlan", description="Tire curing production planning"
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="silence progress logs")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("generate", help="generate a synthetic instance")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--scale", choices=sorted(SCALES), default="small")
    sub.add_argument("--out", required=True)
    sub.set_defaults(handler=cmd_generate)

    sub = commands.add_parser("solve", help="plan an instance")
    sub.add_argument("--mode", choices=("integrated", "matheuristic"), default="matheuristic")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--weights", help="objective weights YAML")
    sub.add_argument("--out", required=True, help="plan JSON path")
    add_run_options(sub)
    sub.set_defaults(handler=cmd_solve)

    sub = commands.add_parser("validate", help="audit a plan")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--plan", required=True)
    sub.add_argument("--out", default="violations.csv")
    sub.add_argument("--cap", type=int, default=DEFAULT_VIOLATION_CAP)
    sub.set_defaults(handler=cmd_validate)

    sub = commands.add_parser("kpi", help="compute the KPIs of a plan")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--plan", required=True)
    sub.add_argument("--weights")
    sub.add_argument("--name", help="row name in the report")
    sub.add_argument("--out", default="kpi.csv")
    sub.set_defaults(handler=cmd_kpi)

    sub = commands.add_parser("calibrate", help="calibrate weights on the orthogonal array")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--levels", help="factor levels YAML")
    sub.add_argument("--replicates", type=int, default=1)
    sub.add_argument("--out", default="doe.csv")
    sub.add_argument("--effects", help="main effects CSV")
    add_run_options(sub)
    sub.set_defaults(handler=cmd_calibrate)

    sub = commands.add_parser("sensitivity", help="run eligibility scenarios")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--scenarios", required=True)
    sub.add_argument("--reference", default="S0")
    sub.add_argument("--tables", action="store_true", help="also write one table per KPI")
    sub.add_argument("--out", default="sensitivity.csv")
    add_run_options(sub)
    sub.set_defaults(handler=cmd_sensitivity)

    sub = commands.add_parser("compare", help="gap report between two KPI files")
    sub.add_argument("--a", required=True, help="reference KPI CSV")
    sub.add_argument("--b", required=True, help="compared KPI CSV")
    sub.add_argument("--out", default="gaps.csv")
    sub.set_defaults(handler=cmd_compare)

    sub = commands.add_parser("export", help="write a model as LP or MPS")
    sub.add_argument("--instance", required=True)
    sub.add_argument("--model", choices=("integrated", "lssp"), default="integrated")
    sub.add_argument("--format", choices=("lp", "mps"), default="lp")
    sub.add_argument("--weights")
    sub.add_argument("--compact", action="store_true", help="prune unused press variables")
    sub.add_argument("--out", required=True)
    sub.set_defaults(handler=cmd_export)
    return parser


def main(argv=None) -> int:
    args = get_parser().parse_args(argv)
    set_verbose(not args.quiet)
    try:
        return args.handler(args)
    except CommandFailure as failure:
        error(str(failure))
        return failure.code
    except SolverAdapterError as failure:
        error(f"solver failed: {failure}")
        return EXIT_SOLVER
    except CustomException as failure:
        error(str(failure))
        return EXIT_PARSE


if __name__ == "__main__":
    colorama.init()
    sys.exit(main())
