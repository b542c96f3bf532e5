"""
Command-line front end.

    biasplan simulate --graph gym.tg --agent doubly-naive
    biasplan compare --graph gym.tg
    biasplan generate fan --n 8 -o fan.tg
    biasplan reduce --xs 1,2,3 --target 3 --sunk 1/2 -o reduction.tg
    biasplan min-reward --graph gym.tg --bias 2 --sunk 1/2
    biasplan policy --graph gym.tg
    biasplan verify --suite all

Exit codes: 0 on success, 1 when a verification suite fails, 2 on malformed
input or flags.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from biasplan_types import AgentKind, Instance, SubsetSumInstance, format_rational
from biasplan_types.rational import parse_rational
from pydantic import ValidationError

from .agents import simulate, simulate_all
from .analysis import format_comparison
from .core.config import settings
from .core.enums import OutputFormat
from .core.errors import BiasplanError, MissingParameterError
from .generators import (
    GENERATOR_REGISTRY,
    GeneratorOptions,
    reduction_instance,
    reduction_sidecar,
)
from .imports import (
    format_trace_json,
    format_trace_record,
    format_trace_text,
    load_instance,
    save_instance,
)
from .planners import (
    brute_force,
    dp_integer,
    dump_policy,
    min_reward,
    recursive_states,
)
from .verify import SUITES, run_suites

PLANNERS = {
    "recursive": recursive_states,
    "dp": dp_integer,
    "brute": brute_force,
}


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _integers(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def _agent_kind(text: str) -> AgentKind:
    try:
        return AgentKind.from_name(text)
    except (KeyError, ValueError):
        choices = ", ".join(kind.value for kind in AgentKind)
        raise argparse.ArgumentTypeError(
            f"unknown agent kind {text!r} (choose from {choices})"
        )


def _add_instance_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", required=True, help="Instance file (.tg or .json)")
    parser.add_argument("--bias", type=_rational, help="Present bias b, overrides the file")
    parser.add_argument(
        "--sunk", type=_rational, help="Sunk-cost bias lambda, overrides the file"
    )
    parser.add_argument("--reward", type=_rational, help="Reward R, overrides the file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biasplan",
        description="Present-biased and sunk-cost-biased agents on task graphs",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    simulate_parser = commands.add_parser(
        "simulate", help="Walk a graph as one agent kind"
    )
    _add_instance_flags(simulate_parser)
    simulate_parser.add_argument("--agent", required=True, type=_agent_kind)
    simulate_parser.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
    )

    compare_parser = commands.add_parser("compare", help="Outcome of every agent kind")
    _add_instance_flags(compare_parser)

    generate_parser = commands.add_parser("generate", help="Write a generated instance")
    generate_parser.add_argument("name", choices=GENERATOR_REGISTRY.names())
    generate_parser.add_argument("-o", "--output", required=True)
    generate_parser.add_argument("--bias", type=_rational)
    generate_parser.add_argument("--sunk", type=_rational)
    generate_parser.add_argument("--reward", type=_rational)
    generate_parser.add_argument("--eps", type=_rational)
    generate_parser.add_argument("--y0", type=_rational)
    generate_parser.add_argument("--n", type=int)
    generate_parser.add_argument("--seed", type=int, default=settings.SEED)
    generate_parser.add_argument("--max-cost", type=int)
    generate_parser.add_argument("--density", type=_rational)

    reduce_parser = commands.add_parser("reduce", help="Subset sum to a planning instance")
    reduce_parser.add_argument("--xs", required=True, type=_integers)
    reduce_parser.add_argument("--target", required=True, type=int)
    reduce_parser.add_argument("--sunk", required=True, type=_rational)
    reduce_parser.add_argument("--eps", type=_rational)
    reduce_parser.add_argument("-o", "--output", required=True)

    reward_parser = commands.add_parser(
        "min-reward", help="Smallest reward at which a doubly sophisticated agent starts"
    )
    reward_parser.add_argument("--graph", required=True)
    reward_parser.add_argument("--bias", required=True, type=_rational)
    reward_parser.add_argument("--sunk", required=True, type=_rational)
    reward_parser.add_argument(
        "--denom-bound", type=int, default=settings.DENOMINATOR_BOUND
    )

    policy_parser = commands.add_parser(
        "policy", help="Dump the doubly sophisticated policy table"
    )
    _add_instance_flags(policy_parser)
    policy_parser.add_argument("--planner", choices=sorted(PLANNERS), default="recursive")

    verify_parser = commands.add_parser("verify", help="Run property suites")
    verify_parser.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    verify_parser.add_argument("--trials", type=int, default=settings.TRIALS)
    verify_parser.add_argument("--seed", type=int, default=settings.SEED)
    verify_parser.add_argument("--workers", type=int, default=settings.WORKERS)
    return parser


def _load(args: argparse.Namespace) -> Instance:
    instance = load_instance(args.graph)
    if args.reward is not None:
        instance = instance.with_reward(args.reward)
    if args.bias is not None or args.sunk is not None:
        instance = instance.with_params(b=args.bias, lam=args.sunk)
    missing = [name for name in ("bias", "sunk") if name not in instance.declared]
    if missing:
        raise MissingParameterError(
            f"{args.graph} declares no {' or '.join(missing)}; pass "
            + " ".join(f"--{name}" for name in missing)
        )
    return instance


def _simulate(args: argparse.Namespace) -> int:
    trace = simulate(_load(args), args.agent)
    renderers = {
        OutputFormat.TEXT: format_trace_text,
        OutputFormat.RECORD: format_trace_record,
        OutputFormat.JSON: format_trace_json,
    }
    sys.stdout.write(renderers[OutputFormat(args.format)](trace))
    return 0


def _compare(args: argparse.Namespace) -> int:
    sys.stdout.write(format_comparison(simulate_all(_load(args))))
    return 0


def _generate(args: argparse.Namespace) -> int:
    options = GeneratorOptions(
        bias=args.bias,
        sunk=args.sunk,
        reward=args.reward,
        eps=args.eps,
        y0=args.y0,
        n=args.n,
        seed=args.seed,
        max_cost=args.max_cost,
        density=args.density,
    )
    instance = GENERATOR_REGISTRY.generate(args.name, options)
    save_instance(instance, args.output)
    print(f"wrote {args.output} ({instance.label})")
    return 0


def _reduce(args: argparse.Namespace) -> int:
    ss = SubsetSumInstance(xs=tuple(args.xs), target=args.target)
    instance = reduction_instance(ss, args.sunk, args.eps)
    save_instance(instance, args.output)
    sidecar = Path(f"{args.output}.sidecar.json")
    sidecar.write_text(
        json.dumps(reduction_sidecar(ss, args.sunk, args.eps), indent=2) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {args.output} and {sidecar}")
    return 0


def _min_reward(args: argparse.Namespace) -> int:
    instance = load_instance(args.graph)
    reward = min_reward(instance.graph, args.bias, args.sunk, args.denom_bound)
    print(format_rational(reward))
    return 0


def _policy(args: argparse.Namespace) -> int:
    instance = _load(args)
    result = PLANNERS[args.planner](instance)
    sys.stdout.write(dump_policy(instance.graph, result.policy))
    return 0


def _verify(args: argparse.Namespace) -> int:
    reports = run_suites(
        args.suite, seed=args.seed, trials=args.trials, workers=args.workers
    )
    exit_code = 0
    for report in reports:
        status = "ok" if report.passed else f"{len(report.failures)} failure(s)"
        print(f"{report.suite}: {report.cases} case(s), {status}")
        for failure in report.failures:
            exit_code = 1
            print(f"  FAILED {failure.check}: {failure.message}")
            if failure.replay:
                print("  replay:")
                for line in failure.replay.splitlines():
                    print(f"    {line}")
            if failure.context:
                print("  log:")
                for line in failure.context:
                    print(f"    {line}")
    return exit_code


COMMANDS = {
    "simulate": _simulate,
    "compare": _compare,
    "generate": _generate,
    "reduce": _reduce,
    "min-reward": _min_reward,
    "policy": _policy,
    "verify": _verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Parse `argv`, run the subcommand and return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        return COMMANDS[args.command](args)
    except (BiasplanError, ValidationError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    logging.basicConfig(format="%(asctime)s %(levelname)s %(name)s %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
