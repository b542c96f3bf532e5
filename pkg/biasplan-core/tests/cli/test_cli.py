import json

import pytest

from biasplan_core import cli
from biasplan_core.cli import run
from biasplan_core.imports import parse_trace_record, save_instance
from biasplan_core.verify import EXPECTATIONS, SuiteFailure, SuiteReport
from biasplan_types import OutcomeKind


@pytest.fixture
def gym_file(tmp_path, gym):
    path = tmp_path / "gym.tg"
    save_instance(gym, path)
    return str(path)


@pytest.fixture
def no_bias_file(tmp_path):
    path = tmp_path / "no-bias.tg"
    path.write_text(
        "reward 19\nsunk 1/2\nsource s\ntarget t\nnode s\nnode t\nedge s t 3\n"
    )
    return str(path)


def test_simulate_text(capsys, gym_file):
    assert run(["simulate", "--graph", gym_file, "--agent", "doubly-naive"]) == 0
    out = capsys.readouterr().out
    assert "outcome AbandonedAt(v), total_cost 1, payoff -1" in out


def test_simulate_record_round_trips(capsys, gym_file):
    code = run(
        [
            "simulate",
            "--graph",
            gym_file,
            "--agent",
            "doubly-sophisticated",
            "--format",
            "record",
        ]
    )
    assert code == 0
    trace = parse_trace_record(capsys.readouterr().out)
    assert trace.path == ("s", "w", "t")
    assert trace.payoff == 5


def test_simulate_with_overrides(capsys, gym_file):
    run(["simulate", "--graph", gym_file, "--agent", "optimal", "--reward", "10"])
    assert "outcome NeverStarted" in capsys.readouterr().out


def test_simulate_json(capsys, gym_file):
    run(["simulate", "--graph", gym_file, "--agent", "optimal", "--format", "json"])
    assert json.loads(capsys.readouterr().out)["outcome"] == OutcomeKind.REACHED.value


def test_compare(capsys, gym_file):
    assert run(["compare", "--graph", gym_file]) == 0
    rows = [line.split() for line in capsys.readouterr().out.splitlines()]
    assert ["optimal", "Reached", "13", "6"] in rows


def test_missing_parameter(capsys, no_bias_file):
    code = run(["simulate", "--graph", no_bias_file, "--agent", "optimal"])
    assert code == 2
    assert "declares no bias; pass --bias" in capsys.readouterr().err


def test_missing_parameter_given_on_the_command_line(capsys, no_bias_file):
    code = run(["simulate", "--graph", no_bias_file, "--agent", "optimal", "--bias", "2"])
    assert code == 0
    assert "payoff 16" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["simulate"],
        ["simulate", "--graph", "x.tg", "--agent", "stoic"],
        ["simulate", "--graph", "x.tg", "--agent", "optimal", "--bias", "two"],
        ["reduce", "--xs", "1,a", "--target", "3", "--sunk", "1/2", "-o", "r.tg"],
        ["generate", "ladder", "-o", "x.tg"],
    ],
)
def test_bad_flags(capsys, argv):
    assert run(argv) == 2


def test_missing_file(capsys, tmp_path):
    code = run(["simulate", "--graph", str(tmp_path / "nope.tg"), "--agent", "optimal"])
    assert code == 2
    assert capsys.readouterr().err.startswith("error:")


def test_generate_then_simulate(capsys, tmp_path):
    path = str(tmp_path / "fan.tg")
    assert run(["generate", "fan", "--n", "3", "-o", path]) == 0
    assert "fan n=3" in capsys.readouterr().out
    run(["simulate", "--graph", path, "--agent", "doubly-sophisticated"])
    assert "outcome Reached" in capsys.readouterr().out


def test_generate_precondition_failure(capsys, tmp_path):
    code = run(["generate", "fan", "--sunk", "0", "-o", str(tmp_path / "fan.tg")])
    assert code == 2


def test_reduce_then_simulate(capsys, tmp_path):
    path = tmp_path / "reduction.tg"
    code = run(
        ["reduce", "--xs", "1,2,3", "--target", "3", "--sunk", "1/2", "-o", str(path)]
    )
    assert code == 0
    sidecar = json.loads((tmp_path / "reduction.tg.sidecar.json").read_text())
    assert sidecar["xs"] == [1, 2, 3]
    assert sidecar["b"] == "5/2"
    capsys.readouterr()
    run(["simulate", "--graph", str(path), "--agent", "doubly-sophisticated"])
    assert "outcome Reached" in capsys.readouterr().out


def test_min_reward(capsys, gym_file):
    assert run(["min-reward", "--graph", gym_file, "--bias", "2", "--sunk", "1/2"]) == 0
    assert capsys.readouterr().out == "18\n"


@pytest.mark.parametrize("bound", ["0", "-3"])
def test_min_reward_rejects_non_positive_bound(capsys, gym_file, bound):
    argv = ["min-reward", "--graph", gym_file, "--bias", "2", "--sunk", "1/2"]
    assert run([*argv, "--denom-bound", bound]) == 2
    captured = capsys.readouterr()
    assert "denominator_bound must be positive" in captured.err
    assert "Traceback" not in captured.err


@pytest.mark.parametrize("planner", ["recursive", "brute"])
def test_policy(capsys, gym_file, planner):
    assert run(["policy", "--graph", gym_file, "--planner", planner]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "s 0 e2 14"
    assert "v 1 ABANDON inf" in lines


def test_verify_fixtures(capsys):
    assert run(["verify", "--suite", "fixtures"]) == 0
    assert capsys.readouterr().out == f"fixtures: {len(EXPECTATIONS)} case(s), ok\n"


def test_verify_failure_prints_replay_and_log(capsys, monkeypatch):
    failure = SuiteFailure(
        check="reduction equivalence",
        message="started=True but oracle witness is None",
        replay="source s\ntarget t\n",
        context=("DEBUG {'planner': 'recursive_states'}",),
    )
    report = SuiteReport(suite="reduction", cases=1, failures=(failure,))
    monkeypatch.setattr(cli, "run_suites", lambda *args, **kwargs: [report])
    assert run(["verify", "--suite", "reduction"]) == 1
    assert capsys.readouterr().out.splitlines() == [
        "reduction: 1 case(s), 1 failure(s)",
        "  FAILED reduction equivalence: started=True but oracle witness is None",
        "  replay:",
        "    source s",
        "    target t",
        "  log:",
        "    DEBUG {'planner': 'recursive_states'}",
    ]
