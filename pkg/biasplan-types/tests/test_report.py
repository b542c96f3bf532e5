from biasplan_types import AgentKind, BoundCheck, GapReport


def test_compare_sets_verdict():
    assert BoundCheck.compare("gap", observed=1, bound=13).holds
    assert not BoundCheck.compare("gap", observed=14, bound=13).holds


def test_tampered_flag_is_caught():
    check = BoundCheck(name="gap", bound=1, observed=2, holds=True)
    assert not check.recheck()
    report = GapReport(
        label="gym",
        payoffs={AgentKind.OPTIMAL: 6},
        optimal_cost=13,
        checks=(check,),
    )
    assert not report.all_hold
    assert report.violations == (check,)


def test_json_payoff_keys():
    report = GapReport(
        label="gym",
        payoffs={AgentKind.OPTIMAL: 6, AgentKind.DOUBLY_SOPHISTICATED: 5},
        optimal_cost=13,
        checks=(BoundCheck.compare("gap", 1, 13),),
    )
    payload = report.model_dump(mode="json")
    assert payload["payoffs"] == {"optimal": "6", "doubly-sophisticated": "5"}
    assert report.all_hold
