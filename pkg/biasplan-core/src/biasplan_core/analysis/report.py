from typing import Dict, List, Sequence

from biasplan_types import AgentKind, GapReport, TraversalTrace, format_rational


def gap_records(reports: Sequence[GapReport]) -> List[Dict[str, object]]:
    """One flat record per bound check, numbers as exact `p/q` strings."""
    return [
        {
            "label": report.label,
            "check": check.name,
            "observed": format_rational(check.observed),
            "bound": format_rational(check.bound),
            "holds": check.holds and check.recheck(),
        }
        for report in reports
        for check in report.checks
    ]


def _table(header: Sequence[str], rows: List[Sequence[str]]) -> str:
    widths = [
        max(len(row[column]) for row in [header, *rows]) for column in range(len(header))
    ]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in [header, *rows]
    ]
    return "\n".join(lines) + "\n"


def format_gap_table(reports: Sequence[GapReport]) -> str:
    rows = [
        (
            record["label"],
            record["check"],
            record["observed"],
            record["bound"],
            "ok" if record["holds"] else "VIOLATED",
        )
        for record in gap_records(reports)
    ]
    return _table(("instance", "check", "observed", "bound", "status"), rows)


def format_comparison(traces: Dict[AgentKind, TraversalTrace]) -> str:
    """kind / outcome / total_cost / payoff for every simulated kind."""
    rows = [
        (
            kind.value,
            trace.outcome_label,
            format_rational(trace.total_cost),
            format_rational(trace.payoff),
        )
        for kind, trace in traces.items()
    ]
    return _table(("kind", "outcome", "total_cost", "payoff"), rows)
