from .expectations import EXPECTATIONS, FIXTURES, Expected
from .suites import (
    SUITES,
    SuiteFailure,
    SuiteReport,
    bounds_suite,
    equivalence_suite,
    fixtures_suite,
    reduction_failures,
    reduction_suite,
    run_suites,
    subset_sum_case,
    sweep_instance,
)

__all__ = [
    "EXPECTATIONS",
    "Expected",
    "FIXTURES",
    "SUITES",
    "SuiteFailure",
    "SuiteReport",
    "bounds_suite",
    "equivalence_suite",
    "fixtures_suite",
    "reduction_failures",
    "reduction_suite",
    "run_suites",
    "subset_sum_case",
    "sweep_instance",
]
