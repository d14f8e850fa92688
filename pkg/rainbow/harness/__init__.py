"""
Harness Module
Verification campaigns, inequality evaluators and JSON-lines reporting
"""

from .models import (
    CampaignSpec,
    CampaignReport,
    CellPlan,
    CellReport,
    InstanceResult,
    Lemma32Check,
    Lemma34Check,
)
from .campaigns import (
    run_campaign,
    plan_cells,
    build_instance,
    run_instance,
    replay_instance,
    check_corollary26,
    explore_question16,
    instance_rng,
)
from .inequalities import (
    eval_f_lemma32,
    f_derivative_lemma32,
    lemma32_decreasing_region,
    check_lemma32,
    check_lemma34,
    lemma34_range,
)
from .reporting import write_report, read_report, report_records, environment

__all__ = [
    "CampaignSpec",
    "CampaignReport",
    "CellPlan",
    "CellReport",
    "InstanceResult",
    "Lemma32Check",
    "Lemma34Check",
    "run_campaign",
    "plan_cells",
    "build_instance",
    "run_instance",
    "replay_instance",
    "check_corollary26",
    "explore_question16",
    "instance_rng",
    "eval_f_lemma32",
    "f_derivative_lemma32",
    "lemma32_decreasing_region",
    "check_lemma32",
    "check_lemma34",
    "lemma34_range",
    "write_report",
    "read_report",
    "report_records",
    "environment",
]
