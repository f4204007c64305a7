"""Fairness-aware team assembly with multi-objective Pareto filtering."""

from .assembly import (
    AssemblyDiagnostics,
    AssemblyOutcome,
    AssemblyParams,
    InfeasibleProjectError,
    SelectionMode,
    assemble_all_selections,
    assemble_fair_allocation,
    assemble_incremental,
    assemble_multi_objective,
    candidate_scores,
    filter_candidates,
    form_random_teams,
    pareto_candidates,
    project_rng,
)
from .bench import (
    DEFAULT_TARGETS,
    OutcomeRecord,
    RunReport,
    RunTarget,
    aggregate_records,
    emit_outcome_log,
    emit_report,
    run_benchmark,
)
from .data_io import (
    DataFormatError,
    SynthesisSpec,
    load_pool,
    load_projects,
    reassign_attributes,
    save_pool,
    save_projects,
    skill_universe,
    synthesize_pool,
    synthesize_projects,
)
from .model import (
    OBJECTIVE_NAMES,
    AttributeClass,
    Candidate,
    ObjectiveVector,
    Project,
    Team,
    coverage,
)
from .objectives import (
    cost_difference,
    cost_for_class,
    expertise_unevenness,
    matched_cost,
    member_loads,
    objective_vector,
    representation_parity,
    requirement_costs,
    team_cost,
    workload_unevenness,
)
from .pareto import dominates, pareto_front

__version__ = "0.1.0"

__all__ = [
    "AssemblyDiagnostics",
    "AssemblyOutcome",
    "AssemblyParams",
    "AttributeClass",
    "Candidate",
    "DataFormatError",
    "DEFAULT_TARGETS",
    "InfeasibleProjectError",
    "OBJECTIVE_NAMES",
    "ObjectiveVector",
    "OutcomeRecord",
    "Project",
    "RunReport",
    "RunTarget",
    "SelectionMode",
    "SynthesisSpec",
    "Team",
    "aggregate_records",
    "assemble_all_selections",
    "assemble_fair_allocation",
    "assemble_incremental",
    "assemble_multi_objective",
    "candidate_scores",
    "cost_difference",
    "cost_for_class",
    "coverage",
    "dominates",
    "emit_outcome_log",
    "emit_report",
    "expertise_unevenness",
    "filter_candidates",
    "form_random_teams",
    "load_pool",
    "load_projects",
    "matched_cost",
    "member_loads",
    "objective_vector",
    "pareto_candidates",
    "pareto_front",
    "project_rng",
    "reassign_attributes",
    "representation_parity",
    "requirement_costs",
    "run_benchmark",
    "save_pool",
    "save_projects",
    "skill_universe",
    "synthesize_pool",
    "synthesize_projects",
    "team_cost",
    "workload_unevenness",
]
