"""Multi-district election modeling and recampaigning decision procedures."""

from .core import (
    ApprovalVote,
    Borda,
    Condorcet,
    E1,
    E2,
    Election,
    ExplicitScoringFamily,
    LinearVote,
    TApproval,
    TrivialScoring,
    TVeto,
    VotingRule,
    family_table,
    is_k_winner,
    is_scoring_rule,
    needs_linear_ballots,
    scoring_vector,
    tally,
    validate_purity,
    winners,
)
from .errors import (
    BallotTypeError,
    MissingVectorError,
    PreconditionError,
    RecampaignError,
    ResourceBudgetError,
    ShapeError,
    TrivialityError,
    UnknownCandidateError,
    UnsupportedRuleError,
    WrongVariantError,
)
from .gadgets import (
    Exactly3ThreeDMInstance,
    OneInThreeSatInstance,
    R3DMInstance,
    X3CInstance,
    decide_3dm,
    decide_e3sat,
    decide_x3c,
    e33dm_to_1approval,
    e33dm_to_scoring,
    find_nontrivial_vector,
    r3dm_to_exactly3,
    sat_to_approval_unbounded,
    x3c_to_approval,
    x3c_to_e1_priced,
    x3c_to_veto,
)
from .matching import (
    BipartiteMultigraph,
    Edge,
    MatchingResult,
    min_cost_max_cardinality_matching,
    min_weight_perfect_b_matching,
)
from .model import (
    Assignment,
    AtMost,
    District,
    Pricing,
    RandomInstanceParams,
    RecampaignInstance,
    UNBOUNDED,
    Unbounded,
    VerificationReport,
    Violation,
    WinnerBound,
    from_winner_problem,
    lift_to_priced,
    random_instance,
    verify,
)
from .solvers import (
    CoverMember,
    CoverSystem,
    SolveResult,
    build_exact_cover_system,
    default_node_budget,
    solve_auto,
    solve_brute,
    solve_crc1,
    solve_e1_bound3,
    solve_e2_unbounded,
    solve_fpt,
    solve_trivial_scoring,
)

__version__ = "0.1.0"

__all__ = [
    "ApprovalVote",
    "Assignment",
    "AtMost",
    "BallotTypeError",
    "BipartiteMultigraph",
    "Borda",
    "Condorcet",
    "CoverMember",
    "CoverSystem",
    "District",
    "E1",
    "E2",
    "Edge",
    "Election",
    "Exactly3ThreeDMInstance",
    "ExplicitScoringFamily",
    "LinearVote",
    "MatchingResult",
    "MissingVectorError",
    "OneInThreeSatInstance",
    "PreconditionError",
    "Pricing",
    "R3DMInstance",
    "RandomInstanceParams",
    "RecampaignError",
    "RecampaignInstance",
    "ResourceBudgetError",
    "ShapeError",
    "SolveResult",
    "TApproval",
    "TVeto",
    "TrivialScoring",
    "TrivialityError",
    "UNBOUNDED",
    "Unbounded",
    "UnknownCandidateError",
    "UnsupportedRuleError",
    "VerificationReport",
    "Violation",
    "VotingRule",
    "WinnerBound",
    "WrongVariantError",
    "X3CInstance",
    "build_exact_cover_system",
    "decide_3dm",
    "decide_e3sat",
    "decide_x3c",
    "default_node_budget",
    "e33dm_to_1approval",
    "e33dm_to_scoring",
    "family_table",
    "find_nontrivial_vector",
    "from_winner_problem",
    "is_k_winner",
    "is_scoring_rule",
    "lift_to_priced",
    "min_cost_max_cardinality_matching",
    "min_weight_perfect_b_matching",
    "needs_linear_ballots",
    "r3dm_to_exactly3",
    "random_instance",
    "sat_to_approval_unbounded",
    "scoring_vector",
    "solve_auto",
    "solve_brute",
    "solve_crc1",
    "solve_e1_bound3",
    "solve_e2_unbounded",
    "solve_fpt",
    "solve_trivial_scoring",
    "tally",
    "validate_purity",
    "verify",
    "winners",
    "x3c_to_approval",
    "x3c_to_e1_priced",
    "x3c_to_veto",
]
