"""Exact counting and checking of mountain-valley assignments for flat folds."""

from .counting import CountResult, bounds, count_assignments, is_generic
from .enumeration import enumerate_valid, explain_assignment, is_valid_assignment, run_constraint_check
from .oracle import folded_profile, oracle_count, oracle_is_valid
from .vertex import (
    ALL_EQUAL,
    Label,
    MVAssignment,
    PaperKind,
    Run,
    VertexFold,
    crimp_reduce,
    kawasaki_holds,
    maekawa_holds,
    minimal_run,
    parse_vertex,
    points_up,
    random_kawasaki_vertex,
)

__version__ = "0.1.0"
