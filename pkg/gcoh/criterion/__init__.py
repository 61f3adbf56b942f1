# coding: utf-8
"""
Coherence criterion for graded right-free extensions.
"""
from ..modules.resolution import CorrectnessError  # noqa
from .extension import (  # noqa
    FreeExtension, RightAction, RightFreenessReport, build_extension)
from .quotient import (  # noqa
    BoundaryWarning, IntersectionQuotient, TorComputation, compute_q,
    b_dot_j, tor_with_quotient, tor_one_cross_check, check_tensor_quotient,
    check_vanishing, grows_in_window)
from .hypotheses import (  # noqa
    Assertion, KNOWN_ASSERTIONS, SubalgebraSlices, DecompositionReport,
    check_decomposition, is_left_closed, left_span_slices, make_assertions)
from .report import (  # noqa
    BatteryIdeal, CoherenceReport, IdealResult, SCHEMA_VERSION, VERDICTS,
    coherence_report, default_battery, dimension_table)
