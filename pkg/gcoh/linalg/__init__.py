# coding: utf-8
"""
Exact linear algebra on degree slices.
"""
from .slices import (  # noqa
    DegreeSlice, span_reduce, intersect, kernel_of_map, rank_of)
from .graded import GradedSubspace  # noqa
