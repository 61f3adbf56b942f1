# coding: utf-8
"""
Shared vocabulary: scalars, words, polynomials and presentations.
"""
from .fields import (  # noqa
    DEFAULT_PRIME, FieldMismatchError, make_field, field_name,
    same_field, scalar, to_rational, convert_scalar)
from .words import (  # noqa
    word_degree, word_to_text, enumerate_words, find_overlaps)
from .polynomial import NcPolynomial, multiply, graded_components  # noqa
from .presentation import AlgebraPresentation  # noqa
