# coding: utf-8
"""
Completion of presentations, normal forms and normal words.
"""
from .order import MonomialOrder  # noqa
from .system import (  # noqa
    RewriteRule, RewriteSystem, TruncationError,
    normal_form, basis, hilbert_function)
