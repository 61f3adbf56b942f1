# coding: utf-8
"""
Reader and writer for `.galg` documents.
"""
from .expressions import (  # noqa
    ExpressionGrammar, GalgSyntaxError, TensorValue)
from .galg import (  # noqa
    SourceDocument, GalgDocument, IdealSpec, IdealList, TwistSpec,
    ExtensionSpec, JobSpec, DOCUMENT_KINDS, SIDES,
    parse_document, parse_algebra, parse_polynomial, parse_polynomial_list,
    format_algebra, format_tensor, format_polynomial_list, format_document)
