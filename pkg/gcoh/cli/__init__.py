# coding: utf-8
"""
Command line.
"""
from .config import COMMANDS, FORMATS, JobConfig  # noqa
from .commands import (  # noqa
    WitnessFailure, load_document, build_report, execute, run,
    nf, basis, hilbert, ann, syzygy, betti, extension, criterion, twist)
from .verify import CHECKS, verification_table, verify_examples  # noqa
