# coding: utf-8
"""
Graded ideals, modules, syzygies and Betti tables.
"""
from .free_module import FreeModule  # noqa
from .submodule import (  # noqa
    GradedSubmodule, GradedIdeal, minimal_generators, annihilator)
from .syzygy import (  # noqa
    ModulePresentation, KernelModule, syzygies, map_images, compose_image)
from .resolution import (  # noqa
    CorrectnessError, ResolutionStep, BettiTable, MinimalResolution,
    betti_table)
