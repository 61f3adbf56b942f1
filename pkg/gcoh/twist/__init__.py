# coding: utf-8
"""
Twisting maps and twisted tensor products.
"""
from .twisting import (  # noqa
    HexagonSystem, TwistConflict, TwistInconsistencyError, TwistingMap,
    TwistExtension, TwistedProduct, extend_twist, build_product,
    twisting_map_from_spec)
from .family import (  # noqa
    FAMILY_ASSERTIONS, FamilyResult, family_twist, polynomial_ring_xy,
    polynomial_ring_z, zero_twist_family)
