# coding: utf-8
"""
Family of quadratic twisted tensor products
:math:`k[x, y] \\otimes_\\tau k[z]` with :math:`\\tau(z \\otimes x) = 0`
and :math:`\\tau(z \\otimes y) = \\alpha y^2 \\otimes 1 +
\\beta y \\otimes z + \\gamma 1 \\otimes z^2`.
"""
from ..algebra.polynomial import NcPolynomial
from ..algebra.presentation import AlgebraPresentation
from ..criterion.extension import FreeExtension
from ..criterion.hypotheses import Assertion, check_decomposition
from ..criterion.report import coherence_report
from ..modules.resolution import CorrectnessError
from ..rewriting.system import RewriteSystem
from .twisting import TwistingMap, build_product

#: assertions the family relies on
FAMILY_ASSERTIONS = [
    Assertion('B-coherent',
              'B = k<y, z>/(zy - alpha y^2 - beta yz - gamma z^2) is a '
              'graded algebra with one quadratic relation on two '
              'generators, such algebras are graded left coherent'),
    Assertion('C-noetherian', 'C = k[y] is a polynomial ring'),
]


class FamilyResult:
    """
    Objects built by :func:`zero_twist_family`.

    :param product: :class:`TwistedProduct
        <gcoh.twist.twisting.TwistedProduct>`
    :param extension: :class:`FreeExtension
        <gcoh.criterion.extension.FreeExtension>` for *I = xA*
    :param decomposition: :class:`DecompositionReport
        <gcoh.criterion.hypotheses.DecompositionReport>`
    :param report: :class:`CoherenceReport
        <gcoh.criterion.report.CoherenceReport>`
    """

    def __init__(self, product, extension, decomposition, report):
        self.product = product
        self.extension = extension
        self.decomposition = decomposition
        self.report = report


def polynomial_ring_xy(field=None):
    "Returns the presentation of *k[x, y]*, `x < y`."
    rel = NcPolynomial({(0, 1): 1, (1, 0): -1}, field)
    return AlgebraPresentation('kxy', ['x', 'y'], [rel], field)


def polynomial_ring_z(field=None):
    "Returns the presentation of *k[z]*."
    return AlgebraPresentation('kz', ['z'], [], field)


def family_twist(alpha, beta, gamma, tau_zx=None, field=None):
    """
    Returns the twisting map of the family.

    :param alpha: coefficient of :math:`y^2 \\otimes 1`
    :param beta: coefficient of :math:`y \\otimes z`
    :param gamma: coefficient of :math:`1 \\otimes z^2`
    :param tau_zx: value of :math:`\\tau(z \\otimes x)`, a tensor,
        null by default, anything else is rejected
    :param field: field
    """
    if tau_zx:
        raise ValueError(
            "The family requires tau(z, x) = 0, got {!r}.".format(tau_zx))
    A = RewriteSystem(polynomial_ring_xy(field))
    B = RewriteSystem(polynomial_ring_z(field))
    values = {
        ('z', 'x'): {},
        ('z', 'y'): {((1, 1), ()): alpha, ((1, ), (0, )): beta,
                     ((), (0, 0)): gamma},
    }
    return TwistingMap(A, B, values,
                       name="sigma(%s,%s,%s)" % (alpha, beta, gamma))


def zero_twist_family(alpha, beta, gamma, max_degree=10, tau_zx=None,
                      h_bound=3, battery=None, battery_limit=None,
                      field=None, prime=None, verbose=0):
    """
    Builds the twisted tensor product of the family, the extension
    by *I = xA*, checks the decomposition of *B = A/I* as
    `C + D` with *C* generated by *y* and *D = Bz*, and runs the
    coherence report.

    :param alpha: see :func:`family_twist`
    :param beta: see :func:`family_twist`
    :param gamma: see :func:`family_twist`
    :param max_degree: window
    :param tau_zx: see :func:`family_twist`
    :param h_bound: homological bound
    :param battery: list of :class:`BatteryIdeal
        <gcoh.criterion.report.BatteryIdeal>`, default battery if None
    :param battery_limit: limits the default battery
    :param field: field
    :param prime: modular verification
    :param verbose: display progress
    :return: :class:`FamilyResult`
    :raises TwistInconsistencyError: the coefficients do not
        define a twisting map
    :raises CorrectnessError: *I* is not right free
    """
    twist = family_twist(alpha, beta, gamma, tau_zx=tau_zx, field=field)
    product = build_product(twist, max_degree, name="family",
                            verbose=verbose)
    A = product.system
    x = NcPolynomial.monomial((A.presentation.index('x'), ), field=A.field)
    y = NcPolynomial.monomial((A.presentation.index('y'), ), field=A.field)
    z = NcPolynomial.monomial((A.presentation.index('z'), ), field=A.field)
    ext = FreeExtension(A, [x], max_degree, verbose=verbose)
    rf = ext.right_freeness()
    if not rf.holds or rf.generator_degrees != [1]:
        raise CorrectnessError(
            "I = xA is not free on x, dims {} != {}.".format(
                rf.ideal_dims.tolist(), rf.expected_dims.tolist()))
    decomposition = check_decomposition(
        ext, [y], [(z, z)], max_degree, assertions=FAMILY_ASSERTIONS)
    report = coherence_report(
        ext, battery=battery, h_bound=h_bound, decomposition=decomposition,
        prime=prime, battery_limit=battery_limit, verbose=verbose)
    return FamilyResult(product, ext, decomposition, report)
