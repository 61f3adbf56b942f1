# coding: utf-8
"""
Graded extensions :math:`0 \\to I \\to A \\to B \\to 0` where *I* is
a two-sided ideal, projection, right action and right-freeness.
"""
import numpy
from ..algebra.polynomial import NcPolynomial
from ..linalg.slices import kernel_of_map
from ..modules.submodule import GradedIdeal
from ..rewriting.system import RewriteSystem


class RightFreenessReport:
    """
    Outcome of the right-freeness test of *I*.

    :param generators: minimal right generators `[(degree, polynomial)]`
    :param ideal_dims: dimensions of :math:`I_n`
    :param expected_dims: :math:`\\sum_j \\dim A_{n - \\deg g_j}`
    :param max_degree: window
    """

    def __init__(self, generators, ideal_dims, expected_dims, max_degree):
        self.generators = generators
        self.ideal_dims = ideal_dims
        self.expected_dims = expected_dims
        self.max_degree = max_degree

    @property
    def holds(self):
        "Tells if the dimension identity holds in every degree."
        return bool(numpy.array_equal(self.ideal_dims, self.expected_dims))

    @property
    def generator_degrees(self):
        "Returns the degrees of the right generators."
        return [d for d, _ in self.generators]

    @property
    def finite_in_window(self):
        """
        Tells if no new generator appears in the second half
        of the window, a new generator in every degree means the
        generator list does not look finite.
        """
        degs = set(self.generator_degrees)
        start = self.max_degree - self.max_degree // 2 + 1
        return not all(n in degs for n in range(start, self.max_degree + 1))

    def to_dict(self, names_text):
        "Returns a serializable dictionary."
        return dict(
            holds=self.holds, finite_in_window=self.finite_in_window,
            generators=[dict(degree=d, element=names_text(p))
                        for d, p in self.generators],
            ideal_dims=self.ideal_dims.tolist(),
            expected_dims=self.expected_dims.tolist())


class RightAction:
    """
    Right action of *A* on *B* through the projection,
    `b.a = b * pi(a)`.

    :param extension: :class:`FreeExtension`
    """

    def __init__(self, extension):
        self.extension = extension

    def act_words(self, b, a):
        """
        Returns `b.a` as a dictionary `{B normal word: c}` for a
        *B* normal word *b* and an *A* normal word *a*.
        """
        return self.extension.B.multiply_words(b, a)

    def act(self, b, a):
        "Returns `b.a` for polynomials *b* in B and *a* in A."
        return self.extension.B.normal_form(b * a)

    def check_associativity(self, max_degree):
        """
        Checks `(b.a).a' = b.(a a')` on basis triples
        of total degree up to *max_degree*.
        """
        ext = self.extension
        A, B = ext.A, ext.B
        for n in range(max_degree + 1):
            for i in range(n + 1):
                for j in range(n - i + 1):
                    k = n - i - j
                    for b in B.basis(i):
                        for a in A.basis(j):
                            ba = self.act_words(b, a)
                            for a2 in A.basis(k):
                                left = B.normal_form_terms(
                                    {w + a2: c for w, c in ba.items()})
                                right = B.normal_form_terms(
                                    {b + w: c for w, c in
                                     A.multiply_words(a, a2).items()})
                                if left != right:
                                    return False
        return True


class FreeExtension:
    """
    Extension *A -> B = A/I* where *I* is the two-sided ideal generated
    by homogeneous elements. *B* is presented by the presentation of
    *A* and the generators of *I*, both algebras share the same
    letters, a *B* normal word is also *A* normal.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>` of *A*
    :param generators: generators of *I*, polynomials in *A*
    :param max_degree: window
    :param verbose: display progress
    """

    def __init__(self, system, generators, max_degree, verbose=0):
        if not isinstance(system, RewriteSystem):
            raise TypeError("system must be a RewriteSystem not {}.".format(
                type(system)))
        if max_degree < 1:
            raise ValueError("max_degree must be positive.")
        system = system.extended(max_degree)
        gens = []
        for g in generators:
            system.presentation.check_polynomial(g)
            g = system.normal_form(g)
            if not g:
                continue
            d = g.degree(system.weights)
            if d == 0:
                raise ValueError(
                    "The ideal contains 1, it is not proper.")
            if d > max_degree:
                raise ValueError(
                    "Generator {} has degree {} > max_degree={}.".format(
                        system.to_text(g), d, max_degree))
            gens.append(g)
        self.A = system
        self.max_degree = max_degree
        self.generators = gens
        self.ideal = GradedIdeal(system, gens, side='two-sided')
        pres = system.presentation
        self.B = RewriteSystem(
            pres.with_relations(gens, name=pres.name + "/I"),
            verbose=verbose).extend(max_degree)
        self.right_action = RightAction(self)
        self._right = None

    def project(self, p):
        "Returns the image of a polynomial of *A* in *B*."
        return self.B.normal_form(p)

    def lift(self, p):
        "Returns the canonical lift of a *B* element, the same words."
        return self.A.normal_form(p)

    def projection_matrix(self, n):
        """
        Returns the images of the normal words of :math:`A_n`
        as vectors in the coordinates of :math:`B_n`.
        """
        return [self.B.to_vector(self.B.normal_form_word(w), n)
                for w in self.A.basis(n)]

    def lift_vector(self, vec, n):
        "Converts coordinates in :math:`B_n` into coordinates in :math:`A_n`."
        return self.A.to_vector(self.B.from_vector(vec, n), n)

    def check_projection(self, max_degree=None):
        """
        Checks the projection is multiplicative on basis pairs
        and its kernel is *I* in every degree.
        """
        if max_degree is None:
            max_degree = self.max_degree
        A, B = self.A, self.B
        for n in range(max_degree + 1):
            for i in range(n + 1):
                for u in A.basis(i):
                    pu = B.normal_form_word(u)
                    for v in A.basis(n - i):
                        pv = B.normal_form_word(v)
                        left = B.normal_form_terms(A.multiply_words(u, v))
                        prod = {}
                        for w1, c1 in pu.items():
                            for w2, c2 in pv.items():
                                prod[w1 + w2] = (
                                    prod.get(w1 + w2, B.field.zero) +
                                    c1 * c2)
                        right = B.normal_form_terms(
                            {k: c for k, c in prod.items() if c})
                        if left != right:
                            return False
            kernel = kernel_of_map(self.projection_matrix(n), B.dim(n),
                                   A.field, n)
            if kernel != self.ideal.slice(n):
                return False
        return True

    def right_freeness(self):
        """
        Computes the minimal right generators :math:`g_j` of *I* and
        compares :math:`\\dim I_n` with
        :math:`\\sum_j \\dim A_{n - \\deg g_j}`.

        :return: :class:`RightFreenessReport`
        """
        if self._right is None:
            D = self.max_degree
            gens = self.ideal.minimal_polynomial_generators(D, side='right')
            dims = self.ideal.dims(D)
            hA = self.A.hilbert_function(D)
            expected = numpy.zeros(D + 1, dtype=numpy.int64)
            for d, _ in gens:
                expected[d:] += hA[:D + 1 - d]
            self._right = RightFreenessReport(gens, dims, expected, D)
        return self._right

    def text(self, p):
        "Prints a polynomial of *A*."
        return self.A.to_text(p)

    def b_polynomial(self, vec, n):
        "Converts coordinates of :math:`B_n` into a polynomial."
        return NcPolynomial._from_dict(self.B.from_vector(vec, n),
                                       self.B.field)


def build_extension(system, generators, max_degree, verbose=0):
    """
    Builds a :class:`FreeExtension`.

    :param system: rewriting system of *A*
    :param generators: generators of the two-sided ideal *I*
    :param max_degree: window
    :param verbose: display progress
    """
    return FreeExtension(system, generators, max_degree, verbose=verbose)
