# coding: utf-8
"""
The module :math:`Q = (I \\cap J) / (IJ)` over *B = A/I* and the
groups :math:`Tor_q^A(B, A/J)` computed from a minimal resolution.
"""
import warnings
import numpy
from ..algebra.fields import make_field
from ..linalg.slices import DegreeSlice, intersect, kernel_of_map
from ..modules.free_module import FreeModule, add_to
from ..modules.resolution import CorrectnessError, MinimalResolution
from ..modules.submodule import GradedIdeal, GradedSubmodule
from ..modules.syzygy import ModulePresentation
from ..rewriting.system import RewriteSystem
from .extension import FreeExtension


class BoundaryWarning(UserWarning):
    """
    Raised as a warning when a quantity expected to vanish does not
    inside the window.
    """
    pass


def _growth_window(max_degree):
    return range(max_degree - max_degree // 2 + 1, max_degree + 1)


def grows_in_window(degrees, max_degree):
    """
    Tells if *degrees* contains every degree of the trailing
    half-window, the growth pattern used to witness failures.
    """
    degs = set(degrees)
    return all(n in degs for n in _growth_window(max_degree))


class IntersectionQuotient:
    """
    Computes :math:`Q = (I \\cap J)/(IJ)` degree by degree where *I*
    is the ideal of a :class:`FreeExtension
    <gcoh.criterion.extension.FreeExtension>` and *J* a left ideal
    given by homogeneous generators. *Q* is a left *B*-module,
    `(a + I).(y + IJ) = ay + IJ`.

    :param extension: :class:`FreeExtension`
    :param generators: generators of *J*, polynomials in *A*
    :param max_degree: window, the extension window by default
    """

    def __init__(self, extension, generators, max_degree=None):
        if max_degree is None:
            max_degree = extension.max_degree
        if max_degree > extension.max_degree:
            raise ValueError(
                "max_degree={} exceeds the extension window {}.".format(
                    max_degree, extension.max_degree))
        A = extension.A
        self.extension = extension
        self.max_degree = max_degree
        self.left_ideal = GradedIdeal(A, generators, side='left')
        self.generators = self.left_ideal.polynomial_generators
        self._ij = {}
        self._cap = {}
        self._mingens = None
        self._syzygies = None

    @property
    def field(self):
        "Returns the field."
        return self.extension.A.field

    def product_slice(self, n):
        """
        Returns :math:`(IJ)_n`, spanned by the products of the
        slices of *I* by the generators of *J*.
        """
        res = self._ij.get(n)
        if res is not None:
            return res
        A = self.extension.A
        ideal = self.extension.ideal
        res = DegreeSlice(A.dim(n), A.field, n)
        for g in self.generators:
            e = g.degree(A.weights)
            if e > n:
                continue
            for row in ideal.slice(n - e).rows:
                p = ideal.polynomial(row, n - e)
                res.add(A.vector(A.multiply(p, g), n))
        self._ij[n] = res
        return res

    def intersection_slice(self, n):
        "Returns :math:`(I \\cap J)_n`."
        res = self._cap.get(n)
        if res is None:
            res = intersect(self.extension.ideal.slice(n),
                            self.left_ideal.slice(n))
            if not self.product_slice(n).is_subspace_of(res):
                raise CorrectnessError(
                    "IJ is not included in I and J in degree {}.".format(n))
            self._cap[n] = res
        return res

    def dim(self, n):
        "Returns the dimension of :math:`Q_n`."
        return self.intersection_slice(n).quotient_dim(self.product_slice(n))

    def dims(self):
        "Returns the dimensions of *Q* up to the window."
        return numpy.array([self.dim(n) for n in range(self.max_degree + 1)],
                           dtype=numpy.int64)

    def _decomposables(self, n):
        A = self.extension.A
        res = self.product_slice(n).copy()
        free = self.extension.ideal.module
        for letter, w in enumerate(A.weights):
            if w > n:
                continue
            for row in self.intersection_slice(n - w).rows:
                res.add(free.act(letter, row, n - w, 'left'))
        return res

    def minimal_generators(self):
        """
        Returns minimal generators of *Q* as a *B*-module,
        `[(degree, vector)]`, vectors are coordinates in :math:`A_n`
        of coset representatives.
        """
        if self._mingens is None:
            res = []
            for n in range(self.max_degree + 1):
                found = self.intersection_slice(n).complement_basis(
                    self._decomposables(n))
                res.extend((n, v) for v in found)
            self._mingens = res
        return self._mingens

    @property
    def generator_degrees(self):
        "Returns the degrees of the minimal generators of *Q*."
        return [d for d, _ in self.minimal_generators()]

    def _relation_slices(self):
        A, B = self.extension.A, self.extension.B
        gens = self.minimal_generators()
        degrees = [d for d, _ in gens]
        reps = [A.from_vector(v, d) for d, v in gens]
        free = FreeModule(B, degrees)
        slices = {}
        for n in range(self.max_degree + 1):
            ij = self.product_slice(n)
            images = []
            for k, bword in free.basis(n):
                res = {}
                for w, c in reps[k].items():
                    for w2, c2 in A.multiply_words(bword, w).items():
                        add_to(res, w2, c * c2)
                images.append(ij.reduce(A.to_vector(res, n)))
            slices[n] = kernel_of_map(images, A.dim(n), A.field, n)
        return free, slices

    def relations(self):
        """
        Returns the kernel of :math:`\\oplus_k B(-d_k) \\to Q` sending
        the k-th free generator to the k-th minimal generator, as a
        :class:`GradedSubmodule
        <gcoh.modules.submodule.GradedSubmodule>` over *B*.
        """
        if self._syzygies is None:
            free, slices = self._relation_slices()
            self._syzygies = GradedSubmodule(free, side='left', slices=slices)
        return self._syzygies

    @property
    def syzygy_degrees(self):
        "Returns the degrees of the minimal syzygies of *Q*."
        return self.relations().generator_degrees(self.max_degree)

    def presentation(self):
        """
        Returns *Q* as a :class:`ModulePresentation
        <gcoh.modules.syzygy.ModulePresentation>` over *B*,
        valid up to the window.
        """
        rel = self.relations()
        return ModulePresentation(
            self.extension.B, self.generator_degrees,
            [rel.module.to_element(v, n)
             for n, v in rel.minimal_generators(self.max_degree)])

    @property
    def generation_status(self):
        """
        Returns `'bounded-in-window'` or `'unbounded-in-window'`
        depending on the growth pattern of the generators.
        """
        if grows_in_window(self.generator_degrees, self.max_degree):
            return 'unbounded-in-window'
        return 'bounded-in-window'

    @property
    def presentation_status(self):
        """
        Returns `'finite-in-window'` or `'growing'` depending on the
        growth pattern of the syzygies.
        """
        if grows_in_window(self.syzygy_degrees, self.max_degree):
            return 'growing'
        return 'finite-in-window'

    def verify_modular(self, prime):
        """
        Recomputes the dimensions of *Q* over :math:`GF(p)`.

        :return: dimensions as an array
        """
        field = make_field(prime)
        ext = self.extension
        pres = ext.A.presentation.change_field(field)
        A = RewriteSystem(pres)
        modular = FreeExtension(
            A, [g.change_field(field) for g in ext.generators],
            ext.max_degree)
        other = IntersectionQuotient(
            modular, [g.change_field(field) for g in self.generators],
            self.max_degree)
        return other.dims()


def compute_q(extension, generators, max_degree=None):
    """
    Builds :math:`Q = (I \\cap J)/(IJ)`, see
    :class:`IntersectionQuotient`.
    """
    return IntersectionQuotient(extension, generators, max_degree)


def b_dot_j(extension, generators):
    """
    Returns the left ideal of *B* generated by the images
    of the generators of *J*.
    """
    images = [extension.project(g) for g in generators]
    return GradedIdeal(extension.B, [p for p in images if p], side='left')


class TorComputation:
    """
    Homology of :math:`B \\otimes_A G_\\bullet` where
    :math:`G_\\bullet` is a minimal free resolution of *A/J*.

    :param extension: :class:`FreeExtension`
    :param generators: generators of *J*
    :param max_degree: window
    :param h_bound: last homological degree *q* to compute
    """

    def __init__(self, extension, generators, max_degree=None, h_bound=2,
                 verbose=0):
        if max_degree is None:
            max_degree = extension.max_degree
        A = extension.A
        self.extension = extension
        self.max_degree = max_degree
        self.h_bound = h_bound
        gens = [A.normal_form(g) for g in generators]
        self.resolution = MinimalResolution(
            ModulePresentation.cyclic(A, [g for g in gens if g]),
            h_bound + 1, max_degree, verbose=verbose)
        self.modules = [FreeModule(extension.B, step.degrees)
                        for step in self.resolution.steps]
        self._ranks = {}

    def _rank(self, i, n):
        "Rank of the differential from step *i* to step *i - 1* in degree *n*."
        key = i, n
        if key in self._ranks:
            return self._ranks[key]
        if i == 0:
            self._ranks[key] = 0
            return 0
        B = self.extension.B
        source, target = self.modules[i], self.modules[i - 1]
        images = self.resolution.differential_images(i)
        vecs = []
        for k, bword in source.basis(n):
            res = {}
            for (j, aword), c in images[k].items():
                for w, c2 in B.multiply_words(bword, aword).items():
                    add_to(res, (j, w), c * c2)
            vecs.append(target.to_vector(res, n))
        rank = len(vecs) - kernel_of_map(vecs, target.dim(n), B.field, n).rank
        self._ranks[key] = rank
        return rank

    def dim(self, q, n):
        "Returns the dimension of :math:`Tor_q^A(B, A/J)_n`."
        if q > self.h_bound:
            raise ValueError("q={} > h_bound={}.".format(q, self.h_bound))
        size = self.modules[q].dim(n)
        return size - self._rank(q, n) - self._rank(q + 1, n)

    def dims(self, q):
        "Returns the dimensions of :math:`Tor_q` up to the window."
        return numpy.array([self.dim(q, n)
                            for n in range(self.max_degree + 1)],
                           dtype=numpy.int64)


def tor_with_quotient(extension, generators, max_degree=None, h_bound=2,
                      verbose=0):
    """
    Returns a dictionary `{q: dims}` with the dimensions of
    :math:`Tor_q^A(B, A/J)` for `q <= h_bound`.
    """
    tor = TorComputation(extension, generators, max_degree, h_bound,
                         verbose=verbose)
    return {q: tor.dims(q) for q in range(h_bound + 1)}


def tor_one_cross_check(extension, generators, max_degree=None, quotient=None):
    """
    Computes :math:`Tor_1^A(B, A/J)` from a resolution and compares
    it with the dimensions of *Q*.

    :return: dimensions of :math:`Tor_1`
    :raises CorrectnessError: both computations disagree
    """
    if quotient is None:
        quotient = compute_q(extension, generators, max_degree)
    tor = TorComputation(extension, generators, quotient.max_degree,
                         h_bound=1).dims(1)
    expected = quotient.dims()
    if not numpy.array_equal(tor, expected):
        raise CorrectnessError(
            "Tor_1 {} differs from dim Q {}.".format(
                tor.tolist(), expected.tolist()))
    return tor


def check_tensor_quotient(extension, generators, tor_zero):
    """
    Compares :math:`B \\otimes_A A/J` with *B/B.J* degree by degree.

    :param tor_zero: dimensions of :math:`Tor_0^A(B, A/J)`
    :return: dimensions of *B/B.J*
    :raises CorrectnessError: the dimensions differ
    """
    B = extension.B
    bj = b_dot_j(extension, generators)
    dims = numpy.array(
        [B.dim(n) - bj.slice(n).rank for n in range(len(tor_zero))],
        dtype=numpy.int64)
    if not numpy.array_equal(dims, tor_zero):
        raise CorrectnessError(
            "dim B/B.J {} differs from dim B x A/J {}.".format(
                dims.tolist(), list(tor_zero)))
    return dims


def check_vanishing(dims, label, strict=False):
    """
    Checks that higher Tor groups vanish in the window.

    :param dims: dimensions
    :param label: name used in messages
    :param strict: raise instead of warning
    :return: True if every dimension is null
    """
    if not numpy.any(dims):
        return True
    msg = "{} does not vanish in the window: {}.".format(
        label, list(dims))
    if strict:
        raise CorrectnessError(msg)
    warnings.warn(msg, BoundaryWarning)
    return False
