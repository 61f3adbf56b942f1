# coding: utf-8
"""
Graded submodules of free modules and graded ideals, computed
degree by degree.
"""
from ..algebra.polynomial import NcPolynomial
from ..linalg.slices import DegreeSlice, kernel_of_map
from ..linalg.graded import GradedSubspace
from ..rewriting.system import TruncationError
from .free_module import FreeModule

_SIDES = {'left': ('left', ), 'right': ('right', ),
          'two-sided': ('left', 'right')}


class GradedSubmodule:
    """
    Submodule of a free module generated by homogeneous elements.
    The slice of degree *n* is the span of the generators of degree *n*
    and of the products of the slice of degree `n - weight(x)` by every
    generator *x* of the algebra, on the left, on the right or both.

    :param module: :class:`FreeModule`
    :param generators: list of elements (dictionaries `{(i, w): c}`)
    :param side: `'left'`, `'right'`, `'two-sided'`
    :param slices: precomputed slices `{n: DegreeSlice}`, the submodule
        is then only known up to the largest degree
    """

    def __init__(self, module, generators=None, side='left', slices=None):
        if not isinstance(module, FreeModule):
            raise TypeError("module must be a FreeModule not {}.".format(
                type(module)))
        if side not in _SIDES:
            raise ValueError("Unknown side {!r}.".format(side))
        self.module = module
        self.side = side
        self._gens = {}
        for g in generators or []:
            g = module.normalize(g)
            if not g:
                continue
            self._gens.setdefault(module.element_degree(g), []).append(g)
        self._slices = {} if slices is None else dict(slices)
        self._limit = None if slices is None else max(slices, default=-1)
        self._mingens = {}
        self.generator_log = {}

    def __repr__(self):
        return "%s(%r, side=%r)" % (
            self.__class__.__name__, self.module, self.side)

    @property
    def system(self):
        "Returns the rewriting system."
        return self.module.system

    @property
    def field(self):
        "Returns the field."
        return self.module.field

    @property
    def generators(self):
        "Returns the normalized generators as a list `[(degree, element)]`."
        return [(d, g) for d in sorted(self._gens) for g in self._gens[d]]

    @property
    def max_known_degree(self):
        "Returns the largest degree known for precomputed submodules."
        return self._limit

    def _products(self, n, sides):
        "Yields the products landing in degree *n*."
        for letter, w in enumerate(self.system.weights):
            if w > n:
                continue
            prev = self.slice(n - w)
            for row in prev.rows:
                for side in sides:
                    yield self.module.act(letter, row, n - w, side)

    def slice(self, n):
        """
        Returns the slice of degree *n* as a :class:`DegreeSlice
        <gcoh.linalg.slices.DegreeSlice>`.
        """
        res = self._slices.get(n)
        if res is not None:
            return res
        if self._limit is not None:
            if n < 0:
                return DegreeSlice(0, self.field, n)
            raise TruncationError(n, self._limit)
        if n < 0:
            return DegreeSlice(0, self.field, n)
        res = DegreeSlice(self.module.dim(n), self.field, n)
        for g in self._gens.get(n, []):
            res.add(self.module.to_vector(g, n))
        for v in self._products(n, _SIDES[self.side]):
            res.add(v)
        self._slices[n] = res
        return res

    def slices(self, max_degree):
        "Returns the slices up to *max_degree*."
        res = GradedSubspace(
            {n: self.slice(n) for n in range(max_degree + 1)})
        if all(n in self._mingens for n in range(max_degree + 1)):
            res.generator_log = {n: len(self._mingens[n])
                                 for n in range(max_degree + 1)}
        return res

    def dims(self, max_degree):
        "Returns the dimensions of the slices."
        return self.slices(max_degree).dims()

    def decomposables(self, n, side=None):
        """
        Returns the span of the products of lower slices by generators
        of the algebra in degree *n*.

        :param side: action used, the side of the submodule by default
        """
        res = DegreeSlice(self.module.dim(n), self.field, n)
        for v in self._products(n, _SIDES[side or self.side]):
            res.add(v)
        return res

    def minimal_generators(self, max_degree, side=None):
        """
        Extracts minimal generators, in degree *n* the rows of the slice
        which are not in :meth:`decomposables`, taken in pivot order.

        :param max_degree: last degree
        :param side: action used, the side of the submodule by default,
            `'right'` gives the right generators of a two-sided ideal
        :return: list `[(degree, vector)]`
        """
        res = []
        log = {}
        own = side is None or side == self.side
        for n in range(max_degree + 1):
            if own and n in self._mingens:
                found = self._mingens[n]
            else:
                found = self.slice(n).complement_basis(
                    self.decomposables(n, side))
                if own:
                    self._mingens[n] = found
            log[n] = len(found)
            res.extend((n, v) for v in found)
        if own:
            self.generator_log.update(log)
        return res

    def generator_degrees(self, max_degree, side=None):
        "Returns the degrees of the minimal generators."
        return [d for d, _ in self.minimal_generators(max_degree, side)]

    def contains(self, element):
        "Tells if an element belongs to the submodule."
        element = self.module.normalize(element)
        if not element:
            return True
        n = self.module.element_degree(element)
        return self.slice(n).contains(self.module.to_vector(element, n))

    def is_closed(self, max_degree):
        """
        Checks that the slices are stable by multiplication
        by the generators of the algebra up to *max_degree*.
        """
        for n in range(max_degree + 1):
            s = self.slice(n)
            for letter, w in enumerate(self.system.weights):
                if n + w > max_degree:
                    continue
                target = self.slice(n + w)
                for side in _SIDES[self.side]:
                    for row in s.rows:
                        if not target.contains(
                                self.module.act(letter, row, n, side)):
                            return False
        return True


class GradedIdeal(GradedSubmodule):
    """
    Graded ideal of an algebra given by homogeneous generators.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>`
    :param generators: list of :class:`NcPolynomial
        <gcoh.algebra.polynomial.NcPolynomial>`
    :param side: `'left'`, `'right'`, `'two-sided'`
    :param slices: precomputed slices
    """

    def __init__(self, system, generators=None, side='left', slices=None):
        module = FreeModule(system, [0])
        gens = []
        for p in generators or []:
            if not isinstance(p, NcPolynomial):
                raise TypeError(
                    "A generator must be a NcPolynomial not {}.".format(
                        type(p)))
            system.presentation.check_polynomial(p)
            if not p.is_homogeneous(system.weights):
                raise ValueError(
                    "Generator {} is not homogeneous.".format(
                        system.to_text(p)))
            gens.append({(0, w): c for w, c in p.items()})
        GradedSubmodule.__init__(self, module, gens, side=side, slices=slices)

    @property
    def polynomial_generators(self):
        "Returns the normalized generators as polynomials."
        return [self.element_to_polynomial(g) for _, g in self.generators]

    def element_to_polynomial(self, element):
        "Converts an element `{(0, w): c}` into a polynomial."
        return NcPolynomial._from_dict(
            {w: c for (_, w), c in element.items()}, self.field)

    def polynomial(self, vec, n):
        "Converts coordinates of degree *n* into a polynomial."
        return self.element_to_polynomial(self.module.to_element(vec, n))

    def vector(self, p, n=None):
        "Returns the coordinates of the normal form of *p*."
        return self.system.vector(p, n)

    def contains_polynomial(self, p):
        "Tells if a polynomial belongs to the ideal."
        return self.contains({(0, w): c for w, c in p.items()})

    def minimal_polynomial_generators(self, max_degree, side=None):
        "Returns the minimal generators as `[(degree, polynomial)]`."
        return [(n, self.polynomial(v, n))
                for n, v in self.minimal_generators(max_degree, side)]


def minimal_generators(submodule, max_degree, side=None):
    "See :meth:`GradedSubmodule.minimal_generators`."
    return submodule.minimal_generators(max_degree, side)


def annihilator(system, w, side='left', max_degree=None):
    """
    Computes the annihilator of a homogeneous element.
    In degree *n*, the left annihilator is the kernel of
    `a -> NF(a w)` on the normal words of degree *n*,
    the right one the kernel of `a -> NF(w a)`.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>`, a copy is extended
        when needed
    :param w: :class:`NcPolynomial
        <gcoh.algebra.polynomial.NcPolynomial>`
    :param side: `'left'` or `'right'`
    :param max_degree: last degree, the truncation degree by default
    :return: :class:`GradedIdeal` known up to *max_degree*
    """
    if side not in ('left', 'right'):
        raise ValueError("side must be 'left' or 'right' not {!r}.".format(
            side))
    if max_degree is None:
        max_degree = system.complete_up_to
    e = w.degree(system.weights) if w else 0
    system = system.extended(max_degree + e)
    nf = system.normal_form(w)
    if not nf:
        raise ValueError(
            "The annihilator of zero is the whole algebra.")
    slices = {}
    for n in range(max_degree + 1):
        images = []
        for a in system.basis(n):
            res = {}
            for word, c in nf.items():
                prod = (system.multiply_words(a, word) if side == 'left'
                        else system.multiply_words(word, a))
                for w2, c2 in prod.items():
                    res[w2] = res.get(w2, system.field.zero) + c * c2
            images.append(system.to_vector(
                {k: v for k, v in res.items() if v}, n + e))
        slices[n] = kernel_of_map(images, system.dim(n + e), system.field, n)
    return GradedIdeal(system, side=side, slices=slices)
