# coding: utf-8
"""
Kernels of maps between free modules, module presentations.
"""
from ..linalg.slices import kernel_of_map
from .free_module import FreeModule, add_to
from .submodule import GradedSubmodule


class ModulePresentation:
    """
    Finitely presented graded module :math:`F / R` where
    :math:`F = \\oplus_i A(-d_i)` and *R* is the left submodule
    generated by the relations.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>`
    :param generator_degrees: degrees :math:`d_i`
    :param relations: list of homogeneous elements of *F*
        (dictionaries `{(i, w): c}`)
    """

    def __init__(self, system, generator_degrees, relations=None):
        self.system = system
        self.free_module = FreeModule(system, generator_degrees)
        self.relations = []
        for r in relations or []:
            r = self.free_module.normalize(r)
            if r:
                self.free_module.element_degree(r)
                self.relations.append(r)
        self.relation_module = GradedSubmodule(
            self.free_module, self.relations, side='left')

    @staticmethod
    def cyclic(system, left_ideal_generators):
        """
        Returns the presentation of `A/J` for a left ideal *J*
        given by polynomial generators.
        """
        return ModulePresentation(
            system, [0], [{(0, w): c for w, c in p.items()}
                          for p in left_ideal_generators])

    @property
    def generator_degrees(self):
        "Returns the degrees of the generators."
        return list(self.free_module.degrees)

    def dim(self, n):
        "Returns the dimension of the module in degree *n*."
        return self.free_module.dim(n) - self.relation_module.slice(n).rank

    def __repr__(self):
        return "ModulePresentation(%r, %r, %d relations)" % (
            self.system.presentation.name, self.generator_degrees,
            len(self.relations))


class KernelModule:
    """
    Kernel of a map :math:`\\oplus_i A(-d_i) \\to M` known up to
    a degree, with its minimal generators.

    :param source: :class:`FreeModule`, source of the map
    :param submodule: :class:`GradedSubmodule` holding the kernel slices
    :param max_degree: window
    """

    def __init__(self, source, submodule, max_degree):
        self.source = source
        self.submodule = submodule
        self.max_degree = max_degree
        self.generators = [
            (n, source.to_element(v, n))
            for n, v in submodule.minimal_generators(max_degree)]

    @property
    def generator_degrees(self):
        "Returns the degrees of the minimal generators."
        return [d for d, _ in self.generators]

    def dims(self):
        "Returns the dimensions of the kernel slices."
        return self.submodule.dims(self.max_degree)

    def to_presentation(self):
        """
        Returns the kernel as a :class:`ModulePresentation`, its
        relations are the syzygies of its minimal generators
        within the window.
        """
        degrees = self.generator_degrees
        second = syzygies(self.source.system, degrees,
                          [g for _, g in self.generators], self.source,
                          self.max_degree)
        return ModulePresentation(
            self.source.system, degrees, [g for _, g in second.generators])


def map_images(source, images, target, n, modulo=None):
    """
    Returns the images of the basis of `source` in degree *n*,
    the free generator *i* is sent to `images[i]`.

    :param source: :class:`FreeModule`
    :param images: list of elements of *target*
    :param target: :class:`FreeModule`
    :param n: degree
    :param modulo: :class:`GradedSubmodule` of *target*, images are
        reduced modulo its slice
    :return: list of sparse vectors
    """
    res = []
    red = None if modulo is None else modulo.slice(n)
    for i, w in source.basis(n):
        elem = target.left_multiply(w, images[i])
        vec = target.to_vector(elem, n)
        if red is not None:
            vec = red.reduce(vec)
        res.append(vec)
    return res


def syzygies(system, degrees, images, target, max_degree, modulo=None):
    """
    Computes the kernel of the map :math:`\\oplus_i A(-d_i) \\to M`
    sending the i-th generator to `images[i]`, degree by degree.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>`
    :param degrees: degrees :math:`d_i`
    :param images: list of homogeneous elements of *target*,
        `images[i]` has degree :math:`d_i` (or is null)
    :param target: :class:`FreeModule`, *M* is *target* or its
        quotient by *modulo*
    :param max_degree: window
    :param modulo: :class:`GradedSubmodule` of *target* or None
    :return: :class:`KernelModule`
    """
    if len(degrees) != len(images):
        raise ValueError("degrees and images must have the same length.")
    images = [target.normalize(im) for im in images]
    for d, im in zip(degrees, images):
        if im and target.element_degree(im) != d:
            raise ValueError(
                "Image {} does not have degree {}.".format(
                    target.to_text(im), d))
    source = FreeModule(system, degrees)
    slices = {}
    for n in range(max_degree + 1):
        vecs = map_images(source, images, target, n, modulo)
        slices[n] = kernel_of_map(vecs, target.dim(n), system.field, n)
    sub = GradedSubmodule(source, side='left', slices=slices)
    return KernelModule(source, sub, max_degree)


def compose_image(target, coefficients):
    """
    Builds the element `sum_j c_j * e_j` where every coefficient
    is a polynomial, `coefficients` is a list of polynomials.
    """
    res = {}
    for j, p in enumerate(coefficients):
        for w, c in p.items():
            add_to(res, (j, w), c)
    return target.normalize(res)
