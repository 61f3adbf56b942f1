# coding: utf-8
"""
Minimal free resolutions and Betti tables.
"""
import numpy
import pandas
from .free_module import FreeModule
from .syzygy import ModulePresentation, syzygies


class CorrectnessError(RuntimeError):
    """
    Raised when a built-in consistency check fails,
    it denotes a bug, not a user error.
    """
    pass


class ResolutionStep:
    """
    One free module of a resolution and the images
    of its generators in the previous one.

    :param module: :class:`FreeModule`
    :param images: list of elements of the previous free module
    """

    def __init__(self, module, images):
        self.module = module
        self.images = images

    @property
    def degrees(self):
        "Returns the degrees of the generators."
        return list(self.module.degrees)


class BettiTable:
    """
    Dimensions of :math:`Tor_i^A(k, M)_n` for `i <= h_bound` and
    `n <= max_degree`. Entries in the last degree are flagged
    because generators of larger degree are invisible.

    :param entries: dictionary `{(i, n): dimension}`
    :param h_bound: homological bound
    :param max_degree: internal degree bound
    """

    def __init__(self, entries, h_bound, max_degree):
        self.entries = {k: int(v) for k, v in entries.items() if v}
        self.h_bound = h_bound
        self.max_degree = max_degree

    def __getitem__(self, key):
        return self.entries.get(key, 0)

    def row(self, i):
        "Returns the dimensions of homological degree *i*."
        return numpy.array([self[i, n] for n in range(self.max_degree + 1)],
                           dtype=numpy.int64)

    def is_boundary(self, i, n):
        "Tells if an entry may be incomplete."
        return n >= self.max_degree

    def to_frame(self):
        """
        Returns a :epkg:`pandas` dataframe, one row per homological
        degree, one column per internal degree.
        """
        data = numpy.vstack([self.row(i) for i in range(self.h_bound + 1)])
        df = pandas.DataFrame(data, columns=list(range(self.max_degree + 1)))
        df.index.name = 'i'
        df.columns.name = 'n'
        return df

    def to_dict(self):
        "Returns a serializable dictionary."
        return dict(h_bound=self.h_bound, max_degree=self.max_degree,
                    rows=[self.row(i).tolist()
                          for i in range(self.h_bound + 1)],
                    unconfirmed_degree=self.max_degree)

    def __repr__(self):
        return "BettiTable(h_bound=%d, max_degree=%d)\n%s" % (
            self.h_bound, self.max_degree, self.to_frame().to_string())


class MinimalResolution:
    """
    Minimal free resolution of a finitely presented module
    computed degree by degree up to a window. Step 0 is a minimal
    cover of the module, step *i* a minimal cover of the kernel
    of step *i - 1*.

    :param presentation: :class:`ModulePresentation
        <gcoh.modules.syzygy.ModulePresentation>`
    :param h_bound: last homological degree
    :param max_degree: last internal degree
    :param check: run the consistency check on cyclic modules
    :param verbose: display progress
    """

    def __init__(self, presentation, h_bound, max_degree, check=True,
                 verbose=0):
        if not isinstance(presentation, ModulePresentation):
            raise TypeError(
                "presentation must be a ModulePresentation not {}.".format(
                    type(presentation)))
        if h_bound < 0:
            raise ValueError("h_bound must be positive.")
        self.presentation = presentation
        self.h_bound = h_bound
        self.max_degree = max_degree
        system = presentation.system
        system.extend(max_degree)
        self.steps = [self._cover()]
        for i in range(1, h_bound + 1):
            prev = self.steps[-1]
            if i == 1:
                target = presentation.free_module
                modulo = presentation.relation_module
            else:
                target = self.steps[-2].module
                modulo = None
            kernel = syzygies(system, prev.degrees, prev.images, target,
                              max_degree, modulo=modulo)
            module = FreeModule(system, kernel.generator_degrees)
            self.steps.append(ResolutionStep(
                module, [g for _, g in kernel.generators]))
            if verbose:
                print("[resolution] step %d: %d generators, degrees %r" % (
                    i, module.rank, list(module.degrees)))
        if check:
            self._check_cyclic()

    def _cover(self):
        pres = self.presentation
        free = pres.free_module
        chosen = []
        for n in range(self.max_degree + 1):
            work = pres.relation_module.slice(n).copy()
            for p, (i, w) in enumerate(free.basis(n)):
                if len(w) > 0:
                    work.add({p: free.field.one})
            for i, d in enumerate(free.degrees):
                if d != n:
                    continue
                e = free.generator(i)
                if work.add(free.to_vector(e, n)):
                    chosen.append((n, e))
        module = FreeModule(pres.system, [d for d, _ in chosen])
        return ResolutionStep(module, [e for _, e in chosen])

    def _check_cyclic(self):
        pres = self.presentation
        if pres.generator_degrees != [0] or self.h_bound < 1:
            return
        if not self.steps[0].degrees:
            return
        expected = sorted(pres.relation_module.generator_degrees(
            self.max_degree))
        got = sorted(self.steps[1].degrees)
        if expected != got:
            raise CorrectnessError(
                "Betti row 1 {} differs from the minimal generators of the "
                "relations {}.".format(got, expected))

    def betti(self):
        "Returns the :class:`BettiTable`."
        entries = {}
        for i, step in enumerate(self.steps):
            for d in step.degrees:
                entries[i, d] = entries.get((i, d), 0) + 1
        return BettiTable(entries, self.h_bound, self.max_degree)

    def differential_images(self, i):
        """
        Returns the images of the generators of step *i* in step
        `i - 1` (in the free module of the presentation for `i = 0`).
        """
        return self.steps[i].images


def betti_table(presentation, h_bound=3, max_degree=10, verbose=0):
    """
    Returns the Betti table of a module, see :class:`MinimalResolution`.
    """
    return MinimalResolution(presentation, h_bound, max_degree,
                             verbose=verbose).betti()
