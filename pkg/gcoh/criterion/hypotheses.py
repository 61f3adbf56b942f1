# coding: utf-8
"""
Checks the hypotheses of the decomposition criterion:
*B = C + D* as vector spaces where *C* is a subalgebra and *D* a left
ideal generated by the images of elements :math:`z_i` of *A*
satisfying :math:`z_i I = 0`. Facts the engine cannot check are
recorded as assertions.
"""
import pandas
from ..algebra.polynomial import NcPolynomial
from ..linalg.slices import DegreeSlice

#: statements attached to the known assertion keys
KNOWN_ASSERTIONS = {
    'B-coherent': 'B is graded left coherent',
    'C-noetherian': 'C is graded left Noetherian',
}


class Assertion:
    """
    A fact given by the user, it is never checked.

    :param key: key, see :data:`KNOWN_ASSERTIONS`
    :param citation: justification as written by the user
    :param statement: statement, deduced from the key if known
    """

    def __init__(self, key, citation, statement=None):
        self.key = key
        self.citation = citation
        self.statement = statement or KNOWN_ASSERTIONS.get(key, key)

    def __repr__(self):
        return "Assertion(%r, %r)" % (self.key, self.citation)

    def to_dict(self):
        "Returns a serializable dictionary."
        return dict(key=self.key, statement=self.statement,
                    citation=self.citation)


def make_assertions(pairs):
    "Converts a list of `(key, citation)` into assertions."
    return [a if isinstance(a, Assertion) else Assertion(*a) for a in pairs]


def has_assertion(assertions, key):
    "Tells if an assertion with this key was given."
    return any(a.key == key for a in assertions)


class SubalgebraSlices:
    """
    Slices of the subalgebra of *B* generated by homogeneous elements,
    :math:`C_0 = k` and :math:`C_n = \\sum_g C_{n - \\deg g} g`.

    :param system: rewriting system of *B*
    :param generators: polynomials
    """

    def __init__(self, system, generators):
        self.system = system
        self.generators = []
        for g in generators:
            g = system.normal_form(g)
            if g:
                self.generators.append((g.degree(system.weights), g))
        self._slices = {}

    def slice(self, n):
        "Returns :math:`C_n`."
        res = self._slices.get(n)
        if res is not None:
            return res
        B = self.system
        res = DegreeSlice(B.dim(n), B.field, n)
        if n == 0:
            res.add({0: B.field.one})
        else:
            for d, g in self.generators:
                if d > n:
                    continue
                for row in self.slice(n - d).rows:
                    p = B.polynomial(row, n - d)
                    res.add(B.vector(B.multiply(p, g), n))
        self._slices[n] = res
        return res


def left_span_slices(system, generators, max_degree):
    """
    Returns the span of the products `w g` of the normal words *w*
    by the generators *g*, one :class:`DegreeSlice
    <gcoh.linalg.slices.DegreeSlice>` per degree up to *max_degree*.
    """
    field = system.field
    gens = [(g.degree(system.weights), g) for g in generators if g]
    res = {}
    for n in range(max_degree + 1):
        s = DegreeSlice(system.dim(n), field, n)
        for d, g in gens:
            if d > n:
                continue
            for w in system.basis(n - d):
                s.add(system.vector(system.multiply(
                    NcPolynomial.monomial(w, field=field), g), n))
        res[n] = s
    return res


def is_left_closed(system, slices, max_degree):
    """
    Tells if the slices `{n: DegreeSlice}` are stable by left
    multiplication by the generators of the algebra,
    :math:`a S_n \\subset S_{n + \\deg a}` up to *max_degree*.
    """
    field = system.field
    for n in range(max_degree + 1):
        for letter, weight in enumerate(system.weights):
            if n + weight > max_degree:
                continue
            a = NcPolynomial.monomial((letter, ), field=field)
            target = slices[n + weight]
            for row in slices[n].rows:
                p = system.multiply(a, system.polynomial(row, n))
                if not target.contains(system.vector(p, n + weight)):
                    return False
    return True


class DecompositionReport:
    """
    Outcome of :func:`check_decomposition`.

    :param table: :epkg:`pandas` dataframe, one row per degree
    :param ideal_closed: *D* is stable by left multiplication
    :param annihilates: :math:`z_i g = 0` for every right generator
        *g* of *I*
    :param assertions: list of :class:`Assertion`
    """

    def __init__(self, table, ideal_closed, annihilates, assertions):
        self.table = table
        self.ideal_closed = ideal_closed
        self.annihilates = annihilates
        self.assertions = assertions

    @property
    def spans(self):
        "Tells if :math:`B_n = C_n + D_n` in every degree."
        return bool(self.table['spans'].all())

    @property
    def direct(self):
        "Tells if the sum is direct in every degree."
        return bool(self.table['direct'].all())

    @property
    def holds(self):
        "Tells if the three machine checks pass."
        return self.spans and self.ideal_closed and self.annihilates

    def to_dict(self):
        "Returns a serializable dictionary."
        return dict(
            spans=self.spans, direct=self.direct,
            ideal_closed=self.ideal_closed, annihilates=self.annihilates,
            dims={c: [int(v) for v in self.table[c]]
                  for c in ['B', 'C', 'D', 'C+D']},
            assertions=[a.to_dict() for a in self.assertions])


def check_decomposition(extension, subalgebra, lifts, max_degree=None,
                        assertions=None):
    """
    Checks the machine checkable hypotheses of the decomposition
    criterion in every degree up to *max_degree*.

    * :math:`B_n = C_n + D_n` (and whether the sum is direct),
    * *D* is a left ideal,
    * :math:`NF_A(z_i g) = 0` for every right generator *g* of *I*,
      enough because *I* is generated by them as a right ideal.

    :param extension: :class:`FreeExtension
        <gcoh.criterion.extension.FreeExtension>`
    :param subalgebra: generators of *C*, polynomials in *A*
        projected into *B*
    :param lifts: elements :math:`z_i` of *A*, *D* is generated
        by their images, or pairs `(z_i, d_i)` where :math:`d_i` is
        the declared generator of *D*
    :param max_degree: window, the extension window by default
    :param assertions: facts given by the user,
        list of `(key, citation)` or :class:`Assertion`
    :return: :class:`DecompositionReport`
    """
    if max_degree is None:
        max_degree = extension.max_degree
    A, B = extension.A, extension.B
    zs, dgens = [], []
    for z in lifts:
        if isinstance(z, tuple):
            z, declared = z
            if B.normal_form(z) != B.normal_form(declared):
                raise ValueError(
                    "Lift {} does not project onto {}.".format(
                        A.to_text(z), B.to_text(declared)))
        zs.append(A.normal_form(z))
        dgens.append(extension.project(z))
    sub = SubalgebraSlices(B, [extension.project(c) for c in subalgebra])
    dslices = left_span_slices(B, [d for d in dgens if d], max_degree)

    rows = []
    for n in range(max_degree + 1):
        c, d = sub.slice(n), dslices[n]
        total = c.sum(d).rank
        rows.append(dict(n=n, B=B.dim(n), C=c.rank, D=d.rank,
                         **{'C+D': total}))
    table = pandas.DataFrame(rows).set_index('n')
    table['spans'] = table['C+D'] == table['B']
    table['direct'] = table['C'] + table['D'] == table['C+D']

    closed = is_left_closed(B, dslices, max_degree)

    right = extension.right_freeness().generators
    annihilates = True
    for z in zs:
        if not z:
            continue
        for _, g in right:
            A = A.extended(z.degree(A.weights) + g.degree(A.weights))
            if A.multiply(z, g):
                annihilates = False
                break
    return DecompositionReport(
        table, bool(closed), annihilates, make_assertions(assertions or []))
