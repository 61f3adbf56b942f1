# coding: utf-8
"""
Presentations of connected graded algebras by generators
and homogeneous relations.
"""
from .fields import make_field, field_name, same_field, FieldMismatchError
from .polynomial import NcPolynomial
from .words import word_degree


class AlgebraPresentation:
    """
    Presentation :math:`k\\langle x_1, ..., x_n \\rangle / (r_1, ..., r_m)`.
    The order of the generators fixes the precedence of the monomial
    order, the first generator is the smallest.

    :param name: name of the algebra
    :param generators: list of names or list of `(name, weight)`
    :param relations: list of :class:`NcPolynomial
        <gcoh.algebra.polynomial.NcPolynomial>`
    :param field: field name, see :func:`make_field
        <gcoh.algebra.fields.make_field>`
    """

    def __init__(self, name, generators, relations=None, field=None):
        if not isinstance(generators, (list, tuple)):
            raise TypeError("generators must be a list.")
        self._name = name
        self._field = make_field(field)
        names = []
        weights = []
        for g in generators:
            if isinstance(g, str):
                g = (g, 1)
            if not isinstance(g, tuple) or len(g) != 2:
                raise TypeError(
                    "Unexpected generator {!r}.".format(g))
            if not isinstance(g[1], int) or g[1] < 1:
                raise ValueError(
                    "Generator {!r} must have a positive weight not {!r}, "
                    "the algebra must be connected.".format(g[0], g[1]))
            if g[0] in names:
                raise ValueError("Duplicate generator {!r}.".format(g[0]))
            names.append(g[0])
            weights.append(g[1])
        self._names = tuple(names)
        self._weights = tuple(weights)
        rels = []
        for r in relations or []:
            if not isinstance(r, NcPolynomial):
                raise TypeError(
                    "Unexpected type {} for a relation.".format(type(r)))
            self.check_polynomial(r)
            if not r:
                raise ValueError("A relation cannot be null.")
            degs = r.degrees(self._weights)
            if len(degs) != 1:
                raise ValueError(
                    "Relation {} is not homogeneous, degrees={}.".format(
                        r.to_text(self._names), sorted(degs)))
            if 0 in degs:
                raise ValueError(
                    "Relation {} has degree 0, the algebra would be "
                    "null.".format(r.to_text(self._names)))
            rels.append(r)
        self._relations = tuple(rels)

    def __repr__(self):
        return "AlgebraPresentation(%r, %r, [%s], field=%r)" % (
            self._name, list(self.generators),
            ", ".join(repr(r.to_text(self._names)) for r in self._relations),
            field_name(self._field))

    def __eq__(self, other):
        if not isinstance(other, AlgebraPresentation):
            return False
        return (self._name == other._name and
                self.generators == other.generators and
                same_field(self._field, other._field) and
                self._relations == other._relations)

    @property
    def name(self):
        "Returns the name."
        return self._name

    @property
    def field(self):
        "Returns the field."
        return self._field

    @property
    def names(self):
        "Returns the generator names."
        return self._names

    @property
    def weights(self):
        "Returns the generator weights."
        return self._weights

    @property
    def generators(self):
        "Returns the list of `(name, weight)`."
        return tuple(zip(self._names, self._weights))

    @property
    def relations(self):
        "Returns the relations."
        return self._relations

    @property
    def ngens(self):
        "Returns the number of generators."
        return len(self._names)

    def index(self, name):
        "Returns the index of a generator."
        try:
            return self._names.index(name)
        except ValueError as e:
            raise ValueError(
                "Unknown generator {!r} in algebra {!r}.".format(
                    name, self._name)) from e

    def letter(self, name):
        "Returns a generator as a polynomial."
        return NcPolynomial.monomial((self.index(name), ), 1, self._field)

    def degree(self, word):
        "Returns the degree of a word."
        return word_degree(word, self._weights)

    def max_relation_degree(self):
        "Returns the largest relation degree, 0 if there is none."
        return max([r.degree(self._weights) for r in self._relations],
                   default=0)

    def check_polynomial(self, p):
        """
        Checks a polynomial only uses known generators and
        the field of the presentation.
        """
        if not same_field(p.field, self._field):
            raise FieldMismatchError(
                "Field mismatch {} != {}.".format(
                    field_name(p.field), field_name(self._field)))
        n = len(self._names)
        for w in p.words():
            for i in w:
                if not 0 <= i < n:
                    raise ValueError(
                        "Letter index {} out of range in algebra "
                        "{!r}.".format(i, self._name))

    def polynomial_text(self, p):
        "Prints a polynomial with the generator names."
        return p.to_text(self._names, key=self.order_key)

    def order_key(self, word):
        "Degree-lexicographic key, see :class:`MonomialOrder`."
        return (self.degree(word), word)

    def with_relations(self, extra, name=None):
        """
        Returns a new presentation with additional relations,
        used to present quotients.
        """
        return AlgebraPresentation(
            name or self._name, list(self.generators),
            list(self._relations) + list(extra), self._field)

    def change_field(self, field):
        "Returns the same presentation over another field."
        return AlgebraPresentation(
            self._name, list(self.generators),
            [r.change_field(field) for r in self._relations], field)

    def to_rst(self):
        """
        Returns a string formatted in RST.
        """
        rows = [
            '*{}* over {}'.format(self._name, field_name(self._field)),
            '',
            '*Generators*',
            '']
        for n, w in self.generators:
            rows.append('* *{}*: weight {}'.format(n, w))
        rows.extend(['', '*Relations*', ''])
        for r in self._relations:
            rows.append('* ``{}``'.format(self.polynomial_text(r)))
        return '\n'.join(rows)
