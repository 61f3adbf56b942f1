# coding: utf-8
"""
Noncommutative polynomials with exact coefficients.
"""
from .fields import (
    make_field, field_name, same_field, to_rational,
    convert_scalar, FieldMismatchError)
from .words import word_degree, word_to_text


class NcPolynomial:
    """
    Linear combination of words with coefficients in an exact field.
    Instances are immutable, zero coefficients are never stored.

    :param terms: dictionary `{word: coefficient}`, words are tuples
        of generator indices, coefficients are domain elements or ints
    :param field: :epkg:`sympy` domain (rationals by default)
    """

    __slots__ = ('_terms', '_field')

    def __init__(self, terms=None, field=None):
        self._field = make_field(field)
        res = {}
        if terms is not None:
            if not isinstance(terms, dict):
                raise TypeError(
                    "terms must be a dictionary not {}.".format(type(terms)))
            for w, c in terms.items():
                if not isinstance(w, tuple):
                    raise TypeError(
                        "A word must be a tuple not {}.".format(type(w)))
                if isinstance(c, int):
                    c = self._field.convert(c)
                if c:
                    res[w] = c
        self._terms = res

    @classmethod
    def _from_dict(cls, terms, field):
        "Builds a polynomial without any check, zeros must be removed."
        p = cls.__new__(cls)
        p._terms = terms
        p._field = field
        return p

    @classmethod
    def zero(cls, field=None):
        "Returns the null polynomial."
        return cls(None, field)

    @classmethod
    def one(cls, field=None):
        "Returns the unit."
        f = make_field(field)
        return cls._from_dict({(): f.one}, f)

    @classmethod
    def monomial(cls, word, coefficient=1, field=None):
        "Returns `coefficient * word`."
        return cls({tuple(word): coefficient}, field)

    @property
    def field(self):
        "Returns the coefficient field."
        return self._field

    @property
    def terms(self):
        "Returns a copy of the dictionary `{word: coefficient}`."
        return dict(self._terms)

    def items(self):
        "Iterates on `(word, coefficient)`."
        return self._terms.items()

    def words(self):
        "Returns the words with a nonzero coefficient."
        return list(self._terms)

    def coefficient(self, word):
        "Returns the coefficient of a word."
        return self._terms.get(tuple(word), self._field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return len(self._terms) > 0

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return len(self._terms) == 0
        if not isinstance(other, NcPolynomial):
            return False
        return (same_field(self._field, other._field) and
                self._terms == other._terms)

    def __hash__(self):
        return hash(frozenset(self._terms))

    def __repr__(self):
        return "NcPolynomial(%r, field=%r)" % (
            {k: to_rational(self._field, v) for k, v in self._terms.items()},
            field_name(self._field))

    def _check(self, other):
        if not isinstance(other, NcPolynomial):
            raise TypeError(
                "Unexpected type {}.".format(type(other)))
        if not same_field(self._field, other._field):
            raise FieldMismatchError(
                "Field mismatch {} != {}.".format(
                    field_name(self._field), field_name(other._field)))

    def __add__(self, other):
        self._check(other)
        res = dict(self._terms)
        for w, c in other._terms.items():
            v = res.get(w)
            if v is None:
                res[w] = c
            else:
                v = v + c
                if v:
                    res[w] = v
                else:
                    del res[w]
        return NcPolynomial._from_dict(res, self._field)

    def __neg__(self):
        return NcPolynomial._from_dict(
            {w: -c for w, c in self._terms.items()}, self._field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        "Multiplies by a scalar."
        if isinstance(c, int):
            c = self._field.convert(c)
        if not c:
            return NcPolynomial.zero(self._field)
        return NcPolynomial._from_dict(
            {w: v * c for w, v in self._terms.items()}, self._field)

    def __mul__(self, other):
        if isinstance(other, NcPolynomial):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def degrees(self, weights=None):
        "Returns the set of degrees of the words."
        return set(word_degree(w, weights) for w in self._terms)

    def degree(self, weights=None):
        """
        Returns the degree of a homogeneous polynomial,
        raises an exception if it is not homogeneous or null.
        """
        degs = self.degrees(weights)
        if len(degs) != 1:
            raise ValueError(
                "Polynomial is not homogeneous or null, degrees={}.".format(
                    sorted(degs)))
        return degs.pop()

    def is_homogeneous(self, weights=None):
        "Tells if all words share the same degree."
        return len(self.degrees(weights)) <= 1

    def graded_components(self, weights=None):
        "See :func:`graded_components`."
        return graded_components(self, weights)

    def change_field(self, field):
        "Converts the coefficients into another field."
        field = make_field(field)
        return NcPolynomial(
            {w: convert_scalar(c, self._field, field)
             for w, c in self._terms.items()}, field)

    def sorted_items(self, key=None):
        """
        Returns the terms sorted from the largest word to the smallest.

        :param key: sorting key for words, degree-lexicographic
            on raw indices by default
        """
        if key is None:
            def key(w):
                return (len(w), w)
        return sorted(self._terms.items(), key=lambda t: key(t[0]),
                      reverse=True)

    def to_text(self, names, key=None):
        """
        Returns a textual representation which the parser reads back,
        `y*z - z*y`, `3/2*x^2*z`.

        :param names: generator names
        :param key: see :meth:`sorted_items`
        """
        if not self._terms:
            return '0'
        rows = []
        for w, c in self.sorted_items(key):
            r = to_rational(self._field, c)
            negative = r < 0
            if negative:
                r = -r
            if len(w) == 0:
                text = str(r)
            elif r == 1:
                text = word_to_text(w, names)
            else:
                text = "%s*%s" % (r, word_to_text(w, names))
            if not rows:
                rows.append('-' + text if negative else text)
            else:
                rows.append(('- ' if negative else '+ ') + text)
        return " ".join(rows)


def multiply(p, q):
    """
    Multiplies two polynomials in the free algebra,
    the bilinear extension of word concatenation.
    """
    p._check(q)
    field = p._field
    res = {}
    for u, a in p._terms.items():
        for v, b in q._terms.items():
            w = u + v
            c = res.get(w)
            c = a * b if c is None else c + a * b
            if c:
                res[w] = c
            else:
                del res[w]
    return NcPolynomial._from_dict(res, field)


def graded_components(p, weights=None):
    """
    Splits a polynomial into its homogeneous components.

    :return: dictionary `{degree: NcPolynomial}`
    """
    parts = {}
    for w, c in p.items():
        parts.setdefault(word_degree(w, weights), {})[w] = c
    return {d: NcPolynomial._from_dict(t, p.field)
            for d, t in sorted(parts.items())}
