# coding: utf-8
"""
Finite free graded modules over a completed algebra.
"""
from ..algebra.polynomial import NcPolynomial


def add_to(target, key, c):
    "Adds *c* to `target[key]`, removes the key if the sum is null."
    v = target.get(key)
    if v is None:
        target[key] = c
    else:
        v = v + c
        if v:
            target[key] = v
        else:
            del target[key]


class FreeModule:
    """
    Free module :math:`\\oplus_i A(-d_i)`, the coordinates of degree *n*
    are the pairs `(i, w)` where *w* is a normal word of degree
    :math:`n - d_i`. Elements are dictionaries `{(i, w): coefficient}`.
    The module is a left module, it is also a right module
    componentwise, which is used for ideals.

    :param system: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>`
    :param degrees: list of the degrees :math:`d_i`
    """

    def __init__(self, system, degrees):
        for d in degrees:
            if not isinstance(d, int) or d < 0:
                raise ValueError(
                    "Degrees must be nonnegative integers not {!r}.".format(d))
        self.system = system
        self.degrees = tuple(degrees)
        self._basis = {}
        self._index = {}

    def __repr__(self):
        return "FreeModule(%r, %r)" % (self.system.presentation.name,
                                       list(self.degrees))

    @property
    def rank(self):
        "Returns the number of free generators."
        return len(self.degrees)

    @property
    def field(self):
        "Returns the field."
        return self.system.field

    def basis(self, n):
        "Returns the list of coordinates `(i, w)` in degree *n*."
        res = self._basis.get(n)
        if res is None:
            res = []
            for i, d in enumerate(self.degrees):
                if d <= n:
                    res.extend((i, w) for w in self.system.basis(n - d))
            self._basis[n] = res
        return res

    def index(self, n):
        "Returns the dictionary `{(i, w): position}`."
        res = self._index.get(n)
        if res is None:
            res = {k: p for p, k in enumerate(self.basis(n))}
            self._index[n] = res
        return res

    def dim(self, n):
        "Returns the dimension of the degree *n* component."
        return len(self.basis(n))

    def element_degree(self, element):
        "Returns the degree of a homogeneous element."
        degs = set(self.degrees[i] + self.system.degree(w)
                   for i, w in element)
        if len(degs) != 1:
            raise ValueError(
                "Element is null or not homogeneous, degrees={}.".format(
                    sorted(degs)))
        return degs.pop()

    def to_vector(self, element, n):
        "Converts a normalized element into coordinates."
        index = self.index(n)
        return {index[k]: c for k, c in element.items()}

    def to_element(self, vec, n):
        "Converts coordinates into an element."
        basis = self.basis(n)
        return {basis[k]: c for k, c in vec.items()}

    def generator(self, i):
        "Returns the i-th free generator."
        return {(i, ()): self.field.one}

    def normalize(self, element):
        "Reduces every component to its normal form."
        res = {}
        for (i, w), c in element.items():
            for w2, c2 in self.system.normal_form_word(w).items():
                add_to(res, (i, w2), c * c2)
        return res

    def left_multiply(self, word, element):
        "Returns `word * element`, normalized."
        res = {}
        for (i, w), c in element.items():
            for w2, c2 in self.system.multiply_words(word, w).items():
                add_to(res, (i, w2), c * c2)
        return res

    def right_multiply(self, element, word):
        "Returns `element * word`, normalized componentwise."
        res = {}
        for (i, w), c in element.items():
            for w2, c2 in self.system.multiply_words(w, word).items():
                add_to(res, (i, w2), c * c2)
        return res

    def left_multiply_poly(self, poly, element):
        "Returns `poly * element` for a polynomial *poly*."
        res = {}
        for word, c in poly.items():
            for k, v in self.left_multiply(word, element).items():
                add_to(res, k, c * v)
        return res

    def act(self, letter, vec, n, side='left'):
        """
        Multiplies a vector of degree *n* by a generator.

        :param letter: generator index
        :param vec: coordinates in degree *n*
        :param n: degree
        :param side: `'left'` or `'right'`
        :return: coordinates in degree `n + weight(letter)`
        """
        element = self.to_element(vec, n)
        if side == 'left':
            res = self.left_multiply((letter, ), element)
        else:
            res = self.right_multiply(element, (letter, ))
        return self.to_vector(res, n + self.system.weights[letter])

    def to_text(self, element):
        "Prints an element, `(x*y, 0, -z)`."
        parts = []
        for i in range(self.rank):
            comp = {w: c for (j, w), c in element.items() if j == i}
            parts.append(self.system.to_text(
                NcPolynomial._from_dict(comp, self.field)))
        return "(%s)" % ", ".join(parts)
