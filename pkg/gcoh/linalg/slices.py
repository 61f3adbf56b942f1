# coding: utf-8
"""
Exact row-reduced subspaces of one degree component.
Vectors are sparse dictionaries `{column: coefficient}`.
"""
import numpy
from ..algebra.fields import make_field, field_name, same_field


def _check_vector(v, dim):
    for k in v:
        if not 0 <= k < dim:
            raise ValueError(
                "Coordinate {} out of range, ambient dimension is {}.".format(
                    k, dim))


def _add_multiple(target, c, row):
    "target -= c * row, in place."
    for k, a in row.items():
        v = target.get(k)
        if v is None:
            target[k] = -c * a
        else:
            v = v - c * a
            if v:
                target[k] = v
            else:
                del target[k]


class DegreeSlice:
    """
    Subspace of a degree component stored as a reduced row echelon
    form. Pivots are the leftmost nonzero coordinates and every row
    is normalized so that its pivot is one.

    :param dim: dimension of the ambient space (number of coordinates)
    :param field: coefficient field
    :param degree: degree the slice lives in (informative)
    """

    def __init__(self, dim, field=None, degree=None):
        if dim < 0:
            raise ValueError("Dimension must be positive.")
        self._dim = dim
        self._field = make_field(field)
        self._degree = degree
        self._rows = {}

    def __repr__(self):
        return "DegreeSlice(dim=%d, rank=%d, degree=%r, field=%r)" % (
            self._dim, len(self._rows), self._degree,
            field_name(self._field))

    @property
    def dim(self):
        "Returns the ambient dimension."
        return self._dim

    @property
    def field(self):
        "Returns the field."
        return self._field

    @property
    def degree(self):
        "Returns the degree."
        return self._degree

    @property
    def rank(self):
        "Returns the dimension of the subspace."
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self):
        "Returns the sorted pivot columns."
        return sorted(self._rows)

    @property
    def rows(self):
        "Returns the rows sorted by pivot, they must not be modified."
        return [self._rows[p] for p in sorted(self._rows)]

    def row(self, pivot):
        "Returns the row whose pivot is *pivot*."
        return self._rows[pivot]

    def copy(self):
        "Returns a copy."
        cp = DegreeSlice(self._dim, self._field, self._degree)
        cp._rows = {p: dict(r) for p, r in self._rows.items()}
        return cp

    def reduce(self, v):
        """
        Returns the remainder of *v* modulo the subspace, a vector
        without any coordinate on a pivot column. The remainder is
        the canonical representative of the coset of *v*.
        """
        res = dict(v)
        for p in sorted(k for k in v if k in self._rows):
            c = res.get(p)
            if c:
                _add_multiple(res, c, self._rows[p])
        return res

    def contains(self, v):
        "Tells if *v* belongs to the subspace."
        return len(self.reduce(v)) == 0

    def add(self, v):
        """
        Adds a vector to the subspace and keeps the rows reduced.

        :return: True if the rank increased
        """
        _check_vector(v, self._dim)
        r = self.reduce(v)
        if not r:
            return False
        self._insert_reduced(r)
        return True

    def _insert_reduced(self, r):
        p = min(r)
        inv = self._field.one / r[p]
        row = {k: c * inv for k, c in r.items()}
        for other in self._rows.values():
            c = other.get(p)
            if c:
                _add_multiple(other, c, row)
        self._rows[p] = row

    def extend(self, vectors):
        "Adds several vectors, returns the number of new pivots."
        return sum(1 for v in vectors if self.add(v))

    def is_subspace_of(self, other):
        "Tells if this subspace is included in *other*."
        self._check_ambient(other)
        return all(other.contains(r) for r in self._rows.values())

    def __eq__(self, other):
        if not isinstance(other, DegreeSlice):
            return False
        return (self._dim == other._dim and
                same_field(self._field, other._field) and
                self._rows == other._rows)

    def _check_ambient(self, other):
        if self._dim != other._dim:
            raise ValueError(
                "Ambient mismatch {} != {}.".format(self._dim, other._dim))
        if not same_field(self._field, other._field):
            raise ValueError(
                "Field mismatch {} != {}.".format(
                    field_name(self._field), field_name(other._field)))

    def sum(self, other):
        "Returns the sum of two subspaces."
        self._check_ambient(other)
        res = self.copy()
        res.extend(other.rows)
        return res

    def quotient_dim(self, sub):
        """
        Returns the dimension of this subspace modulo *sub*,
        *sub* must be included in this one.
        """
        self._check_ambient(sub)
        return self.rank - sub.rank

    def complement_basis(self, sub):
        """
        Returns the vectors of this subspace, taken among its rows in
        pivot order, which complete a basis of *sub* into a basis of
        this subspace. *sub* is not modified.
        """
        self._check_ambient(sub)
        work = sub.copy()
        res = []
        for r in self.rows:
            if work.add(r):
                res.append(r)
        return res

    def to_array(self):
        "Returns the rows as a dense :epkg:`numpy` array of objects."
        res = numpy.full((self.rank, self._dim), self._field.zero,
                         dtype=object)
        for i, r in enumerate(self.rows):
            for k, c in r.items():
                res[i, k] = c
        return res


def span_reduce(vectors, dim, field=None, degree=None):
    """
    Returns the reduced row echelon form of the span of *vectors*.

    :param vectors: list of sparse vectors
    :param dim: ambient dimension
    :param field: field
    :param degree: degree the slice lives in
    :return: :class:`DegreeSlice`
    """
    res = DegreeSlice(dim, field, degree)
    res.extend(vectors)
    return res


def intersect(U, V):
    """
    Intersects two subspaces with the Zassenhaus algorithm,
    rows `(u | u)` and `(v | 0)` are reduced together, the rows
    left with a null first half span the intersection.
    """
    U._check_ambient(V)
    m = U.dim
    work = DegreeSlice(2 * m, U.field)
    for u in U.rows:
        w = dict(u)
        w.update({k + m: c for k, c in u.items()})
        work.add(w)
    for v in V.rows:
        work.add(v)
    res = DegreeSlice(m, U.field, U.degree)
    for p in work.pivots:
        if p >= m:
            res.add({k - m: c for k, c in work.row(p).items()})
    return res


def kernel_of_map(images, target_dim, field=None, degree=None):
    """
    Returns the kernel of a linear map given by the images
    of the source basis vectors.

    :param images: list of sparse vectors in the target space,
        the i-th one is the image of the i-th source basis vector
    :param target_dim: dimension of the target space
    :param field: field
    :param degree: degree of the source slice
    :return: :class:`DegreeSlice` in source coordinates
    """
    t = target_dim
    s = len(images)
    work = DegreeSlice(t + s, field)
    for i, img in enumerate(images):
        _check_vector(img, t)
        v = dict(img)
        v[t + i] = work.field.one
        work.add(v)
    res = DegreeSlice(s, field, degree)
    for p in work.pivots:
        if p >= t:
            res.add({k - t: c for k, c in work.row(p).items()})
    return res


def rank_of(vectors, dim, field=None):
    "Returns the rank of a list of sparse vectors."
    return span_reduce(vectors, dim, field).rank
