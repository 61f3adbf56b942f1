# coding: utf-8
"""
Twisting maps :math:`\\tau: B \\otimes A \\to A \\otimes B`, their
extension from generators to bases and twisted tensor products.
A tensor is a dictionary `{(word of A, word of B): coefficient}`
with normal words.
"""
import itertools
import numpy
from sympy.polys.matrices import DomainMatrix
from ..algebra.fields import same_field
from ..algebra.polynomial import NcPolynomial
from ..algebra.presentation import AlgebraPresentation
from ..linalg.slices import DegreeSlice
from ..modules.free_module import add_to
from ..modules.resolution import CorrectnessError
from ..parser.expressions import TensorValue
from ..parser.galg import format_tensor
from ..rewriting.system import RewriteSystem


class TwistConflict:
    """
    Witness of an inconsistent twisting map.

    :param degree: total degree
    :param description: equation which failed, `tau(z, x^2) via x*x`
    :param earlier: value obtained from the previous equations,
        None if the entry is not determined
    :param path: value given by this equation, None if the entry
        is not determined
    """

    def __init__(self, degree, description, earlier=None, path=None):
        self.degree = degree
        self.description = description
        self.earlier = earlier
        self.path = path

    @property
    def undetermined(self):
        "Tells if the witness is an undetermined entry."
        return self.earlier is None

    def to_text(self, left, right):
        "Prints the witness with the generator names of both factors."
        if self.undetermined:
            return "degree {}: {} is not determined".format(
                self.degree, self.description)
        field = left.field
        return "degree {}: {} gives {} but earlier paths give {}".format(
            self.degree, self.description,
            format_tensor(TensorValue(self.path, field), left, right),
            format_tensor(TensorValue(self.earlier, field), left, right))

    def __repr__(self):
        return "TwistConflict(%d, %r)" % (self.degree, self.description)


class TwistInconsistencyError(ValueError):
    """
    Raised when a product is built from an inconsistent twisting map.

    :param conflict: :class:`TwistConflict`
    :param text: printed witness
    """

    def __init__(self, conflict, text=None):
        ValueError.__init__(self, text or repr(conflict))
        self.conflict = conflict


class TwistingMap:
    """
    Twisting map given on pairs of generators.

    :param left: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>` of *A*
    :param right: :class:`RewriteSystem
        <gcoh.rewriting.system.RewriteSystem>` of *B*
    :param values: dictionary `{(letter of B, letter of A): tensor}`,
        letters are indices or names, tensors are dictionaries
        or :class:`TensorValue <gcoh.parser.expressions.TensorValue>`
    :param name: name
    """

    def __init__(self, left, right, values, name='tau'):
        if not same_field(left.field, right.field):
            raise ValueError("Both factors must share the same field.")
        self.A = left
        self.B = right
        self.name = name
        self.values = {}
        for (b, a), value in values.items():
            if isinstance(b, str):
                b = right.presentation.index(b)
            if isinstance(a, str):
                a = left.presentation.index(a)
            terms = value.terms if isinstance(value, TensorValue) else value
            self.values[b, a] = self._normalize(
                terms, right.weights[b] + left.weights[a], (b, a))
        missing = [(b, a) for b in range(right.presentation.ngens)
                   for a in range(left.presentation.ngens)
                   if (b, a) not in self.values]
        if missing:
            raise ValueError("Missing values for {}.".format(
                ", ".join("tau(%s, %s)" % (right.names[b], left.names[a])
                          for b, a in missing)))
        for b in range(right.presentation.ngens):
            if not right.is_normal((b, )):
                raise ValueError("Generator {!r} of B is not a normal "
                                 "word.".format(right.names[b]))
        for a in range(left.presentation.ngens):
            if not left.is_normal((a, )):
                raise ValueError("Generator {!r} of A is not a normal "
                                 "word.".format(left.names[a]))

    @property
    def field(self):
        "Returns the field."
        return self.A.field

    def _normalize(self, terms, degree, pair):
        A, B = self.A, self.B
        A.extend(degree)
        B.extend(degree)
        res = {}
        for (wa, wb), c in terms.items():
            c = self.field.convert(c)
            if not c:
                continue
            if A.degree(wa) + B.degree(wb) != degree:
                raise ValueError(
                    "tau({}, {}) is not homogeneous of degree {}.".format(
                        B.names[pair[0]], A.names[pair[1]], degree))
            for wa2, ca in A.normal_form_word(tuple(wa)).items():
                for wb2, cb in B.normal_form_word(tuple(wb)).items():
                    add_to(res, (wa2, wb2), c * ca * cb)
        return res

    def tensor_text(self, tensor):
        "Prints a tensor."
        return format_tensor(TensorValue(tensor, self.field),
                             self.A.presentation, self.B.presentation)

    def entry_text(self, b, a):
        "Prints `tau(b, a)` with words."
        return "tau(%s, %s)" % (
            self.B.to_text(NcPolynomial.monomial(b, field=self.field)),
            self.A.to_text(NcPolynomial.monomial(a, field=self.field)))


class TwistExtension:
    """
    Values of a twisting map on basis tensors `b x a` up to a degree.

    :param twist: :class:`TwistingMap`
    :param table: dictionary `{(b, a): tensor}` for normal words
        of positive degrees
    :param max_degree: last degree reached
    :param conflict: :class:`TwistConflict` or None
    """

    def __init__(self, twist, table, max_degree, conflict=None):
        self.twist = twist
        self.table = table
        self.max_degree = max_degree
        self.conflict = conflict

    @property
    def consistent(self):
        "Tells if the extension succeeded."
        return self.conflict is None

    def value(self, b, a):
        """
        Returns :math:`\\tau(b \\otimes a)` for normal words,
        the unit laws give the values when one word is empty.
        """
        one = self.twist.field.one
        if len(b) == 0:
            return {(a, ()): one}
        if len(a) == 0:
            return {((), b): one}
        return self.table[b, a]

    def apply(self, tensor):
        """
        Applies :math:`\\tau` to a dictionary
        `{(word of B, word of A): coefficient}`.
        """
        res = {}
        for (b, a), c in tensor.items():
            for k, v in self.value(b, a).items():
                add_to(res, k, c * v)
        return res

    def conflict_text(self):
        "Prints the witness or an empty string."
        if self.conflict is None:
            return ''
        return self.conflict.to_text(self.twist.A.presentation,
                                     self.twist.B.presentation)

    def multiply(self, x, y):
        """
        Product :math:`\\mu_\\tau` of two tensors of *A (x) B*,
        `(a b)(a' b') = a tau(b a') b'`.
        """
        A, B = self.twist.A, self.twist.B
        res = {}
        for (a1, b1), c1 in x.items():
            for (a2, b2), c2 in y.items():
                for (p, q), c in self.value(b1, a2).items():
                    for wa, ca in A.multiply_words(a1, p).items():
                        for wb, cb in B.multiply_words(q, b2).items():
                            add_to(res, (wa, wb), c1 * c2 * c * ca * cb)
        return res

    def check_units(self):
        "Checks the unit laws on every entry of the table."
        one = self.twist.field.one
        A, B = self.twist.A, self.twist.B
        for n in range(1, self.max_degree + 1):
            for w in A.basis(n):
                if self.value((), w) != {(w, ()): one}:
                    return False
            for w in B.basis(n):
                if self.value(w, ()) != {((), w): one}:
                    return False
        unit = {((), ()): one}
        for n in range(self.max_degree + 1):
            for x in _tensor_basis(A, B, n):
                t = {x: one}
                if self.multiply(unit, t) != t or self.multiply(t, unit) != t:
                    return False
        return True

    def check_hexagon(self, max_degree=None):
        """
        Evaluates both sides of the compatibility of the twisting map
        with both multiplications on every quadruple of basis words
        `(b, b', a, a')` of total degree up to *max_degree*.
        """
        if max_degree is None:
            max_degree = self.max_degree
        A, B = self.twist.A, self.twist.B
        for n in range(max_degree + 1):
            for b, b2, a, a2 in _quadruples(A, B, n):
                left = self.apply(_cross(B.multiply_words(b, b2),
                                         A.multiply_words(a, a2)))
                right = {}
                for (p, q), c in self.value(b2, a).items():
                    for (p1, q1), c1 in self.value(b, p).items():
                        for (p2, q2), c2 in self.value(q, a2).items():
                            for (p3, q3), c3 in self.value(q1, p2).items():
                                coef = c * c1 * c2 * c3
                                for wa, ca in A.multiply_words(p1, p3).items():
                                    for wb, cb in B.multiply_words(
                                            q3, q2).items():
                                        add_to(right, (wa, wb),
                                               coef * ca * cb)
                if left != right:
                    return False
        return True

    def check_associativity(self, max_degree=6):
        """
        Checks the associativity of :math:`\\mu_\\tau` on basis triples
        of total degree up to *max_degree*.
        """
        A, B = self.twist.A, self.twist.B
        one = self.twist.field.one
        max_degree = min(max_degree, self.max_degree)
        for n in range(max_degree + 1):
            for i in range(n + 1):
                for j in range(n - i + 1):
                    k = n - i - j
                    for x in _tensor_basis(A, B, i):
                        for y in _tensor_basis(A, B, j):
                            xy = self.multiply({x: one}, {y: one})
                            for z in _tensor_basis(A, B, k):
                                zt = {z: one}
                                if (self.multiply(xy, zt) !=
                                        self.multiply(
                                            {x: one},
                                            self.multiply({y: one}, zt))):
                                    return False
        return True

    def confirm(self):
        """
        Confirms the outcome of :func:`extend_twist` with equations
        built another way. A consistent extension must satisfy the
        hexagon identity and the unit laws. Otherwise, the hexagon
        system of the conflict degree (see :class:`HexagonSystem`)
        has no solution for a contradiction and several for an
        undetermined entry.
        """
        if self.consistent:
            return self.check_hexagon() and self.check_units()
        system = HexagonSystem(self, self.conflict.degree)
        if self.conflict.undetermined:
            return system.solvable and not system.unique
        return not system.solvable


class HexagonSystem:
    """
    Linear system satisfied by the values of degree *n* of a twisting
    map: the hexagon identity on every quadruple of basis words
    `(b, b', a, a')` of total degree *n*. Values on generators and
    values of lower degrees come from an extension, every other value
    of degree *n* is unknown. Every path of the hexagon goes through
    at most one unknown value so the system is linear. It is solved
    with :epkg:`sympy` matrices, independently of :func:`extend_twist`.

    :param extension: :class:`TwistExtension` known up to `n - 1`
    :param n: degree
    """

    def __init__(self, extension, n):
        if n > extension.max_degree + 1:
            raise ValueError(
                "The extension stops at degree {}, it cannot give the "
                "hexagon system of degree {}.".format(
                    extension.max_degree, n))
        twist = extension.twist
        A, B = twist.A, twist.B
        A.extend(n)
        B.extend(n)
        self.extension = extension
        self.n = n
        self.unknowns = [(b, a) for i in range(1, n) for b in B.basis(i)
                         for a in A.basis(n - i)
                         if len(b) > 1 or len(a) > 1]
        self.targets = _tensor_basis(A, B, n)
        self.variables = {
            key: k for k, key in enumerate(
                itertools.product(self.unknowns, self.targets))}
        self.rows = self._build()
        self._ranks = None

    def _value(self, b, a):
        "Returns a list of `(coefficient, tensor, variable or None)`."
        twist = self.extension.twist
        one = twist.field.one
        if len(b) == 0:
            return [(one, (a, ()), None)]
        if len(a) == 0:
            return [(one, ((), b), None)]
        if len(b) == 1 and len(a) == 1:
            return [(c, t, None) for t, c in twist.values[b[0], a[0]].items()]
        if twist.B.degree(b) + twist.A.degree(a) < self.n:
            return [(c, t, None)
                    for t, c in self.extension.table[b, a].items()]
        return [(one, t, self.variables[(b, a), t]) for t in self.targets]

    def _equation(self, b, b2, a, a2):
        A, B = self.extension.twist.A, self.extension.twist.B
        res = {}
        for wb, cb in B.multiply_words(b, b2).items():
            for wa, ca in A.multiply_words(a, a2).items():
                for c, t, v in self._value(wb, wa):
                    add_to(res, (t, v), cb * ca * c)
        for c, (p, q), v in self._value(b2, a):
            for c1, (p1, q1), v1 in self._value(b, p):
                for c2, (p2, q2), v2 in self._value(q, a2):
                    for c3, (p3, q3), v3 in self._value(q1, p2):
                        found = [x for x in (v, v1, v2, v3) if x is not None]
                        if len(found) > 1:
                            raise RuntimeError(
                                "Two unknown values on the same path.")
                        var = found[0] if found else None
                        coef = c * c1 * c2 * c3
                        for wa, ca in A.multiply_words(p1, p3).items():
                            for wb, cb in B.multiply_words(q3, q2).items():
                                add_to(res, ((wa, wb), var), -coef * ca * cb)
        return res

    def _build(self):
        A, B = self.extension.twist.A, self.extension.twist.B
        nvars = len(self.variables)
        rows = {}
        for quad in _quadruples(A, B, self.n):
            for (t, var), c in self._equation(*quad).items():
                if not c:
                    continue
                row = rows.setdefault((quad, t), {})
                # the constant goes to the right side
                if var is None:
                    add_to(row, nvars, -c)
                else:
                    add_to(row, var, c)
        return [r for r in rows.values() if r]

    def ranks(self):
        """
        Returns the rank of the matrix of the system and the rank
        of the augmented matrix.
        """
        if self._ranks is None:
            field = self.extension.twist.field
            nvars = len(self.variables)
            aug = {i: dict(r) for i, r in enumerate(self.rows)}
            mat = {i: {k: c for k, c in r.items() if k < nvars}
                   for i, r in enumerate(self.rows)}
            mat = {i: r for i, r in mat.items() if r}
            nrows = len(self.rows)
            self._ranks = (
                DomainMatrix(mat, (nrows, nvars), field).rank(),
                DomainMatrix(aug, (nrows, nvars + 1), field).rank())
        return self._ranks

    @property
    def solvable(self):
        "Tells if the system has a solution."
        rank, augmented = self.ranks()
        return rank == augmented

    @property
    def unique(self):
        "Tells if the system has at most one solution."
        return self.ranks()[0] == len(self.variables)


def _cross(bterms, aterms):
    return {(b, a): cb * ca for b, cb in bterms.items()
            for a, ca in aterms.items()}


def _tensor_basis(A, B, n):
    "Basis of :math:`(A \\otimes B)_n`, pairs `(a, b)`."
    res = []
    for i in range(n + 1):
        for a in A.basis(i):
            for b in B.basis(n - i):
                res.append((a, b))
    return res


def _quadruples(A, B, n):
    for i in range(n + 1):
        for j in range(n - i + 1):
            for k in range(n - i - j + 1):
                m = n - i - j - k
                for b in B.basis(i):
                    for b2 in B.basis(j):
                        for a in A.basis(k):
                            for a2 in A.basis(m):
                                yield b, b2, a, a2


class _DegreeEquations:
    """
    Linear system satisfied by the unknown values of degree *n*,
    unknowns come first in the augmented coordinates so that
    reduced rows start with them.
    """

    def __init__(self, twist, known, n):
        A, B = twist.A, twist.B
        self.twist = twist
        self.known = known
        self.n = n
        self.unknowns = [(b, a) for i in range(1, n)
                         for b in B.basis(i) for a in A.basis(n - i)]
        self.uindex = {u: p for p, u in enumerate(self.unknowns)}
        self.targets = _tensor_basis(A, B, n)
        self.tindex = {t: p for p, t in enumerate(self.targets)}
        self.shift = len(self.unknowns)
        self.space = DegreeSlice(self.shift + len(self.targets),
                                 twist.field, n)

    def value(self, b, a):
        one = self.twist.field.one
        if len(b) == 0:
            return {(a, ()): one}
        if len(a) == 0:
            return {((), b): one}
        return self.known[b, a]

    def row(self, lhs, rhs):
        """
        Builds the augmented row of `sum lhs[u] X(u) = rhs`,
        *rhs* is a tensor.
        """
        row = {}
        for u, c in lhs.items():
            add_to(row, self.uindex[u], c)
        for t, c in rhs.items():
            add_to(row, self.shift + self.tindex[t], c)
        return row

    def tensor(self, vec):
        return {self.targets[k - self.shift]: c for k, c in vec.items()}

    def add(self, lhs, rhs, description):
        """
        Adds an equation, returns a :class:`TwistConflict` if it
        contradicts the previous ones.
        """
        row = self.row(lhs, rhs)
        rem = self.space.reduce(row)
        if not rem:
            return None
        if min(rem) < self.shift:
            self.space.add(row)
            return None
        path = self.tensor({k: c for k, c in row.items()
                            if k >= self.shift})
        leftover = self.tensor(rem)
        earlier = dict(path)
        for k, c in leftover.items():
            add_to(earlier, k, -c)
        return TwistConflict(self.n, description, earlier, path)

    def given(self, b, a):
        "Equation fixing the value on a pair of generators."
        return ({(b, a): self.twist.field.one},
                self.twist.values[b[0], a[0]])

    def split_left(self, b, u, v):
        """
        `tau(b x uv) = sum c (p x 1) tau(q x v)` where
        `tau(b x u) = sum c p x q`.
        """
        A, B = self.twist.A, self.twist.B
        lhs = {}
        for w, c in A.multiply_words(u, v).items():
            add_to(lhs, (b, w), c)
        rhs = {}
        for (p, q), c in self.value(b, u).items():
            if len(p) == 0 and len(q) > 0:
                add_to(lhs, (q, v), -c)
                continue
            for (p2, q2), c2 in self.value(q, v).items():
                for wa, ca in A.multiply_words(p, p2).items():
                    add_to(rhs, (wa, q2), c * c2 * ca)
        return lhs, rhs

    def split_right(self, s, t, a):
        """
        `tau(st x a) = sum c tau(s x p) (1 x q)` where
        `tau(t x a) = sum c p x q`.
        """
        A, B = self.twist.A, self.twist.B
        lhs = {}
        for w, c in B.multiply_words(s, t).items():
            add_to(lhs, (w, a), c)
        rhs = {}
        for (p, q), c in self.value(t, a).items():
            if len(q) == 0 and len(p) > 0:
                add_to(lhs, (s, p), -c)
                continue
            for (p2, q2), c2 in self.value(s, p).items():
                for wb, cb in B.multiply_words(q2, q).items():
                    add_to(rhs, (p2, wb), c * c2 * cb)
        return lhs, rhs

    def solution(self):
        """
        Returns the values of the unknowns or the first undetermined
        one as a :class:`TwistConflict`.
        """
        res = {}
        for p, u in enumerate(self.unknowns):
            row = self.space.row(p) if p in self.space.pivots else None
            if row is None or any(k < self.shift and k != p for k in row):
                return None, TwistConflict(
                    self.n, self.twist.entry_text(*u))
            res[u] = self.tensor({k: c for k, c in row.items()
                                  if k >= self.shift})
        return res, None


def _splits(system, n):
    "Pairs of normal words `(u, v)` of positive degrees with total *n*."
    for i in range(1, n):
        for u in system.basis(i):
            for v in system.basis(n - i):
                yield u, v


def extend_twist(twist, max_degree, verbose=0):
    """
    Extends a twisting map to every pair of basis words of total
    degree up to *max_degree*. In every degree, the values are
    the solution of the equations given by the values on generators,
    the compatibility with the multiplication of *A* for a fixed *b*
    (`tau(b x uv)`) and the one with the multiplication of *B*
    (`tau(st x a)`). The equations are added in that order, the first
    one contradicting the previous ones is the conflict.

    :param twist: :class:`TwistingMap`
    :param max_degree: last total degree
    :param verbose: display progress
    :return: :class:`TwistExtension`
    """
    A, B = twist.A, twist.B
    A.extend(max_degree)
    B.extend(max_degree)
    nA, nB = A.presentation.ngens, B.presentation.ngens
    table = {}
    for n in range(2, max_degree + 1):
        eq = _DegreeEquations(twist, table, n)
        conflict = None
        for b in range(nB):
            for a in range(nA):
                if B.weights[b] + A.weights[a] != n:
                    continue
                lhs, rhs = eq.given((b, ), (a, ))
                conflict = eq.add(lhs, rhs, eq.twist.entry_text((b, ), (a, )))
                if conflict is not None:
                    break
            if conflict is not None:
                break
        if conflict is None:
            for i in range(1, n):
                for b in B.basis(i):
                    for u, v in _splits(A, n - i):
                        lhs, rhs = eq.split_left(b, u, v)
                        conflict = eq.add(lhs, rhs, "%s via %s * %s" % (
                            twist.entry_text(b, u + v), A.to_text(
                                NcPolynomial.monomial(u, field=A.field)),
                            A.to_text(NcPolynomial.monomial(
                                v, field=A.field))))
                        if conflict is not None:
                            break
                    if conflict is not None:
                        break
                if conflict is not None:
                    break
        if conflict is None:
            for k in range(1, n):
                for a in A.basis(k):
                    for s, t in _splits(B, n - k):
                        lhs, rhs = eq.split_right(s, t, a)
                        conflict = eq.add(lhs, rhs, "%s via %s * %s" % (
                            twist.entry_text(s + t, a), B.to_text(
                                NcPolynomial.monomial(s, field=B.field)),
                            B.to_text(NcPolynomial.monomial(
                                t, field=B.field))))
                        if conflict is not None:
                            break
                    if conflict is not None:
                        break
                if conflict is not None:
                    break
        if conflict is None:
            values, conflict = eq.solution()
        if conflict is not None:
            if verbose:
                print("[twist] degree %d: conflict %s" % (
                    n, conflict.description))
            return TwistExtension(twist, table, n - 1, conflict)
        table.update(values)
        if verbose:
            print("[twist] degree %d: %d entries" % (n, len(values)))
    return TwistExtension(twist, table, max_degree)


class TwistedProduct:
    """
    Twisted tensor product :math:`A \\otimes_\\tau B`.

    :param extension: :class:`TwistExtension`
    :param presentation: :class:`AlgebraPresentation
        <gcoh.algebra.presentation.AlgebraPresentation>`
    :param system: completed rewriting system
    """

    def __init__(self, extension, presentation, system):
        self.extension = extension
        self.presentation = presentation
        self.system = system

    @property
    def twist(self):
        "Returns the twisting map."
        return self.extension.twist

    @property
    def max_degree(self):
        "Returns the window."
        return self.extension.max_degree

    def expected_dims(self):
        "Returns :math:`\\sum_i \\dim A_i \\dim B_{n-i}`."
        D = self.max_degree
        hA = self.twist.A.hilbert_function(D)
        hB = self.twist.B.hilbert_function(D)
        return numpy.convolve(hA, hB)[:D + 1]

    def dims(self):
        "Returns the Hilbert function of the product."
        return self.system.hilbert_function(self.max_degree)

    def from_tensor(self, tensor):
        "Converts a tensor of *A (x) B* into a polynomial of the product."
        shift = self.twist.A.presentation.ngens
        terms = {}
        for (wa, wb), c in tensor.items():
            add_to(terms, wa + tuple(i + shift for i in wb), c)
        return NcPolynomial(terms, self.system.field)


def _product_presentation(twist, name=None):
    A, B = twist.A.presentation, twist.B.presentation
    shift = A.ngens
    field = A.field
    gens = list(A.generators) + list(B.generators)
    relations = list(A.relations)
    for r in B.relations:
        relations.append(NcPolynomial(
            {tuple(i + shift for i in w): c for w, c in r.items()}, field))
    for (b, a), tensor in sorted(twist.values.items()):
        terms = {(b + shift, a): field.one}
        for (wa, wb), c in tensor.items():
            add_to(terms, wa + tuple(i + shift for i in wb), -c)
        if terms:
            relations.append(NcPolynomial(terms, field))
    return AlgebraPresentation(
        name or "{}_{}".format(A.name, B.name), gens, relations, field)


def build_product(twist, max_degree, name=None, verbose=0):
    """
    Builds the twisted tensor product: generators of *A* then
    generators of *B*, relations of both factors and
    `b a - tau(b x a)` for every pair of generators. The Hilbert
    function is compared with the one of the tensor product.

    :param twist: :class:`TwistingMap` or :class:`TwistExtension`
    :param max_degree: window
    :param name: name of the product
    :param verbose: display progress
    :return: :class:`TwistedProduct`
    :raises TwistInconsistencyError: the twisting map is inconsistent
    :raises CorrectnessError: the Hilbert functions differ
    """
    if isinstance(twist, TwistExtension):
        ext = twist
        if ext.consistent and ext.max_degree < max_degree:
            ext = extend_twist(ext.twist, max_degree, verbose=verbose)
    else:
        ext = extend_twist(twist, max_degree, verbose=verbose)
    if not ext.consistent:
        raise TwistInconsistencyError(ext.conflict, ext.conflict_text())
    pres = _product_presentation(ext.twist, name)
    system = RewriteSystem.complete(pres, max_degree, verbose=verbose)
    prod = TwistedProduct(ext, pres, system)
    got, expected = prod.dims(), prod.expected_dims()
    if not numpy.array_equal(got, expected):
        raise CorrectnessError(
            "Hilbert function {} differs from the tensor product {}.".format(
                got.tolist(), expected.tolist()))
    return prod


def twisting_map_from_spec(document, name=None):
    """
    Builds a :class:`TwistingMap` from a parsed document.

    :param document: :class:`GalgDocument
        <gcoh.parser.galg.GalgDocument>`
    :param name: name of the twist block, the first one if None
    """
    spec = document.twist(name)
    left = RewriteSystem(document.algebra(spec.left))
    right = RewriteSystem(document.algebra(spec.right))
    return TwistingMap(left, right, spec.values, name=spec.name)
