"""
Unit tests for ``rewriting``.
"""
import io
import unittest
from contextlib import redirect_stdout
import numpy
from sympy.polys.matrices import DomainMatrix
from gcoh.algebra import AlgebraPresentation, NcPolynomial
from gcoh.data import load_fixture
from gcoh.parser import parse_polynomial, parse_polynomial_list
from gcoh.rewriting import (
    MonomialOrder, RewriteSystem, TruncationError, normal_form, basis,
    hilbert_function)


def presentation(names, relations, field=None):
    pres = AlgebraPresentation('A', list(names), [], field)
    return AlgebraPresentation(
        'A', list(names), parse_polynomial_list(relations, pres), field)


class TestOrder(unittest.TestCase):

    def test_deglex(self):
        order = MonomialOrder([1, 1, 1])
        self.assertEqual(order.compare((0, 1), (1, 0)), -1)
        self.assertEqual(order.compare((2, ), (0, 0)), -1)
        self.assertEqual(order.compare((1, 2), (1, 2)), 0)
        self.assertEqual(order.sort([(1, 0), (0, ), (0, 1)]),
                         [(0, ), (0, 1), (1, 0)])
        p = NcPolynomial({(0, 1): 1, (1, 0): -1})
        self.assertEqual(order.leading_word(p), (1, 0))
        self.assertRaises(ValueError, lambda: order.leading_word(p - p))

    def test_weights(self):
        order = MonomialOrder([2, 1])
        self.assertEqual(order.compare((0, ), (1, 1)), -1)
        self.assertEqual(order.compare((0, ), (1, )), 1)


class TestRewriteSystem(unittest.TestCase):

    def test_counterexample(self):
        pres = load_fixture('counterexample').algebra('C')
        C = RewriteSystem.complete(pres, 6)
        self.assertEqual(C.hilbert_function().tolist(),
                         [1, 3, 7, 15, 31, 63, 127])
        self.assertEqual(C.complete_up_to, 6)
        leads = set(r.lead for r in C.rules)
        self.assertEqual(leads, {(0, 1), (2, 1)})
        yz = parse_polynomial("y*z", pres)
        self.assertEqual(C.to_text(C.normal_form(yz)), 'z*y')
        xyz = parse_polynomial("x*y*z", pres)
        self.assertFalse(normal_form(C, xyz))
        self.assertEqual(C.diagnostics['rules_per_degree'], {2: 2})
        self.assertTrue(C.is_normal((1, 2)))
        self.assertFalse(C.is_normal((2, 2, 1)))

    def test_truncation(self):
        pres = load_fixture('counterexample').algebra('C')
        C = RewriteSystem.complete(pres, 3)
        self.assertRaises(TruncationError, lambda: C.basis(4))
        self.assertRaises(
            TruncationError,
            lambda: C.normal_form(parse_polynomial("y^4", pres)))
        self.assertRaises(ValueError,
                          lambda: RewriteSystem.complete(pres, 1))
        C.extend(4)
        self.assertEqual(C.dim(4), 31)
        self.assertRaises(TypeError, lambda: RewriteSystem('C'))

    def test_free(self):
        pres = AlgebraPresentation('F', ['x', 'y'])
        F = RewriteSystem.complete(pres, 5)
        self.assertEqual(hilbert_function(F).tolist(),
                         [2 ** n for n in range(6)])
        self.assertEqual(basis(F, 1), [(0, ), (1, )])
        self.assertEqual(F.dim(-1), 0)

    def test_weighted(self):
        pres = AlgebraPresentation('W', [('x', 1), ('y', 2)])
        W = RewriteSystem.complete(pres, 5)
        self.assertEqual(W.hilbert_function().tolist(), [1, 1, 2, 3, 5, 8])

    def test_polynomial_ring(self):
        pres = presentation('xyz', "y*x - x*y, z*x - x*z, z*y - y*z")
        A = RewriteSystem.complete(pres, 6)
        self.assertEqual(A.hilbert_function().tolist(),
                         [(n + 1) * (n + 2) // 2 for n in range(7)])
        self.assertGreater(A.diagnostics['resolved_overlaps'], 0)
        self.assertEqual(A.diagnostics['rules_per_degree'], {2: 3})

    def test_completion_adds_rules(self):
        # y^2 = x*y implies y*x^k*y = x^(k+1)*y
        pres = presentation('xy', "y^2 - x*y")
        A = RewriteSystem.complete(pres, 6)
        self.assertEqual(A.hilbert_function().tolist(),
                         [n + 1 for n in range(7)])
        self.assertEqual(A.diagnostics['rules_per_degree'],
                         {d: 1 for d in range(2, 7)})
        self.assertIn((1, 0, 0, 1), set(r.lead for r in A.rules))
        p = parse_polynomial("y*x*x*y", pres)
        self.assertEqual(A.to_text(A.normal_form(p)), 'x^3*y')

    def test_verbose(self):
        pres = presentation('xy', "y^2 - x*y")
        buf = io.StringIO()
        with redirect_stdout(buf):
            RewriteSystem.complete(pres, 4, verbose=1)
        self.assertIn('[complete] degree 3', buf.getvalue())

    def test_normal_forms_are_unique(self):
        pres = presentation('xyz', "y^2 - x*y, z*x - x*z + y*z, z^2")
        A = RewriteSystem.complete(pres, 6)
        rnd = numpy.random.RandomState(0)
        for _ in range(40):
            u, v, w = [tuple(int(i) for i in rnd.randint(0, 3, 2))
                       for _ in range(3)]
            U, V, W = [NcPolynomial.monomial(t) for t in (u, v, w)]
            self.assertEqual(A.multiply(A.multiply(U, V), W),
                             A.multiply(U, A.multiply(V, W)))
        for r in pres.relations:
            self.assertFalse(A.normal_form(r))
        for n in range(7):
            for word in A.basis(n):
                self.assertEqual(A.normal_form_word(word),
                                 {word: A.field.one})

    def test_coordinates(self):
        pres = load_fixture('counterexample').algebra('C')
        C = RewriteSystem.complete(pres, 3)
        p = parse_polynomial("2*y*z + x*y", pres)
        vec = C.vector(p)
        self.assertEqual(len(vec), 2)
        self.assertEqual(C.polynomial(vec, 2), C.normal_form(p))
        self.assertRaises(ValueError, lambda: C.to_vector({(2, 1): 1}, 2))

    def test_prime_field(self):
        pres = load_fixture('counterexample').algebra('C').change_field(7)
        C = RewriteSystem.complete(pres, 5)
        self.assertEqual(C.hilbert_function().tolist(),
                         [1, 3, 7, 15, 31, 63])

    def test_copy(self):
        pres = load_fixture('counterexample').algebra('C')
        C = RewriteSystem.complete(pres, 4)
        other = C.copy().extend(7)
        self.assertEqual(C.complete_up_to, 4)
        self.assertEqual(other.complete_up_to, 7)
        self.assertRaises(TruncationError, lambda: C.basis(5))
        self.assertEqual(other.dim(7), 255)
        self.assertIs(C.extended(3), C)
        bigger = C.extended(5)
        self.assertIsNot(bigger, C)
        self.assertEqual(bigger.dim(5), 63)
        self.assertEqual(C.complete_up_to, 4)


def words_of_degree(weights, n):
    "All words of weighted degree *n*."
    if n == 0:
        return [()]
    res = []
    for letter, w in enumerate(weights):
        if w <= n:
            res.extend((letter, ) + t
                       for t in words_of_degree(weights, n - w))
    return res


def brute_force_dim(pres, n):
    """
    Dimension of the degree *n* part of the algebra computed
    as the number of words minus the rank of the span of the
    products `u r v` in the free algebra.
    """
    weights = pres.weights
    words = words_of_degree(weights, n)
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for r in pres.relations:
        d = r.degree(weights)
        for i in range(n - d + 1):
            for u in words_of_degree(weights, i):
                for v in words_of_degree(weights, n - d - i):
                    row = {index[u + w + v]: c for w, c in r.items() if c}
                    if row:
                        rows.append(row)
    if not rows:
        return len(words)
    mat = DomainMatrix(dict(enumerate(rows)), (len(rows), len(words)),
                       pres.field)
    return len(words) - mat.rank()


class TestBruteForce(unittest.TestCase):

    def check_dims(self, pres, max_degree=6):
        A = RewriteSystem.complete(pres, max_degree)
        expected = [brute_force_dim(pres, n) for n in range(max_degree + 1)]
        self.assertEqual(A.hilbert_function().tolist(), expected)
        self.assertEqual([len(A.basis(n)) for n in range(max_degree + 1)],
                         expected)
        return expected

    def test_words(self):
        self.assertEqual(words_of_degree([1, 2], 3),
                         [(0, 0, 0), (0, 1), (1, 0)])
        self.assertEqual(len(words_of_degree([1, 1, 1], 4)), 81)

    def test_counterexample(self):
        dims = self.check_dims(load_fixture('counterexample').algebra('C'))
        self.assertEqual(dims, [2 ** (n + 1) - 1 for n in range(7)])

    def test_example42(self):
        dims = self.check_dims(load_fixture('example42').algebra('A'))
        self.assertEqual(dims[:3], [1, 3, 6])

    def test_weighted(self):
        pres = presentation([('x', 1), ('y', 2)], "y*x - x*y")
        dims = self.check_dims(pres)
        self.assertEqual(dims, [1, 1, 2, 2, 3, 3, 4])

    def test_completion_needed(self):
        pres = presentation('xyz', "y^2 - x*y, z*x - x*z + y*z, z^2")
        self.check_dims(pres, 5)
        self.check_dims(presentation('xy', "y^2 - x*y"))


if __name__ == '__main__':
    unittest.main()
