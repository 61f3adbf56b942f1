"""
Unit tests for ``linalg``.
"""
import unittest
import numpy
import sympy
from gcoh.algebra import make_field
from gcoh.linalg import (
    DegreeSlice, GradedSubspace, span_reduce, intersect, kernel_of_map,
    rank_of)

QQ = make_field('QQ')


def random_vectors(rnd, n, dim, density=0.5):
    res = []
    for _ in range(n):
        v = {}
        for k in range(dim):
            if rnd.rand() < density:
                c = int(rnd.randint(-3, 4))
                if c:
                    v[k] = QQ.convert(c)
        res.append(v)
    return res


def dense_rank(vectors, dim):
    mat = sympy.Matrix([[sympy.Rational(QQ.to_sympy(v.get(k, QQ.zero)))
                         for k in range(dim)] for v in vectors])
    return mat.rank() if vectors else 0


class TestDegreeSlice(unittest.TestCase):

    def test_add_reduce(self):
        s = DegreeSlice(3)
        self.assertTrue(s.add({0: QQ(2), 1: QQ(2)}))
        self.assertFalse(s.add({0: QQ(1), 1: QQ(1)}))
        self.assertTrue(s.add({1: QQ(1), 2: QQ(1)}))
        self.assertEqual(s.rank, 2)
        self.assertEqual(s.pivots, [0, 1])
        self.assertEqual(s.row(0), {0: QQ(1), 2: QQ(-1)})
        self.assertTrue(s.contains({0: QQ(1), 2: QQ(-1)}))
        self.assertEqual(s.reduce({2: QQ(1)}), {2: QQ(1)})
        self.assertEqual(s.reduce({0: QQ(1)}), {2: QQ(1)})
        self.assertRaises(ValueError, lambda: s.add({3: QQ(1)}))
        self.assertRaises(ValueError, lambda: DegreeSlice(-1))

    def test_rank(self):
        rnd = numpy.random.RandomState(0)
        for _ in range(10):
            vecs = random_vectors(rnd, 5, 6)
            self.assertEqual(rank_of(vecs, 6), dense_rank(vecs, 6))

    def test_reduced_rows(self):
        rnd = numpy.random.RandomState(1)
        s = span_reduce(random_vectors(rnd, 4, 7), 7)
        for p in s.pivots:
            row = s.row(p)
            self.assertEqual(min(row), p)
            self.assertEqual(row[p], QQ.one)
            for q in s.pivots:
                if q != p:
                    self.assertNotIn(q, row)

    def test_sum_complement(self):
        U = span_reduce([{0: QQ(1)}, {1: QQ(1)}], 4)
        V = span_reduce([{1: QQ(1)}, {2: QQ(1)}], 4)
        W = U.sum(V)
        self.assertEqual(W.rank, 3)
        self.assertTrue(U.is_subspace_of(W))
        self.assertFalse(W.is_subspace_of(U))
        self.assertEqual(W.quotient_dim(U), 1)
        comp = W.complement_basis(U)
        self.assertEqual(comp, [{2: QQ(1)}])
        self.assertEqual(U.rank, 2)
        self.assertEqual(U.copy(), U)
        self.assertNotEqual(U, V)
        self.assertRaises(ValueError, lambda: U.sum(DegreeSlice(3)))
        self.assertEqual(W.to_array().shape, (3, 4))

    def test_intersect(self):
        U = span_reduce([{0: QQ(1), 1: QQ(1)}, {2: QQ(1)}], 3)
        V = span_reduce([{0: QQ(1)}, {1: QQ(1), 2: QQ(1)}], 3)
        X = intersect(U, V)
        self.assertEqual(X.rank, 1)
        self.assertTrue(X.contains({0: QQ(1), 1: QQ(1), 2: QQ(1)}))

    def test_intersect_dimension(self):
        rnd = numpy.random.RandomState(2)
        for _ in range(10):
            U = span_reduce(random_vectors(rnd, 3, 5), 5)
            V = span_reduce(random_vectors(rnd, 3, 5), 5)
            X = intersect(U, V)
            self.assertEqual(X.rank, U.rank + V.rank - U.sum(V).rank)
            self.assertTrue(X.is_subspace_of(U))
            self.assertTrue(X.is_subspace_of(V))

    def test_kernel(self):
        images = [{0: QQ(1)}, {0: QQ(1)}, {1: QQ(1)}]
        K = kernel_of_map(images, 2)
        self.assertEqual(K.rank, 1)
        self.assertEqual(K.rows, [{0: QQ(1), 1: QQ(-1)}])
        self.assertRaises(ValueError,
                          lambda: kernel_of_map([{2: QQ(1)}], 2))

    def test_kernel_rank_nullity(self):
        rnd = numpy.random.RandomState(3)
        for _ in range(10):
            images = random_vectors(rnd, 6, 4)
            K = kernel_of_map(images, 4)
            self.assertEqual(K.rank + rank_of(images, 4), 6)
            for v in K.rows:
                total = {}
                for i, c in v.items():
                    for k, a in images[i].items():
                        total[k] = total.get(k, QQ.zero) + c * a
                self.assertTrue(all(not c for c in total.values()))

    def test_prime_field(self):
        F = make_field(5)
        s = DegreeSlice(2, F)
        s.add({0: F(2), 1: F(1)})
        self.assertFalse(s.add({0: F(1), 1: F(3)}))
        self.assertEqual(s.row(0), {0: F(1), 1: F(3)})


class TestGradedSubspace(unittest.TestCase):

    def test_dims(self):
        g = GradedSubspace({0: DegreeSlice(1), 2: span_reduce(
            [{0: QQ(1)}], 2)})
        self.assertEqual(g.dims().tolist(), [0, 0, 1])
        self.assertEqual(g.degrees, [0, 2])
        self.assertEqual(g.max_degree, 2)
        self.assertIn(2, g)
        self.assertEqual(len(g), 2)
        self.assertRaises(TypeError, lambda: GradedSubspace([]))


if __name__ == '__main__':
    unittest.main()
