"""
Unit tests for ``twist``.
"""
import io
import unittest
from contextlib import redirect_stdout
from gcoh.algebra import make_field
from gcoh.data import load_fixture
from gcoh.parser import parse_polynomial
from gcoh.rewriting import RewriteSystem
from gcoh.twist import (
    HexagonSystem, TwistInconsistencyError, TwistingMap, extend_twist,
    build_product, twisting_map_from_spec, family_twist,
    polynomial_ring_xy, polynomial_ring_z, zero_twist_family,
    FAMILY_ASSERTIONS)


def fixture_twist(name):
    return twisting_map_from_spec(load_fixture('twists'), name)


def triangular(D):
    return [(n + 1) * (n + 2) // 2 for n in range(D + 1)]


class TestTwistingMap(unittest.TestCase):

    def test_values(self):
        flip = fixture_twist('flip')
        self.assertEqual(flip.name, 'flip')
        self.assertEqual(flip.values[0, 0], {((0, ), (0, )): flip.field.one})
        self.assertEqual(flip.entry_text((0, ), (0, 1)), 'tau(z, x*y)')
        self.assertEqual(flip.tensor_text(flip.values[0, 1]), 'y # z')
        zero = fixture_twist('zero')
        self.assertEqual(zero.values[0, 1], {})

    def test_errors(self):
        A = RewriteSystem(polynomial_ring_xy())
        B = RewriteSystem(polynomial_ring_z())
        self.assertRaises(
            ValueError, lambda: TwistingMap(A, B, {('z', 'x'): {}}))
        self.assertRaises(
            ValueError,
            lambda: TwistingMap(A, B, {('z', 'x'): {((0, ), ()): 1},
                                       ('z', 'y'): {}}))
        B7 = RewriteSystem(polynomial_ring_z(make_field(7)))
        self.assertRaises(
            ValueError,
            lambda: TwistingMap(A, B7, {('z', 'x'): {}, ('z', 'y'): {}}))


class TestExtension(unittest.TestCase):

    def test_flip(self):
        buf = io.StringIO()
        with redirect_stdout(buf):
            ext = extend_twist(fixture_twist('flip'), 4, verbose=1)
        self.assertIn('[twist] degree 2:', buf.getvalue())
        self.assertTrue(ext.consistent)
        self.assertEqual(ext.conflict_text(), '')
        one = ext.twist.field.one
        self.assertEqual(ext.value((0, 0), (0, 1)),
                         {((0, 1), (0, 0)): one})
        self.assertEqual(ext.value((), (1, )), {((1, ), ()): one})
        self.assertTrue(ext.check_units())
        self.assertTrue(ext.check_hexagon())
        self.assertTrue(ext.check_associativity(3))

    def test_zero(self):
        ext = extend_twist(fixture_twist('zero'), 4)
        self.assertTrue(ext.consistent)
        self.assertEqual(ext.value((0, ), (0, 1)), {})
        self.assertEqual(ext.value((0, 0), (1, )), {})
        self.assertTrue(ext.check_hexagon())

    def test_inconsistent(self):
        ext = extend_twist(fixture_twist('inconsistent'), 5)
        self.assertFalse(ext.consistent)
        self.assertEqual(ext.conflict.degree, 3)
        self.assertEqual(ext.max_degree, 2)
        self.assertEqual(ext.conflict.description,
                         'tau(z, x*y) via y * x')
        self.assertFalse(ext.conflict.undetermined)
        text = ext.conflict_text()
        self.assertTrue(text.startswith('degree 3: tau(z, x*y) via y * x'))
        self.assertIn('gives', text)
        with self.assertRaises(TwistInconsistencyError) as e:
            build_product(fixture_twist('inconsistent'), 5)
        self.assertEqual(e.exception.conflict.degree, 3)

    def test_fixtures(self):
        for name in ['zero', 'flip', 'commuting', 'inconsistent', 'broken']:
            ext = extend_twist(fixture_twist(name), 4)
            if ext.consistent:
                self.assertTrue(ext.check_hexagon(), name)
                self.assertTrue(ext.check_units(), name)
            else:
                self.assertTrue(ext.conflict_text(), name)
            self.assertTrue(ext.confirm(), name)

    def test_hexagon_system(self):
        ext = extend_twist(fixture_twist('inconsistent'), 4)
        system = HexagonSystem(ext, 3)
        self.assertTrue(system.rows)
        self.assertFalse(system.solvable)
        flip = HexagonSystem(extend_twist(fixture_twist('flip'), 4), 3)
        self.assertTrue(flip.solvable)
        self.assertTrue(flip.unique)
        self.assertRaises(ValueError, lambda: HexagonSystem(ext, 5))

    def test_hexagon_family(self):
        ext = extend_twist(family_twist(1, 0, 0), 4)
        self.assertFalse(ext.consistent)
        self.assertEqual(ext.conflict.degree, 3)
        self.assertTrue(ext.confirm())
        self.assertFalse(HexagonSystem(ext, 3).solvable)
        broken = extend_twist(fixture_twist('broken'), 4)
        self.assertFalse(broken.consistent)
        self.assertTrue(broken.confirm())


class TestProduct(unittest.TestCase):

    def test_flip(self):
        prod = build_product(fixture_twist('flip'), 5)
        self.assertEqual(prod.presentation.names, ('x', 'y', 'z'))
        self.assertEqual(prod.dims().tolist(), triangular(5))
        self.assertEqual(prod.expected_dims().tolist(), triangular(5))
        pres = prod.presentation
        zx = parse_polynomial("z*x", pres)
        self.assertEqual(prod.system.to_text(prod.system.normal_form(zx)),
                         'x*z')

    def test_commuting(self):
        prod = build_product(fixture_twist('commuting'), 4, name='comm')
        self.assertEqual(prod.presentation.name, 'comm')
        self.assertEqual(prod.dims().tolist(), triangular(4))
        zx = parse_polynomial("z*x", prod.presentation)
        self.assertFalse(prod.system.normal_form(zx))
        p = prod.from_tensor({((0, ), (0, )): prod.system.field.one})
        self.assertEqual(prod.system.to_text(p), 'x*z')

    def test_extension_reused(self):
        ext = extend_twist(fixture_twist('zero'), 3)
        prod = build_product(ext, 5)
        self.assertEqual(prod.max_degree, 5)
        self.assertEqual(prod.dims().tolist(), triangular(5))


class TestFamily(unittest.TestCase):

    def test_zero(self):
        res = zero_twist_family(0, 0, 0, max_degree=4, h_bound=2,
                                battery_limit=2)
        self.assertEqual(res.product.dims().tolist(), triangular(4))
        self.assertTrue(res.decomposition.holds)
        self.assertTrue(res.decomposition.direct)
        self.assertEqual([r.ideal.label for r in res.report.results],
                         ['A*x', 'A*y'])
        self.assertEqual(res.report.verdict, 'evidence-positive')
        self.assertEqual([a.key for a in res.report.assertions],
                         [a.key for a in FAMILY_ASSERTIONS])
        system = res.product.system
        for text in ["x*y - y*x", "z*x", "z*y"]:
            p = parse_polynomial(text, system.presentation)
            self.assertFalse(system.normal_form(p), text)

    def test_commuting(self):
        res = zero_twist_family(0, 1, 0, max_degree=4, h_bound=2,
                                battery_limit=1)
        self.assertTrue(res.decomposition.holds)
        self.assertEqual(res.extension.B.hilbert_function(4).tolist(),
                         [1, 2, 3, 4, 5])
        B = res.extension.B
        rel = parse_polynomial("z*y - y*z", B.presentation)
        self.assertFalse(B.normal_form(rel))

    def test_assertion_relation(self):
        statement = FAMILY_ASSERTIONS[0].statement
        self.assertIn("zy - alpha y^2 - beta yz - gamma z^2", statement)
        twist = family_twist(2, 3, 5)
        one = twist.field.one
        self.assertEqual(twist.values[0, 1],
                         {((1, 1), ()): 2 * one, ((1, ), (0, )): 3 * one,
                          ((), (0, 0)): 5 * one})

    def test_errors(self):
        self.assertRaises(ValueError,
                          lambda: family_twist(0, 0, 0, tau_zx={1: 1}))
        twist = family_twist(1, 0, 0)
        self.assertEqual(twist.name, 'sigma(1,0,0)')
        self.assertRaises(TwistInconsistencyError,
                          lambda: build_product(twist, 4))


if __name__ == '__main__':
    unittest.main()
