"""
Unit tests for ``criterion``.
"""
import io
import json
import unittest
import warnings
from contextlib import redirect_stdout
from unittest import mock
import numpy
from jsonschema import validate
from gcoh.algebra import AlgebraPresentation, NcPolynomial
from gcoh.cli import build_report, load_document
from gcoh.data import load_fixture, load_report_schema
from gcoh.linalg import DegreeSlice
from gcoh.modules import annihilator
from gcoh.rewriting import RewriteSystem
from gcoh.criterion import (
    FreeExtension, RightAction, RightFreenessReport, IntersectionQuotient,
    BoundaryWarning, CorrectnessError, compute_q, b_dot_j,
    tor_with_quotient, tor_one_cross_check, check_tensor_quotient,
    check_vanishing, grows_in_window, Assertion, KNOWN_ASSERTIONS,
    check_decomposition, is_left_closed, left_span_slices, make_assertions,
    BatteryIdeal, VERDICTS, coherence_report, default_battery,
    dimension_table)


def counterexample_extension(D=5):
    C = RewriteSystem.complete(
        load_fixture('counterexample').algebra('C'), D)
    z = C.presentation.letter('z')
    return FreeExtension(C, [z], D), z


def example_extension(D=5):
    A = RewriteSystem.complete(load_fixture('example42').algebra('A'), D)
    pres = A.presentation
    return FreeExtension(A, [pres.letter('x')], D), pres


def free_extension(D=5):
    F = RewriteSystem.complete(AlgebraPresentation('F', ['x', 'y']), D)
    pres = F.presentation
    return FreeExtension(F, [pres.letter('x')], D), pres


class TestExtension(unittest.TestCase):

    def test_counterexample(self):
        ext, z = counterexample_extension()
        self.assertEqual(ext.B.hilbert_function(5).tolist(),
                         [1, 2, 4, 8, 16, 32])
        rf = ext.right_freeness()
        self.assertTrue(rf.holds)
        self.assertEqual(rf.generator_degrees, [1])
        self.assertTrue(rf.finite_in_window)
        self.assertEqual(rf.ideal_dims.tolist(), [0, 1, 3, 7, 15, 31])
        self.assertTrue(ext.check_projection(4))
        self.assertTrue(ext.right_action.check_associativity(3))
        pres = ext.A.presentation
        self.assertFalse(ext.project(pres.letter('y') * z))
        xy = pres.letter('x') * pres.letter('y')
        self.assertEqual(ext.B.to_text(ext.project(xy)), 'x*y')
        self.assertEqual(ext.lift(ext.project(xy)), xy)

    def test_free(self):
        ext, _ = free_extension()
        rf = ext.right_freeness()
        self.assertTrue(rf.holds)
        self.assertEqual(rf.generator_degrees, [1, 2, 3, 4, 5])
        self.assertFalse(rf.finite_in_window)
        self.assertEqual(ext.text(rf.generators[1][1]), 'y*x')
        self.assertEqual(ext.B.hilbert_function(5).tolist(), [1] * 6)

    def test_errors(self):
        ext, z = counterexample_extension(3)
        C = ext.A
        self.assertRaises(TypeError, lambda: FreeExtension('C', [z], 3))
        self.assertRaises(ValueError, lambda: FreeExtension(C, [z], 0))
        self.assertRaises(ValueError,
                          lambda: FreeExtension(C, [NcPolynomial.one()], 3))
        self.assertRaises(ValueError, lambda: FreeExtension(C, [z * z], 1))


class TestQuotient(unittest.TestCase):

    def test_counterexample(self):
        ext, z = counterexample_extension()
        q = compute_q(ext, [z])
        self.assertEqual(q.dims().tolist(), [0, 1, 1, 1, 1, 1])
        self.assertEqual(q.generator_degrees, [1])
        self.assertEqual(q.syzygy_degrees, [2, 3, 4, 5])
        self.assertEqual(q.generation_status, 'bounded-in-window')
        self.assertEqual(q.presentation_status, 'growing')
        pres = q.presentation()
        self.assertEqual(pres.generator_degrees, [1])
        self.assertEqual(len(pres.relations), 4)
        self.assertEqual(q.verify_modular(7).tolist(), q.dims().tolist())
        self.assertRaises(ValueError, lambda: compute_q(ext, [z], 6))

    def test_tor(self):
        ext, z = counterexample_extension()
        tor = tor_with_quotient(ext, [z], h_bound=2)
        self.assertEqual(tor[0].tolist(), [1, 2, 4, 8, 16, 32])
        self.assertEqual(tor[1].tolist(), [0, 1, 1, 1, 1, 1])
        self.assertEqual(tor[2].tolist(), [0] * 6)
        self.assertEqual(tor_one_cross_check(ext, [z]).tolist(),
                         tor[1].tolist())
        self.assertEqual(check_tensor_quotient(ext, [z], tor[0]).tolist(),
                         tor[0].tolist())
        self.assertRaises(
            CorrectnessError,
            lambda: check_tensor_quotient(ext, [z], tor[1]))
        self.assertEqual(b_dot_j(ext, [z]).dims(3).tolist(), [0] * 4)

    def test_vanishing(self):
        self.assertTrue(check_vanishing(numpy.zeros(3, dtype=int), 'T'))
        with self.assertWarns(BoundaryWarning):
            self.assertFalse(check_vanishing(numpy.array([0, 1]), 'T'))
        self.assertRaises(
            CorrectnessError,
            lambda: check_vanishing(numpy.array([0, 1]), 'T', strict=True))

    def test_growth(self):
        self.assertTrue(grows_in_window([2, 3, 4, 5], 5))
        self.assertTrue(grows_in_window([4, 5], 5))
        self.assertFalse(grows_in_window([1], 5))
        self.assertFalse(grows_in_window([2, 3, 4], 5))


class TestHypotheses(unittest.TestCase):

    def test_decomposition(self):
        ext, pres = example_extension()
        self.assertEqual(ext.B.hilbert_function(5).tolist(),
                         [1, 2, 3, 4, 5, 6])
        self.assertEqual(ext.right_freeness().generator_degrees, [1])
        y, z = pres.letter('y'), pres.letter('z')
        rep = check_decomposition(ext, [y], [z],
                                  assertions=[('C-noetherian', 'k[y]')])
        self.assertTrue(rep.spans)
        self.assertTrue(rep.direct)
        self.assertTrue(rep.ideal_closed)
        self.assertTrue(rep.annihilates)
        self.assertTrue(rep.holds)
        self.assertEqual(rep.table['C'].tolist(), [1] * 6)
        self.assertEqual(rep.table['D'].tolist(), [0, 1, 2, 3, 4, 5])
        d = rep.to_dict()
        self.assertEqual(d['dims']['C+D'], [1, 2, 3, 4, 5, 6])
        self.assertEqual(d['assertions'][0]['statement'],
                         KNOWN_ASSERTIONS['C-noetherian'])

    def test_failures(self):
        ext, pres = example_extension(4)
        y, z = pres.letter('y'), pres.letter('z')
        rep = check_decomposition(ext, [], [z])
        self.assertFalse(rep.spans)
        self.assertFalse(rep.holds)
        self.assertEqual(rep.table['C'].tolist(), [1, 0, 0, 0, 0])
        rep = check_decomposition(ext, [y], [y])
        self.assertFalse(rep.annihilates)
        self.assertRaises(ValueError,
                          lambda: check_decomposition(ext, [y], [(z, y)]))

    def test_assertions(self):
        a = Assertion('B-coherent', 'known')
        self.assertEqual(a.statement, KNOWN_ASSERTIONS['B-coherent'])
        self.assertEqual(Assertion('other', 'why').statement, 'other')
        self.assertIn('B-coherent', repr(a))
        res = make_assertions([a, ('C-noetherian', 'k[y]')])
        self.assertEqual([r.key for r in res], ['B-coherent', 'C-noetherian'])


class TestReport(unittest.TestCase):

    def test_counterexample(self):
        ext, z = counterexample_extension()
        buf = io.StringIO()
        with redirect_stdout(buf):
            report = coherence_report(
                ext, [BatteryIdeal('Cz', [z])], h_bound=2,
                assertions=[('B-coherent', 'free algebra')], verbose=1)
        self.assertIn('[coherence] J = Cz', buf.getvalue())
        self.assertEqual(report.verdict, 'witnessed-failure')
        res = report.results[0]
        self.assertTrue(res.growth)
        self.assertEqual(res.tor_k.tolist(), [0, 0, 1, 1, 1, 1])
        self.assertEqual(res.table().shape, (6, 6))
        data = json.loads(report.to_json())
        validate(instance=data, schema=load_report_schema())
        self.assertEqual(data['verdict'], 'witnessed-failure')
        self.assertEqual(data['extension']['ideal'], ['z'])
        self.assertEqual(data['extension']['quotient_dims'],
                         [1, 2, 4, 8, 16, 32])
        self.assertEqual(data['ideals'][0]['q']['dims'],
                         [0, 1, 1, 1, 1, 1])
        self.assertEqual(data['ideals'][0]['tor']['2'], [0] * 6)
        self.assertIsNone(data['prime'])
        text = report.to_text()
        self.assertIn('right-free: yes', text)
        self.assertIn('verdict: witnessed-failure', text)

    def test_verdicts(self):
        ext, pres = free_extension()
        battery = [BatteryIdeal('Fx', [pres.letter('x')])]
        with warnings.catch_warnings():
            warnings.simplefilter('error', BoundaryWarning)
            report = coherence_report(ext, battery, h_bound=2)
        self.assertEqual(report.verdict, 'inconclusive')
        report = coherence_report(
            ext, battery, h_bound=2, prime=7,
            assertions=[('B-coherent', 'polynomial ring')])
        self.assertEqual(report.verdict, 'evidence-positive')
        self.assertTrue(report.results[0].modular)
        data = json.loads(report.to_json())
        validate(instance=data, schema=load_report_schema())
        self.assertEqual(data['prime'], 7)
        self.assertIn(data['verdict'], VERDICTS)
        self.assertRaises(ValueError,
                          lambda: coherence_report(ext, battery, h_bound=1))

    def test_decomposition_report(self):
        ext, pres = example_extension(4)
        y, z = pres.letter('y'), pres.letter('z')
        dec = check_decomposition(
            ext, [y], [z], assertions=[('B-coherent', 'monomial')])
        report = coherence_report(ext, [BatteryIdeal('Ax', [pres.letter(
            'x')])], h_bound=2, decomposition=dec)
        self.assertEqual(report.verdict, 'evidence-positive')
        self.assertEqual(report.results[0].quotient.dims().tolist(),
                         [0, 1, 1, 1, 1])
        data = json.loads(report.to_json())
        validate(instance=data, schema=load_report_schema())
        self.assertTrue(data['extension']['decomposition']['spans'])
        self.assertEqual([a['key'] for a in data['assertions']],
                         ['B-coherent'])

    def test_battery(self):
        ext, _ = counterexample_extension(3)
        battery = default_battery(ext.A)
        self.assertEqual(len(battery), 6)
        self.assertEqual([b.label for b in battery[:3]],
                         ['A*x', 'A*z', 'A*y'])
        self.assertEqual(battery[3].label, 'A*x + A*z')
        self.assertEqual(len(default_battery(ext.A, 2)), 2)
        df = dimension_table({'a': [1, 2, 3], 'b': [0, 0, 0]}, 1)
        self.assertEqual(df.shape, (2, 2))
        self.assertEqual(df.loc['a'].tolist(), [1, 2])

class DoubledAction(RightAction):
    "Right action scaled by two, it is not associative."

    def act_words(self, b, a):
        res = RightAction.act_words(self, b, a)
        if len(a) == 0:
            return res
        two = self.extension.B.field.convert(2)
        return {w: c * two for w, c in res.items()}


class TestExtensionChecks(unittest.TestCase):

    def test_wrong_projection(self):
        ext, z = counterexample_extension(4)
        C = ext.A
        x = C.presentation.letter('x')
        ext.B = RewriteSystem.complete(
            C.presentation.with_relations([z, x]), 4)
        self.assertFalse(ext.check_projection(4))
        self.assertRaises(
            CorrectnessError,
            lambda: coherence_report(ext, [BatteryIdeal('Cz', [z])],
                                     h_bound=2))

    def test_wrong_right_action(self):
        ext, z = counterexample_extension(4)
        ext.right_action = DoubledAction(ext)
        self.assertFalse(ext.right_action.check_associativity(2))
        with self.assertRaises(CorrectnessError) as e:
            coherence_report(ext, [BatteryIdeal('Cz', [z])], h_bound=2)
        self.assertIn('right_action', str(e.exception))

    def test_unbounded_generators(self):
        ext, z = counterexample_extension(4)
        with mock.patch.object(IntersectionQuotient, 'generation_status',
                               new_callable=mock.PropertyMock,
                               return_value='unbounded-in-window'):
            with self.assertRaises(CorrectnessError) as e:
                coherence_report(ext, [BatteryIdeal('Cz', [z])], h_bound=2)
            self.assertIn('keep appearing', str(e.exception))
            report = RightFreenessReport(
                [], numpy.array([0, 1]), numpy.array([0, 2]), 4)
            with mock.patch.object(FreeExtension, 'right_freeness',
                                   return_value=report):
                with self.assertWarns(BoundaryWarning):
                    res = coherence_report(
                        ext, [BatteryIdeal('Cz', [z])], h_bound=2)
        self.assertEqual(len(res.results), 1)

    def test_systems_not_modified(self):
        pres = load_fixture('counterexample').algebra('C')
        C = RewriteSystem.complete(pres, 3)
        z = pres.letter('z')
        ext = FreeExtension(C, [z], 5)
        self.assertEqual(C.complete_up_to, 3)
        self.assertEqual(ext.A.complete_up_to, 5)
        self.assertEqual(ext.B.hilbert_function(5).tolist(),
                         [1, 2, 4, 8, 16, 32])
        A = RewriteSystem.complete(load_fixture('example42').algebra('A'), 3)
        ext = FreeExtension(A, [A.presentation.letter('x')], 3)
        y, z = A.presentation.letter('y'), A.presentation.letter('z')
        check_decomposition(ext, [y], [z], 3)
        self.assertEqual(A.complete_up_to, 3)


class TestLeftClosure(unittest.TestCase):

    def test_ideal(self):
        ext, pres = example_extension(4)
        B = ext.B
        slices = left_span_slices(B, [pres.letter('z')], 4)
        self.assertEqual([slices[n].rank for n in range(5)],
                         [0, 1, 2, 3, 4])
        self.assertTrue(is_left_closed(B, slices, 4))

    def test_not_closed(self):
        # span of y^(n-1) z, z * z is missing
        ext, pres = example_extension(4)
        B = ext.B
        y, z = pres.letter('y'), pres.letter('z')
        slices = {0: DegreeSlice(B.dim(0), B.field, 0)}
        p = z
        for n in range(1, 5):
            s = DegreeSlice(B.dim(n), B.field, n)
            s.add(B.vector(B.normal_form(p), n))
            slices[n] = s
            p = y * p
        self.assertFalse(is_left_closed(B, slices, 4))
        self.assertTrue(is_left_closed(B, slices, 0))


class TestDegreeRecords(unittest.TestCase):

    def test_prefix(self):
        reports = {}
        for D in (4, 6):
            ext, pres = example_extension(D)
            dec = check_decomposition(ext, [pres.letter('y')],
                                      [pres.letter('z')])
            reports[D] = coherence_report(
                ext, [BatteryIdeal('Ax', [pres.letter('x')]),
                      BatteryIdeal('Az', [pres.letter('z')])],
                h_bound=2, decomposition=dec)
        short, full = reports[4], reports[6]
        records = full.degree_records()
        self.assertEqual([r['n'] for r in records], list(range(7)))
        self.assertEqual([r['B'] for r in records], [1, 2, 3, 4, 5, 6, 7])
        self.assertEqual(records[3]['decomposition'],
                         {'C': 1, 'D': 3, 'C+D': 4})
        self.assertEqual(sorted(records[2]['ideals']), ['Ax', 'Az'])
        self.assertEqual(records[1]['right_generators'], 1)
        self.assertTrue(short.is_prefix_of(full))
        self.assertFalse(full.is_prefix_of(short))
        data = json.loads(full.to_json())
        validate(instance=data, schema=load_report_schema())
        self.assertEqual(data['degrees'], records)

    def test_prefix_differs(self):
        ext, z = counterexample_extension(4)
        report = coherence_report(ext, [BatteryIdeal('Cz', [z])], h_bound=2)
        other = coherence_report(ext, [BatteryIdeal('Cx', [
            ext.A.presentation.letter('x')])], h_bound=2)
        self.assertTrue(report.is_prefix_of(report))
        self.assertFalse(report.is_prefix_of(other))


class TestWideWindow(unittest.TestCase):
    "Runs the worked examples on their full windows, slow."

    def test_annihilators(self):
        C = RewriteSystem.complete(
            load_fixture('counterexample').algebra('C'), 10)
        z = C.presentation.letter('z')
        left = annihilator(C, z, 'left', 10)
        gens = left.minimal_polynomial_generators(10)
        self.assertEqual([d for d, _ in gens], list(range(1, 11)))
        x, y = C.presentation.index('x'), C.presentation.index('y')
        for d, g in gens:
            self.assertEqual(g.words(), [(x, ) + (y, ) * (d - 1)])
        right = annihilator(C, z, 'right', 10)
        self.assertEqual(right.dims(10).tolist(), [0] * 11)
        self.assertEqual(C.complete_up_to, 10)

    def test_cross_checks(self):
        pairs = []
        for fixture in ('counterexample', 'example42', 'free'):
            _, report = build_report(load_document(fixture), max_degree=8,
                                     h_bound=2)
            for r in report.results:
                numpy.testing.assert_array_equal(r.tor[1],
                                                 r.quotient.dims())
                pairs.append((fixture, r.ideal.label))
        self.assertGreaterEqual(len(pairs), 6)

    def test_default_window(self):
        _, report = build_report(load_document('counterexample'),
                                 max_degree=10, h_bound=2)
        self.assertEqual(report.verdict, 'witnessed-failure')
        res = report.results[0]
        self.assertEqual(res.tor_k.tolist(), [0, 0] + [1] * 9)
        self.assertEqual(res.quotient.dims().tolist(), [0] + [1] * 10)
        self.assertEqual(res.quotient.syzygy_degrees, list(range(2, 11)))
        _, short = build_report(load_document('counterexample'),
                                max_degree=6, h_bound=2)
        self.assertTrue(short.is_prefix_of(report))
        _, report = build_report(load_document('example42'), max_degree=10,
                                 h_bound=2)
        self.assertEqual(report.verdict, 'evidence-positive')
        self.assertEqual(len(report.results), 4)



if __name__ == '__main__':
    unittest.main()
