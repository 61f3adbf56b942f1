"""
Unit tests for the command line.
"""
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr
from jsonschema import validate
from gcoh.__main__ import main
from gcoh.cli import (
    JobConfig, execute, load_document, verification_table)
from gcoh.data import load_report_schema
from gcoh.parser import parse_document

KXY = """
algebra K
generators x, y
relations
  y*x - x*y
end

job dims
  command hilbert
  max-degree 4
end

job words
  command basis
  degree 2
end
"""


def run_main(args):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


class TestCommandLine(unittest.TestCase):

    def test_hilbert(self):
        code, out, _ = run_main(['hilbert', 'counterexample',
                                 '--max-degree', '6'])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), '1 3 7 15 31 63 127')
        code, out, _ = run_main(['hilbert', 'counterexample',
                                 '--max-degree', '3', '--field', 'GF(7)'])
        self.assertEqual(out.strip(), '1 3 7 15')
        code, out, _ = run_main(['hilbert', 'free', '--max-degree', '3',
                                 '--fmt', 'json'])
        data = json.loads(out)
        self.assertEqual(data['hilbert'], [1, 2, 4, 8])
        self.assertEqual(data['algebra'], 'F')

    def test_nf_basis(self):
        code, out, _ = run_main(['nf', 'counterexample', 'y*z'])
        self.assertEqual(code, 0)
        self.assertEqual(out.strip(), 'z*y')
        code, out, _ = run_main(['nf', 'counterexample', 'x*y*z'])
        self.assertEqual(out.strip(), '0')
        code, out, _ = run_main(['basis', 'counterexample', '1'])
        self.assertEqual(out.strip(), 'x z y')

    def test_ann(self):
        code, out, _ = run_main(['ann', 'counterexample', 'z',
                                 '--max-degree', '3'])
        self.assertEqual(code, 0)
        lines = out.strip().split('\n')
        self.assertEqual(lines[0], 'left annihilator of z up to degree 3')
        self.assertEqual([s.strip() for s in lines[1:]],
                         ['1: x', '2: x*y', '3: x*y^2'])
        code, out, _ = run_main(['ann', 'counterexample', 'z', '--side',
                                 'right', '--max-degree', '3'])
        self.assertIn('zero', out)

    def test_syzygy_betti(self):
        with tempfile.TemporaryDirectory() as temp:
            name = os.path.join(temp, "kxy.galg")
            with open(name, "w", encoding="utf-8") as f:
                f.write(KXY)
            code, out, _ = run_main(['syzygy', name, 'x, y',
                                     '--max-degree', '4'])
            self.assertEqual(code, 0)
            self.assertEqual(out.strip(), '2: (y, -x)')
            code, out, _ = run_main(['betti', name, '--h-bound', '2',
                                     '--max-degree', '4', '--fmt', 'json'])
            rows = json.loads(out)['rows']
            self.assertEqual(rows[1], [0, 2, 0, 0, 0])
            self.assertEqual(rows[2], [0, 0, 1, 0, 0])
            code, out, _ = run_main(['run', name])
            self.assertEqual(code, 0)
            self.assertEqual(out.strip(), '1 2 3 4 5')
            code, out, _ = run_main(['run', name, '--job', 'words'])
            self.assertEqual(out.strip(), 'x^2 x*y y^2')
            code, _, err = run_main(['run', name, '--job', 'other'])
            self.assertEqual(code, 2)
            self.assertIn('other', err)

    def test_extension(self):
        code, out, _ = run_main(['extension', 'counterexample',
                                 '--max-degree', '4'])
        self.assertEqual(code, 0)
        self.assertIn('B: 1 2 4 8 16', out)
        self.assertIn('right-free: yes', out)

    def test_criterion(self):
        code, out, err = run_main(['criterion', 'counterexample',
                                   '--max-degree', '4', '--h-bound', '2',
                                   '--fail-on-witness'])
        self.assertEqual(code, 1)
        self.assertIn('verdict: witnessed-failure', out)
        self.assertIn('non-coherence witnessed', err)
        code, out, _ = run_main(['criterion', 'free', '--max-degree', '4',
                                 '--h-bound', '2', '--fmt', 'json'])
        self.assertEqual(code, 0)
        data = json.loads(out)
        validate(instance=data, schema=load_report_schema())
        self.assertEqual(data['verdict'], 'evidence-positive')
        self.assertEqual([r['label'] for r in data['ideals']],
                         ['Fx', 'Fy'])

    def test_twist(self):
        code, out, _ = run_main(['twist', 'twists', '--name', 'flip',
                                 '--max-degree', '4', '--fmt', 'json'])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertTrue(data['consistent'])
        self.assertTrue(data['hexagon'])
        self.assertEqual(data['hilbert'], [1, 3, 6, 10, 15])
        self.assertEqual(data['hilbert'], data['expected'])
        code, out, err = run_main(['twist', 'twists', '--name',
                                   'inconsistent', '--max-degree', '4',
                                   '--fail-on-witness'])
        self.assertEqual(code, 1)
        self.assertIn('inconsistent is inconsistent', out)
        self.assertIn('degree 3', err)

    def test_verify_paper(self):
        code, out, err = run_main(['verify-paper', '--max-degree', '6'])
        self.assertEqual(code, 0, err)
        for name in ['basis', 'annihilators', 'witness', 'prefix']:
            self.assertIn(name, out)
        self.assertIn('sigma(1,0,0) conflict', out)

    def test_errors(self):
        code, _, err = run_main(['hilbert', 'missing_document'])
        self.assertEqual(code, 2)
        self.assertIn('missing_document', err)
        code, _, err = run_main(['nf', 'counterexample', 'y*t'])
        self.assertEqual(code, 2)
        code, _, _ = run_main(['unknown'])
        self.assertEqual(code, 2)


class TestJobConfig(unittest.TestCase):

    def test_validation(self):
        config = JobConfig('hilbert', 'free', max_degree='5')
        self.assertEqual(config.paths, ['free'])
        self.assertEqual(config.max_degree, 5)
        self.assertIn('hilbert', repr(config))
        self.assertRaises(ValueError, lambda: JobConfig('draw', ['free']))
        self.assertRaises(ValueError,
                          lambda: JobConfig('hilbert', ['free'],
                                            max_degree=1))
        self.assertRaises(ValueError,
                          lambda: JobConfig('hilbert', ['free'], fmt='xml'))
        self.assertRaises(ValueError, lambda: JobConfig('hilbert'))
        self.assertRaises(ValueError,
                          lambda: JobConfig('criterion', ['free'],
                                            battery_limit=0))
        self.assertEqual(JobConfig('verify-examples').paths, [])
        self.assertEqual(JobConfig('verify-paper').paths, [])

    def test_from_job(self):
        doc = load_document('counterexample')
        config = JobConfig.from_job(doc.jobs['report'], 'counterexample')
        self.assertEqual(config.command, 'criterion')
        self.assertEqual(config.max_degree, 8)
        self.assertEqual(config.h_bound, 3)
        self.assertEqual(config.paths, ['counterexample'])
        doc = parse_document(
            "job j\n  command criterion\n  fail-on-witness yes\n"
            "  format json\nend\n")
        config = JobConfig.from_job(doc.jobs['j'], 'free')
        self.assertTrue(config.fail_on_witness)
        self.assertEqual(config.fmt, 'json')
        doc = parse_document(
            "job j\n  command criterion\n  fail-on-witness maybe\nend\n")
        self.assertRaises(ValueError,
                          lambda: JobConfig.from_job(doc.jobs['j'], 'free'))
        doc = parse_document("job j\n  colour red\nend\n")
        self.assertRaises(ValueError,
                          lambda: JobConfig.from_job(doc.jobs['j'], 'free'))

    def test_execute(self):
        buf = io.StringIO()
        with redirect_stdout(buf):
            execute(JobConfig('basis', ['counterexample'], degree=1))
        self.assertEqual(buf.getvalue().strip(), 'x z y')
        self.assertRaises(ValueError, lambda: load_document('nothing.galg'))
        self.assertEqual(load_document('free.galg').algebra().name, 'F')
        self.assertRaises(ValueError, lambda: verification_table(4))


if __name__ == '__main__':
    unittest.main()
