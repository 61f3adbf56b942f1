"""
Unit tests for ``check``.
"""
import unittest
from contextlib import redirect_stdout
import io
from gcoh import check


class TestCheck(unittest.TestCase):

    def test_check(self):
        f = io.StringIO()
        with redirect_stdout(f):
            res = check(verbose=1)
        self.assertIsInstance(res, list)
        self.assertEqual(len(res), 2)
        self.assertTrue(all(r['ok'] for r in res))
        self.assertIn('[check] criterion', f.getvalue())

    def test__main__(self):
        import gcoh.__main__  # noqa
        from gcoh.__main__ import self_check
        with redirect_stdout(io.StringIO()):
            self.assertIsNone(self_check(verbose=0))


if __name__ == '__main__':
    unittest.main()
