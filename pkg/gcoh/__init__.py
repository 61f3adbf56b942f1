# coding: utf-8
"""
Graded coherence of noncommutative algebras.
"""

__version__ = "0.1.1"
__author__ = "Xavier Dupré, ..."


def check(verbose=1):
    """
    Runs a couple of functions to check the module is working.

    :param verbose: 0 to hide the standout output
    :return: list of dictionaries, result of each test
    """
    from time import perf_counter
    from .data import load_fixture
    from .algebra.polynomial import NcPolynomial
    from .criterion.extension import FreeExtension
    from .criterion.report import BatteryIdeal, coherence_report
    from .rewriting.system import RewriteSystem

    rows = []
    begin = perf_counter()
    pres = load_fixture('counterexample').algebra('C')
    C = RewriteSystem.complete(pres, 5)
    dims = C.hilbert_function(5).tolist()
    rows.append(dict(test='hilbert', time=perf_counter() - begin,
                     result=dims, ok=dims == [1, 3, 7, 15, 31, 63]))

    begin = perf_counter()
    z = NcPolynomial.monomial((pres.index('z'), ), field=C.field)
    ext = FreeExtension(C, [z], 5)
    report = coherence_report(ext, [BatteryIdeal('Cz', [z])], h_bound=2)
    rows.append(dict(test='criterion', time=perf_counter() - begin,
                     result=report.verdict,
                     ok=report.verdict == 'witnessed-failure'))
    if verbose:
        for row in rows:
            print("[check] %s: %r in %1.3fs" % (
                row['test'], row['result'], row['time']))
    return rows
