# coding: utf-8
"""
Commands available from the command line, every command prints
its result and returns None.
"""
import json
import os
from ..algebra.fields import make_field
from ..algebra.polynomial import NcPolynomial
from ..criterion.extension import FreeExtension
from ..criterion.hypotheses import Assertion, check_decomposition
from ..criterion.report import (
    BatteryIdeal, coherence_report, default_battery)
from ..data import FIXTURES, load_fixture
from ..modules.free_module import FreeModule
from ..modules.resolution import MinimalResolution
from ..modules.submodule import annihilator
from ..modules.syzygy import ModulePresentation, syzygies
from ..parser.galg import (
    SourceDocument, parse_document, parse_polynomial, parse_polynomial_list)
from ..rewriting.system import RewriteSystem
from ..twist.twisting import (
    build_product, extend_twist, twisting_map_from_spec)
from .config import JobConfig


class WitnessFailure(Exception):
    """
    Raised when a failure is witnessed and the user asked
    to treat it as an error.
    """
    pass


def load_document(path):
    """
    Loads a document from a file or a fixture name
    (see :data:`FIXTURES <gcoh.data.FIXTURES>`).
    """
    path = str(path)
    if os.path.exists(path):
        return parse_document(SourceDocument.read(path))
    base = path[:-5] if path.endswith('.galg') else path
    if base in FIXTURES:
        return load_fixture(base)
    raise ValueError("Unable to find {!r}, it is neither a file nor one of "
                     "the fixtures {}.".format(path, FIXTURES))


def _presentation(doc, algebra=None, field=None):
    pres = doc.algebra(algebra)
    if field is not None:
        pres = pres.change_field(make_field(field))
    return pres


def _convert(polys, pres):
    return [p.change_field(pres.field) for p in polys]


def _system(pres, max_degree, verbose=0):
    return RewriteSystem.complete(
        pres, max(max_degree, pres.max_relation_degree()), verbose=verbose)


def _expression_degree(p, pres):
    return max(p.degrees(pres.weights)) if p else 0


def _text(expr):
    # the command line turns "x, y" into a tuple
    if isinstance(expr, (list, tuple)):
        return ", ".join(map(str, expr))
    return str(expr)


def _dump(obj):
    print(json.dumps(obj, sort_keys=True, indent=2))


def nf(path, expr, algebra=None, field=None, fmt='text', verbose=0):
    """
    Prints the normal form of an expression.

    :param path: document or fixture name
    :param expr: expression, `"y*z"`
    :param algebra: name of the algebra, the first one by default
    :param field: overrides the field
    :param fmt: `'text'` or `'json'`
    :param verbose: display progress
    """
    pres = _presentation(load_document(path), algebra, field)
    p = parse_polynomial(_text(expr), pres)
    system = _system(pres, _expression_degree(p, pres), verbose)
    text = system.to_text(system.normal_form(p))
    if fmt == 'json':
        _dump(dict(algebra=pres.name, expr=_text(expr), normal_form=text))
    else:
        print(text)


def basis(path, degree, algebra=None, fmt='text'):
    """
    Prints the normal words of a degree.
    """
    pres = _presentation(load_document(path), algebra)
    degree = int(degree)
    system = _system(pres, degree)
    words = [system.to_text(NcPolynomial.monomial(w, field=system.field))
             for w in system.basis(degree)]
    if fmt == 'json':
        _dump(dict(algebra=pres.name, degree=degree, basis=words))
    else:
        print(" ".join(words))


def hilbert(path, max_degree=10, algebra=None, field=None, fmt='text',
            verbose=0):
    """
    Prints the dimensions of the components of degree 0 to
    *max_degree*.
    """
    pres = _presentation(load_document(path), algebra, field)
    max_degree = int(max_degree)
    system = _system(pres, max_degree, verbose)
    dims = system.hilbert_function(max_degree).tolist()
    if fmt == 'json':
        _dump(dict(algebra=pres.name, hilbert=dims,
                   diagnostics=dict(system.diagnostics)))
    else:
        print(" ".join(map(str, dims)))


def ann(path, expr, side='left', max_degree=10, algebra=None, field=None,
        fmt='text'):
    """
    Prints the minimal generators of the annihilator of an element.
    """
    pres = _presentation(load_document(path), algebra, field)
    p = parse_polynomial(_text(expr), pres)
    max_degree = int(max_degree)
    system = _system(pres, max_degree)
    ideal = annihilator(system, p, side=side, max_degree=max_degree)
    gens = ideal.minimal_polynomial_generators(max_degree)
    if fmt == 'json':
        _dump(dict(algebra=pres.name, element=_text(expr), side=side,
                   max_degree=max_degree,
                   dims=ideal.dims(max_degree).tolist(),
                   generators=[dict(degree=d, element=system.to_text(g))
                               for d, g in gens]))
        return
    print("%s annihilator of %s up to degree %d" % (
        side, _text(expr), max_degree))
    if not gens:
        print("  zero")
    for d, g in gens:
        print("  %d: %s" % (d, system.to_text(g)))


def syzygy(path, expr, max_degree=6, algebra=None, field=None, fmt='text'):
    """
    Prints the minimal syzygies of a list of homogeneous elements,
    the kernel of :math:`\\oplus_i A(-d_i) \\to A`.

    :param expr: comma separated list, `"x, y"`
    """
    pres = _presentation(load_document(path), algebra, field)
    polys = [p for p in parse_polynomial_list(_text(expr), pres) if p]
    max_degree = int(max_degree)
    system = _system(pres, max_degree)
    degrees = [_expression_degree(p, pres) for p in polys]
    target = FreeModule(system, [0])
    images = [{(0, w): c for w, c in system.normal_form(p).items()}
              for p in polys]
    kernel = syzygies(system, degrees, images, target, max_degree)
    source = kernel.source
    if fmt == 'json':
        _dump(dict(algebra=pres.name, elements=_text(expr),
                   max_degree=max_degree,
                   syzygies=[dict(degree=d, element=source.to_text(g))
                             for d, g in kernel.generators]))
        return
    if not kernel.generators:
        print("no syzygy up to degree %d" % max_degree)
    for d, g in kernel.generators:
        print("%d: %s" % (d, source.to_text(g)))


def betti(path, expr=None, h_bound=3, max_degree=10, algebra=None,
          field=None, fmt='text', verbose=0):
    """
    Prints the Betti table of *A/J* where *J* is the left ideal
    generated by *expr*, of the trivial module *k* if *expr* is None.
    """
    pres = _presentation(load_document(path), algebra, field)
    max_degree = int(max_degree)
    system = _system(pres, max_degree)
    if expr is None:
        gens = [NcPolynomial.monomial((i, ), field=system.field)
                for i in range(pres.ngens)]
    else:
        gens = parse_polynomial_list(_text(expr), pres)
    gens = [g for g in (system.normal_form(p) for p in gens) if g]
    table = MinimalResolution(
        ModulePresentation.cyclic(system, gens), int(h_bound), max_degree,
        verbose=verbose).betti()
    if fmt == 'json':
        _dump(table.to_dict())
    else:
        print(table.to_frame().to_string())


def _extension(doc, name, max_degree, field, verbose=0):
    spec = doc.extension(name)
    pres = _presentation(doc, spec.algebra, field)
    system = _system(pres, max_degree, verbose)
    ext = FreeExtension(system, _convert(spec.ideal, pres), max_degree,
                        verbose=verbose)
    return spec, pres, ext


def extension(path, name=None, max_degree=10, field=None, fmt='text',
              verbose=0):
    """
    Prints the quotient *B = A/I* of an extension and
    the right-freeness of *I*.
    """
    doc = load_document(path)
    _, _, ext = _extension(doc, name, int(max_degree), field, verbose)
    rf = ext.right_freeness()
    B = ext.B
    if fmt == 'json':
        _dump(dict(algebra=ext.A.presentation.name,
                   max_degree=ext.max_degree,
                   hilbert_A=ext.A.hilbert_function(ext.max_degree).tolist(),
                   hilbert_B=B.hilbert_function(ext.max_degree).tolist(),
                   rules_B=[r.to_text(B.names, B.order.key)
                            for r in B.rules],
                   right_freeness=rf.to_dict(ext.text)))
        return
    print("A: %s" % " ".join(
        map(str, ext.A.hilbert_function(ext.max_degree))))
    print("B: %s" % " ".join(map(str, B.hilbert_function(ext.max_degree))))
    print("rules of B:")
    for r in B.rules:
        print("  %s" % r.to_text(B.names, B.order.key))
    print("right-free: %s" % ('yes' if rf.holds else 'no'))
    for d, g in rf.generators:
        print("  %d: %s" % (d, ext.text(g)))
    if not rf.finite_in_window:
        print("generator list not finite in window")


def _battery(doc, spec, pres, limit):
    if spec.battery is None:
        return None
    res = []
    for ideal in doc.ideal_lists[spec.battery].ideals:
        if ideal.side != 'left':
            raise ValueError(
                "Ideal {!r} of battery {!r} must be a left ideal.".format(
                    ideal.label, spec.battery))
        res.append(BatteryIdeal(ideal.label,
                                _convert(ideal.generators, pres)))
    if limit is not None:
        res = res[:limit]
    return res


def build_report(doc, name=None, max_degree=10, h_bound=3, field=None,
                 prime=None, strict_vanishing=False, battery_limit=None,
                 verbose=0):
    """
    Runs the coherence criterion on an extension block.

    :param doc: :class:`GalgDocument <gcoh.parser.galg.GalgDocument>`
    :return: the extension block and the :class:`CoherenceReport
        <gcoh.criterion.report.CoherenceReport>`
    """
    max_degree = int(max_degree)
    spec, pres, ext = _extension(doc, name, max_degree, field, verbose)
    assertions = [Assertion(k, v) for k, v in spec.assertions]
    decomposition = None
    if spec.subalgebra or spec.lifts:
        decomposition = check_decomposition(
            ext, _convert(spec.subalgebra, pres), _convert(spec.lifts, pres),
            max_degree, assertions=assertions)
    battery = _battery(doc, spec, pres, battery_limit)
    if battery is None:
        battery = default_battery(ext.A, battery_limit)
    report = coherence_report(
        ext, battery=battery, h_bound=int(h_bound),
        decomposition=decomposition, assertions=assertions,
        strict_vanishing=strict_vanishing, prime=prime, verbose=verbose)
    return spec, report


def criterion(path, name=None, max_degree=10, h_bound=3, field=None,
              fmt='text', prime=None, strict_vanishing=False,
              fail_on_witness=False, battery_limit=None, verbose=0):
    """
    Runs the coherence criterion on the extension of a document
    and prints the report.

    :param fail_on_witness: raises :class:`WitnessFailure` when
        a failure is witnessed
    """
    spec, report = build_report(
        load_document(path), name, int(max_degree), h_bound=h_bound,
        field=field, prime=prime, strict_vanishing=strict_vanishing,
        battery_limit=battery_limit, verbose=verbose)
    if fmt == 'json':
        print(report.to_json())
    else:
        print(report.to_text())
    if fail_on_witness and report.verdict == 'witnessed-failure':
        raise WitnessFailure(
            "non-coherence witnessed for {!r}".format(spec.name))


def twist(path, name=None, max_degree=8, fmt='text', fail_on_witness=False,
          verbose=0):
    """
    Extends a twisting map, checks the axioms and prints
    the twisted tensor product.
    """
    doc = load_document(path)
    max_degree = int(max_degree)
    tmap = twisting_map_from_spec(doc, name)
    ext = extend_twist(tmap, max_degree, verbose=verbose)
    res = dict(twist=tmap.name, max_degree=max_degree,
               consistent=ext.consistent)
    if ext.consistent:
        product = build_product(ext, max_degree, verbose=verbose)
        system = product.system
        res.update(dict(
            hexagon=ext.check_hexagon(),
            associativity=ext.check_associativity(min(max_degree, 6)),
            units=ext.check_units(),
            relations=[system.to_text(r)
                       for r in product.presentation.relations],
            hilbert=product.dims().tolist(),
            expected=product.expected_dims().tolist()))
    else:
        c = ext.conflict
        res.update(dict(conflict=dict(
            degree=c.degree, description=c.description,
            undetermined=c.undetermined, text=ext.conflict_text())))
    if fmt == 'json':
        _dump(res)
    elif ext.consistent:
        print("%s is consistent up to degree %d" % (tmap.name, max_degree))
        print("hexagon: %s, associativity: %s, units: %s" % (
            res['hexagon'], res['associativity'], res['units']))
        print("relations:")
        for r in res['relations']:
            print("  %s" % r)
        print("hilbert: %s" % " ".join(map(str, res['hilbert'])))
    else:
        print("%s is inconsistent" % tmap.name)
        print(ext.conflict_text())
    if fail_on_witness and not ext.consistent:
        raise WitnessFailure(ext.conflict_text())


def execute(config):
    """
    Runs a :class:`JobConfig <gcoh.cli.config.JobConfig>`.
    """
    from .verify import verify_examples
    if config.command in ('verify-examples', 'verify-paper'):
        return verify_examples(max_degree=config.max_degree, fmt=config.fmt)
    path = config.paths[0]
    D, fmt = config.max_degree, config.fmt
    if config.command == 'nf':
        return nf(path, config.expr, field=config.field, fmt=fmt)
    if config.command == 'basis':
        return basis(path, config.degree if config.degree is not None else D,
                     fmt=fmt)
    if config.command == 'hilbert':
        return hilbert(path, D, field=config.field, fmt=fmt)
    if config.command == 'ann':
        return ann(path, config.expr, max_degree=D, field=config.field,
                   fmt=fmt)
    if config.command == 'syzygy':
        return syzygy(path, config.expr, max_degree=D, field=config.field,
                      fmt=fmt)
    if config.command == 'betti':
        return betti(path, config.expr, h_bound=config.h_bound,
                     max_degree=D, field=config.field, fmt=fmt)
    if config.command == 'extension':
        return extension(path, config.name, D, field=config.field, fmt=fmt)
    if config.command == 'criterion':
        return criterion(
            path, config.name, D, h_bound=config.h_bound, field=config.field,
            fmt=fmt, prime=config.prime,
            strict_vanishing=config.strict_vanishing,
            fail_on_witness=config.fail_on_witness,
            battery_limit=config.battery_limit)
    return twist(path, config.name, D, fmt=fmt,
                 fail_on_witness=config.fail_on_witness)


def run(path, job=None):
    """
    Runs a `job` block of a document.

    :param path: document or fixture name
    :param job: name of the job, the first one by default
    """
    doc = load_document(path)
    if not doc.jobs:
        raise ValueError("Document {!r} has no job block.".format(path))
    if job is None:
        spec = next(iter(doc.jobs.values()))
    elif job in doc.jobs:
        spec = doc.jobs[job]
    else:
        raise ValueError("Unknown job {!r} in {!r}.".format(job, path))
    return execute(JobConfig.from_job(spec, str(path)))
