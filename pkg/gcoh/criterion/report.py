# coding: utf-8
"""
Assembles the coherence report of an extension over a battery
of left ideals.
"""
import itertools
import json
import warnings
import numpy
import pandas
from ..algebra.fields import DEFAULT_PRIME, field_name
from ..algebra.polynomial import NcPolynomial
from ..modules.resolution import CorrectnessError, MinimalResolution
from ..modules.syzygy import ModulePresentation
from .hypotheses import has_assertion, make_assertions
from .quotient import (
    BoundaryWarning, TorComputation, check_tensor_quotient, check_vanishing,
    compute_q, grows_in_window)

#: version of the JSON layout produced by :meth:`CoherenceReport.to_dict`
SCHEMA_VERSION = "1.1"

#: verdict vocabulary
VERDICTS = ('witnessed-failure', 'evidence-positive', 'inconclusive')

GROWTH_RULE = (
    "heuristic: new syzygies of Q or nonzero Tor_2^A(k, A/J) in every "
    "degree n with D - D//2 < n <= D")


def dimension_table(columns, max_degree):
    """
    Builds a dataframe, one row per quantity, one column per degree,
    from a dictionary `{row name: dimensions}`.
    """
    index = list(columns)
    data = numpy.vstack([
        numpy.asarray(columns[k], dtype=numpy.int64)[:max_degree + 1]
        for k in index])
    df = pandas.DataFrame(data, index=index,
                          columns=list(range(max_degree + 1)))
    df.columns.name = 'n'
    return df


class BatteryIdeal:
    """
    Left ideal of the battery.

    :param label: name
    :param generators: polynomials in *A*
    """

    def __init__(self, label, generators):
        self.label = label
        self.generators = list(generators)

    def __repr__(self):
        return "BatteryIdeal(%r, %d generators)" % (
            self.label, len(self.generators))


def default_battery(system, limit=None):
    """
    Principal left ideals generated by the normal words of degree 1
    followed by the ideals generated by two of them.

    :param system: rewriting system of *A*
    :param limit: maximum number of ideals
    :return: list of :class:`BatteryIdeal`
    """
    words = system.basis(1)
    field = system.field
    polys = [(system.to_text(NcPolynomial.monomial(w, field=field)),
              NcPolynomial.monomial(w, field=field)) for w in words]
    res = [BatteryIdeal("A*%s" % t, [p]) for t, p in polys]
    for (t1, p1), (t2, p2) in itertools.combinations(polys, 2):
        res.append(BatteryIdeal("A*%s + A*%s" % (t1, t2), [p1, p2]))
    if limit is not None:
        res = res[:limit]
    return res


class IdealResult:
    """
    Results for one left ideal *J* of the battery.
    """

    def __init__(self, ideal, quotient, tor, tor_k, tensor, tor2_vanishes,
                 modular, verdict, max_degree):
        self.ideal = ideal
        self.quotient = quotient
        self.tor = tor
        self.tor_k = tor_k
        self.tensor = tensor
        self.tor2_vanishes = tor2_vanishes
        self.modular = modular
        self.verdict = verdict
        self.max_degree = max_degree

    @property
    def growth(self):
        "Tells if the growth pattern is observed."
        return (grows_in_window(self.quotient.syzygy_degrees,
                                self.max_degree) or
                bool(numpy.all(self.tor_k[self._window])))

    @property
    def _window(self):
        D = self.max_degree
        return slice(D - D // 2 + 1, D + 1)

    def table(self):
        "Returns the per-degree dimensions as a dataframe."
        return dimension_table({
            'Q': self.quotient.dims(),
            'Tor0(B,A/J)': self.tor[0],
            'B/BJ': self.tensor,
            'Tor1(B,A/J)': self.tor[1],
            'Tor2(B,A/J)': self.tor[2],
            'Tor2(k,A/J)': self.tor_k}, self.max_degree)

    def to_dict(self, text):
        "Returns a serializable dictionary."
        q = self.quotient
        return dict(
            label=self.ideal.label,
            generators=[text(g) for g in self.ideal.generators],
            verdict=self.verdict,
            growth=self.growth,
            q=dict(dims=q.dims().tolist(),
                   generator_degrees=q.generator_degrees,
                   syzygy_degrees=q.syzygy_degrees,
                   generation=q.generation_status,
                   presentation=q.presentation_status),
            tor={str(k): v.tolist() for k, v in self.tor.items()},
            tor2_k=self.tor_k.tolist(),
            cross_check='passed',
            tensor_check='passed',
            tor2_vanishes=self.tor2_vanishes,
            verified_mod_p=self.modular)

    def degree_record(self, n):
        "Returns every dimension of degree *n*."
        q = self.quotient
        return dict(
            Q=int(q.dims()[n]),
            q_generators=q.generator_degrees.count(n),
            q_syzygies=q.syzygy_degrees.count(n),
            tor={str(k): int(v[n]) for k, v in self.tor.items()},
            tensor=int(self.tensor[n]),
            tor2_k=int(self.tor_k[n]))


class CoherenceReport:
    """
    Coherence report of an extension.

    :param extension: :class:`FreeExtension
        <gcoh.criterion.extension.FreeExtension>`
    :param results: list of :class:`IdealResult`
    :param h_bound: homological bound
    :param checks: extension checks, dictionary
    :param decomposition: :class:`DecompositionReport
        <gcoh.criterion.hypotheses.DecompositionReport>` or None
    :param assertions: list of :class:`Assertion
        <gcoh.criterion.hypotheses.Assertion>`
    :param prime: prime used for the modular verification or None
    """

    def __init__(self, extension, results, h_bound, checks,
                 decomposition=None, assertions=None, prime=None):
        self.extension = extension
        self.results = results
        self.h_bound = h_bound
        self.checks = checks
        self.decomposition = decomposition
        self.assertions = assertions or []
        self.prime = prime

    @property
    def max_degree(self):
        "Returns the window."
        return self.extension.max_degree

    @property
    def verdict(self):
        "Returns the overall verdict."
        verdicts = [r.verdict for r in self.results]
        if 'witnessed-failure' in verdicts:
            return 'witnessed-failure'
        if 'inconclusive' in verdicts:
            return 'inconclusive'
        return 'evidence-positive'

    def degree_records(self):
        """
        Returns one record per degree with every dimension of that
        degree. A record does not depend on the window, the records
        of a report on a smaller window are a prefix of these ones.
        """
        ext = self.extension
        rf = ext.right_freeness()
        hB = ext.B.hilbert_function(self.max_degree)
        records = []
        for n in range(self.max_degree + 1):
            record = dict(n=n, B=int(hB[n]), I=int(rf.ideal_dims[n]),
                          right_generators=rf.generator_degrees.count(n))
            table = (None if self.decomposition is None
                     else self.decomposition.table)
            if table is not None and n in table.index:
                record['decomposition'] = {
                    k: int(table.loc[n, k]) for k in ['C', 'D', 'C+D']}
            record['ideals'] = {r.ideal.label: r.degree_record(n)
                                for r in self.results}
            records.append(record)
        return records

    def is_prefix_of(self, other):
        """
        Tells if the degree records of this report, serialized in JSON,
        are the first records of the report *other*.
        """
        mine = [json.dumps(r, sort_keys=True) for r in self.degree_records()]
        theirs = [json.dumps(r, sort_keys=True)
                  for r in other.degree_records()]
        return len(mine) <= len(theirs) and mine == theirs[:len(mine)]

    def to_dict(self):
        "Returns a serializable dictionary."
        ext = self.extension
        text = ext.text
        rf = ext.right_freeness()
        res = dict(
            schema_version=SCHEMA_VERSION,
            algebra=ext.A.presentation.name,
            field=field_name(ext.A.field),
            window=dict(max_degree=self.max_degree, h_bound=self.h_bound),
            extension=dict(
                ideal=[text(g) for g in ext.generators],
                quotient_dims=ext.B.hilbert_function(
                    self.max_degree).tolist(),
                right_freeness=rf.to_dict(text),
                checks=dict(self.checks),
                decomposition=(None if self.decomposition is None
                               else self.decomposition.to_dict())),
            assertions=[a.to_dict() for a in self.assertions],
            ideals=[r.to_dict(text) for r in self.results],
            degrees=self.degree_records(),
            growth_rule=GROWTH_RULE,
            prime=self.prime,
            verdict=self.verdict)
        return res

    def to_json(self):
        "Returns the JSON serialization, keys are sorted."
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def to_text(self):
        "Returns a human readable report."
        ext = self.extension
        rf = ext.right_freeness()
        rows = [
            "coherence report for {} over {}, window D={} h={}".format(
                ext.A.presentation.name, field_name(ext.A.field),
                self.max_degree, self.h_bound),
            "ideal I: {}".format(
                ", ".join(ext.text(g) for g in ext.generators)),
            "right-free: {} (generators in degrees {}{})".format(
                'yes' if rf.holds else 'no', rf.generator_degrees,
                '' if rf.finite_in_window else
                ', generator list not finite in window'),
        ]
        for k in sorted(self.checks):
            rows.append("{}: {}".format(k, self.checks[k]))
        if self.decomposition is not None:
            dec = self.decomposition
            rows.append("decomposition B = C + D: spans={} direct={} "
                        "closed={} annihilates={}".format(
                            dec.spans, dec.direct, dec.ideal_closed,
                            dec.annihilates))
            rows.append(dec.table.T.to_string())
        for a in self.assertions:
            rows.append("assert {}: {} [{}]".format(
                a.key, a.statement, a.citation))
        for r in self.results:
            q = r.quotient
            rows.extend([
                "",
                "J = {}: {}".format(r.ideal.label, r.verdict),
                "  Q generators in degrees {} ({})".format(
                    q.generator_degrees, q.generation_status),
                "  Q syzygies in degrees {} ({})".format(
                    q.syzygy_degrees, q.presentation_status),
            ])
            if r.modular is not None:
                rows.append("  verified mod {}: {}".format(
                    self.prime, r.modular))
            rows.append(r.table().to_string())
        rows.extend(["", GROWTH_RULE, "verdict: {}".format(self.verdict)])
        return "\n".join(rows)


def _ideal_verdict(growth, right_free, coherent):
    if growth:
        return 'witnessed-failure'
    if not right_free or not coherent:
        return 'inconclusive'
    return 'evidence-positive'


def coherence_report(extension, battery=None, h_bound=3, decomposition=None,
                     assertions=None, strict_vanishing=False, prime=None,
                     battery_limit=None, verbose=0):
    """
    Runs the criterion on every left ideal of a battery.

    For every *J*, it computes *Q*, checks :math:`Tor_1^A(B, A/J)`
    against *Q* and :math:`Tor_0^A(B, A/J)` against *B/B.J*, checks
    :math:`Tor_2^A(B, A/J)` vanishes and computes
    :math:`Tor_2^A(k, A/J)` from a minimal resolution.
    A failure is witnessed when the growth pattern
    (see :data:`GROWTH_RULE`) appears. Otherwise the verdict is
    positive only if *I* is right free and *B* is asserted
    to be coherent.

    :param extension: :class:`FreeExtension
        <gcoh.criterion.extension.FreeExtension>`
    :param battery: list of :class:`BatteryIdeal`,
        :func:`default_battery` if None
    :param h_bound: homological bound of the resolutions
    :param decomposition: :class:`DecompositionReport
        <gcoh.criterion.hypotheses.DecompositionReport>` or None
    :param assertions: facts given by the user
    :param strict_vanishing: raise if :math:`Tor_2^A(B, A/J)` does not
        vanish instead of warning
    :param prime: recomputes the dimensions of *Q* over
        :math:`GF(p)` if not None, True means the default prime
    :param battery_limit: limits the default battery
    :param verbose: display progress
    :return: :class:`CoherenceReport`
    :raises CorrectnessError: a cross-check fails, the projection or
        the right action is wrong, or the generators of *Q* keep
        appearing although *I* is right free
    """
    if h_bound < 2:
        raise ValueError("h_bound must be >= 2 not {}.".format(h_bound))
    if prime is True:
        prime = DEFAULT_PRIME
    A = extension.A
    D = extension.max_degree
    if battery is None:
        battery = default_battery(A, battery_limit)
    assertions = make_assertions(assertions or [])
    if decomposition is not None:
        keys = set(a.key for a in assertions)
        assertions.extend(a for a in decomposition.assertions
                          if a.key not in keys)
    rf = extension.right_freeness()
    coherent = has_assertion(assertions, 'B-coherent')
    through, through_action = min(D, 6), min(D, 4)
    checks = {
        'projection': extension.check_projection(through),
        'right_action': extension.right_action.check_associativity(
            through_action),
        'checked_through': through,
    }
    for key, degree in [('projection', through),
                        ('right_action', through_action)]:
        if not checks[key]:
            raise CorrectnessError(
                "Check {!r} of the extension fails up to degree {}.".format(
                    key, degree))

    results = []
    for ideal in battery:
        if verbose:
            print("[coherence] J = {}".format(ideal.label))
        q = compute_q(extension, ideal.generators)
        tor = TorComputation(extension, ideal.generators, D, h_bound=2,
                             verbose=max(verbose - 1, 0))
        tdims = {k: tor.dims(k) for k in range(3)}
        if not numpy.array_equal(tdims[1], q.dims()):
            raise CorrectnessError(
                "Tor_1 {} differs from dim Q {} for J={}.".format(
                    tdims[1].tolist(), q.dims().tolist(), ideal.label))
        tensor = check_tensor_quotient(extension, ideal.generators, tdims[0])
        vanishes = check_vanishing(
            tdims[2], "Tor_2(B, A/J) for J={}".format(ideal.label),
            strict=strict_vanishing)
        gens = [g for g in (A.normal_form(p) for p in ideal.generators) if g]
        betti = MinimalResolution(
            ModulePresentation.cyclic(A, gens), h_bound, D).betti()
        modular = None
        if prime is not None:
            modular = bool(numpy.array_equal(q.verify_modular(prime),
                                             q.dims()))
        if q.generation_status != 'bounded-in-window':
            message = "Generators of Q keep appearing for J={}.".format(
                ideal.label)
            if rf.holds:
                # Q is finitely generated over a right-free extension
                raise CorrectnessError(message)
            warnings.warn(message, BoundaryWarning)
        result = IdealResult(ideal, q, tdims, betti.row(2), tensor,
                             vanishes, modular, None, D)
        result.verdict = _ideal_verdict(result.growth, rf.holds, coherent)
        if verbose:
            print("[coherence] J = {}: {}".format(ideal.label,
                                                   result.verdict))
        results.append(result)
    return CoherenceReport(extension, results, h_bound, checks,
                           decomposition=decomposition,
                           assertions=assertions, prime=prime)
