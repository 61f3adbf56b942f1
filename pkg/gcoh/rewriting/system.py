# coding: utf-8
"""
Degree by degree completion of a presentation into a rewriting
system (diamond lemma), normal forms and normal words.
"""
import heapq
import numpy
from ..algebra.polynomial import NcPolynomial
from ..algebra.presentation import AlgebraPresentation
from ..algebra.words import find_overlaps
from ..linalg.slices import span_reduce
from .order import MonomialOrder


class TruncationError(ValueError):
    """
    Raised when a computation needs a degree beyond
    the degree the system is complete up to.
    """

    def __init__(self, requested, available, what='degree'):
        ValueError.__init__(
            self, "Requested {} {} exceeds the truncation degree {}.".format(
                what, requested, available))
        self.requested = requested
        self.available = available


class RewriteRule:
    """
    Rule `lead -> lower`, every word of *lower* is smaller
    than *lead*.

    :param lead: word
    :param lower: :class:`NcPolynomial
        <gcoh.algebra.polynomial.NcPolynomial>`
    :param degree: degree of the lead
    """

    __slots__ = ('lead', 'lower', 'degree')

    def __init__(self, lead, lower, degree):
        self.lead = lead
        self.lower = lower
        self.degree = degree

    def __repr__(self):
        return "RewriteRule(%r, %r, %r)" % (self.lead, self.lower,
                                            self.degree)

    def to_text(self, names, key=None):
        "Returns `lead -> lower`."
        lead = NcPolynomial.monomial(self.lead, 1, self.lower.field)
        return "%s -> %s" % (lead.to_text(names), self.lower.to_text(
            names, key=key))


class RewriteSystem:
    """
    Rewriting system completed up to a degree. Rules are added degree
    by degree, the relations and the overlaps of the leads of a given
    degree are reduced by the rules of lower degrees, then put into
    reduced echelon form, each row gives a new rule. Relations are
    homogeneous so the rules of degree *n* never change once degree
    *n* is processed, the system can be extended later with
    :meth:`extend`.

    :param presentation: :class:`AlgebraPresentation
        <gcoh.algebra.presentation.AlgebraPresentation>`
    :param verbose: display progress
    """

    def __init__(self, presentation, verbose=0):
        if not isinstance(presentation, AlgebraPresentation):
            raise TypeError(
                "presentation must be an AlgebraPresentation not "
                "{}.".format(type(presentation)))
        self._pres = presentation
        self._order = MonomialOrder(presentation.weights)
        self._field = presentation.field
        self.verbose = verbose
        self._rules = {}
        self._lead_lengths = []
        self._complete = 0
        self._pending = {}
        self._relations = {}
        for r in presentation.relations:
            self._relations.setdefault(
                r.degree(presentation.weights), []).append(r)
        self._nf_cache = {}
        self._basis = {0: [()]}
        self._index = {}
        self.diagnostics = dict(zero_reduced_relations=0,
                                resolved_overlaps=0, rules_per_degree={})

    @staticmethod
    def complete(presentation, max_degree, verbose=0):
        """
        Completes a presentation up to degree *max_degree*.

        :param presentation: presentation
        :param max_degree: truncation degree, it must be greater
            than the degree of every relation
        :param verbose: display progress
        :return: :class:`RewriteSystem`
        """
        if max_degree < presentation.max_relation_degree():
            raise ValueError(
                "max_degree={} is below the largest relation degree "
                "{}.".format(max_degree, presentation.max_relation_degree()))
        return RewriteSystem(presentation, verbose=verbose).extend(
            max_degree)

    @property
    def presentation(self):
        "Returns the presentation."
        return self._pres

    @property
    def field(self):
        "Returns the field."
        return self._field

    @property
    def order(self):
        "Returns the monomial order."
        return self._order

    @property
    def names(self):
        "Returns the generator names."
        return self._pres.names

    @property
    def weights(self):
        "Returns the generator weights."
        return self._pres.weights

    @property
    def complete_up_to(self):
        "Returns the degree through which all ambiguities are resolved."
        return self._complete

    @property
    def rules(self):
        "Returns the rules sorted by leading word."
        return [self._rules[w] for w in self._order.sort(self._rules)]

    def degree(self, word):
        "Returns the degree of a word."
        return self._pres.degree(word)

    def to_text(self, p):
        "Prints a polynomial with the generator names."
        return self._pres.polynomial_text(p)

    # completion

    def extend(self, max_degree):
        """
        Continues the completion up to degree *max_degree*.

        :return: self
        """
        for d in range(self._complete + 1, max_degree + 1):
            self._complete_degree(d)
            self._complete = d
        return self

    def ensure(self, max_degree):
        "Alias for :meth:`extend`."
        return self.extend(max_degree)

    def copy(self):
        """
        Returns a copy which can be extended without modifying
        this system. Rules and cached normal forms are shared,
        they never change once computed.
        """
        inst = self.__class__.__new__(self.__class__)
        inst.__dict__.update(self.__dict__)
        inst._rules = dict(self._rules)
        inst._pending = {k: list(v) for k, v in self._pending.items()}
        inst._nf_cache = dict(self._nf_cache)
        inst._basis = dict(self._basis)
        inst._index = dict(self._index)
        inst.diagnostics = dict(
            self.diagnostics,
            rules_per_degree=dict(self.diagnostics['rules_per_degree']))
        return inst

    def extended(self, max_degree):
        """
        Returns this system if it is complete up to *max_degree*,
        a copy completed up to *max_degree* otherwise.
        """
        if max_degree <= self._complete:
            return self
        return self.copy().extend(max_degree)

    def _complete_degree(self, d):
        candidates = list(self._relations.get(d, []))
        n_relations = len(candidates)
        candidates.extend(self._pending.pop(d, []))
        reduced = []
        for i, p in enumerate(candidates):
            r = self._reduce(p.terms)
            if r:
                reduced.append(r)
            elif i < n_relations:
                self.diagnostics['zero_reduced_relations'] += 1
            else:
                self.diagnostics['resolved_overlaps'] += 1
        if not reduced:
            if self.verbose:
                print("[complete] degree %d: 0 rules" % d)
            return
        words = set()
        for r in reduced:
            words.update(r)
        columns = self._order.sort(words, reverse=True)
        position = {w: i for i, w in enumerate(columns)}
        echelon = span_reduce(
            [{position[w]: c for w, c in r.items()} for r in reduced],
            len(columns), self._field, d)
        old_rules = list(self._rules.values())
        new_rules = []
        for row in echelon.rows:
            pivot = min(row)
            lead = columns[pivot]
            lower = NcPolynomial._from_dict(
                {columns[k]: -c for k, c in row.items() if k != pivot},
                self._field)
            rule = RewriteRule(lead, lower, d)
            self._rules[lead] = rule
            new_rules.append(rule)
        self._lead_lengths = sorted(set(len(w) for w in self._rules))
        for i, rule in enumerate(new_rules):
            for other in old_rules + new_rules[:i + 1]:
                self._add_overlaps(rule, other)
                if other is not rule:
                    self._add_overlaps(other, rule)
        self.diagnostics['rules_per_degree'][d] = len(new_rules)
        if self.verbose:
            print("[complete] degree %d: %d rules, %d candidates, "
                  "%d zero-reduced" % (
                      d, len(new_rules), len(candidates),
                      len(candidates) - len(reduced)))

    def _add_overlaps(self, r1, r2):
        "Stores the S-polynomials of the overlaps of r1 followed by r2."
        u, v = r1.lead, r2.lead
        field = self._field
        for k in find_overlaps(u, v):
            p = u[:-k]
            q = v[k:]
            left = {w + q: c for w, c in r1.lower.items()}
            s = NcPolynomial._from_dict(left, field) - NcPolynomial._from_dict(
                {p + w: c for w, c in r2.lower.items()}, field)
            if s:
                deg = self.degree(p + v)
                self._pending.setdefault(deg, []).append(s)
            else:
                self.diagnostics['resolved_overlaps'] += 1

    # reduction

    def _find_lead(self, word):
        n = len(word)
        for i in range(n):
            for k in self._lead_lengths:
                if i + k > n:
                    break
                rule = self._rules.get(word[i:i + k])
                if rule is not None:
                    return i, rule
        return None

    def _reduce(self, terms):
        """
        Reduces a dictionary `{word: coefficient}` with the current rules,
        the largest word is rewritten first.
        """
        coeffs = dict(terms)
        key = self._order.heap_key
        heap = [key(w) for w in coeffs]
        heapq.heapify(heap)
        result = {}
        while heap:
            w = heapq.heappop(heap)[-1]
            c = coeffs.pop(w, None)
            if not c:
                continue
            hit = self._find_lead(w)
            if hit is None:
                result[w] = c
                continue
            i, rule = hit
            p, q = w[:i], w[i + len(rule.lead):]
            for w2, c2 in rule.lower.items():
                nw = p + w2 + q
                v = coeffs.get(nw)
                if v is None:
                    coeffs[nw] = c * c2
                    heapq.heappush(heap, key(nw))
                else:
                    coeffs[nw] = v + c * c2
        return result

    def _check_degree(self, degree):
        if degree > self._complete:
            raise TruncationError(degree, self._complete)

    def normal_form_word(self, word):
        """
        Returns the normal form of a word as a dictionary
        `{word: coefficient}` which must not be modified.
        """
        res = self._nf_cache.get(word)
        if res is None:
            self._check_degree(self.degree(word))
            res = self._reduce({word: self._field.one})
            self._nf_cache[word] = res
        return res

    def normal_form_terms(self, terms):
        "Normal form of a dictionary `{word: coefficient}`."
        res = {}
        for w, c in terms.items():
            for w2, c2 in self.normal_form_word(w).items():
                v = res.get(w2)
                v = c * c2 if v is None else v + c * c2
                if v:
                    res[w2] = v
                else:
                    del res[w2]
        return res

    def normal_form(self, p):
        """
        Returns the normal form of a polynomial, the unique
        combination of normal words congruent to *p*.
        """
        self._pres.check_polynomial(p)
        return NcPolynomial._from_dict(
            self.normal_form_terms(p.terms), self._field)

    def multiply(self, p, q):
        "Returns the normal form of the product `p * q`."
        return self.normal_form(p * q)

    def multiply_words(self, u, v):
        "Returns the normal form of `u v` as a dictionary."
        return self.normal_form_word(u + v)

    def is_normal(self, word):
        "Tells if a word contains no leading word."
        return self._find_lead(word) is None

    # bases

    def basis(self, n):
        """
        Returns the normal words of degree *n* sorted
        with the monomial order.
        """
        self._check_degree(n)
        if n < 0:
            return []
        res = self._basis.get(n)
        if res is not None:
            return res
        words = []
        for i, w in enumerate(self.weights):
            if w > n:
                continue
            for prefix in self.basis(n - w):
                word = prefix + (i, )
                if self._suffix_is_normal(word):
                    words.append(word)
        res = self._order.sort(words)
        self._basis[n] = res
        return res

    def _suffix_is_normal(self, word):
        n = len(word)
        for k in self._lead_lengths:
            if k > n:
                break
            if word[n - k:] in self._rules:
                return False
        return True

    def index(self, n):
        "Returns the dictionary `{normal word: position}` in degree *n*."
        res = self._index.get(n)
        if res is None:
            res = {w: i for i, w in enumerate(self.basis(n))}
            self._index[n] = res
        return res

    def dim(self, n):
        "Returns the dimension of the degree *n* component."
        if n < 0:
            return 0
        return len(self.basis(n))

    def hilbert_function(self, max_degree=None):
        """
        Returns the dimensions of the components of degree
        0 to *max_degree*.
        """
        if max_degree is None:
            max_degree = self._complete
        self._check_degree(max_degree)
        return numpy.array([self.dim(n) for n in range(max_degree + 1)],
                           dtype=numpy.int64)

    # coordinates

    def to_vector(self, terms, n):
        """
        Converts a dictionary `{normal word: coefficient}` of degree *n*
        into coordinates.
        """
        index = self.index(n)
        try:
            return {index[w]: c for w, c in terms.items()}
        except KeyError as e:
            raise ValueError(
                "Word {} is not a normal word of degree {}.".format(
                    e, n)) from e

    def from_vector(self, vec, n):
        "Converts coordinates into a dictionary `{word: coefficient}`."
        basis = self.basis(n)
        return {basis[k]: c for k, c in vec.items()}

    def vector(self, p, n=None):
        """
        Returns the coordinates of the normal form of a homogeneous
        polynomial.
        """
        if n is None:
            n = p.degree(self.weights)
        return self.to_vector(self.normal_form(p).terms, n)

    def polynomial(self, vec, n):
        "Converts coordinates into a polynomial."
        return NcPolynomial._from_dict(self.from_vector(vec, n), self._field)


def normal_form(system, p):
    "See :meth:`RewriteSystem.normal_form`."
    return system.normal_form(p)


def basis(system, n):
    "See :meth:`RewriteSystem.basis`."
    return system.basis(n)


def hilbert_function(system, max_degree=None):
    "See :meth:`RewriteSystem.hilbert_function`."
    return system.hilbert_function(max_degree)
