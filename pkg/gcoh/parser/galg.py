# coding: utf-8
"""
Reader and writer for the line oriented `.galg` format.
A document is a sequence of blocks, each of them starts with
a keyword and ends with `end`. Comments start with `%`.

::

    algebra C
    field QQ
    generators x, z, y
    relations
      y*z - z*y
      x*z
    end
"""
import re
from ..algebra.fields import make_field, field_name, to_rational
from ..algebra.presentation import AlgebraPresentation
from ..algebra.words import word_to_text
from .expressions import ExpressionGrammar, GalgSyntaxError, TensorValue

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
_LABEL = re.compile(r"^[A-Za-z0-9_+().'-]+$")

#: accepted kinds for :class:`SourceDocument`
DOCUMENT_KINDS = ('algebra', 'ideal-list', 'twist-spec', 'extension', 'job')

#: sides of ideals
SIDES = ('left', 'right', 'two-sided')


class SourceDocument:
    """
    Text of a `.galg` document.

    :param text: content
    :param kind: expected kind of block, one of :data:`DOCUMENT_KINDS`
        or None for any
    :param source: file name used in error messages
    """

    def __init__(self, text, kind=None, source=None):
        if kind is not None and kind not in DOCUMENT_KINDS:
            raise ValueError("Unknown kind {!r}.".format(kind))
        self.text = text
        self.kind = kind
        self.source = source

    @staticmethod
    def read(filename, kind=None):
        "Reads a file."
        with open(filename, "r", encoding="utf-8") as f:
            return SourceDocument(f.read(), kind=kind, source=filename)


class IdealSpec:
    """
    Ideal given by generators.

    :param side: one of :data:`SIDES`
    :param label: name
    :param generators: list of polynomials
    """

    def __init__(self, side, label, generators):
        if side not in SIDES:
            raise ValueError("Unknown side {!r}.".format(side))
        self.side = side
        self.label = label
        self.generators = [g for g in generators if g]

    def __eq__(self, other):
        return (isinstance(other, IdealSpec) and self.side == other.side and
                self.label == other.label and
                self.generators == other.generators)

    def __repr__(self):
        return "IdealSpec(%r, %r, %r)" % (
            self.side, self.label, self.generators)


class IdealList:
    "List of ideals in one algebra."

    def __init__(self, name, algebra, ideals):
        self.name = name
        self.algebra = algebra
        self.ideals = list(ideals)

    def __eq__(self, other):
        return (isinstance(other, IdealList) and self.name == other.name and
                self.algebra == other.algebra and
                self.ideals == other.ideals)


class TwistSpec:
    """
    Values of a twisting map on pairs of generators, as written
    in a document.

    :param name: name
    :param left: name of the left factor *A*
    :param right: name of the right factor *B*
    :param parameters: dictionary `{name: scalar}`
    :param values: dictionary `{(name in B, name in A): TensorValue}`
    """

    def __init__(self, name, left, right, parameters, values):
        self.name = name
        self.left = left
        self.right = right
        self.parameters = dict(parameters)
        self.values = dict(values)

    def __eq__(self, other):
        return (isinstance(other, TwistSpec) and self.name == other.name and
                self.left == other.left and self.right == other.right and
                self.parameters == other.parameters and
                self.values == other.values)


class ExtensionSpec:
    """
    Extension *A -> B = A/I* with the inputs of the criterion.

    :param name: name
    :param algebra: name of *A*
    :param ideal: generators of the two-sided ideal *I*
    :param battery: name of an ideal list or None
    :param subalgebra: generators of the subalgebra *C* (elements of A
        projected into B)
    :param lifts: lifts in *A* of the generators of the left ideal *D*
    :param assertions: list of `(key, statement)`
    """

    def __init__(self, name, algebra, ideal, battery=None, subalgebra=None,
                 lifts=None, assertions=None):
        self.name = name
        self.algebra = algebra
        self.ideal = list(ideal)
        self.battery = battery
        self.subalgebra = list(subalgebra or [])
        self.lifts = list(lifts or [])
        self.assertions = list(assertions or [])

    def __eq__(self, other):
        return (isinstance(other, ExtensionSpec) and
                self.__dict__ == other.__dict__)


class JobSpec:
    "Options of a job, a dictionary `{key: value as text}`."

    def __init__(self, name, options):
        self.name = name
        self.options = dict(options)

    def __eq__(self, other):
        return (isinstance(other, JobSpec) and self.name == other.name and
                self.options == other.options)


class GalgDocument:
    """
    Parsed document, every block is stored in a dictionary
    by name, insertion order is preserved.
    """

    def __init__(self, source=None):
        self.source = source
        self.algebras = {}
        self.ideal_lists = {}
        self.twists = {}
        self.extensions = {}
        self.jobs = {}

    def __eq__(self, other):
        return (isinstance(other, GalgDocument) and
                self.algebras == other.algebras and
                self.ideal_lists == other.ideal_lists and
                self.twists == other.twists and
                self.extensions == other.extensions and
                self.jobs == other.jobs)

    @property
    def kinds(self):
        "Returns the kinds of blocks the document contains."
        res = []
        for kind, att in [('algebra', 'algebras'),
                          ('ideal-list', 'ideal_lists'),
                          ('twist-spec', 'twists'),
                          ('extension', 'extensions'), ('job', 'jobs')]:
            if getattr(self, att):
                res.append(kind)
        return res

    def algebra(self, name=None):
        """
        Returns an algebra by name, the first one if *name* is None.
        """
        return self._get(self.algebras, name, 'algebra')

    def extension(self, name=None):
        "Returns an extension by name, the first one if *name* is None."
        return self._get(self.extensions, name, 'extension')

    def twist(self, name=None):
        "Returns a twist by name, the first one if *name* is None."
        return self._get(self.twists, name, 'twist')

    def _get(self, blocks, name, what):
        if not blocks:
            raise ValueError("The document has no {} block.".format(what))
        if name is None:
            return next(iter(blocks.values()))
        if name not in blocks:
            raise ValueError("No {} named {!r}, available: {}.".format(
                what, name, ", ".join(blocks)))
        return blocks[name]


class _Line:
    "One meaningful line: number, text without comment, indentation."

    def __init__(self, number, text):
        self.number = number
        stripped = text.split('%', 1)[0].rstrip()
        self.indent = len(stripped) - len(stripped.lstrip())
        self.text = stripped.strip()

    def words(self):
        return self.text.split()

    def after(self, prefix_length):
        """
        Returns the text after the first *prefix_length* characters
        and its column in the original line (starting at 1).
        """
        rest = self.text[prefix_length:]
        stripped = rest.lstrip()
        column = self.indent + prefix_length + (
            len(rest) - len(stripped)) + 1
        return stripped, column


def _split_top_level(text, column):
    """
    Splits a comma separated list ignoring commas inside
    parentheses, returns `[(piece, column)]`.
    """
    res = []
    depth = 0
    start = 0
    for i, ch in enumerate(text + ','):
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
        elif ch == ',' and depth == 0:
            piece = text[start:i]
            stripped = piece.lstrip()
            res.append((stripped.rstrip(),
                        column + start + len(piece) - len(stripped)))
            start = i + 1
    return res


class _Reader:
    "Parses a document block by block."

    def __init__(self, text, source):
        self.source = source
        self.lines = [_Line(i + 1, t)
                      for i, t in enumerate(text.replace('\r\n', '\n')
                                            .split('\n'))]
        self.lines = [line for line in self.lines if line.text]
        self.pos = 0
        self.doc = GalgDocument(source)

    def error(self, message, line, column=None):
        if column is None:
            column = line.indent + 1
        return GalgSyntaxError(message, line.number, column, self.source)

    def next_line(self, block):
        if self.pos >= len(self.lines):
            last = self.lines[-1] if self.lines else _Line(1, '')
            raise self.error(
                "missing 'end' for block {!r}".format(block), last)
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def check_name(self, name, line, column):
        if not _NAME.match(name):
            raise self.error("invalid name {!r}".format(name), line, column)
        return name

    def read(self):
        while self.pos < len(self.lines):
            line = self.lines[self.pos]
            self.pos += 1
            words = line.words()
            key = words[0]
            if key == 'algebra':
                self.read_algebra(line)
            elif key == 'ideals':
                self.read_ideals(line)
            elif key == 'twist':
                self.read_twist(line)
            elif key == 'extension':
                self.read_extension(line)
            elif key == 'job':
                self.read_job(line)
            else:
                raise self.error(
                    "unexpected {!r}, expecting a block keyword "
                    "(algebra, ideals, twist, extension, job)".format(key),
                    line)
        return self.doc

    def header(self, line, keyword, over=False):
        words = line.words()
        expected = 4 if over else 2
        if len(words) != expected or (over and words[2] != 'over'):
            raise self.error(
                "expecting '{} NAME{}'".format(
                    keyword, ' over ALGEBRA' if over else ''), line)
        column = line.indent + len(keyword) + 2
        name = self.check_name(words[1], line, column)
        if not over:
            return name, None
        algebra = words[3]
        if algebra not in self.doc.algebras:
            raise self.error(
                "unknown algebra {!r}".format(algebra), line,
                line.indent + line.text.rindex(algebra) + 1)
        return name, self.doc.algebras[algebra]

    def grammar(self, algebra, parameters=None, right=None):
        symbols = {n: i for i, n in enumerate(algebra.names)}
        right_symbols = (None if right is None else
                         {n: i for i, n in enumerate(right.names)})
        return ExpressionGrammar(algebra.field, symbols,
                                 parameters=parameters,
                                 right_symbols=right_symbols)

    def polynomial_list(self, grammar, text, line, column):
        polys = [grammar.parse(piece, line.number, col, self.source)
                 for piece, col in _split_top_level(text, column)
                 if piece]
        return [p for p in polys if p]

    def read_algebra(self, line):
        name, _ = self.header(line, 'algebra')
        field = None
        gens = None
        relations = None
        while True:
            cur = self.next_line(name)
            words = cur.words()
            key = words[0]
            if key == 'end':
                break
            if relations is not None:
                relations.append(cur)
                continue
            if key == 'field':
                text, col = cur.after(len('field'))
                try:
                    field = make_field(text)
                except ValueError as e:
                    raise self.error(str(e), cur, col) from e
            elif key == 'generators':
                text, col = cur.after(len('generators'))
                gens = []
                seen = set()
                for piece, pcol in _split_top_level(text, col):
                    g, _, w = piece.partition(':')
                    g = g.strip()
                    self.check_name(g, cur, pcol)
                    if g in seen:
                        raise self.error(
                            "duplicate generator {!r}".format(g), cur, pcol)
                    seen.add(g)
                    try:
                        weight = int(w) if w.strip() else 1
                    except ValueError as e:
                        raise self.error(
                            "invalid weight {!r}".format(w), cur, pcol) from e
                    if weight < 1:
                        raise self.error(
                            "generator {!r} has weight {}, weights must be "
                            "positive".format(g, weight), cur, pcol)
                    gens.append((g, weight))
            elif key == 'relations':
                if gens is None:
                    raise self.error("generators must precede relations",
                                     cur)
                relations = []
            else:
                raise self.error("unexpected {!r} in algebra block".format(
                    key), cur)
        if gens is None:
            raise self.error("algebra {!r} has no generators".format(name),
                             line)
        field = make_field(field)
        empty = AlgebraPresentation(name, gens, [], field)
        grammar = self.grammar(empty)
        rels = []
        for cur in relations or []:
            p = grammar.parse(cur.text, cur.number, cur.indent + 1,
                              self.source)
            if not p:
                raise self.error("relation is null", cur)
            if not p.is_homogeneous(empty.weights):
                raise self.error(
                    "inhomogeneous relation, degrees {}".format(
                        sorted(p.degrees(empty.weights))), cur)
            rels.append(p)
        try:
            pres = AlgebraPresentation(name, gens, rels, field)
        except ValueError as e:
            raise self.error(str(e), line) from e
        self.doc.algebras[name] = pres

    def read_ideals(self, line):
        name, algebra = self.header(line, 'ideals', over=True)
        grammar = self.grammar(algebra)
        ideals = []
        while True:
            cur = self.next_line(name)
            words = cur.words()
            if words[0] == 'end':
                break
            head, sep, _ = cur.text.partition(':')
            parts = head.split()
            if not sep or len(parts) != 2 or parts[0] not in SIDES:
                raise self.error(
                    "expecting 'left|right|two-sided LABEL: g1, g2'", cur)
            if not _LABEL.match(parts[1]):
                raise self.error("invalid label {!r}".format(parts[1]), cur)
            text, col = cur.after(len(head) + 1)
            gens = self.polynomial_list(grammar, text, cur, col)
            self.check_homogeneous(gens, algebra, cur, col)
            ideals.append(IdealSpec(parts[0], parts[1], gens))
        self.doc.ideal_lists[name] = IdealList(name, algebra.name, ideals)

    def check_homogeneous(self, gens, algebra, cur, col):
        for g in gens:
            if not g.is_homogeneous(algebra.weights):
                raise self.error(
                    "generator {} is not homogeneous".format(
                        algebra.polynomial_text(g)), cur, col)

    def read_twist(self, line):
        name, _ = self.header(line, 'twist')
        left = right = None
        parameters = {}
        raw = []
        while True:
            cur = self.next_line(name)
            words = cur.words()
            key = words[0]
            if key == 'end':
                break
            if key in ('left', 'right'):
                if len(words) != 2 or words[1] not in self.doc.algebras:
                    raise self.error(
                        "expecting '{} ALGEBRA' with a known "
                        "algebra".format(key), cur)
                if key == 'left':
                    left = self.doc.algebras[words[1]]
                else:
                    right = self.doc.algebras[words[1]]
            elif key == 'params':
                text, col = cur.after(len('params'))
                for piece, pcol in _split_top_level(text, col):
                    pname, sep, value = piece.partition('=')
                    pname = pname.strip()
                    if not sep:
                        raise self.error("expecting 'name = value'",
                                         cur, pcol)
                    self.check_name(pname, cur, pcol)
                    parameters[pname] = value.strip()
            elif cur.text.startswith('tau'):
                raw.append(cur)
            else:
                raise self.error(
                    "unexpected {!r} in twist block".format(key), cur)
        if left is None or right is None:
            raise self.error(
                "twist {!r} needs both 'left' and 'right'".format(name),
                line)
        if field_name(left.field) != field_name(right.field):
            raise self.error("factors are defined over different fields",
                             line)
        values = {}
        scalars = {}
        empty = self.grammar(left)
        for k, v in parameters.items():
            p = empty.parse(v, line.number, 1, self.source)
            if p.degrees() - {0}:
                raise self.error(
                    "parameter {!r} must be a number".format(k), line)
            scalars[k] = p.coefficient(())
        try:
            grammar = self.grammar(left, parameters=scalars, right=right)
        except ValueError as e:
            raise self.error(str(e), line) from e
        head = re.compile(
            r"^tau\s*\(\s*([A-Za-z_][A-Za-z0-9_']*)\s*,\s*"
            r"([A-Za-z_][A-Za-z0-9_']*)\s*\)\s*=")
        for cur in raw:
            m = head.match(cur.text)
            if m is None:
                raise self.error("expecting 'tau(b, a) = value'", cur)
            b, a = m.group(1), m.group(2)
            if b not in right.names:
                raise self.error(
                    "{!r} is not a generator of {!r}".format(b, right.name),
                    cur, cur.indent + m.start(1) + 1)
            if a not in left.names:
                raise self.error(
                    "{!r} is not a generator of {!r}".format(a, left.name),
                    cur, cur.indent + m.start(2) + 1)
            if (b, a) in values:
                raise self.error(
                    "duplicate value for tau({}, {})".format(b, a), cur)
            text, col = cur.after(m.end())
            values[b, a] = grammar.parse_tensor(
                text, cur.number, col, self.source)
        self.doc.twists[name] = TwistSpec(
            name, left.name, right.name, scalars, values)

    def read_extension(self, line):
        name, algebra = self.header(line, 'extension', over=True)
        grammar = self.grammar(algebra)
        spec = ExtensionSpec(name, algebra.name, [])
        while True:
            cur = self.next_line(name)
            key = cur.words()[0]
            if key == 'end':
                break
            head, sep, _ = cur.text.partition(':')
            if not sep:
                raise self.error("expecting 'key: value'", cur)
            text, col = cur.after(len(head) + 1)
            parts = head.split()
            if parts[0] == 'assert':
                if len(parts) != 2:
                    raise self.error("expecting 'assert KEY: statement'",
                                     cur)
                spec.assertions.append((parts[1], text))
            elif head.strip() == 'ideal':
                spec.ideal = self.polynomial_list(grammar, text, cur, col)
                self.check_homogeneous(spec.ideal, algebra, cur, col)
            elif head.strip() == 'battery':
                if text not in self.doc.ideal_lists:
                    raise self.error(
                        "unknown ideal list {!r}".format(text), cur, col)
                spec.battery = text
            elif head.strip() == 'subalgebra':
                spec.subalgebra = self.polynomial_list(
                    grammar, text, cur, col)
                self.check_homogeneous(spec.subalgebra, algebra, cur, col)
            elif head.strip() == 'lifts':
                spec.lifts = self.polynomial_list(grammar, text, cur, col)
                self.check_homogeneous(spec.lifts, algebra, cur, col)
            else:
                raise self.error(
                    "unexpected {!r} in extension block".format(head), cur)
        self.doc.extensions[name] = spec

    def read_job(self, line):
        name, _ = self.header(line, 'job')
        options = {}
        while True:
            cur = self.next_line(name)
            words = cur.words()
            if words[0] == 'end':
                break
            text, _ = cur.after(len(words[0]))
            options[words[0]] = text
        self.doc.jobs[name] = JobSpec(name, options)


def _as_document(doc):
    if isinstance(doc, SourceDocument):
        return doc
    if isinstance(doc, str):
        return SourceDocument(doc)
    raise TypeError("Unexpected type {}.".format(type(doc)))


def parse_document(doc):
    """
    Parses a document.

    :param doc: :class:`SourceDocument` or string
    :return: :class:`GalgDocument`
    """
    doc = _as_document(doc)
    res = _Reader(doc.text, doc.source).read()
    if doc.kind is not None and doc.kind not in res.kinds:
        raise GalgSyntaxError(
            "expecting a document of kind {!r}".format(doc.kind),
            1, 1, doc.source)
    return res


def parse_algebra(doc, name=None):
    """
    Parses a document and returns one of its algebras.

    :param doc: :class:`SourceDocument` or string
    :param name: name of the algebra, the first one if None
    :return: :class:`AlgebraPresentation
        <gcoh.algebra.presentation.AlgebraPresentation>`
    """
    doc = _as_document(doc)
    if doc.kind not in (None, 'algebra'):
        raise ValueError("Document kind is {!r} not 'algebra'.".format(
            doc.kind))
    return parse_document(doc).algebra(name)


def parse_polynomial(text, ambient):
    """
    Parses a polynomial in the generators of an algebra.

    :param text: expression such as `3/2*x^2*z`
    :param ambient: :class:`AlgebraPresentation
        <gcoh.algebra.presentation.AlgebraPresentation>`
    :return: :class:`NcPolynomial
        <gcoh.algebra.polynomial.NcPolynomial>`
    """
    symbols = {n: i for i, n in enumerate(ambient.names)}
    return ExpressionGrammar(ambient.field, symbols).parse(str(text))


def parse_polynomial_list(text, ambient):
    "Parses a comma separated list of polynomials."
    symbols = {n: i for i, n in enumerate(ambient.names)}
    grammar = ExpressionGrammar(ambient.field, symbols)
    return [grammar.parse(piece, 1, col)
            for piece, col in _split_top_level(str(text), 1) if piece]


# printing


def format_polynomial_list(polys, algebra):
    "Prints a comma separated list."
    return ", ".join(algebra.polynomial_text(p) for p in polys)


def format_algebra(pres):
    "Prints an algebra block."
    gens = ", ".join(n if w == 1 else "%s:%d" % (n, w)
                     for n, w in pres.generators)
    rows = ["algebra %s" % pres.name, "field %s" % field_name(pres.field),
            "generators %s" % gens, "relations"]
    rows.extend("  " + pres.polynomial_text(r) for r in pres.relations)
    rows.append("end")
    return "\n".join(rows)


def format_tensor(value, left, right):
    """
    Prints a tensor, the largest terms first.

    :param value: :class:`TensorValue`
    :param left: presentation of the left factor
    :param right: presentation of the right factor
    """
    if not value.terms:
        return '0'
    items = sorted(
        value.terms.items(), reverse=True,
        key=lambda t: (left.order_key(t[0][0]), right.order_key(t[0][1])))
    rows = []
    for (wa, wb), c in items:
        r = to_rational(value.field, c)
        negative = r < 0
        if negative:
            r = -r
        if len(wa) == 0:
            lt = str(r)
        elif r == 1:
            lt = word_to_text(wa, left.names)
        else:
            lt = "%s*%s" % (r, word_to_text(wa, left.names))
        text = "%s # %s" % (lt, word_to_text(wb, right.names))
        if not rows:
            rows.append('-' + text if negative else text)
        else:
            rows.append(('- ' if negative else '+ ') + text)
    return " ".join(rows)


def format_document(doc):
    """
    Prints a :class:`GalgDocument`, parsing the result gives
    back an equal document.
    """
    blocks = [format_algebra(a) for a in doc.algebras.values()]
    for il in doc.ideal_lists.values():
        alg = doc.algebras[il.algebra]
        rows = ["ideals %s over %s" % (il.name, il.algebra)]
        for ideal in il.ideals:
            rows.append("  %s %s: %s" % (
                ideal.side, ideal.label,
                format_polynomial_list(ideal.generators, alg) or '0'))
        rows.append("end")
        blocks.append("\n".join(rows))
    for tw in doc.twists.values():
        left, right = doc.algebras[tw.left], doc.algebras[tw.right]
        rows = ["twist %s" % tw.name, "left %s" % tw.left,
                "right %s" % tw.right]
        if tw.parameters:
            rows.append("params %s" % ", ".join(
                "%s = %s" % (k, to_rational(left.field, v))
                for k, v in tw.parameters.items()))
        for (b, a), v in tw.values.items():
            rows.append("tau(%s, %s) = %s" % (
                b, a, format_tensor(v, left, right)))
        rows.append("end")
        blocks.append("\n".join(rows))
    for ext in doc.extensions.values():
        alg = doc.algebras[ext.algebra]
        rows = ["extension %s over %s" % (ext.name, ext.algebra),
                "  ideal: %s" % (
                    format_polynomial_list(ext.ideal, alg) or '0')]
        if ext.battery:
            rows.append("  battery: %s" % ext.battery)
        if ext.subalgebra:
            rows.append("  subalgebra: %s" % format_polynomial_list(
                ext.subalgebra, alg))
        if ext.lifts:
            rows.append("  lifts: %s" % format_polynomial_list(
                ext.lifts, alg))
        for k, v in ext.assertions:
            rows.append("  assert %s: %s" % (k, v))
        rows.append("end")
        blocks.append("\n".join(rows))
    for job in doc.jobs.values():
        rows = ["job %s" % job.name]
        rows.extend("  %s %s" % kv for kv in job.options.items())
        rows.append("end")
        blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"
