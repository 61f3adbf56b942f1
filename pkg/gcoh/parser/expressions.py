# coding: utf-8
"""
Grammar of polynomial and tensor expressions, implemented
with :epkg:`pyparsing`.
"""
from pyparsing import (
    Literal, Regex, Suppress, ZeroOrMore, Optional, Forward,
    ParseBaseException, ParseFatalException)
from ..algebra.polynomial import NcPolynomial
from ..algebra.fields import scalar


class GalgSyntaxError(ValueError):
    """
    Syntax or validation error in a `.galg` document.

    :param message: message
    :param line: line number (starts at 1)
    :param column: column number (starts at 1)
    :param source: file name
    """

    def __init__(self, message, line=1, column=1, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source or '<string>'
        ValueError.__init__(self, "{}:{}:{}: {}".format(
            self.source, line, column, message))


def _found(text, loc):
    rest = text[loc:].split()
    return " (found {!r})".format(rest[0]) if rest else " (found end of text)"


class ExpressionGrammar:
    """
    Parser for polynomials over a set of generators. Parse actions
    evaluate the expression into an :class:`NcPolynomial
    <gcoh.algebra.polynomial.NcPolynomial>` while parsing.

    ::

        number  :: digits [ '/' digits ]
        power   :: name [ '^' digits ]
        factor  :: number | power | '(' expr ')'
        term    :: factor [ '*' factor ]*
        expr    :: [ '+' | '-' ] term [ ( '+' | '-' ) term ]*
        tensor  :: [ '+' | '-' ] tterm [ ( '+' | '-' ) tterm ]*
        tterm   :: term '#' term

    In a tensor, the left side of `#` uses the generators of the left
    factor, the right side the generators of the right factor.

    :param field: coefficient field
    :param symbols: dictionary `{name: generator index}`
    :param parameters: dictionary `{name: scalar}`, named constants
    :param right_symbols: generators of the right factor for tensors
    """

    def __init__(self, field, symbols, parameters=None, right_symbols=None):
        self.field = field
        self.symbols = symbols
        self.parameters = parameters or {}
        for k in self.parameters:
            if k in symbols or (right_symbols and k in right_symbols):
                raise ValueError(
                    "Parameter {!r} is also a generator.".format(k))
        self.expr, term = self._build(symbols)
        if right_symbols is not None:
            _, right_term = self._build(right_symbols)
            tterm = term + Suppress('#') + right_term
            tterm.set_parse_action(self._tensor_term)
            sign = Literal('+') | Literal('-')
            self.tensor = (Optional(sign) + tterm +
                           ZeroOrMore(sign + tterm))
            self.tensor.set_parse_action(self._tensor_sum)
        else:
            self.tensor = None

    def _build(self, symbols):
        expr = Forward()
        number = Regex(r"\d+(/\d+)?")
        number.set_parse_action(self._number)
        name = Regex(r"[A-Za-z_][A-Za-z0-9_']*")
        power = name + Optional(Suppress('^') + Regex(r"\d+"))
        power.set_parse_action(
            lambda s, loc, toks: self._power(symbols, s, loc, toks))
        factor = number | power | (Suppress('(') + expr + Suppress(')'))
        term = factor + ZeroOrMore(Suppress('*') + factor)
        term.set_parse_action(self._product)
        sign = Literal('+') | Literal('-')
        expr <<= Optional(sign) + term + ZeroOrMore(sign + term)
        expr.set_parse_action(self._sum)
        return expr, term

    def _number(self, s, loc, toks):
        text = toks[0]
        num, _, den = text.partition('/')
        try:
            value = scalar(self.field, int(num), int(den) if den else 1)
        except ZeroDivisionError as e:
            raise ParseFatalException(s, loc, str(e)) from e
        return NcPolynomial._from_dict(
            {(): value} if value else {}, self.field)

    def _power(self, symbols, s, loc, toks):
        name = toks[0]
        exponent = int(toks[1]) if len(toks) > 1 else 1
        if name in symbols:
            return NcPolynomial._from_dict(
                {(symbols[name], ) * exponent: self.field.one}, self.field)
        if name in self.parameters:
            value = self.parameters[name] ** exponent
            return NcPolynomial._from_dict(
                {(): value} if value else {}, self.field)
        raise ParseFatalException(s, loc, "unknown name {!r}".format(name))

    def _product(self, s, loc, toks):
        res = toks[0]
        for t in toks[1:]:
            res = res * t
        return res

    def _signed(self, toks, zero, add):
        res = zero
        sign = '+'
        for t in toks:
            if isinstance(t, str):
                sign = t
                continue
            res = add(res, t, sign == '-')
            sign = '+'
        return res

    def _sum(self, s, loc, toks):
        return self._signed(
            toks, NcPolynomial.zero(self.field),
            lambda a, b, neg: a - b if neg else a + b)

    def _tensor_term(self, s, loc, toks):
        left, right = toks[0], toks[1]
        res = {}
        for wa, ca in left.items():
            for wb, cb in right.items():
                res[wa, wb] = ca * cb
        return TensorValue(res, self.field)

    def _tensor_sum(self, s, loc, toks):
        return self._signed(
            toks, TensorValue({}, self.field),
            lambda a, b, neg: a.add(b, -1 if neg else 1))

    def _parse(self, element, text, line, column, source):
        try:
            return element.parse_string(text, parse_all=True)[0]
        except ParseBaseException as e:
            msg = e.msg
            if not isinstance(e, ParseFatalException):
                msg += _found(text, e.loc)
            raise GalgSyntaxError(
                msg, line, column + e.loc, source) from e

    def parse(self, text, line=1, column=1, source=None):
        """
        Parses a polynomial.

        :param text: expression
        :param line: line of the expression in the document
        :param column: column of the first character in the document
        :param source: file name
        :return: :class:`NcPolynomial
            <gcoh.algebra.polynomial.NcPolynomial>`
        """
        if not text.strip():
            raise GalgSyntaxError("empty expression", line, column, source)
        return self._parse(self.expr, text, line, column, source)

    def parse_tensor(self, text, line=1, column=1, source=None):
        """
        Parses a tensor, `2*y # z - 1 # z^2`.

        :return: :class:`TensorValue`
        """
        if self.tensor is None:
            raise RuntimeError("No right factor was given.")
        if not text.strip():
            raise GalgSyntaxError("empty expression", line, column, source)
        if text.strip() == '0':
            return TensorValue({}, self.field)
        return self._parse(self.tensor, text, line, column, source)


class TensorValue:
    """
    Element of a tensor product of two free algebras stored as
    a dictionary `{(left word, right word): coefficient}`.
    """

    __slots__ = ('terms', 'field')

    def __init__(self, terms, field):
        self.terms = {k: v for k, v in terms.items() if v}
        self.field = field

    def add(self, other, sign=1):
        "Returns `self + sign * other`."
        res = dict(self.terms)
        for k, v in other.terms.items():
            res[k] = res.get(k, self.field.zero) + (v if sign > 0 else -v)
        return TensorValue(res, self.field)

    def __eq__(self, other):
        return isinstance(other, TensorValue) and self.terms == other.terms

    def __repr__(self):
        return "TensorValue(%r)" % self.terms
