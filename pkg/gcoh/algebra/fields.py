# coding: utf-8
"""
Exact coefficient fields, the rationals or a prime field,
both taken from :epkg:`sympy` domains.
"""
from sympy import isprime
from sympy.polys.domains import QQ, GF

#: prime used by the modular verification mode
DEFAULT_PRIME = 2147483629


class FieldMismatchError(TypeError):
    """
    Raised when two objects defined over different fields are combined.
    """
    pass


def make_field(spec=None):
    """
    Returns the :epkg:`sympy` domain for a field name.

    :param spec: `None` or `'QQ'` for the rationals, `'GF(p)'`
        or an integer *p* for a prime field, or a domain
    :return: domain
    """
    if spec is None:
        return QQ
    if hasattr(spec, 'is_Field') and spec.is_Field:
        if spec.is_QQ:
            return spec
        if spec.is_FiniteField:
            return _prime_field(spec.characteristic())
        raise ValueError(  # pragma: no cover
            "Unsupported domain {}.".format(spec))
    if isinstance(spec, int):
        return _prime_field(spec)
    if not isinstance(spec, str):
        raise TypeError(
            "Unexpected type {} for a field.".format(type(spec)))
    text = spec.replace(' ', '')
    if text in ('QQ', 'Q'):
        return QQ
    if text.startswith('GF(') and text.endswith(')'):
        try:
            p = int(text[3:-1])
        except ValueError as e:
            raise ValueError(
                "Unable to read the characteristic in {!r}.".format(
                    spec)) from e
        return _prime_field(p)
    raise ValueError("Unknown field {!r}, expecting QQ or GF(p).".format(spec))


def _prime_field(p):
    if p < 2 or p >= 2 ** 31 or not isprime(p):
        raise ValueError(
            "GF(p) requires a prime p < 2^31, not {}.".format(p))
    return GF(p)


def field_name(field):
    """
    Returns the name used in files, `'QQ'` or `'GF(p)'`.
    """
    if field.is_QQ:
        return 'QQ'
    return 'GF({})'.format(field.characteristic())


def same_field(f1, f2):
    "Tells if both domains are the same field."
    return field_name(f1) == field_name(f2)


def scalar(field, num, den=1):
    """
    Converts a fraction of integers into *field*.

    :param field: domain
    :param num: numerator (int)
    :param den: denominator (int)
    :return: element of the domain
    """
    if den == 0:
        raise ZeroDivisionError("Denominator is null.")
    n = field.convert(int(num))
    if den == 1:
        return n
    d = field.convert(int(den))
    if not d:
        raise ZeroDivisionError(
            "Denominator {} vanishes in {}.".format(den, field_name(field)))
    return n / d


def to_rational(field, c):
    """
    Returns a :epkg:`sympy` number for an element of *field*,
    used to print coefficients.
    """
    return field.to_sympy(c)


def convert_scalar(c, source, target):
    """
    Converts an element from field *source* into field *target*.
    Only conversions from the rationals or between identical fields
    are possible.
    """
    if same_field(source, target):
        return c
    if not source.is_QQ:
        raise FieldMismatchError(
            "Unable to convert from {} to {}.".format(
                field_name(source), field_name(target)))
    return scalar(target, int(source.numer(c)), int(source.denom(c)))
