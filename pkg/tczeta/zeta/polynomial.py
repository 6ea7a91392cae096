#!/usr/bin/env python
# coding: utf-8

# Copyright (c) 2026 "tczeta contributors"
#
# This file is part of tczeta.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Integer polynomials and rational functions in a single variable `z`.

Arithmetic is delegated to sympy's dense polynomials over ZZ. Values are
kept in a canonical form so that equality is coefficient equality.
"""


from fractions import Fraction
from math import gcd

from sympy import Poly, Rational, Symbol, ZZ, cancel, fraction, together
from sympy.parsing.sympy_parser import parse_expr


z = Symbol("z")


def format_terms(coefficients):
    """ Format ascending coefficients as ``1 - 3*z + z^2``.
    """
    out = []
    for k, c in enumerate(coefficients):
        if c == 0:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            monomial = "z" if k == 1 else "z^{}".format(k)
            body = monomial if magnitude == 1 else "{}*{}".format(magnitude, monomial)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) or "0"


class IntPolynomial:
    """ A polynomial with integer coefficients, stored in ascending order
    with no trailing zeros.
    """

    def __init__(self, coefficients=()):
        if isinstance(coefficients, int):
            coefficients = (coefficients,)
        coefficients = [int(c) for c in coefficients]
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_poly(cls, poly):
        return cls(reversed(poly.all_coeffs()))

    @classmethod
    def one_minus_z_power(cls, p):
        """ ``1 - z^p``
        """
        return cls([1] + [0] * (p - 1) + [-1])

    def to_poly(self):
        return Poly(list(reversed(self.coefficients)) or [0], z, domain=ZZ)

    def __repr__(self):
        return "IntPolynomial({!r})".format(list(self.coefficients))

    def __str__(self):
        return format_terms(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial(other)
        try:
            return self.coefficients == other.coefficients
        except AttributeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return bool(self.coefficients)

    def __call__(self, value):
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def __neg__(self):
        return IntPolynomial(-c for c in self.coefficients)

    def __add__(self, other):
        other = _as_int_polynomial(other)
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (0,) * (n - len(self.coefficients))
        b = other.coefficients + (0,) * (n - len(other.coefficients))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_int_polynomial(other))

    def __mul__(self, other):
        other = _as_int_polynomial(other)
        return IntPolynomial.from_poly(self.to_poly() * other.to_poly())

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return IntPolynomial.from_poly(self.to_poly() ** exponent)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def valuation(self):
        """ Index of the lowest nonzero coefficient.
        """
        for k, c in enumerate(self.coefficients):
            if c:
                return k
        return None

    def lowest_coefficient(self):
        k = self.valuation
        return 0 if k is None else self.coefficients[k]

    def content(self):
        result = 0
        for c in self.coefficients:
            result = gcd(result, c)
        return result

    def reversed(self, degree=None):
        """ ``z^degree * p(1/z)``, by default with ``degree = deg p``.
        """
        if degree is None:
            degree = self.degree
        padded = self.coefficients + (0,) * (degree + 1 - len(self.coefficients))
        return IntPolynomial(reversed(padded))

    def scaled(self, s):
        """ ``p(s*z)``
        """
        return IntPolynomial(c * s ** k for k, c in enumerate(self.coefficients))

    def factors(self):
        """ Factor over the integers into ``(unit, [(factor, multiplicity)])``
        with each factor's lowest coefficient positive, in a fixed order.
        """
        if not self.coefficients:
            return 0, []
        unit, pairs = self.to_poly().factor_list()
        unit = int(unit)
        out = []
        for factor, multiplicity in pairs:
            factor = IntPolynomial.from_poly(factor)
            if factor.lowest_coefficient() < 0:
                factor = -factor
                if multiplicity % 2:
                    unit = -unit
            out.append((factor, multiplicity))
        out.sort(key=lambda pair: (pair[0].degree, pair[0].coefficients))
        return unit, out

    def format_factored(self):
        unit, pairs = self.factors()
        if not pairs:
            return str(unit)
        parts = []
        for factor, multiplicity in pairs:
            text = str(factor)
            if len([c for c in factor.coefficients if c]) > 1:
                text = "(" + text + ")"
            if multiplicity > 1:
                text = "{}^{}".format(text, multiplicity)
            parts.append(text)
        text = "*".join(parts)
        if unit == -1:
            return "-" + text
        if unit != 1:
            return "{}*{}".format(unit, text)
        return text


def _as_int_polynomial(value):
    if isinstance(value, IntPolynomial):
        return value
    return IntPolynomial(value)


class RationalFunction:
    """ A quotient of integer polynomials in lowest terms.

    The canonical form has no common factor between numerator and
    denominator, joint content 1 and a positive lowest nonzero
    coefficient in the denominator.
    """

    def __init__(self, numerator=1, denominator=1):
        numerator = _as_int_polynomial(numerator)
        denominator = _as_int_polynomial(denominator)
        if not denominator:
            raise ZeroDivisionError("Zero denominator")
        n = numerator.to_poly()
        d = denominator.to_poly()
        common = n.gcd(d)
        n = n.exquo(common)
        d = d.exquo(common)
        numerator = IntPolynomial.from_poly(n)
        denominator = IntPolynomial.from_poly(d)
        content = gcd(numerator.content(), denominator.content())
        if content > 1:
            numerator = IntPolynomial(c // content for c in numerator.coefficients)
            denominator = IntPolynomial(c // content for c in denominator.coefficients)
        if denominator.lowest_coefficient() < 0:
            numerator, denominator = -numerator, -denominator
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def parse(cls, text):
        """ Parse a display string such as ``(1 - z)^2 / (1 - 3*z + z^2)``.
        """
        expr = parse_expr(text.replace("^", "**"), local_dict={"z": z})
        numerator, denominator = fraction(cancel(together(expr)))
        return cls(*_integer_pair(Poly(numerator, z, domain="QQ"),
                                  Poly(denominator, z, domain="QQ")))

    def __repr__(self):
        return "RationalFunction({!r}, {!r})".format(
            list(self.numerator.coefficients), list(self.denominator.coefficients))

    def __str__(self):
        if self.denominator == 1:
            return self.numerator.format_factored()
        denominator = self.denominator.format_factored()
        if _has_top_level_product(denominator):
            denominator = "(" + denominator + ")"
        return "{} / {}".format(self.numerator.format_factored(), denominator)

    def __eq__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            other = RationalFunction(other)
        try:
            return (self.numerator == other.numerator and
                    self.denominator == other.denominator)
        except AttributeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.numerator * other.numerator,
                                self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction(other)
        return RationalFunction(self.numerator * other.denominator,
                                self.denominator * other.numerator)

    def __pow__(self, exponent):
        if exponent < 0:
            return RationalFunction(self.denominator ** -exponent,
                                    self.numerator ** -exponent)
        return RationalFunction(self.numerator ** exponent,
                                self.denominator ** exponent)

    def taylor(self, order):
        """ Taylor coefficients at 0 up to and including ``z^order``.
        """
        d = self.denominator.coefficients
        if d[0] == 0:
            raise ValueError("Pole at z = 0")
        n = self.numerator.coefficients
        out = []
        for k in range(order + 1):
            value = Fraction(n[k] if k < len(n) else 0)
            for j in range(1, min(k, len(d) - 1) + 1):
                value -= d[j] * out[k - j]
            out.append(value / d[0])
        return out

    def reciprocal_argument(self):
        """ ``r(1/z)``
        """
        shift = self.denominator.degree - max(self.numerator.degree, 0)
        numerator = self.numerator.reversed(max(self.numerator.degree, 0))
        denominator = self.denominator.reversed()
        if shift >= 0:
            numerator = numerator * IntPolynomial([0] * shift + [1])
        else:
            denominator = denominator * IntPolynomial([0] * -shift + [1])
        return RationalFunction(numerator, denominator)

    def scale_argument(self, s):
        """ ``r(s*z)`` for an integer `s`.
        """
        return RationalFunction(self.numerator.scaled(s), self.denominator.scaled(s))

    def to_json(self):
        return {
            "numerator": list(self.numerator.coefficients),
            "denominator": list(self.denominator.coefficients),
            "display": str(self),
        }


def monomial(k, coefficient=1):
    """ ``coefficient * z^k``
    """
    return IntPolynomial([0] * k + [coefficient])


def _integer_pair(numerator, denominator):
    coefficients = [Rational(c) for c in numerator.all_coeffs() + denominator.all_coeffs()]
    scale = 1
    for c in coefficients:
        scale = scale * c.q // gcd(scale, c.q)
    return (IntPolynomial(int(Rational(c) * scale) for c in reversed(numerator.all_coeffs())),
            IntPolynomial(int(Rational(c) * scale) for c in reversed(denominator.all_coeffs())))


def _has_top_level_product(text):
    depth = 0
    for character in text:
        if character == "(":
            depth += 1
        elif character == ")":
            depth -= 1
        elif character == "*" and depth == 0:
            return True
    return False
