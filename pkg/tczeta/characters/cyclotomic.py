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
Arithmetic in the ring of cyclotomic integers ``Z[x]/(x^e - 1)``.

An element is a length-`e` integer vector ``(m_0, ..., m_(e-1))`` standing
for ``sum m_k E(e)^k``, where ``E(e) = exp(2*pi*i/e)``. Different vectors
can denote the same complex number; `reduce` gives the canonical
remainder modulo the `e`-th cyclotomic polynomial.
"""


from cmath import exp, pi

from sympy import Poly, Symbol, cyclotomic_poly


x = Symbol("x")


def add(a, b):
    return tuple(s + t for s, t in zip(a, b))


def scale(a, c):
    return tuple(c * s for s in a)


def multiply(a, b):
    e = len(a)
    out = [0] * e
    for i, s in enumerate(a):
        if s:
            for j, t in enumerate(b):
                if t:
                    out[(i + j) % e] += s * t
    return tuple(out)


def conjugate(a):
    e = len(a)
    return tuple(a[-k % e] for k in range(e))


def constant(c, e):
    return (c,) + (0,) * (e - 1)


def reduce(a):
    """ Canonical coefficients modulo the cyclotomic polynomial, in
    ascending order and without trailing zeros.
    """
    e = len(a)
    remainder = Poly(list(reversed(a)), x).rem(Poly(cyclotomic_poly(e, x), x))
    coefficients = [int(c) for c in reversed(remainder.all_coeffs())]
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients)


def equal(a, b):
    return reduce(a) == reduce(b)


def as_integer(a):
    """ The rational integer denoted by `a`, or None.
    """
    reduced = reduce(a)
    if len(reduced) > 1:
        return None
    return reduced[0] if reduced else 0


def to_complex(a):
    e = len(a)
    return sum(m * exp(2j * pi * k / e) for k, m in enumerate(a) if m)


def format_value(a):
    """ Integers print plainly, other values as sums of powers of E(e).
    """
    e = len(a)
    reduced = reduce(a)
    if len(reduced) <= 1:
        return str(reduced[0] if reduced else 0)
    terms = []
    for k, c in enumerate(reduced):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = "E({})".format(e) if k == 1 else "E({})^{}".format(e, k)
            body = power if abs(c) == 1 else "{}*{}".format(abs(c), power)
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms)
