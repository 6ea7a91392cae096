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
Endomorphisms of free abelian groups of finite rank.

An integer matrix `M` acts on column vectors, ``phi(e_j) = sum_i M[i][j] e_i``.
The twisted classes of ``phi^n`` form the cokernel of ``I - M^n``, so
``R(phi^n) = |det(I - M^n)|`` whenever that determinant is nonzero.
"""


from collections import namedtuple
from itertools import combinations
from logging import getLogger
from math import gcd, lcm

import numpy
from sympy import Matrix, Symbol, ZZ
from sympy.matrices.normalforms import invariant_factors

from tczeta.errors import VerificationError, VerificationFailed
from tczeta.groups import Endomorphism, build_endomorphism, direct_product
from tczeta.groups.files import ParseError
from tczeta.groups.zoo import cyclic_group
from tczeta.meta import SERIES_ORDER, TOLERANCE
from tczeta.zeta import zeta_series
from tczeta.zeta.polynomial import IntPolynomial, RationalFunction


log = getLogger("tczeta")

x = Symbol("x")


class _Infinite:

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "infinite"


INFINITE = _Infinite()


class InfiniteReidemeister(VerificationError):

    def __init__(self, n):
        super().__init__("Reidemeister number is infinite at n={}".format(n))
        self.n = n


class LatticeEndo:

    def __init__(self, rows):
        rows = [[int(v) for v in row] for row in rows]
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("Matrix must be square and non-empty")
        self.k = len(rows)
        self.M = Matrix(rows)

    @classmethod
    def parse(cls, text):
        """ Parse ``"2 1; 1 1"``, rows separated by semicolons.
        """
        try:
            rows = [[int(v) for v in row.split()] for row in text.split(";")]
        except ValueError:
            raise ParseError("Matrix entries must be integers: {!r}".format(text))
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ParseError("Matrix must be square and non-empty: {!r}".format(text))
        return cls(rows)

    def __repr__(self):
        return "LatticeEndo({!r})".format(self.rows())

    def rows(self):
        return [[int(v) for v in self.M.row(i)] for i in range(self.k)]

    def power(self, n):
        return self.M ** n


def _as_lattice(m):
    return m if isinstance(m, LatticeEndo) else LatticeEndo(m)


def lefschetz_number(m, n=1):
    """ ``det(I - M^n)``, with sign.
    """
    m = _as_lattice(m)
    return int((Matrix.eye(m.k) - m.power(n)).det())


def lattice_reidemeister(m, n=1):
    value = abs(lefschetz_number(m, n))
    return value if value else INFINITE


def exterior_power(m, j):
    """ The matrix of ``j x j`` minors, rows and columns indexed by
    increasing index tuples in lexicographic order.
    """
    m = _as_lattice(m)
    subsets = list(combinations(range(m.k), j))
    if j == 0:
        return Matrix([[1]])
    return Matrix([[m.M.extract(list(rows), list(cols)).det() for cols in subsets]
                   for rows in subsets])


def det_one_minus_z(matrix):
    """ ``det(I - zA)``, the reversed characteristic polynomial.
    """
    return IntPolynomial(int(c) for c in matrix.charpoly(x).all_coeffs())


def lefschetz_zeta(m):
    """ Product of ``det(I - z Lambda^j M)^((-1)^(j+1))`` over ``j = 0..k``.
    """
    m = _as_lattice(m)
    numerator = IntPolynomial(1)
    denominator = IntPolynomial(1)
    for j in range(m.k + 1):
        factor = det_one_minus_z(exterior_power(m, j))
        if j % 2:
            numerator = numerator * factor
        else:
            denominator = denominator * factor
    return RationalFunction(numerator, denominator)


def hyperbolic_signs(m, tolerance=None):
    """ ``(r, sigma)``: r counts real eigenvalues of absolute value above 1
    and sigma is ``(-1)`` to the number of those below -1.
    """
    if tolerance is None:
        tolerance = TOLERANCE
    m = _as_lattice(m)
    eigenvalues = numpy.linalg.eigvals(numpy.array(m.rows(), dtype=float))
    r = 0
    negative = 0
    for value in eigenvalues:
        if abs(value.imag) > tolerance * max(1.0, abs(value)):
            continue
        real = value.real
        if abs(abs(real) - 1) <= tolerance:
            raise VerificationFailed("Eigenvalue {:.12g} is too close to +-1 to "
                                     "decide the sign bookkeeping".format(real))
        if abs(real) > 1:
            r += 1
            if real < -1:
                negative += 1
    return r, (-1) ** negative


AbelianZetaResult = namedtuple("AbelianZetaResult", ["counts", "zeta", "sigma", "r", "lefschetz"])


def lattice_zeta(m, order=None):
    """ The Reidemeister zeta function ``L(sigma*z)^((-1)^r)``, built from
    the Lefschetz zeta function and verified against the counts.
    """
    if order is None:
        order = SERIES_ORDER
    m = _as_lattice(m)
    numbers = [lefschetz_number(m, n) for n in range(1, order + 1)]
    for n, value in enumerate(numbers, start=1):
        if value == 0:
            raise InfiniteReidemeister(n)
    r, sigma = hyperbolic_signs(m)
    for n, value in enumerate(numbers, start=1):
        expected = (-1) ** r * sigma ** n
        if (value > 0) != (expected > 0):
            raise VerificationFailed("det(I - M^{}) = {} has sign {:+d}, expected "
                                     "{:+d}".format(n, value, 1 if value > 0 else -1, expected))
    lefschetz = lefschetz_zeta(m)
    zeta = lefschetz.scale_argument(sigma) ** ((-1) ** r)
    counts = [abs(value) for value in numbers]
    if tuple(zeta.taylor(order)) != zeta_series(counts).coefficients:
        raise VerificationFailed("Zeta function {} does not match the Reidemeister "
                                 "numbers {}".format(zeta, counts))
    log.info("Lattice zeta %s with r=%d, sigma=%+d", zeta, r, sigma)
    return AbelianZetaResult(counts, zeta, sigma, r, lefschetz)


def smith_normal_form(a):
    """ Elementary divisors ``d_1 | d_2 | ...`` of a square integer matrix,
    nonnegative and with zeros last.
    """
    a = Matrix(a)
    divisors = [abs(int(d)) for d in invariant_factors(a, domain=ZZ)]
    divisors += [0] * (a.rows - len(divisors))
    for i in range(len(divisors)):
        for j in range(i + 1, len(divisors)):
            g = gcd(divisors[i], divisors[j])
            divisors[i], divisors[j] = g, lcm(divisors[i], divisors[j])
    return tuple(divisors)


def cokernel_order_mod(divisors, c):
    """ Order of ``coker(A) / c coker(A)`` from the elementary divisors
    of `A`.
    """
    result = 1
    for d in divisors:
        result *= gcd(c, d)
    return result


ProfiniteLevel = namedtuple("ProfiniteLevel", [
    "level", "modulus", "counts", "agreement_order", "first_discrepancy",
])


def profinite_approximation(m, levels, order=None):
    """ Compare the zeta function of ``phi`` with those of the maps it
    induces on the finite quotients ``(Z/c_i)^k``, where ``c_i`` is the
    product of ``|det(I - M^n)|`` for ``n <= i``.

    Each level records the largest `j` up to which the Taylor
    coefficients agree and the first `n` at which the quotient count
    differs from ``R(phi^n)``.
    """
    if order is None:
        order = SERIES_ORDER
    order = max(order, levels + 1)
    m = _as_lattice(m)
    result = lattice_zeta(m, order)
    target = result.zeta.taylor(order)
    identity = Matrix.eye(m.k)
    divisors = [smith_normal_form(identity - m.power(n)) for n in range(1, order + 1)]
    out = []
    modulus = 1
    for i in range(1, levels + 1):
        modulus *= result.counts[i - 1]
        counts = [cokernel_order_mod(d, modulus) for d in divisors]
        for n in range(1, i + 1):
            if counts[n - 1] != result.counts[n - 1]:
                raise VerificationFailed("Quotient count {} differs from R(phi^{}) = {} "
                                         "at level {}".format(counts[n - 1], n,
                                                              result.counts[n - 1], i))
        series = zeta_series(counts).coefficients
        agreement = order
        for j in range(order + 1):
            if series[j] != target[j]:
                agreement = j - 1
                break
        discrepancy = next((n for n in range(1, order + 1)
                            if counts[n - 1] != result.counts[n - 1]), None)
        out.append(ProfiniteLevel(i, modulus, counts, agreement, discrepancy))
        log.debug("Level %d modulus %d agrees to order %d", i, modulus, agreement)
    return out


def finite_model(m, c, n=1):
    """ The group ``(Z/c)^k`` with the endomorphism induced by ``M^n``,
    built from cyclic factors.
    """
    m = _as_lattice(m)
    power = m.power(n)
    factor = cyclic_group(c)
    group = factor
    for _ in range(m.k - 1):
        group, _ = direct_product(group, factor)
    if c == 1:
        return group, Endomorphism.identity(group)
    words = [[(i, int(power[i, j])) for i in range(m.k)] for j in range(m.k)]
    return group, build_endomorphism(group, words)
