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
Zeta functions of finite self-maps.

For an endomorphism of a finite group the Reidemeister zeta function is
``1 / det(1 - zB)``, with B the functional-graph matrix of the induced
map on conjugacy classes, and it factors as an Euler product over the
primitive periodic orbits of that map.
"""


from logging import getLogger

from sympy import Poly, divisors, mobius as _mobius
from sympy.combinatorics import Permutation
from sympy.polys.matrices import DomainMatrix

from tczeta.errors import VerificationError, VerificationFailed
from tczeta.zeta.polynomial import IntPolynomial, RationalFunction, monomial, z
from tczeta.zeta.series import PowerSeries


log = getLogger("tczeta")


class NotEulerForm(VerificationError):

    pass


class OrbitDecomposition:
    """ Primitive periodic orbits of a self-map of ``0..size-1``.

    Each orbit is a ``(length, members)`` pair with members listed from
    the smallest one along the map; orbits are sorted by that member.
    """

    def __init__(self, orbits, transient_count, size, mapping=None):
        self.orbits = tuple((length, tuple(members)) for length, members in orbits)
        self.transient_count = transient_count
        self.size = size
        self.mapping = None if mapping is None else tuple(mapping)

    def __repr__(self):
        return "<{} a={} b={} transient={}>".format(
            type(self).__name__, self.a, self.b, self.transient_count)

    @property
    def a(self):
        """ Number of primitive orbits.
        """
        return len(self.orbits)

    @property
    def b(self):
        """ Number of periodic points.
        """
        return sum(length for length, _ in self.orbits)

    @property
    def lengths(self):
        return [length for length, _ in self.orbits]

    @property
    def periodic_points(self):
        return sorted(x for _, members in self.orbits for x in members)

    @property
    def is_bijective(self):
        return self.transient_count == 0

    def fixed_point_count(self, n):
        """ ``|Fix(sigma^n)|``
        """
        return sum(length for length, _ in self.orbits if n % length == 0)


def orbit_decomposition(mapping):
    sigma = list(mapping)
    size = len(sigma)
    state = [0] * size  # 0 unseen, 1 on current path, 2 done
    orbits = []
    for start in range(size):
        if state[start]:
            continue
        path = []
        x = start
        while not state[x]:
            state[x] = 1
            path.append(x)
            x = sigma[x]
        if state[x] == 1:
            cycle = path[path.index(x):]
            first = cycle.index(min(cycle))
            orbits.append(cycle[first:] + cycle[:first])
        for y in path:
            state[y] = 2
    orbits.sort(key=lambda members: members[0])
    periodic = sum(len(members) for members in orbits)
    return OrbitDecomposition(((len(members), members) for members in orbits),
                              size - periodic, size, sigma)


def fixed_point_counts(mapping, max_n):
    od = orbit_decomposition(mapping)
    return [od.fixed_point_count(n) for n in range(1, max_n + 1)]


def _det_by_elimination(sigma):
    """ Fraction-free determinant of ``I - zB`` over every point of the
    map, transient rows included.
    """
    k = len(sigma)
    if k == 0:
        return IntPolynomial(1)
    rows = []
    for x in range(k):
        row = [0] * k
        row[x] += 1
        row[sigma[x]] -= z
        rows.append(row)
    matrix = DomainMatrix.from_list_sympy(k, k, rows)
    det = matrix.domain.to_sympy(matrix.det())
    return IntPolynomial.from_poly(Poly(det, z))


def det_one_minus_zB(mapping):
    """ ``det(I - zB)`` for the 0/1 matrix of a self-map, computed by
    elimination and by the cycle product; the two must agree.
    """
    sigma = list(mapping)
    od = orbit_decomposition(sigma)
    by_cycles = IntPolynomial(1)
    for length in od.lengths:
        by_cycles = by_cycles * IntPolynomial.one_minus_z_power(length)
    by_elimination = _det_by_elimination(sigma)
    if by_elimination != by_cycles:
        raise VerificationFailed("Determinant {} disagrees with cycle product "
                                 "{}".format(by_elimination, by_cycles))
    return by_cycles


def zeta_rational(mapping):
    return RationalFunction(1, det_one_minus_zB(mapping))


def zeta_series(counts):
    return PowerSeries.from_counts(counts)


def series_matches_rational(series, rational):
    return tuple(rational.taylor(series.order)) == series.coefficients


def euler_product(od):
    denominator = IntPolynomial(1)
    for length in od.lengths:
        denominator = denominator * IntPolynomial.one_minus_z_power(length)
    return RationalFunction(1, denominator)


def permutation_signature(mapping):
    return Permutation(list(mapping)).signature()


def functional_equation_check(r, od):
    """ Check ``r(1/z) = (-1)^a z^b r(z)`` for an Euler product `r` over
    the orbits of `od`. For a bijective map also check that the
    signature of the permutation is ``(-1)^(|X|+a)`` and that
    ``r(1/z) = (-z)^|X| sign r(z)``.
    """
    if r != euler_product(od):
        raise NotEulerForm("{} is not the Euler product over the given "
                           "orbits".format(r))
    inverted = r.reciprocal_argument()
    holds = inverted == r * monomial(od.b, (-1) ** od.a)
    if holds and od.is_bijective and od.mapping is not None:
        size = od.size
        signature = permutation_signature(od.mapping)
        holds = (signature == (-1) ** (size + od.a) and
                 inverted == r * IntPolynomial([0] * size + [(-1) ** size * signature]))
    log.debug("Functional equation with a=%d, b=%d: %s", od.a, od.b, holds)
    return holds


def mobius(d):
    if d < 1:
        raise ValueError("Mobius function is defined on positive integers")
    return int(_mobius(d))


def gauss_congruence_report(counts):
    """ For each n, the residue of ``sum mu(d) c_(n/d)`` over ``d | n``
    modulo `n`. All residues vanish when the congruences hold.
    """
    counts = list(counts)
    residues = []
    for n in range(1, len(counts) + 1):
        total = sum(mobius(d) * counts[n // d - 1] for d in divisors(n))
        residues.append(total % n)
    return residues
