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
Exact character tables of finite groups.

Tables are computed by the class algebra method: the class multiplication
matrices are simultaneously diagonalised over a prime field GF(p) with
``p = 1 (mod e)``, and the resulting values are lifted to eigenvalue
multiplicities of ``E(e)``, e being the group exponent.

Each character value is stored as a multiplicity vector
``(m_0, ..., m_(e-1))``, meaning that the representing matrix has the
eigenvalue ``E(e)^t`` exactly ``m_t`` times.
"""


from logging import getLogger
from math import isqrt

from sympy import GF, Poly, Symbol, isprime, primitive_root
from sympy.polys.matrices import DomainMatrix

from tczeta.characters import cyclotomic
from tczeta.errors import InputError, VerificationFailed
from tczeta.groups import conjugacy_classes
from tczeta.meta import PRIME_SEARCH_LIMIT


log = getLogger("tczeta")

x = Symbol("x")


class NoSuitablePrime(InputError):

    def __init__(self, message, limit):
        super().__init__(message)
        self.limit = limit


def dixon_prime(order, exponent, limit=None):
    """ The smallest prime ``p = 1 (mod exponent)`` with ``p^2 > 4*order``.
    """
    if limit is None:
        limit = PRIME_SEARCH_LIMIT
    p = 1
    examined = 0
    while examined < limit:
        p += exponent
        if p * p > 4 * order and isprime(p):
            return p
        if isprime(p):
            examined += 1
    raise NoSuitablePrime("No prime found among {} candidates; raise "
                          "TCZETA_PRIME_SEARCH_LIMIT".format(limit), limit)


def class_constants(group, classes):
    """ ``a[j][i][k] = #{x in C_j : x^-1 z_k in C_i}`` for fixed
    representatives ``z_k``, the structure constants of the class sums.
    """
    k = classes.count
    a = [[[0] * k for _ in range(k)] for _ in range(k)]
    for t, z in enumerate(classes.reps):
        for g in range(group.order):
            i = classes.class_of[group.mult(group.inv[g], z)]
            a[classes.class_of[g]][i][t] += 1
    return a


def _eigenspaces(matrix, field, p):
    """ Split the row space of column eigenvectors of `matrix`.
    """
    n = matrix.shape[0]
    coefficients = [int(c) % p for c in matrix.charpoly()]
    roots = set()
    for factor, _ in Poly(coefficients, x, modulus=p).factor_list()[1]:
        if factor.degree() == 1:
            a, b = (int(c) for c in factor.all_coeffs())
            roots.add(-b * pow(a, -1, p) % p)
    spaces = []
    for root in sorted(roots):
        shifted = matrix - DomainMatrix.eye(n, field) * field(root)
        basis, _ = shifted.nullspace().rref()
        spaces.append(basis)
    return spaces


def _refine(spaces, matrix, field, p):
    refined = []
    for space in spaces:
        if space.shape[0] <= 1:
            refined.append(space)
            continue
        space, pivots = space.rref()
        restricted = (matrix * space.transpose()).extract(list(pivots), range(space.shape[0]))
        for sub in _eigenspaces(restricted, field, p):
            refined.append(sub * space)
    return refined


def common_eigenvectors(constants, p):
    """ Common column eigenvectors of all class matrices over GF(p), one
    row per irreducible character.
    """
    field = GF(p)
    k = len(constants)
    spaces = [DomainMatrix.eye(k, field)]
    for j in range(1, k):
        if all(space.shape[0] == 1 for space in spaces):
            break
        matrix = DomainMatrix([[field(v) for v in row] for row in constants[j]],
                              (k, k), field)
        spaces = _refine(spaces, matrix, field, p)
        log.debug("Refined with class %d into %d spaces", j, len(spaces))
    if len(spaces) != k or any(space.shape[0] != 1 for space in spaces):
        raise VerificationFailed("Class matrices do not split into {} common "
                                 "eigenvectors".format(k))
    return [[int(v) % p for v in space.to_list()[0]] for space in spaces]


def power_map(group, classes, exponent):
    """ ``pm[c][j]`` is the class of ``rep_c^j``.
    """
    out = []
    for r in classes.reps:
        row = []
        g = 0
        for _ in range(exponent):
            row.append(classes.class_of[g])
            g = group.mult(g, r)
        out.append(row)
    return out


class CharacterTable:

    def __init__(self, group, classes, exponent, prime, chars):
        self.group = group
        self.classes = classes
        self.exponent = exponent
        self.prime = prime
        self.chars = tuple(tuple(tuple(value) for value in char) for char in chars)
        self.degrees = tuple(sum(char[0]) for char in self.chars)

    def __repr__(self):
        return "<{} order={} degrees={}>".format(
            type(self).__name__, self.group.order, self.degrees)

    def __len__(self):
        return len(self.chars)

    def value(self, i, c):
        return cyclotomic.format_value(self.chars[i][c])

    def complex_value(self, i, c):
        return cyclotomic.to_complex(self.chars[i][c])

    def element_values(self, i):
        """ Complex values of character `i` at every group element.
        """
        values = [self.complex_value(i, c) for c in range(self.classes.count)]
        return [values[c] for c in self.classes.class_of]

    def inner_product(self, psi1, psi2):
        """ Exact ``<psi1, psi2>`` of two class functions given as lists of
        multiplicity vectors.
        """
        e = self.exponent
        total = cyclotomic.constant(0, e)
        for c, size in enumerate(self.classes.sizes):
            term = cyclotomic.multiply(psi1[c], cyclotomic.conjugate(psi2[c]))
            total = cyclotomic.add(total, cyclotomic.scale(term, size))
        value = cyclotomic.as_integer(total)
        if value is None or value % self.group.order:
            raise VerificationFailed("Inner product is not an integer")
        return value // self.group.order

    def norm(self, psi):
        return self.inner_product(psi, psi)

    def is_trivial(self, i):
        return all(value == cyclotomic.constant(1, self.exponent) for value in self.chars[i])

    def verify(self):
        """ Check the orthogonality relations and the degree sum exactly.
        """
        order = self.group.order
        if len(self.chars) != self.classes.count:
            raise VerificationFailed("{} characters for {} classes".format(
                len(self.chars), self.classes.count))
        if sum(d * d for d in self.degrees) != order:
            raise VerificationFailed("Squared degrees do not sum to the group order")
        for i, chi in enumerate(self.chars):
            for j, psi in enumerate(self.chars):
                if self.inner_product(chi, psi) != (1 if i == j else 0):
                    raise VerificationFailed("Rows {} and {} are not "
                                             "orthonormal".format(i, j))
        e = self.exponent
        for c, size in enumerate(self.classes.sizes):
            total = cyclotomic.constant(0, e)
            for chi in self.chars:
                total = cyclotomic.add(total, cyclotomic.multiply(
                    chi[c], cyclotomic.conjugate(chi[c])))
            if cyclotomic.as_integer(total) != order // size:
                raise VerificationFailed("Column {} fails orthogonality".format(c))
        return True

    def to_json(self):
        return {
            "order": self.group.order,
            "exponent": self.exponent,
            "prime": self.prime,
            "class_sizes": list(self.classes.sizes),
            "class_reps": list(self.classes.reps),
            "degrees": list(self.degrees),
            "multiplicities": [[list(value) for value in char] for char in self.chars],
            "values": [[self.value(i, c) for c in range(self.classes.count)]
                       for i in range(len(self.chars))],
        }


def compute_character_table(group):
    classes = conjugacy_classes(group)
    k = classes.count
    e = group.exponent
    p = dixon_prime(group.order, e)
    log.info("Computing %d characters of a group of order %d over GF(%d)",
             k, group.order, p)
    inverse_class = [classes.class_of[group.inv[r]] for r in classes.reps]
    vectors = common_eigenvectors(class_constants(group, classes), p)
    pm = power_map(group, classes, e)
    zeta = pow(primitive_root(p), (p - 1) // e, p)
    e_inverse = pow(e, -1, p)
    chars = []
    for w in vectors:
        scale = pow(w[0], -1, p)
        theta = [w[c] * scale * pow(classes.sizes[c], -1, p) % p for c in range(k)]
        weight = sum(classes.sizes[c] * theta[c] * theta[inverse_class[c]]
                     for c in range(k)) % p
        square = group.order * pow(weight, -1, p) % p
        degree = next((d for d in range(1, isqrt(group.order) + 1)
                       if d * d % p == square), None)
        if degree is None:
            raise VerificationFailed("No degree squares to {} mod {}".format(square, p))
        values = [degree * t % p for t in theta]
        char = []
        for c in range(k):
            multiplicities = []
            for t in range(e):
                m = sum(values[pm[c][j]] * pow(zeta, -t * j % e, p)
                        for j in range(e)) * e_inverse % p
                if m > degree:
                    raise VerificationFailed("Multiplicity {} exceeds degree "
                                             "{}".format(m, degree))
                multiplicities.append(m)
            char.append(tuple(multiplicities))
        chars.append(tuple(char))
    trivial = tuple(cyclotomic.constant(1, e) for _ in range(k))
    chars.sort(key=lambda char: (char != trivial, sum(char[0]), char))
    table = CharacterTable(group, classes, e, p, chars)
    table.verify()
    return table
