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
The dual action ``chi -> chi o phi`` on irreducible characters and the
counts and zeta functions derived from it.
"""


from collections import namedtuple
from logging import getLogger

from tczeta.errors import VerificationFailed
from tczeta.groups import class_map, endo_power
from tczeta.meta import SERIES_ORDER
from tczeta.twisted import reidemeister_number
from tczeta.zeta import (
    euler_product, functional_equation_check, orbit_decomposition,
    series_matches_rational, zeta_series,
)


log = getLogger("tczeta")


class DualMap:
    """ Pullback of every irreducible character along an endomorphism.

    `target[i]` is the index of ``chi_i o phi`` when that class function
    is irreducible and None otherwise.
    """

    def __init__(self, table, phi):
        self.table = table
        self.phi = phi
        sigma = class_map(phi).sigma
        self.pullback = tuple(tuple(char[s] for s in sigma) for char in table.chars)
        self.irreducible_pullback = tuple(table.norm(psi) == 1 for psi in self.pullback)
        index = {char: i for i, char in enumerate(table.chars)}
        self.target = tuple(index.get(psi) if irreducible else None
                            for psi, irreducible in zip(self.pullback, self.irreducible_pullback))
        for i, irreducible in enumerate(self.irreducible_pullback):
            if irreducible and self.target[i] is None:
                raise VerificationFailed("Pullback of character {} has norm 1 but "
                                         "is not in the table".format(i))
        self.fixed_set = tuple(i for i, j in enumerate(self.target) if i == j)

    def __repr__(self):
        return "<{} fixed={}>".format(type(self).__name__, list(self.fixed_set))


def rt_count(table, phi, n=1):
    """ Number of irreducible characters with ``chi o phi^n = chi``.
    """
    return len(DualMap(table, endo_power(phi, n)).fixed_set)


TBFTRow = namedtuple("TBFTRow", ["n", "reidemeister", "trace", "rt", "holds"])

TBFTReport = namedtuple("TBFTReport", ["rows", "holds"])


def tbft_check(table, phi, max_n):
    """ Compare, for each n, the twisted class count, the number of
    conjugacy classes fixed by the induced map and the number of fixed
    irreducible characters.
    """
    group = table.group
    cm = class_map(phi)
    rows = []
    for n in range(1, max_n + 1):
        counts = (reidemeister_number(group, phi, n), cm.fixed_count(n), rt_count(table, phi, n))
        rows.append(TBFTRow(n, *counts, holds=len(set(counts)) == 1))
        log.debug("n=%d R=%d trace=%d RT=%d", n, *counts)
    report = TBFTReport(rows, all(row.holds for row in rows))
    log.info("Twisted Burnside-Frobenius check up to n=%d: %s", max_n,
             "holds" if report.holds else "fails")
    return report


class DualSubsystem:
    """ The largest set of characters whose pullbacks stay irreducible at
    every iterate, with the self-map the dual action induces on it.
    """

    def __init__(self, members, target):
        self.members = tuple(members)
        position = {i: k for k, i in enumerate(self.members)}
        self.mapping = tuple(position[target[i]] for i in self.members)

    def __repr__(self):
        return "<{} members={}>".format(type(self).__name__, list(self.members))

    def image(self, i):
        return self.members[self.mapping[self.members.index(i)]]

    def orbit_decomposition(self):
        return orbit_decomposition(self.mapping)

    def periodic_members(self):
        return [self.members[k] for k in self.orbit_decomposition().periodic_points]


def phi_irreducible_subsystem(table, phi, check_n=8):
    """ Remove characters until the dual action is a self-map of what is
    left, then check that every character fixed by some ``phi^n`` with
    ``n <= check_n`` survived.
    """
    dual = DualMap(table, phi)
    members = set(range(len(table)))
    changed = True
    while changed:
        changed = False
        for i in sorted(members):
            if dual.target[i] not in members:
                members.discard(i)
                changed = True
    subsystem = DualSubsystem(sorted(members), dual.target)
    for n in range(1, check_n + 1):
        fixed = DualMap(table, endo_power(phi, n)).fixed_set
        outside = [i for i in fixed if i not in members]
        if outside:
            raise VerificationFailed("Character {} is fixed by phi^{} but lies "
                                     "outside the dual subsystem".format(outside[0], n))
    log.debug("Dual subsystem %r", subsystem)
    return subsystem


RTZeta = namedtuple("RTZeta", ["zeta", "subsystem", "orbits", "counts",
                               "functional_equation"])


def rt_zeta(table, phi, order=None):
    """ Euler product over the periodic orbits of the dual subsystem,
    checked against the series of fixed character counts.
    """
    if order is None:
        order = SERIES_ORDER
    subsystem = phi_irreducible_subsystem(table, phi)
    od = subsystem.orbit_decomposition()
    zeta = euler_product(od)
    counts = []
    power = phi
    for n in range(1, order + 1):
        if n > 1:
            power = power.compose(phi)
        counts.append(len(DualMap(table, power).fixed_set))
    if not series_matches_rational(zeta_series(counts), zeta):
        raise VerificationFailed("Euler product {} does not match the fixed "
                                 "character counts {}".format(zeta, counts))
    return RTZeta(zeta, subsystem, od, counts, functional_equation_check(zeta, od))
