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
Twisted conjugacy classes of endomorphisms of finite groups.
"""


from collections import namedtuple
from logging import getLogger

from tczeta.groups import (
    Partition, endo_power, induced_endomorphism, quotient_group,
)
from tczeta.groups.unionfind import UnionFind


log = getLogger("tczeta")


class ReidemeisterPartition(Partition):
    """ Orbits of the twisted action ``g -> x g phi(x)^-1``.
    """

    def __init__(self, class_of, reps, phi):
        super().__init__(class_of, reps)
        self.phi = phi


def reidemeister_classes(group, phi):
    uf = UnionFind(group.order)
    for x in group.generators:
        twist = phi.image[group.inv[x]]
        for g in range(group.order):
            uf.union(g, group.mult(group.mult(x, g), twist))
    class_of, reps = uf.labels()
    return ReidemeisterPartition(class_of, reps, phi)


def reidemeister_number(group, phi, n=1):
    """ R(phi^n), by orbit closure.
    """
    count = reidemeister_classes(group, endo_power(phi, n)).count
    log.debug("R(phi^%d) = %d", n, count)
    return count


def reidemeister_sequence(group, phi, max_n):
    counts = []
    power = phi
    for n in range(1, max_n + 1):
        if n > 1:
            power = power.compose(phi)
        counts.append(reidemeister_classes(group, power).count)
    log.debug("Reidemeister numbers %r", counts)
    return counts


PushforwardReport = namedtuple("PushforwardReport", [
    "holds", "count", "quotient_count", "quotient_order", "witness",
])


def quotient_pushforward_check(group, phi, subgroup):
    """ Check that the projection onto ``G/N`` maps each twisted class of
    `phi` onto a whole twisted class of the induced endomorphism, and that
    every class of the quotient is reached.

    The witness is a class representative of `G` whose image is not a
    full quotient class, or a quotient class that is never reached.
    """
    quotient = quotient_group(group, subgroup)
    induced = induced_endomorphism(phi, quotient)
    upstairs = reidemeister_classes(group, phi)
    downstairs = reidemeister_classes(quotient.group, induced)
    projection = quotient.projection
    images = [set() for _ in range(upstairs.count)]
    for g, c in enumerate(upstairs.class_of):
        images[c].add(projection[g])
    blocks = [set(block) for block in downstairs.blocks()]
    hit = set()
    witness = None
    for c, image in enumerate(images):
        target = downstairs.class_of[projection[upstairs.reps[c]]]
        if image != blocks[target]:
            witness = ("class", upstairs.reps[c])
            break
        hit.add(target)
    if witness is None and len(hit) != downstairs.count:
        missing = min(set(range(downstairs.count)) - hit)
        witness = ("quotient class", downstairs.reps[missing])
    report = PushforwardReport(witness is None, upstairs.count, downstairs.count,
                               quotient.group.order, witness)
    log.info("Pushforward onto quotient of order %d: R = %d -> %d",
             quotient.group.order, report.count, report.quotient_count)
    return report
